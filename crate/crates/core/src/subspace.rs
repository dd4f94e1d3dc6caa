//! Points of the Grassmannian G_q(k, n), stored by their RREF basis.

use crate::error::{Error, Result};
use crate::gf::FieldCtx;
use crate::matgf::MatGF;
use rand::Rng;
use std::fmt;

/// A `k`-dimensional subspace of F_q^n. Two values are equal iff the
/// subspaces are equal, since the basis is always the RREF.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: MatGF,
}

impl Subspace {
    /// Row space of an arbitrary generator matrix. The dimension is its rank.
    pub fn row_space(generators: &MatGF) -> Self {
        Self {
            basis: generators.row_space_basis(),
        }
    }

    /// Wraps a matrix that must already be a full-rank RREF.
    pub fn from_rref(basis: MatGF) -> Result<Self> {
        let (r, piv) = basis.rref();
        if r != basis || piv.len() != basis.rows() {
            return Err(Error::Shape("basis is not a full-rank RREF".into()));
        }
        Ok(Self { basis })
    }

    pub fn zero_dim(field: FieldCtx, n: usize) -> Self {
        Self {
            basis: MatGF::empty(field, n),
        }
    }

    pub fn basis(&self) -> &MatGF {
        &self.basis
    }

    pub fn field(&self) -> FieldCtx {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| {
                self.basis
                    .row(r)
                    .iter()
                    .position(|&v| v != 0)
                    .expect("full-rank rows are nonzero")
            })
            .collect()
    }

    /// `dim(U + V)`.
    pub fn join_dim(&self, other: &Self) -> Result<usize> {
        if self.ambient() != other.ambient() {
            return Err(Error::Shape(format!(
                "ambient dimensions {} and {}",
                self.ambient(),
                other.ambient()
            )));
        }
        Ok(self.basis.stack(&other.basis)?.rank())
    }

    /// `d_S(U, V) = 2k − 2 dim(U ∩ V) = 2 dim(U + V) − 2k` for equal dimensions.
    pub fn distance(&self, other: &Self) -> Result<usize> {
        if self.dim() != other.dim() {
            return Err(Error::Shape(format!(
                "subspace dimensions {} and {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(2 * self.join_dim(other)? - 2 * self.dim())
    }

    /// Uniform random element of G_q(k, n).
    pub fn random<R: Rng + ?Sized>(field: FieldCtx, k: usize, n: usize, rng: &mut R) -> Self {
        assert!(k <= n, "k={k} exceeds n={n}");
        loop {
            let data = (0..k * n).map(|_| rng.gen_range(0..field.q())).collect();
            let m = MatGF::new(field, k, n, data).expect("reduced entries");
            let s = Self::row_space(&m);
            if s.dim() == k {
                return s;
            }
        }
    }
}

/// Same as [`Subspace::distance`]; free-function form.
pub fn subspace_distance(u: &Subspace, v: &Subspace) -> Result<usize> {
    u.distance(v)
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.basis)
    }
}

/// Gaussian binomial coefficient `[n choose k]_q`, the size of G_q(k, n).
pub fn gaussian_binomial(q: u32, n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Every element of G_q(k, n), grouped by pivot set in lex order.
pub fn grassmannian(field: FieldCtx, k: usize, n: usize) -> impl Iterator<Item = Subspace> {
    let q = field.q() as u64;
    crate::pluecker::all_tuples(n, k).into_iter().flat_map(move |piv| {
        let piv = piv.indices().to_vec();
        // free cells: right of the row's pivot, not in a pivot column
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|r| {
                let piv = piv.clone();
                (piv[r] + 1..n)
                    .filter(move |c| !piv.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let count = q.pow(free.len() as u32);
        (0..count).map(move |mut idx| {
            let mut m = MatGF::zeros(field, k, n);
            for (r, &c) in piv.iter().enumerate() {
                m.set(r, c, 1);
            }
            for &(r, c) in &free {
                m.set(r, c, (idx % q) as u32);
                idx /= q;
            }
            Subspace { basis: m }
        })
    })
}
