//! The Plücker embedding of G_q(k, n).
//!
//! Coordinates are the `k × k` minors of a basis matrix, one per strictly
//! increasing column tuple, in lex order. [`IndexTuple`] is the single place
//! where the 1-based tuple labels (`x_{13}`, `(1,3)`) meet the 0-based
//! column indices used by [`MatGF`].

mod ball;
mod shuffle;

pub use ball::{
    ball_equations, ball_forbidden_tuples, bound_tuple, construction4, equidistant_lift, tau_count,
    tau_count_complement, LinearForm,
};
pub use shuffle::{exchange_relation, full_pluecker_relations, shuffle_relations, QuadTerm, QuadraticRelation};

use crate::error::{Error, Result};
use crate::gf::FieldCtx;
use crate::matgf::MatGF;
use crate::subspace::Subspace;
use serde::Serialize;
use std::fmt;

/// A strictly increasing tuple of column indices, stored 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple(Vec<usize>);

impl IndexTuple {
    pub fn from_zero_based(idx: Vec<usize>) -> Result<Self> {
        if idx.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidTuple(format!("{idx:?} is not strictly increasing")));
        }
        Ok(Self(idx))
    }

    /// From 1-based labels, e.g. `&[1, 3]` for `x_{13}`.
    pub fn from_one_based(idx: &[usize]) -> Result<Self> {
        if idx.contains(&0) {
            return Err(Error::InvalidTuple(format!("{idx:?} contains 0 (labels start at 1)")));
        }
        Self::from_zero_based(idx.iter().map(|i| i - 1).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn fits(&self, n: usize) -> bool {
        self.0.last().is_none_or(|&l| l < n)
    }

    /// Variable label: `12` when every index is a single digit, else `1,10`.
    pub fn label(&self) -> String {
        let v = self.one_based();
        if v.iter().all(|&i| i < 10) {
            v.iter().map(usize::to_string).collect()
        } else {
            v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        }
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.one_based().iter().map(usize::to_string).collect();
        write!(f, "({})", v.join(","))
    }
}

impl Serialize for IndexTuple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// All `k`-subsets of `{0, …, n−1}` in lex order.
pub fn all_tuples(n: usize, k: usize) -> Vec<IndexTuple> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(binomial(n, k));
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(IndexTuple(cur.clone()));
        // rightmost entry that can still move
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// Lex position of `t` among the `k`-subsets of `n`.
pub fn tuple_rank(t: &IndexTuple, n: usize) -> Result<usize> {
    if !t.fits(n) {
        return Err(Error::InvalidTuple(format!("{t} exceeds n={n}")));
    }
    let k = t.len();
    let mut r = 0;
    let mut next = 0;
    for (i, &ti) in t.indices().iter().enumerate() {
        for v in next..ti {
            r += binomial(n - 1 - v, k - 1 - i);
        }
        next = ti + 1;
    }
    Ok(r)
}

pub fn tuple_unrank(mut r: usize, n: usize, k: usize) -> Result<IndexTuple> {
    if r >= binomial(n, k) {
        return Err(Error::InvalidTuple(format!("rank {r} out of range for C({n},{k})")));
    }
    let mut out = Vec::with_capacity(k);
    let mut v = 0;
    for i in 0..k {
        loop {
            let c = binomial(n - 1 - v, k - 1 - i);
            if r < c {
                break;
            }
            r -= c;
            v += 1;
        }
        out.push(v);
        v += 1;
    }
    Ok(IndexTuple(out))
}

/// Componentwise `a ≤ b`.
pub fn bruhat_leq(a: &IndexTuple, b: &IndexTuple) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::InvalidTuple(format!("comparing {a} with {b}")));
    }
    Ok(a.0.iter().zip(&b.0).all(|(x, y)| x <= y))
}

/// A normalized projective point of P^{C(n,k)−1}: its first nonzero
/// coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PlueckerVector {
    pub n: usize,
    pub k: usize,
    pub coords: Vec<u32>,
}

impl PlueckerVector {
    pub fn get(&self, t: &IndexTuple) -> u32 {
        self.coords[tuple_rank(t, self.n).expect("tuple fits n")]
    }
}

impl fmt::Display for PlueckerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.coords.iter().map(u32::to_string).collect();
        write!(f, "[{}]", v.join(":"))
    }
}

/// Scales `raw` by the inverse of its first nonzero entry.
pub fn normalize(field: FieldCtx, n: usize, k: usize, mut raw: Vec<u32>) -> Result<PlueckerVector> {
    if raw.len() != binomial(n, k) {
        return Err(Error::LengthMismatch {
            expected: binomial(n, k),
            got: raw.len(),
        });
    }
    let lead = raw
        .iter()
        .copied()
        .find(|&c| c != 0)
        .ok_or_else(|| Error::Shape("the zero vector is not a projective point".into()))?;
    let inv = field.inv(lead)?;
    for c in raw.iter_mut() {
        *c = field.mul(*c, inv);
    }
    Ok(PlueckerVector { n, k, coords: raw })
}

/// All maximal minors of a `k × n` matrix, unnormalized.
pub fn maximal_minors(m: &MatGF) -> Vec<u32> {
    let rows: Vec<usize> = (0..m.rows()).collect();
    all_tuples(m.cols(), m.rows())
        .iter()
        .map(|t| m.minor_unchecked(&rows, t.indices()))
        .collect()
}

/// The Plücker embedding.
pub fn embed(u: &Subspace) -> PlueckerVector {
    let raw = maximal_minors(u.basis());
    normalize(u.field(), u.ambient(), u.dim(), raw).expect("a full-rank basis has a nonzero minor")
}

/// Selected columns of φ̄(a): entry `(r, c)` is the minor of `a` on rows
/// `r` and columns `c`; rows run over all `k`-tuples in lex order.
pub fn phi_bar_columns(a: &MatGF, k: usize, cols: &[IndexTuple]) -> Result<MatGF> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::Shape("φ̄ needs a square matrix".into()));
    }
    for c in cols {
        if c.len() != k || !c.fits(n) {
            return Err(Error::InvalidTuple(format!("{c} is not a {k}-subset of [{n}]")));
        }
    }
    let row_tuples = all_tuples(n, k);
    let mut out = MatGF::zeros(a.field(), row_tuples.len(), cols.len());
    for (i, r) in row_tuples.iter().enumerate() {
        for (j, c) in cols.iter().enumerate() {
            out.set(i, j, a.minor_unchecked(r.indices(), c.indices()));
        }
    }
    Ok(out)
}

/// The full `C(n,k) × C(n,k)` matrix φ̄(a).
pub fn phi_bar(a: &MatGF, k: usize) -> Result<MatGF> {
    phi_bar_columns(a, k, &all_tuples(a.rows(), k))
}
