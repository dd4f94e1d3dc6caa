//! Gabidulin MRD codes and their liftings to constant dimension codes.
//!
//! A `[k × ℓ, ϱ, δ]` code is the F_{q^ℓ}-row space of the
//! `(k−δ+1) × k` matrix with entries `g_j^{q^i}`. Codewords are written both
//! as vectors over F_{q^ℓ} and as `k × ℓ` matrices over F_q, and lift to the
//! row space of `[I_k | A]` in F_q^{k+ℓ}.
//!
//! Messages are ordered by their *message index*
//! `Σ m_{i,j} q^{iℓ+j}`, where `m_{i,j}` is the coefficient of `α^j` in
//! symbol `i`. Enumeration and decoder output use this order.

use crate::error::{Error, Result};
use crate::gf::{ExtElement, ExtFieldCtx, FieldCtx};
use crate::matgf::MatGF;
use crate::subspace::Subspace;
use serde::{Deserialize, Serialize};

/// Default cap on the number of codewords an enumeration may visit.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GabidulinCode {
    ext: ExtFieldCtx,
    k: usize,
    delta: usize,
    g: Vec<ExtElement>,
}

/// A codeword in vector and matrix form; `mat[i] = φ(vec[i])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RankCodeword {
    pub vec: Vec<ExtElement>,
    #[serde(serialize_with = "ser_mat")]
    pub mat: MatGF,
}

fn ser_mat<S: serde::Serializer>(m: &MatGF, s: S) -> std::result::Result<S::Ok, S::Error> {
    m.row_vecs().serialize(s)
}

impl GabidulinCode {
    /// `g` defaults to `(1, α, …, α^{k−1})`.
    pub fn new(ext: ExtFieldCtx, k: usize, delta: usize, g: Option<Vec<ExtElement>>) -> Result<Self> {
        let ell = ext.ell();
        if k == 0 || k > ell {
            return Err(Error::InvalidParams(format!("need 1 ≤ k ≤ ℓ, got k={k}, ℓ={ell}")));
        }
        if delta < 2 || delta > k {
            return Err(Error::InvalidParams(format!("need 2 ≤ δ ≤ k, got δ={delta}, k={k}")));
        }
        let g = g.unwrap_or_else(|| (0..k as u64).map(|i| ext.alpha_pow(i)).collect());
        if g.len() != k {
            return Err(Error::InvalidParams(format!("{} elements g_i for k={k}", g.len())));
        }
        if g.iter().any(|e| !ext.contains(e)) {
            return Err(Error::InvalidParams("g_i from another field".into()));
        }
        if !ext.lin_independent_over_base(&g) {
            return Err(Error::InvalidParams("g_i are not linearly independent over F_q".into()));
        }
        Ok(Self { ext, k, delta, g })
    }

    pub fn ext(&self) -> &ExtFieldCtx {
        &self.ext
    }

    pub fn field(&self) -> FieldCtx {
        self.ext.base()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ell(&self) -> usize {
        self.ext.ell()
    }

    /// Ambient dimension of the lifted code, `k + ℓ`.
    pub fn n(&self) -> usize {
        self.k + self.ell()
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn g(&self) -> &[ExtElement] {
        &self.g
    }

    /// Number of message symbols, `k − δ + 1`.
    pub fn message_len(&self) -> usize {
        self.k - self.delta + 1
    }

    /// Dimension over F_q, `ϱ = ℓ(k − δ + 1)`.
    pub fn rho(&self) -> usize {
        self.ell() * self.message_len()
    }

    /// `q^ϱ`.
    pub fn size(&self) -> u128 {
        (self.field().q() as u128).saturating_pow(self.rho() as u32)
    }

    /// Rows `(g_1^{[i]}, …, g_k^{[i]})` for `i = 0..=k−δ`.
    pub fn generator_matrix(&self) -> Vec<Vec<ExtElement>> {
        (0..self.message_len())
            .map(|i| self.g.iter().map(|gj| self.ext.frobenius(gj, i)).collect())
            .collect()
    }

    pub fn encode(&self, msg: &[ExtElement]) -> Result<RankCodeword> {
        if msg.len() != self.message_len() {
            return Err(Error::LengthMismatch {
                expected: self.message_len(),
                got: msg.len(),
            });
        }
        let gm = self.generator_matrix();
        let vec: Vec<ExtElement> = (0..self.k)
            .map(|j| {
                msg.iter()
                    .zip(&gm)
                    .fold(self.ext.zero(), |acc, (m, row)| {
                        self.ext.add(&acc, &self.ext.mul(m, &row[j]))
                    })
            })
            .collect();
        Ok(self.codeword_from_vec(vec))
    }

    fn codeword_from_vec(&self, vec: Vec<ExtElement>) -> RankCodeword {
        let rows: Vec<Vec<u32>> = vec.iter().map(|c| self.ext.phi(c)).collect();
        let mat = MatGF::from_rows(self.field(), &rows).expect("k ≥ 1 rows of length ℓ");
        RankCodeword { vec, mat }
    }

    /// Reads a codeword back from its `k × ℓ` matrix (no membership check).
    pub fn codeword_from_matrix(&self, mat: &MatGF) -> Result<RankCodeword> {
        if mat.shape() != (self.k, self.ell()) {
            return Err(Error::Shape(format!(
                "codeword matrix must be {}x{}",
                self.k,
                self.ell()
            )));
        }
        let vec = (0..self.k)
            .map(|r| self.ext.phi_inv(mat.row(r)))
            .collect::<Result<_>>()?;
        Ok(RankCodeword {
            vec,
            mat: mat.clone(),
        })
    }

    pub fn message_from_index(&self, index: u64) -> Vec<ExtElement> {
        let per = self.ext.order() as u64;
        let mut x = index;
        (0..self.message_len())
            .map(|_| {
                let e = self.ext.element_from_index(x % per);
                x /= per;
                e
            })
            .collect()
    }

    pub fn message_index(&self, msg: &[ExtElement]) -> u64 {
        let per = self.ext.order() as u64;
        msg.iter()
            .rev()
            .fold(0u64, |acc, m| acc * per + self.ext.element_index(m))
    }

    /// Message index from the flat F_q coordinates `m_{i,j}` at `iℓ + j`.
    pub fn message_index_from_coords(&self, coords: &[u32]) -> u64 {
        let q = self.field().q() as u64;
        coords.iter().rev().fold(0u64, |acc, &c| acc * q + c as u64)
    }

    pub fn encode_index(&self, index: u64) -> RankCodeword {
        self.encode(&self.message_from_index(index))
            .expect("message length is correct by construction")
    }

    /// Every codeword, in message-index order.
    pub fn enumerate_code(&self, cap: u64) -> Result<impl Iterator<Item = RankCodeword> + '_> {
        let size = self.size();
        if size > cap as u128 {
            return Err(Error::CapExceeded { size, cap });
        }
        Ok((0..size as u64).map(move |i| self.encode_index(i)))
    }
}

/// `rank(A − B)`.
pub fn rank_distance(a: &MatGF, b: &MatGF) -> Result<usize> {
    Ok(a.sub(b)?.rank())
}

/// `min{k(ℓ−δ+1), ℓ(k−δ+1)}`.
pub fn mrd_bound(k: usize, ell: usize, delta: usize) -> usize {
    assert!(delta >= 1 && delta <= k.min(ell), "need 1 ≤ δ ≤ min(k, ℓ)");
    (k * (ell - delta + 1)).min(ell * (k - delta + 1))
}

/// `rs[I_k | A]`.
pub fn lift_matrix(a: &MatGF) -> Subspace {
    let id = MatGF::identity(a.field(), a.rows());
    let basis = id.hcat(a).expect("same height");
    Subspace::from_rref(basis).expect("[I | A] is a full-rank RREF")
}

pub fn lift(c: &RankCodeword) -> Subspace {
    lift_matrix(&c.mat)
}

/// Code parameters as accepted on the command line and in config files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
    /// Each `g_i` as a coefficient list.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<Vec<u32>>>,
}

impl CodeParams {
    pub fn new(q: u32, n: usize, k: usize, delta: usize) -> Self {
        Self {
            q,
            n,
            k,
            delta,
            modulus: None,
            g: None,
        }
    }

    pub fn build(&self) -> Result<GabidulinCode> {
        if self.k == 0 || self.k > self.n.saturating_sub(self.k) {
            return Err(Error::InvalidParams(format!(
                "need 1 ≤ k ≤ n−k, got n={}, k={}",
                self.n, self.k
            )));
        }
        let base = FieldCtx::new(self.q)?;
        let ell = self.n - self.k;
        let ext = match &self.modulus {
            Some(m) => {
                if m.len() != ell + 1 {
                    return Err(Error::InvalidModulus(format!("modulus must have degree ℓ = {ell}")));
                }
                ExtFieldCtx::new(base, m.clone())?
            }
            None => ExtFieldCtx::with_default_modulus(base, ell)?,
        };
        let g = match &self.g {
            Some(list) => Some(
                list.iter()
                    .map(|c| {
                        let mut c = c.clone();
                        c.resize(ell.max(c.len()), 0);
                        ext.phi_inv(&c)
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        GabidulinCode::new(ext, self.k, self.delta, g)
    }
}

/// The code of the worked example: q = 2, p(x) = x² + x + 1, k = ℓ = δ = 2,
/// g = (α, 1).
pub fn example_code() -> GabidulinCode {
    CodeParams {
        g: Some(vec![vec![0, 1], vec![1, 0]]),
        ..CodeParams::new(2, 4, 2, 2)
    }
    .build()
    .expect("valid parameters")
}

/// Desk-scale parameter sets used by the test suites and examples.
pub fn shipped_parameter_sets() -> Vec<CodeParams> {
    let mut v = vec![CodeParams {
        g: Some(vec![vec![0, 1], vec![1, 0]]),
        ..CodeParams::new(2, 4, 2, 2)
    }];
    for (q, n, k, d) in [
        (2, 4, 2, 2),
        (3, 4, 2, 2),
        (5, 4, 2, 2),
        (2, 5, 2, 2),
        (3, 5, 2, 2),
        (2, 6, 2, 2),
        (2, 6, 3, 2),
        (2, 6, 3, 3),
        (3, 6, 3, 2),
        (3, 6, 3, 3),
        (2, 7, 3, 2),
        (2, 7, 3, 3),
        (2, 8, 4, 3),
        (2, 8, 4, 4),
    ] {
        v.push(CodeParams::new(q, n, k, d));
    }
    v
}
