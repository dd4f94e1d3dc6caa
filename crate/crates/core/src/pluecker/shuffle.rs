//! Quadratic (Grassmann–Plücker) relations among Plücker coordinates.

use super::{all_tuples, binomial, tuple_rank, IndexTuple};
use crate::gf::FieldCtx;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// One monomial `coeff · x_a · x_b` with an integer coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QuadTerm {
    pub a: IndexTuple,
    pub b: IndexTuple,
    pub coeff: i64,
}

/// `Σ coeff · x_a · x_b = 0` with integer coefficients, valid over every F_q.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QuadraticRelation {
    pub terms: Vec<QuadTerm>,
}

impl QuadraticRelation {
    /// Value of the left-hand side at `x` (indexed by lex rank over `n`).
    pub fn eval(&self, field: FieldCtx, n: usize, x: &[u32]) -> u32 {
        self.terms.iter().fold(0, |acc, t| {
            let xa = x[tuple_rank(&t.a, n).expect("tuple fits")];
            let xb = x[tuple_rank(&t.b, n).expect("tuple fits")];
            field.add(acc, field.mul(field.reduce(t.coeff), field.mul(xa, xb)))
        })
    }

    pub fn holds(&self, field: FieldCtx, n: usize, x: &[u32]) -> bool {
        self.eval(field, n, x) == 0
    }

    /// Same relation with tuple ranks resolved, for hot loops.
    pub fn compile(&self, field: FieldCtx, n: usize) -> CompiledRelation {
        CompiledRelation {
            terms: self
                .terms
                .iter()
                .map(|t| {
                    (
                        tuple_rank(&t.a, n).expect("tuple fits"),
                        tuple_rank(&t.b, n).expect("tuple fits"),
                        field.reduce(t.coeff),
                    )
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CompiledRelation {
    terms: Vec<(usize, usize, u32)>,
}

impl CompiledRelation {
    pub fn holds(&self, field: FieldCtx, x: &[u32]) -> bool {
        self.terms
            .iter()
            .fold(0, |acc, &(a, b, c)| field.add(acc, field.mul(c, field.mul(x[a], x[b]))))
            == 0
    }
}

impl fmt::Display for QuadraticRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            let mag = t.coeff.unsigned_abs();
            let sign = if t.coeff < 0 { "-" } else { "+" };
            match (i, t.coeff < 0) {
                (0, false) => {}
                (0, true) => write!(f, "-")?,
                _ => write!(f, " {sign} ")?,
            }
            if mag != 1 {
                write!(f, "{mag} ")?;
            }
            write!(f, "x{} x{}", t.a.label(), t.b.label())?;
        }
        write!(f, " = 0")
    }
}

/// The single-exchange relation
/// `Σ_j (−1)^j x_{a ∪ b_j} x_{b ∖ b_j} = 0`
/// for 0-based sorted `a` (length k−1) and `b` (length k+1).
///
/// Coordinates with repeated indices vanish; the parity of sorting
/// `a ∪ b_j` enters the sign. Equal monomials are merged. Returns `None`
/// when everything cancels.
pub fn exchange_relation(a: &[usize], b: &[usize]) -> Option<QuadraticRelation> {
    let mut acc: BTreeMap<(IndexTuple, IndexTuple), i64> = BTreeMap::new();
    for (j, &bj) in b.iter().enumerate() {
        if a.contains(&bj) {
            continue;
        }
        let moves = a.iter().filter(|&&ai| ai > bj).count();
        let mut left = a.to_vec();
        left.push(bj);
        left.sort_unstable();
        let right: Vec<usize> = b.iter().copied().filter(|&v| v != bj).collect();
        let sign = if (j + moves) % 2 == 0 { 1 } else { -1 };
        let (l, r) = (IndexTuple(left), IndexTuple(right));
        let key = if l <= r { (l, r) } else { (r, l) };
        *acc.entry(key).or_default() += sign;
    }
    let mut terms: Vec<QuadTerm> = acc
        .into_iter()
        .filter(|(_, c)| *c != 0)
        .map(|((a, b), coeff)| QuadTerm { a, b, coeff })
        .collect();
    if terms.is_empty() {
        return None;
    }
    if terms[0].coeff < 0 {
        for t in &mut terms {
            t.coeff = -t.coeff;
        }
    }
    Some(QuadraticRelation { terms })
}

/// One relation per 2k-subset `S = s_1 < … < s_{2k}` of `[n]`: the exchange
/// relation with `a = (s_1, …, s_{k−1})` and `b = (s_k, …, s_{2k})`, so there
/// are exactly `C(n, 2k)` of them. Since `a < b` elementwise no sorting
/// signs arise and terms are kept as generated, e.g.
/// `x12 x34 - x13 x24 + x14 x23 = 0` for `(n, k) = (4, 2)`.
///
/// These cut out G_q(k, n) for `k ≤ 2`. For `k ≥ 3` they are necessary but
/// not sufficient; see [`full_pluecker_relations`].
pub fn shuffle_relations(n: usize, k: usize) -> Vec<QuadraticRelation> {
    if k == 0 || 2 * k > n {
        return Vec::new();
    }
    let rels: Vec<QuadraticRelation> = all_tuples(n, 2 * k)
        .into_iter()
        .map(|s| {
            let s = s.indices();
            let (a, b) = s.split_at(k - 1);
            let terms = b
                .iter()
                .enumerate()
                .map(|(j, &bj)| {
                    let mut left = a.to_vec();
                    left.push(bj);
                    let right = b.iter().copied().filter(|&v| v != bj).collect();
                    QuadTerm {
                        a: IndexTuple(left),
                        b: IndexTuple(right),
                        coeff: if j % 2 == 0 { 1 } else { -1 },
                    }
                })
                .collect();
            QuadraticRelation { terms }
        })
        .collect();
    debug_assert_eq!(rels.len(), binomial(n, 2 * k));
    rels
}

/// Every nontrivial single-exchange relation over all `(k−1)`-subsets `a` and
/// `(k+1)`-subsets `b`, deduplicated. Its zero set is exactly the image of
/// G_q(k, n).
pub fn full_pluecker_relations(n: usize, k: usize) -> Vec<QuadraticRelation> {
    if k == 0 || k >= n {
        return Vec::new();
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for a in all_tuples(n, k - 1) {
        for b in all_tuples(n, k + 1) {
            if let Some(rel) = exchange_relation(a.indices(), b.indices()) {
                if seen.insert(rel.clone()) {
                    out.push(rel);
                }
            }
        }
    }
    out
}
