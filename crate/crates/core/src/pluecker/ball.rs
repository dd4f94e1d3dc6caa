//! Linear equations for balls `B_{2e}(R)` in Plücker coordinates.
//!
//! Around `U_0 = rs[I_k | 0]` the ball is the vanishing locus of every
//! coordinate whose tuple is not Bruhat-below `(e+1, …, k, n−e+1, …, n)`.
//! For a general `R = U_0·A` the coordinate `x_c` is replaced by column `c`
//! of φ̄(A⁻¹), because φ(V·A⁻¹) = φ(V)·φ̄(A⁻¹).

use super::{all_tuples, binomial, bruhat_leq, phi_bar_columns, IndexTuple};
use crate::error::{Error, Result};
use crate::gf::FieldCtx;
use crate::matgf::MatGF;
use crate::subspace::Subspace;
use serde::Serialize;
use std::fmt;

/// `Σ coeffs[i] · x_i = rhs`, variables in lex tuple order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LinearForm {
    pub coeffs: Vec<u32>,
    pub rhs: u32,
}

impl LinearForm {
    pub fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0) && self.rhs == 0
    }

    pub fn holds(&self, field: FieldCtx, x: &[u32]) -> bool {
        field.dot(&self.coeffs, x) == self.rhs
    }

    /// Renders e.g. `x12 + x23 = 0`.
    pub fn display(&self, n: usize, k: usize) -> impl fmt::Display + '_ {
        DisplayForm { form: self, n, k }
    }
}

struct DisplayForm<'a> {
    form: &'a LinearForm,
    n: usize,
    k: usize,
}

impl fmt::Display for DisplayForm<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tuples = all_tuples(self.n, self.k);
        let terms: Vec<String> = self
            .form
            .coeffs
            .iter()
            .zip(&tuples)
            .filter(|(&c, _)| c != 0)
            .map(|(&c, t)| {
                if c == 1 {
                    format!("x{}", t.label())
                } else {
                    format!("{c} x{}", t.label())
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0 = {}", self.form.rhs)
        } else {
            write!(f, "{} = {}", terms.join(" + "), self.form.rhs)
        }
    }
}

/// `(e+1, …, k, n−e+1, …, n)`; the prefix is empty when `e = k`.
pub fn bound_tuple(n: usize, k: usize, e: usize) -> Result<IndexTuple> {
    if e > k || k > n {
        return Err(Error::InvalidRadius { e, k });
    }
    let idx: Vec<usize> = (e..k).chain(n - e..n).collect();
    IndexTuple::from_zero_based(idx)
}

/// Tuples not Bruhat-below [`bound_tuple`], in lex order.
pub fn ball_forbidden_tuples(n: usize, k: usize, e: usize) -> Result<Vec<IndexTuple>> {
    let bound = bound_tuple(n, k, e)?;
    Ok(all_tuples(n, k)
        .into_iter()
        .filter(|t| !bruhat_leq(t, &bound).expect("equal lengths"))
        .collect())
}

/// `τ = Σ_{l=0}^{k−e−1} C(n−k, k−l)·C(k, l)`.
pub fn tau_count(n: usize, k: usize, e: usize) -> usize {
    (0..k.saturating_sub(e))
        .map(|l| binomial(n - k, k - l) * binomial(k, l))
        .sum()
}

/// `C(n,k) − Σ_{l=k−e}^{k} C(n−k, k−l)·C(k, l)`.
pub fn tau_count_complement(n: usize, k: usize, e: usize) -> usize {
    let kept: usize = (k - e.min(k)..=k)
        .map(|l| binomial(n - k, k - l) * binomial(k, l))
        .sum();
    binomial(n, k) - kept
}

/// `A ∈ GL_n` with first `k` rows equal to `u`'s RREF basis and
/// `rs[I_k | 0]·A = u`, together with `A⁻¹`.
///
/// The lower rows put an identity on the non-pivot columns. The inverse
/// comes from permuting the pivot columns to the front, where the matrix is
/// `[[I, U''], [0, I]]` with inverse `[[I, −U''], [0, I]]`, and permuting the
/// rows back.
pub fn construction4(u: &Subspace) -> (MatGF, MatGF) {
    let f = u.field();
    let n = u.ambient();
    let k = u.dim();
    let pivots = u.pivots();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();

    let mut a = MatGF::zeros(f, n, n);
    for r in 0..k {
        for c in 0..n {
            a.set(r, c, u.basis().get(r, c));
        }
    }
    for (j, &c) in free.iter().enumerate() {
        a.set(k + j, c, 1);
    }

    // permuted inverse, rows in the order pivots ++ free
    let mut m = MatGF::identity(f, n);
    for r in 0..k {
        for (j, &c) in free.iter().enumerate() {
            m.set(r, k + j, f.neg(u.basis().get(r, c)));
        }
    }
    let perm: Vec<usize> = pivots.iter().chain(&free).copied().collect();
    let mut a_inv = MatGF::zeros(f, n, n);
    for (j, &target) in perm.iter().enumerate() {
        for c in 0..n {
            a_inv.set(target, c, m.get(j, c));
        }
    }
    (a, a_inv)
}

/// The τ linear forms cutting `B_{2e}(r)` out of the Grassmannian: for each
/// forbidden tuple `c`, `x · (column c of φ̄(A⁻¹)) = 0`.
pub fn ball_equations(r: &Subspace, e: usize) -> Result<Vec<LinearForm>> {
    let (n, k) = (r.ambient(), r.dim());
    let forbidden = ball_forbidden_tuples(n, k, e)?;
    if forbidden.is_empty() {
        return Ok(Vec::new());
    }
    let (_, a_inv) = construction4(r);
    let cols = phi_bar_columns(&a_inv, k, &forbidden)?;
    Ok((0..forbidden.len())
        .map(|j| LinearForm {
            coeffs: cols.column(j),
            rhs: 0,
        })
        .collect())
}

/// For `a ∈ F_q^{k×(n−k)}` returns `M` with
/// `d_S(r, rs[I|a]) = d_S(rs[I|M], rs[I|a])`.
///
/// Eliminating the left block of `r` against `[I | a]` leaves
/// `[0 | M̄]` with `M̄ = R_right − R_left·a`, so
/// `rank [[I, a], [R]] = k + rank M̄` and `M = a + M̄`.
pub fn equidistant_lift(r: &Subspace, a: &MatGF) -> Result<MatGF> {
    let (n, k) = (r.ambient(), r.dim());
    if a.shape() != (k, n - k) {
        return Err(Error::Shape(format!("expected a {k}x{} matrix", n - k)));
    }
    let rows: Vec<usize> = (0..k).collect();
    let left = r.basis().select(&rows, &(0..k).collect::<Vec<_>>());
    let right = r.basis().select(&rows, &(k..n).collect::<Vec<_>>());
    let m_bar = right.sub(&left.mul(a)?)?;
    a.add(&m_bar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gabidulin::lift_matrix;
    use crate::pluecker::{embed, phi_bar};
    use crate::subspace::grassmannian;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f(q: u32) -> FieldCtx {
        FieldCtx::new(q).unwrap()
    }

    fn m(q: u32, rows: &[&[u32]]) -> MatGF {
        MatGF::from_rows(f(q), rows).unwrap()
    }

    fn t(v: &[usize]) -> IndexTuple {
        IndexTuple::from_one_based(v).unwrap()
    }

    fn r1() -> Subspace {
        Subspace::row_space(&m(2, &[&[1, 0, 1, 0], &[0, 0, 0, 1]]))
    }

    fn r2() -> Subspace {
        Subspace::row_space(&m(2, &[&[1, 0, 0, 1], &[0, 1, 1, 1]]))
    }

    /// Brute-force count of tuples not below the bound.
    fn forbidden_oracle(n: usize, k: usize, e: usize) -> usize {
        let bound: Vec<usize> = (e + 1..=k).chain(n - e + 1..=n).collect();
        all_tuples(n, k)
            .iter()
            .filter(|t| t.one_based().iter().zip(&bound).any(|(a, b)| a > b))
            .count()
    }

    #[test]
    fn forbidden_examples() {
        assert_eq!(ball_forbidden_tuples(4, 2, 1).unwrap(), vec![t(&[3, 4])]);
        assert!(ball_forbidden_tuples(4, 2, 2).unwrap().is_empty());
        assert_eq!(forbidden_oracle(6, 3, 1), 10);
        assert_eq!(ball_forbidden_tuples(6, 3, 1).unwrap().len(), 10);
        assert!(ball_forbidden_tuples(4, 2, 3).is_err());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau_count(4, 2, 1), 1);
        assert_eq!(tau_count(7, 3, 3), 0);
        assert_eq!(tau_count(6, 3, 1), forbidden_oracle(6, 3, 1));
    }

    #[test]
    fn tau_identities() {
        for n in 1..=10 {
            for k in 1..=n / 2 {
                for e in 0..=k {
                    let brute = forbidden_oracle(n, k, e);
                    assert_eq!(tau_count(n, k, e), brute);
                    assert_eq!(tau_count_complement(n, k, e), brute);
                    assert_eq!(ball_forbidden_tuples(n, k, e).unwrap().len(), brute);
                }
            }
        }
    }

    #[test]
    fn construction4_examples() {
        let u0 = Subspace::row_space(&m(2, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        let (a, ai) = construction4(&u0);
        assert_eq!(a, MatGF::identity(f(2), 4));
        assert_eq!(ai, MatGF::identity(f(2), 4));

        let (_, ai) = construction4(&r1());
        assert_eq!(ai, m(2, &[&[1, 0, 0, 1], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 1, 0, 0]]));
        let (_, ai) = construction4(&r2());
        assert_eq!(ai, m(2, &[&[1, 0, 0, 1], &[0, 1, 1, 1], &[0, 0, 1, 0], &[0, 0, 0, 1]]));
    }

    #[test]
    fn construction4_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for trial in 0..1000 {
            let q = [2, 3, 5][trial % 3];
            let n = 3 + trial % 5;
            let k = 1 + trial % (n - 1);
            let u = Subspace::random(f(q), k, n, &mut rng);
            let (a, ai) = construction4(&u);
            assert_eq!(a.mul(&ai).unwrap(), MatGF::identity(f(q), n));
            let top = a.select_rows(&(0..k).collect::<Vec<_>>());
            assert_eq!(Subspace::row_space(&top), u);
        }
    }

    #[test]
    fn phi_bar_column_examples() {
        let cols = [t(&[3, 4])];
        let (_, ai) = construction4(&r1());
        assert_eq!(phi_bar_columns(&ai, 2, &cols).unwrap().column(0), vec![1, 0, 0, 1, 0, 0]);
        let (_, ai) = construction4(&r2());
        assert_eq!(phi_bar_columns(&ai, 2, &cols).unwrap().column(0), vec![1, 1, 0, 1, 1, 1]);
    }

    #[test]
    fn ball_equation_examples() {
        let u0 = Subspace::row_space(&m(2, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        let eq = ball_equations(&u0, 1).unwrap();
        assert_eq!(eq.len(), 1);
        assert_eq!(eq[0].display(4, 2).to_string(), "x34 = 0");
        let eq = ball_equations(&r1(), 1).unwrap();
        assert_eq!(eq[0].display(4, 2).to_string(), "x12 + x23 = 0");
        let eq = ball_equations(&r2(), 1).unwrap();
        assert_eq!(eq[0].display(4, 2).to_string(), "x12 + x13 + x23 + x24 + x34 = 0");
        assert!(ball_equations(&r2(), 2).unwrap().is_empty());
    }

    #[test]
    fn ball_correctness_exhaustive() {
        for (k, n) in [(2usize, 4usize), (2, 5)] {
            let all: Vec<Subspace> = grassmannian(f(2), k, n).collect();
            let emb: Vec<Vec<u32>> = all.iter().map(|v| embed(v).coords).collect();
            for r in &all {
                for e in 0..=k {
                    let forms = ball_equations(r, e).unwrap();
                    for (v, x) in all.iter().zip(&emb) {
                        let inside = forms.iter().all(|fm| fm.holds(f(2), x));
                        assert_eq!(inside, v.distance(r).unwrap() <= 2 * e);
                    }
                }
            }
        }
    }

    #[test]
    fn ball_correctness_q3_sample() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let all: Vec<Subspace> = grassmannian(f(3), 2, 4).collect();
        for _ in 0..20 {
            let r = Subspace::random(f(3), 2, 4, &mut rng);
            for e in 0..=2 {
                let forms = ball_equations(&r, e).unwrap();
                for v in &all {
                    let x = embed(v).coords;
                    let inside = forms.iter().all(|fm| fm.holds(f(3), &x));
                    assert_eq!(inside, v.distance(&r).unwrap() <= 2 * e);
                }
            }
        }
    }

    #[test]
    fn equidistant_lift_examples() {
        let f2 = f(2);
        let b = m(2, &[&[1, 1], &[0, 1]]);
        let r = lift_matrix(&b);
        let a = m(2, &[&[0, 1], &[1, 0]]);
        assert_eq!(equidistant_lift(&r, &a).unwrap(), b);

        let zero = MatGF::zeros(f2, 2, 2);
        let mm = equidistant_lift(&r1(), &zero).unwrap();
        let u0 = lift_matrix(&zero);
        assert_eq!(r1().distance(&u0).unwrap(), 2 * mm.rank());

        let mm = equidistant_lift(&r2(), &a).unwrap();
        let la = lift_matrix(&a);
        assert_eq!(r2().distance(&la).unwrap(), lift_matrix(&mm).distance(&la).unwrap());
        assert_eq!(r2().distance(&la).unwrap(), 2 * mm.sub(&a).unwrap().rank());
    }

    #[test]
    fn equidistant_lift_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        for trial in 0..300 {
            let q = [2, 3, 5][trial % 3];
            let (k, n) = [(2, 4), (2, 5), (3, 6)][trial % 3];
            let r = Subspace::random(f(q), k, n, &mut rng);
            let a = Subspace::random(f(q), k, n, &mut rng);
            let a = a.basis().select(&(0..k).collect::<Vec<_>>(), &(k..n).collect::<Vec<_>>());
            let mm = equidistant_lift(&r, &a).unwrap();
            let la = lift_matrix(&a);
            assert_eq!(r.distance(&la).unwrap(), lift_matrix(&mm).distance(&la).unwrap());
        }
    }

    #[test]
    fn full_phi_bar_is_multiplicative_on_inverse() {
        let (a, ai) = construction4(&r2());
        let prod = phi_bar(&a, 2).unwrap().mul(&phi_bar(&ai, 2).unwrap()).unwrap();
        assert_eq!(prod, MatGF::identity(f(2), 6));
    }
}
