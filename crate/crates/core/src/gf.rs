//! Prime fields F_q and extension fields F_{q^ℓ} in a polynomial basis.
//!
//! An extension element is the coefficient vector `(λ_0, …, λ_{ℓ-1})` of
//! `Σ λ_i α^i`, where `α` is the class of `x` modulo a monic irreducible
//! `p(x)`. The coefficient vector *is* the coordinate isomorphism
//! F_{q^ℓ} → F_q^ℓ, exposed as [`ExtFieldCtx::phi`] / [`ExtFieldCtx::phi_inv`].
//!
//! Elements carry a tag derived from `(q, p(x))`. Arithmetic on elements of
//! different contexts panics; it never coerces.

use crate::error::{Error, Result};
use std::fmt;

/// The prime field F_q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    q: u32,
}

impl FieldCtx {
    pub fn new(q: u32) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(Self { q })
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.q as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.q;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a.is_multiple_of(self.q) {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.q as u64 - 2))
    }

    /// `(-1)^e` as a field element.
    #[inline]
    pub fn sign(&self, e: usize) -> u32 {
        if e.is_multiple_of(2) {
            1
        } else {
            self.q - 1
        }
    }

    pub fn check(&self, v: u32) -> Result<u32> {
        if v < self.q {
            Ok(v)
        } else {
            Err(Error::Unreduced { value: v, q: self.q })
        }
    }

    pub fn dot(&self, a: &[u32], b: &[u32]) -> u32 {
        let acc: u64 = a
            .iter()
            .zip(b)
            .fold(0u64, |acc, (&x, &y)| (acc + x as u64 * y as u64) % self.q as u64);
        acc as u32
    }
}

fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= q as u64 {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Conway polynomials, coefficients low degree first, leading 1 included.
const DEFAULT_MODULI: &[(u32, &[u32])] = &[
    (2, &[1, 1]),
    (2, &[1, 1, 1]),
    (2, &[1, 1, 0, 1]),
    (2, &[1, 1, 0, 0, 1]),
    (2, &[1, 0, 1, 0, 0, 1]),
    (2, &[1, 1, 0, 1, 1, 0, 1]),
    (2, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, &[1, 1]),
    (3, &[2, 2, 1]),
    (3, &[1, 2, 0, 1]),
    (3, &[2, 0, 0, 2, 1]),
    (3, &[1, 2, 0, 0, 0, 1]),
    (3, &[2, 2, 1, 0, 2, 0, 1]),
    (3, &[1, 0, 2, 0, 0, 0, 0, 1]),
    (3, &[2, 2, 2, 0, 1, 2, 0, 0, 1]),
    (5, &[3, 1]),
    (5, &[2, 4, 1]),
    (5, &[3, 3, 0, 1]),
    (5, &[2, 4, 4, 0, 1]),
    (5, &[3, 4, 0, 0, 0, 1]),
    (5, &[2, 0, 1, 4, 1, 0, 1]),
    (5, &[3, 3, 0, 0, 0, 0, 0, 1]),
    (5, &[2, 4, 3, 0, 1, 0, 0, 0, 1]),
];

/// Built-in irreducible modulus for `(q, ℓ)`, if one is shipped.
pub fn default_modulus(q: u32, ell: usize) -> Option<Vec<u32>> {
    DEFAULT_MODULI
        .iter()
        .find(|(p, m)| *p == q && m.len() == ell + 1)
        .map(|(_, m)| m.to_vec())
}

/// An element of F_{q^ℓ}: coefficients of `1, α, …, α^{ℓ-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtElement {
    coeffs: Vec<u32>,
    tag: u64,
}

impl ExtElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl serde::Serialize for ExtElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

/// The extension field F_q[x]/(p(x)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtFieldCtx {
    base: FieldCtx,
    ell: usize,
    modulus: Vec<u32>,
    tag: u64,
}

impl ExtFieldCtx {
    /// Builds the context from a monic modulus given low degree first.
    pub fn new(base: FieldCtx, modulus: Vec<u32>) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::InvalidModulus("degree must be at least 1".into()));
        }
        for &c in &modulus {
            base.check(c)?;
        }
        if *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidModulus("polynomial is not monic".into()));
        }
        if !is_irreducible(base, &modulus) {
            return Err(Error::InvalidModulus(format!(
                "{} is reducible over F_{}",
                format_poly(&modulus, "x"),
                base.q()
            )));
        }
        let ell = modulus.len() - 1;
        let tag = modulus
            .iter()
            .chain(std::iter::once(&base.q()))
            .fold(0xcbf2_9ce4_8422_2325u64, |h, &c| {
                (h ^ c as u64).wrapping_mul(0x0100_0000_01b3)
            });
        Ok(Self {
            base,
            ell,
            modulus,
            tag,
        })
    }

    /// Uses the built-in modulus for `(q, ℓ)`.
    pub fn with_default_modulus(base: FieldCtx, ell: usize) -> Result<Self> {
        let m = default_modulus(base.q(), ell).ok_or(Error::NoDefaultModulus { q: base.q(), ell })?;
        Self::new(base, m)
    }

    pub fn base(&self) -> FieldCtx {
        self.base
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// `q^ℓ`, the number of elements.
    pub fn order(&self) -> u128 {
        (self.base.q() as u128).pow(self.ell as u32)
    }

    fn make(&self, coeffs: Vec<u32>) -> ExtElement {
        ExtElement {
            coeffs,
            tag: self.tag,
        }
    }

    #[inline]
    fn own(&self, e: &ExtElement) {
        assert_eq!(e.tag, self.tag, "element belongs to a different field context");
    }

    pub fn contains(&self, e: &ExtElement) -> bool {
        e.tag == self.tag
    }

    pub fn zero(&self) -> ExtElement {
        self.make(vec![0; self.ell])
    }

    pub fn one(&self) -> ExtElement {
        self.from_base(1)
    }

    pub fn from_base(&self, c: u32) -> ExtElement {
        let mut v = vec![0; self.ell];
        v[0] = c % self.base.q();
        self.make(v)
    }

    /// The root `α` of the modulus.
    pub fn alpha(&self) -> ExtElement {
        if self.ell == 1 {
            // x ≡ -p_0 mod (x + p_0)
            return self.from_base(self.base.neg(self.modulus[0]));
        }
        let mut v = vec![0; self.ell];
        v[1] = 1;
        self.make(v)
    }

    pub fn alpha_pow(&self, i: u64) -> ExtElement {
        self.pow(&self.alpha(), i)
    }

    /// Coordinates over F_q.
    pub fn phi(&self, e: &ExtElement) -> Vec<u32> {
        self.own(e);
        e.coeffs.clone()
    }

    pub fn phi_inv(&self, v: &[u32]) -> Result<ExtElement> {
        if v.len() != self.ell {
            return Err(Error::LengthMismatch {
                expected: self.ell,
                got: v.len(),
            });
        }
        for &c in v {
            self.base.check(c)?;
        }
        Ok(self.make(v.to_vec()))
    }

    /// The `index`-th element in base-q digit order (`λ_0` least significant).
    pub fn element_from_index(&self, mut index: u64) -> ExtElement {
        let q = self.base.q() as u64;
        let v = (0..self.ell)
            .map(|_| {
                let d = (index % q) as u32;
                index /= q;
                d
            })
            .collect();
        self.make(v)
    }

    pub fn element_index(&self, e: &ExtElement) -> u64 {
        self.own(e);
        e.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * self.base.q() as u64 + c as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = ExtElement> + '_ {
        (0..self.order() as u64).map(move |i| self.element_from_index(i))
    }

    pub fn add(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        self.own(a);
        self.own(b);
        let f = self.base;
        self.make(a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| f.add(x, y)).collect())
    }

    pub fn sub(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        self.own(a);
        self.own(b);
        let f = self.base;
        self.make(a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| f.sub(x, y)).collect())
    }

    pub fn neg(&self, a: &ExtElement) -> ExtElement {
        self.own(a);
        self.make(a.coeffs.iter().map(|&x| self.base.neg(x)).collect())
    }

    pub fn scale(&self, c: u32, a: &ExtElement) -> ExtElement {
        self.own(a);
        self.make(a.coeffs.iter().map(|&x| self.base.mul(c, x)).collect())
    }

    pub fn mul(&self, a: &ExtElement, b: &ExtElement) -> ExtElement {
        self.own(a);
        self.own(b);
        let f = self.base;
        let l = self.ell;
        let mut prod = vec![0u32; 2 * l - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(x, y));
            }
        }
        // reduce using x^ℓ = -Σ_{i<ℓ} p_i x^i
        for d in (l..prod.len()).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..l {
                let t = f.mul(c, self.modulus[i]);
                prod[d - l + i] = f.sub(prod[d - l + i], t);
            }
        }
        prod.truncate(l);
        self.make(prod)
    }

    pub fn pow(&self, a: &ExtElement, mut e: u64) -> ExtElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &ExtElement) -> Result<ExtElement> {
        self.own(a);
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let order = self.order();
        Ok(self.pow(a, (order - 2) as u64))
    }

    /// `e^{q^i}`, by `i` successive q-th powers.
    pub fn frobenius(&self, e: &ExtElement, i: usize) -> ExtElement {
        let q = self.base.q() as u64;
        (0..i).fold(e.clone(), |acc, _| self.pow(&acc, q))
    }

    /// Whether the elements are linearly independent over F_q.
    pub fn lin_independent_over_base(&self, elems: &[ExtElement]) -> bool {
        if elems.len() > self.ell {
            return false;
        }
        let rows: Vec<Vec<u32>> = elems.iter().map(|e| self.phi(e)).collect();
        match crate::matgf::MatGF::from_rows(self.base, &rows) {
            Ok(m) => m.rank() == elems.len(),
            // no rows at all: the empty set is independent
            Err(_) => elems.is_empty(),
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: &ExtElement) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        let one = self.one();
        let mut x = a.clone();
        let mut n = 1u64;
        while x != one {
            x = self.mul(&x, a);
            n += 1;
        }
        Some(n)
    }

    /// `alpha^i` label for a nonzero element when `α` generates it, else the
    /// polynomial form.
    pub fn display(&self, e: &ExtElement) -> String {
        self.own(e);
        if e.is_zero() {
            return "0".into();
        }
        let order = self.order();
        if order <= 1 << 16 {
            let alpha = self.alpha();
            let mut x = self.one();
            for i in 0..order as u64 - 1 {
                if &x == e {
                    return match i {
                        0 => "1".into(),
                        1 => "alpha".into(),
                        _ => format!("alpha^{i}"),
                    };
                }
                x = self.mul(&x, &alpha);
            }
        }
        format_poly(&e.coeffs, "alpha")
    }

    /// Parses `[c0,c1,…]` or a sum like `2*alpha^2+alpha-1`.
    ///
    /// ```text
    /// element := '[' int (',' int)* ']' | sum
    /// sum     := ['-'] term (('+' | '-') term)*
    /// term    := int | [int ['*']] 'alpha' ['^' int]
    /// ```
    pub fn parse_element(&self, s: &str) -> Result<ExtElement> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty field element".into()));
        }
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unterminated list `{s}`")))?;
            let mut v = inner
                .split(',')
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad coefficient `{t}`")))
                })
                .collect::<Result<Vec<u32>>>()?;
            if v.len() > self.ell {
                return Err(Error::LengthMismatch {
                    expected: self.ell,
                    got: v.len(),
                });
            }
            v.resize(self.ell, 0);
            return self.phi_inv(&v);
        }
        let mut acc = self.zero();
        let mut rest = s.as_str();
        let mut negative = false;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r;
        }
        loop {
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = self.parse_term(&rest[..end])?;
            acc = if negative {
                self.sub(&acc, &term)
            } else {
                self.add(&acc, &term)
            };
            if end == rest.len() {
                break;
            }
            negative = rest.as_bytes()[end] == b'-';
            rest = &rest[end + 1..];
        }
        Ok(acc)
    }

    fn parse_term(&self, t: &str) -> Result<ExtElement> {
        let bad = || Error::Parse(format!("bad term `{t}`"));
        let Some(pos) = t.find("alpha") else {
            let c: u64 = t.parse().map_err(|_| bad())?;
            return Ok(self.from_base((c % self.base.q() as u64) as u32));
        };
        let coef = t[..pos].trim_end_matches('*');
        let c: u64 = if coef.is_empty() {
            1
        } else {
            coef.parse().map_err(|_| bad())?
        };
        let tail = &t[pos + 5..];
        let exp: u64 = if tail.is_empty() {
            1
        } else {
            tail.strip_prefix('^')
                .ok_or_else(bad)?
                .parse()
                .map_err(|_| bad())?
        };
        Ok(self.scale((c % self.base.q() as u64) as u32, &self.alpha_pow(exp)))
    }
}

fn format_poly(coeffs: &[u32], var: &str) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Remainder of `a` modulo monic `b` over F_q (low degree first).
fn poly_rem(f: FieldCtx, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if c != 0 {
            for (i, &bi) in b.iter().enumerate() {
                r[shift + i] = f.sub(r[shift + i], f.mul(c, bi));
            }
        }
        r.pop();
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(f: FieldCtx, p: &[u32]) -> bool {
    let deg = p.len() - 1;
    let q = f.q() as u64;
    for d in 1..=deg / 2 {
        for idx in 0..q.pow(d as u32) {
            let mut cand = Vec::with_capacity(d + 1);
            let mut x = idx;
            for _ in 0..d {
                cand.push((x % q) as u32);
                x /= q;
            }
            cand.push(1);
            if poly_rem(f, p, &cand).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}
