//! Dense matrices over a prime field.
//!
//! Indices are 0-based here. The 1-based tuple convention used for Plücker
//! coordinates lives entirely in [`crate::pluecker::IndexTuple`].

use crate::error::{Error, Result};
use crate::gf::FieldCtx;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatGF {
    field: FieldCtx,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl MatGF {
    pub fn zeros(field: FieldCtx, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldCtx, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Row-major construction; every entry must already be reduced.
    pub fn new(field: FieldCtx, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        for &v in &data {
            field.check(v)?;
        }
        Ok(Self {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows<R: AsRef<[u32]>>(field: FieldCtx, rows: &[R]) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::Shape("matrix has no rows".into()));
        };
        let cols = first.as_ref().len();
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.as_ref().len() != cols {
                return Err(Error::Shape("ragged rows".into()));
            }
            data.extend_from_slice(r.as_ref());
        }
        Self::new(field, rows.len(), cols, data)
    }

    /// Like [`from_rows`](Self::from_rows) but reduces arbitrary integers mod q.
    pub fn from_i64_rows(field: FieldCtx, rows: &[Vec<i64>]) -> Result<Self> {
        let reduced: Vec<Vec<u32>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.reduce(v)).collect())
            .collect();
        Self::from_rows(field, &reduced)
    }

    /// An empty `0 × cols` matrix.
    pub fn empty(field: FieldCtx, cols: usize) -> Self {
        Self::zeros(field, 0, cols)
    }

    pub fn field(&self) -> FieldCtx {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.q();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.rows {
            return Err(Error::Shape(format!(
                "vector of length {} against {} rows",
                v.len(),
                self.rows
            )));
        }
        let f = self.field;
        let mut out = vec![0u32; self.cols];
        for (r, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(a, self.get(r, c)));
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u32, u32) -> u32) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| op(a, b)).collect();
        Ok(Self {
            data,
            ..self.clone()
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let f = self.field;
        self.zip_with(other, |a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let f = self.field;
        self.zip_with(other, |a, b| f.sub(a, b))
    }

    /// Vertical concatenation.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Shape("stacking matrices of different widths".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Horizontal concatenation.
    pub fn hcat(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Shape("joining matrices of different heights".into()));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(Self {
            field: self.field,
            rows: self.rows,
            cols,
            data,
        })
    }

    /// Submatrix on the given rows and columns (any order).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                data.push(self.get(r, c));
            }
        }
        Self {
            field: self.field,
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let cols: Vec<usize> = (0..self.cols).collect();
        self.select(rows, &cols)
    }

    pub fn select_cols(&self, cols: &[usize]) -> Self {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.select(&rows, cols)
    }

    /// Reduced row echelon form and its (0-based, increasing) pivot columns.
    /// Zero rows are kept at the bottom, so the shape is unchanged.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for j in c..cols {
                let idx = r * cols + j;
                self.data[idx] = f.mul(self.data[idx], inv);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = f.mul(factor, self.data[r * cols + j]);
                    let idx = i * cols + j;
                    self.data[idx] = f.sub(self.data[idx], v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// RREF with the zero rows removed: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Self {
        let (m, piv) = self.rref();
        m.select_rows(&(0..piv.len()).collect::<Vec<_>>())
    }

    /// Basis of `{x : self · xᵀ = 0}`, one vector per row, in RREF.
    pub fn kernel_basis(&self) -> Self {
        let f = self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            k.set(i, fc, 1);
            for (pr, &pc) in pivots.iter().enumerate() {
                k.set(i, pc, f.neg(r.get(pr, fc)));
            }
        }
        k.rref().0
    }

    pub fn det(&self) -> Result<u32> {
        if self.rows != self.cols {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        Ok(det_square(self.field, self.rows, |i, j| self.get(i, j)))
    }

    /// Determinant of the submatrix on `rows × cols`.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<u32> {
        check_index_set(rows, self.rows, "row")?;
        check_index_set(cols, self.cols, "column")?;
        if rows.len() != cols.len() {
            return Err(Error::InvalidTuple(format!(
                "{} rows vs {} columns",
                rows.len(),
                cols.len()
            )));
        }
        Ok(self.minor_unchecked(rows, cols))
    }

    #[inline]
    pub(crate) fn minor_unchecked(&self, rows: &[usize], cols: &[usize]) -> u32 {
        det_square(self.field, rows.len(), |i, j| self.get(rows[i], cols[j]))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Shape("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let aug = self.hcat(&Self::identity(self.field, n))?;
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        Ok(r.select(&(0..n).collect::<Vec<_>>(), &cols))
    }

    /// Parses `"1 0 1; 0 1 1"` (rows split on `;` or newlines).
    pub fn parse_text(field: FieldCtx, s: &str) -> Result<Self> {
        let rows: Vec<Vec<i64>> = s
            .split([';', '\n'])
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad entry `{t}`"))))
                    .collect()
            })
            .collect::<Result<_>>()?;
        Self::from_i64_rows(field, &rows)
    }

    /// Parses a JSON array of row arrays.
    pub fn from_json(field: FieldCtx, v: &serde_json::Value) -> Result<Self> {
        let rows: Vec<Vec<i64>> = serde_json::from_value(v.clone())
            .map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
        Self::from_i64_rows(field, &rows)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.row_vecs()).expect("plain integers")
    }
}

fn check_index_set(idx: &[usize], bound: usize, what: &str) -> Result<()> {
    if idx.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidTuple(format!("{what} indices {idx:?} not strictly increasing")));
    }
    if idx.last().is_some_and(|&l| l >= bound) {
        return Err(Error::InvalidTuple(format!("{what} index out of range in {idx:?}")));
    }
    Ok(())
}

/// Cofactor formulas up to 4×4, Gaussian elimination above.
fn det_square(f: FieldCtx, n: usize, at: impl Fn(usize, usize) -> u32) -> u32 {
    let q = f.q() as i64;
    let m = |i, j| at(i, j) as i64;
    match n {
        0 => 1 % f.q(),
        1 => at(0, 0),
        2 => f.reduce(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)),
        3 => {
            let c0 = (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) % q;
            let c1 = (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) % q;
            let c2 = (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) % q;
            f.reduce(m(0, 0) * c0 - m(0, 1) * c1 + m(0, 2) * c2)
        }
        4 => {
            // expand along row 0 using 2×2 minors of rows 2,3
            let s = |a: usize, b: usize| (m(2, a) * m(3, b) - m(2, b) * m(3, a)) % q;
            let d3 = |a: usize, b: usize, c: usize| {
                (m(1, a) * s(b, c) - m(1, b) * s(a, c) + m(1, c) * s(a, b)) % q
            };
            f.reduce(
                m(0, 0) * d3(1, 2, 3) - m(0, 1) * d3(0, 2, 3) + m(0, 2) * d3(0, 1, 3)
                    - m(0, 3) * d3(0, 1, 2),
            )
        }
        _ => {
            let mut a: Vec<u32> = (0..n * n).map(|k| at(k / n, k % n)).collect();
            let mut det = 1u32;
            for c in 0..n {
                let Some(p) = (c..n).find(|&r| a[r * n + c] != 0) else {
                    return 0;
                };
                if p != c {
                    for j in 0..n {
                        a.swap(p * n + j, c * n + j);
                    }
                    det = f.neg(det);
                }
                let piv = a[c * n + c];
                det = f.mul(det, piv);
                let inv = f.inv(piv).expect("nonzero pivot");
                for r in c + 1..n {
                    let factor = f.mul(a[r * n + c], inv);
                    if factor == 0 {
                        continue;
                    }
                    for j in c..n {
                        let v = f.mul(factor, a[c * n + j]);
                        a[r * n + j] = f.sub(a[r * n + j], v);
                    }
                }
            }
            det
        }
    }
}

/// Affine solution set `particular + rowspan(kernel)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineSpace {
    pub particular: Vec<u32>,
    pub kernel: MatGF,
}

impl AffineSpace {
    pub fn dim(&self) -> usize {
        self.kernel.rows()
    }

    /// Number of points, `q^dim`.
    pub fn size(&self) -> u128 {
        (self.kernel.field().q() as u128).saturating_pow(self.dim() as u32)
    }

    /// The point whose kernel coefficients are the base-q digits of `index`
    /// (first kernel vector least significant).
    pub fn point(&self, mut index: u64) -> Vec<u32> {
        let f = self.kernel.field();
        let q = f.q() as u64;
        let mut x = self.particular.clone();
        for r in 0..self.kernel.rows() {
            let c = (index % q) as u32;
            index /= q;
            if c == 0 {
                continue;
            }
            for (j, xj) in x.iter_mut().enumerate() {
                *xj = f.add(*xj, f.mul(c, self.kernel.get(r, j)));
            }
        }
        x
    }

    pub fn contains(&self, x: &[u32]) -> bool {
        if x.len() != self.particular.len() {
            return false;
        }
        let f = self.kernel.field();
        let diff: Vec<u32> = x.iter().zip(&self.particular).map(|(&a, &b)| f.sub(a, b)).collect();
        if diff.iter().all(|&d| d == 0) {
            return true;
        }
        let row = MatGF::from_rows(f, &[diff]).expect("one row");
        self.kernel.stack(&row).expect("same width").rank() == self.kernel.rows()
    }
}

/// Outcome of solving `coeffs · x = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Affine(AffineSpace),
    Infeasible,
}

/// Solves `coeffs · xᵀ = rhs` by Gaussian elimination.
pub fn solve_affine(coeffs: &MatGF, rhs: &[u32]) -> Result<LinearSolution> {
    if rhs.len() != coeffs.rows() {
        return Err(Error::Shape(format!(
            "{} right-hand sides for {} equations",
            rhs.len(),
            coeffs.rows()
        )));
    }
    let f = coeffs.field();
    let n = coeffs.cols();
    let rhs_col = MatGF::new(f, rhs.len(), 1, rhs.to_vec())?;
    let (r, pivots) = coeffs.hcat(&rhs_col)?.rref();
    if pivots.last() == Some(&n) {
        return Ok(LinearSolution::Infeasible);
    }
    let mut particular = vec![0u32; n];
    for (row, &pc) in pivots.iter().enumerate() {
        particular[pc] = r.get(row, n);
    }
    Ok(LinearSolution::Affine(AffineSpace {
        particular,
        kernel: coeffs.kernel_basis(),
    }))
}

impl fmt::Display for MatGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(q: u32) -> FieldCtx {
        FieldCtx::new(q).unwrap()
    }

    fn m(q: u32, rows: &[&[u32]]) -> MatGF {
        MatGF::from_rows(gf(q), rows).unwrap()
    }

    fn random(rng: &mut ChaCha8Rng, f: FieldCtx, r: usize, c: usize) -> MatGF {
        let data = (0..r * c).map(|_| rng.gen_range(0..f.q())).collect();
        MatGF::new(f, r, c, data).unwrap()
    }

    /// Laplace expansion along the first row; exponential, test-only.
    fn laplace(f: FieldCtx, a: &MatGF) -> u32 {
        let n = a.rows();
        if n == 0 {
            return 1;
        }
        let mut acc = 0u32;
        for j in 0..n {
            let rows: Vec<usize> = (1..n).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let sub = a.select(&rows, &cols);
            let term = f.mul(a.get(0, j), laplace(f, &sub));
            acc = if j % 2 == 0 { f.add(acc, term) } else { f.sub(acc, term) };
        }
        acc
    }

    #[test]
    fn rref_examples() {
        let (r, p) = m(2, &[&[0, 1], &[1, 0]]).rref();
        assert_eq!(r, MatGF::identity(gf(2), 2));
        assert_eq!(p, vec![0, 1]);

        let r1 = m(2, &[&[1, 0, 1, 0], &[0, 0, 0, 1]]);
        assert_eq!(r1.rref(), (r1.clone(), vec![0, 3]));

        let (r, p) = m(5, &[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r, m(5, &[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(MatGF::identity(gf(3), 4).rank(), 4);
        assert_eq!(m(2, &[&[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 1, 1]]).rank(), 3);
        assert_eq!(MatGF::zeros(gf(5), 3, 2).rank(), 0);
    }

    #[test]
    fn minor_examples() {
        let u = m(2, &[&[1, 0, 0, 1], &[0, 1, 1, 0]]);
        assert_eq!(u.minor(&[0, 1], &[1, 3]).unwrap(), 1);
        assert_eq!(u.minor(&[0, 1], &[0, 3]).unwrap(), 0);
        let dup = m(3, &[&[1, 1, 2], &[2, 2, 1]]);
        assert_eq!(dup.minor(&[0, 1], &[0, 1]).unwrap(), 0);
        assert!(u.minor(&[0, 1], &[3, 1]).is_err());
        assert!(u.minor(&[0, 1], &[1, 4]).is_err());
        assert!(u.minor(&[0], &[1, 2]).is_err());
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(MatGF::identity(gf(2), 3).kernel_basis().rows(), 0);
        assert_eq!(MatGF::zeros(gf(2), 2, 3).kernel_basis(), MatGF::identity(gf(2), 3));
        // generator of C^p = {0000, 1001, 0111, 1110}
        let gp = m(2, &[&[1, 0, 0, 1], &[0, 1, 1, 1]]);
        assert_eq!(gp.kernel_basis(), m(2, &[&[1, 0, 1, 1], &[0, 1, 1, 0]]));
    }

    #[test]
    fn solve_examples() {
        let f = gf(2);
        let LinearSolution::Affine(s) = solve_affine(&m(2, &[&[1, 0]]), &[1]).unwrap() else {
            panic!("feasible")
        };
        assert_eq!(s.particular, vec![1, 0]);
        assert_eq!(s.kernel, m(2, &[&[0, 1]]));

        assert_eq!(
            solve_affine(&m(2, &[&[1], &[1]]), &[1, 0]).unwrap(),
            LinearSolution::Infeasible
        );

        // worked R1 system in (x12, x13, x14, x23, x24)
        let sys = m(
            2,
            &[&[1, 0, 0, 0, 0], &[0, 1, 1, 0, 1], &[0, 0, 1, 1, 0], &[1, 0, 0, 1, 0]],
        );
        let LinearSolution::Affine(s) = solve_affine(&sys, &[1, 0, 0, 0]).unwrap() else {
            panic!("feasible")
        };
        let mut pts: Vec<Vec<u32>> = (0..s.size() as u64).map(|i| s.point(i)).collect();
        pts.sort();
        assert_eq!(pts, vec![vec![1, 0, 1, 1, 1], vec![1, 1, 1, 1, 0]]);
        for p in &pts {
            assert!(s.contains(p));
        }
        assert!(!s.contains(&[0, 0, 0, 0, 0]));
        let _ = f;
    }

    #[test]
    fn det_iff_full_rank_exhaustive() {
        for q in [2u32, 3] {
            let f = gf(q);
            for n in [2usize, 3] {
                let total = (q as u64).pow((n * n) as u32);
                for idx in 0..total {
                    let mut x = idx;
                    let data = (0..n * n)
                        .map(|_| {
                            let d = (x % q as u64) as u32;
                            x /= q as u64;
                            d
                        })
                        .collect();
                    let a = MatGF::new(f, n, n, data).unwrap();
                    assert_eq!(a.det().unwrap() != 0, a.rank() == n);
                }
            }
        }
    }

    #[test]
    fn cofactor_matches_elimination() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..1000 {
            let q = [2, 3, 5, 7][trial % 4];
            let f = gf(q);
            let n = 1 + trial % 6;
            let a = random(&mut rng, f, n, n);
            assert_eq!(a.det().unwrap(), laplace(f, &a), "n={n} q={q}");
        }
    }

    #[test]
    fn rref_invariant_under_row_mixing() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..300 {
            let f = gf([2, 3, 5][trial % 3]);
            let a = random(&mut rng, f, 3, 6);
            let p = loop {
                let p = random(&mut rng, f, 3, 3);
                if p.rank() == 3 {
                    break p;
                }
            };
            let (ra, _) = a.rref();
            assert_eq!(ra.rref().0, ra);
            assert_eq!(p.mul(&a).unwrap().rref().0, ra);
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = gf(5);
        for _ in 0..100 {
            let a = random(&mut rng, f, 4, 4);
            match a.inverse() {
                Ok(inv) => assert_eq!(a.mul(&inv).unwrap(), MatGF::identity(f, 4)),
                Err(e) => {
                    assert_eq!(e, Error::Singular);
                    assert_eq!(a.det().unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn parses_text_and_json() {
        let f = gf(2);
        let a = MatGF::parse_text(f, "1 0 1 0; 0 0 0 1").unwrap();
        assert_eq!(a, m(2, &[&[1, 0, 1, 0], &[0, 0, 0, 1]]));
        let b = MatGF::from_json(f, &a.to_json()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "1 0 1 0\n0 0 0 1\n");
        assert!(MatGF::parse_text(f, "1 0; 1").is_err());
    }
}
