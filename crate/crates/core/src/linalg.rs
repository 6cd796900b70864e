//! Exact linear algebra over the rationals.
//!
//! Ranks and independent subsets are found by fraction-free elimination: every
//! vector is scaled to a primitive integer vector, and reductions use integer
//! cross-multiplication followed by removal of the common content. No
//! numerical thresholds are involved anywhere.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational scalar.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Formats a rational as `"p"` or `"p/q"`.
pub fn format_q(x: &Q) -> String {
    x.to_string()
}

pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match t.split_once('/') {
        Some((a, b)) => {
            let num: BigInt = a.trim().parse().map_err(|_| bad())?;
            let den: BigInt = b.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(num, den))
        }
        None => Ok(Q::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// Returns the integer value of `x`, or `None` when `x` is not integral.
pub fn q_to_i64(x: &Q) -> Option<i64> {
    use num_traits::ToPrimitive;
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// Dense row-major matrix of rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(format_q).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| q(v)).collect())
                .collect(),
        )
        .expect("ragged integer matrix")
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Q>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (r, v) in col.iter().enumerate() {
                m[(r, c)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .fold(Q::zero(), |a, b| a + b)
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Q, &Q) -> Q) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &Q) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Q::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Exact rank by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut basis = EchelonBasis::new(self.cols);
        for r in 0..self.rows {
            basis.insert_rational(self.row(r));
        }
        basis.rank()
    }

    /// Indices of the lexicographically first maximal set of independent
    /// columns (the pivot columns of the row echelon form).
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut basis = EchelonBasis::new(self.rows);
        (0..self.cols)
            .filter(|&c| basis.insert_rational(&self.column(c)))
            .collect()
    }

    /// Indices of the first maximal set of independent rows.
    pub fn pivot_rows(&self) -> Vec<usize> {
        let mut basis = EchelonBasis::new(self.cols);
        (0..self.rows)
            .filter(|&r| basis.insert_rational(self.row(r)))
            .collect()
    }

    /// Inverse by Gauss-Jordan elimination over the rationals.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or_else(|| Error::InvalidArgument("matrix is singular".into()))?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a[(col, col)].recip();
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let factor = a[(r, col)].clone();
                    a.sub_row_multiple(r, col, &factor);
                    inv.sub_row_multiple(r, col, &factor);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Q) {
        for c in 0..self.cols {
            self[(r, c)] *= factor;
        }
    }

    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &Q) {
        for c in 0..self.cols {
            let v = &self[(source, c)] * factor;
            self[(target, c)] -= v;
        }
    }

    /// Submatrix on the given rows (all columns).
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            out.data[i * self.cols..(i + 1) * self.cols].clone_from_slice(self.row(r));
        }
        out
    }

    /// Direct sum of square or rectangular blocks along the diagonal.
    pub fn block_diagonal(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(r0 + r, c0 + c)] = b[(r, c)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        assert!(r < self.rows && c < self.cols, "index out of range");
        &mut self.data[r * self.cols + c]
    }
}

/// Sparse integer vector: strictly increasing indices, nonzero values.
pub type SparseVec = Vec<(usize, BigInt)>;

/// Incrementally built row echelon basis of a subspace of `Q^dim`.
///
/// Each stored vector is primitive with a distinct leading index. Inserting a
/// vector reduces it against the stored pivots by integer cross-multiplication;
/// it is kept iff a nonzero remainder survives.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    pivots: BTreeMap<usize, SparseVec>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> Self {
        EchelonBasis {
            dim,
            pivots: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts a rational vector given densely; returns whether it was
    /// independent of the vectors already inserted.
    pub fn insert_rational(&mut self, v: &[Q]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        let lcm = v
            .iter()
            .filter(|x| !x.is_zero())
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let sparse: SparseVec = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, (x * Q::from_integer(lcm.clone())).to_integer()))
            .collect();
        self.insert(sparse)
    }

    /// Inserts a sparse integer vector; returns whether it was independent.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        debug_assert!(v.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(v.iter().all(|(i, _)| *i < self.dim));
        make_primitive(&mut v);
        while let Some((lead, _)) = v.first() {
            match self.pivots.get(lead) {
                Some(p) => {
                    v = eliminate(&v, p);
                    make_primitive(&mut v);
                }
                None => {
                    self.pivots.insert(*lead, v);
                    return true;
                }
            }
        }
        false
    }

    /// Whether `v` lies in the span of the inserted vectors.
    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut v = v.clone();
        make_primitive(&mut v);
        while let Some((lead, _)) = v.first() {
            match self.pivots.get(lead) {
                Some(p) => {
                    v = eliminate(&v, p);
                    make_primitive(&mut v);
                }
                None => return false,
            }
        }
        true
    }
}

/// `p_lead * v - v_lead * p`, which cancels the leading entry of `v`.
fn eliminate(v: &SparseVec, p: &SparseVec) -> SparseVec {
    let a = &p[0].1;
    let b = &v[0].1;
    let mut out = Vec::with_capacity(v.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < p.len() {
        let vi = v.get(i).map(|x| x.0);
        let pj = p.get(j).map(|x| x.0);
        let (idx, val) = match (vi, pj) {
            (Some(x), Some(y)) if x == y => {
                let val = a * &v[i].1 - b * &p[j].1;
                i += 1;
                j += 1;
                (x, val)
            }
            (Some(x), Some(y)) if x < y => {
                i += 1;
                (x, a * &v[i - 1].1)
            }
            (Some(x), None) => {
                i += 1;
                (x, a * &v[i - 1].1)
            }
            (_, Some(y)) => {
                j += 1;
                (y, -(b * &p[j - 1].1))
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((idx, val));
        }
    }
    out
}

fn make_primitive(v: &mut SparseVec) {
    let g = v.iter().fold(BigInt::zero(), |g, (_, x)| g.gcd(x));
    if g.is_zero() {
        return;
    }
    let g = if v[0].1.is_negative() { -g } else { g };
    if !g.is_one() {
        for (_, x) in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Rank of a family of sparse integer vectors in `Z^dim`.
pub fn sparse_rank(dim: usize, vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut basis = EchelonBasis::new(dim);
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}
