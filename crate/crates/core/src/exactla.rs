//! Exact rational scalars, dense matrices and the linear-algebra kernel.
//!
//! Tensor convention: the basis vector `(i, j)` of `V ⊗ W` has flat index
//! `i * dim W + j`. [`kron`] realizes it on linear maps, and every tensor
//! construction elsewhere in the crate relies on the same ordering.
//!
//! An element of `V ⊗ W*` is identified with the operator `W → V` whose
//! `(i, j)` entry is the coefficient of `v_i ⊗ w^j`; in other words the
//! row-major flattening of the operator (see [`Mat::flatten`]).

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub type Scalar = BigRational;
pub type Vector = Vec<Scalar>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Serializes a scalar as `"num/den"`, always with an explicit denominator.
pub fn format_scalar(s: &Scalar) -> String {
    format!("{}/{}", s.numer(), s.denom())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseScalarError(pub String);

/// Parses `"num/den"` or a bare integer `"num"`.
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseScalarError> {
    let err = || ParseScalarError(text.to_string());
    let t = text.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Scalar::new(n, d))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("linear system has no solution")]
    NoSolution,
    #[error("linear system has more than one solution")]
    NotUnique,
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds a matrix from row-major data. Panics if the length is wrong.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(
            data.len(),
            rows * cols,
            "entries length must be rows * cols"
        );
        Mat { rows, cols, data }
    }

    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Mat::from_vec(rows, cols, entries.iter().map(|&x| int(x)).collect())
    }

    pub fn from_rows(rows: &[Vector]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Mat::from_vec(rows.len(), cols, rows.concat())
    }

    /// Matrix whose columns are the given vectors; `rows` fixes the shape
    /// when the list is empty.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        assert!(
            columns.iter().all(|c| c.len() == rows),
            "column length mismatch"
        );
        Mat::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    /// Column vector.
    pub fn column_matrix(v: &[Scalar]) -> Self {
        Mat::from_vec(v.len(), 1, v.to_vec())
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

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Row-major flattening; for an operator `T: W → V` this is its
    /// coordinate vector in `V ⊗ W*`.
    pub fn flatten(&self) -> Vector {
        self.data.clone()
    }

    /// Inverse of [`Mat::flatten`].
    pub fn unflatten(v: &[Scalar], rows: usize, cols: usize) -> Self {
        Mat::from_vec(rows, cols, v.to_vec())
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = &self[(i, j)];
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "mul_vec shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn hstack(blocks: &[&Mat]) -> Self {
        let rows = blocks.first().map_or(0, |b| b.rows);
        assert!(blocks.iter().all(|b| b.rows == rows), "hstack row mismatch");
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for b in blocks {
                data.extend_from_slice(b.row(i));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn vstack(blocks: &[&Mat]) -> Self {
        let cols = blocks.first().map_or(0, |b| b.cols);
        assert!(
            blocks.iter().all(|b| b.cols == cols),
            "vstack column mismatch"
        );
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            data.extend_from_slice(&b.data);
        }
        Mat { rows, cols, data }
    }

    /// Sub-block of consecutive rows and columns.
    pub fn block(&self, row0: usize, rows: usize, col0: usize, cols: usize) -> Self {
        Mat::from_fn(rows, cols, |i, j| self[(row0 + i, col0 + j)].clone())
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Mat::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])].clone())
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn inverse(&self) -> Result<Mat, LinAlgError> {
        if self.rows != self.cols {
            return Err(LinAlgError::Shape(format!(
                "inverse of {}x{} matrix",
                self.rows, self.cols
            )));
        }
        solve_unique(self, &Mat::identity(self.rows))
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<'a> Mul<&'a Mat> for &'a Mat {
    type Output = Mat;

    fn mul(self, rhs: &'a Mat) -> Mat {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product {}x{} · {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let n = rhs.cols;
        let mut out = Mat::zeros(self.rows, n);
        // skip structural zeros: most operands here are permutation-like
        let rhs_nz: Vec<Vec<usize>> = (0..rhs.rows)
            .map(|k| (0..n).filter(|&j| !rhs[(k, j)].is_zero()).collect())
            .collect();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for &j in &rhs_nz[k] {
                    let prod = a * &rhs.data[k * n + j];
                    out.data[i * n + j] += prod;
                }
            }
        }
        out
    }
}

impl Mul for Mat {
    type Output = Mat;

    fn mul(self, rhs: Mat) -> Mat {
        &self * &rhs
    }
}

impl<'a> Add<&'a Mat> for &'a Mat {
    type Output = Mat;

    fn add(self, rhs: &'a Mat) -> Mat {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a Mat> for &'a Mat {
    type Output = Mat;

    fn sub(self, rhs: &'a Mat) -> Mat {
        assert_eq!(
            self.shape(),
            rhs.shape(),
            "matrix difference shape mismatch"
        );
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Mat {
    type Output = Mat;

    fn neg(self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

/// Kronecker product: `(a ⊗ b)[(i·rb + k, j·cb + l)] = a[i,j] · b[k,l]`.
pub fn kron(a: &Mat, b: &Mat) -> Mat {
    let (ra, ca) = a.shape();
    let (rb, cb) = b.shape();
    let mut out = Mat::zeros(ra * rb, ca * cb);
    let cols = ca * cb;
    for i in 0..ra {
        for j in 0..ca {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            for k in 0..rb {
                for l in 0..cb {
                    let y = &b[(k, l)];
                    if !y.is_zero() {
                        out.data[(i * rb + k) * cols + j * cb + l] = x * y;
                    }
                }
            }
        }
    }
    out
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &Mat) -> (Mat, Vec<usize>) {
    let mut rows: Vec<Vector> = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
    let pivots = rref_rows(&mut rows, m.cols, m.cols);
    let data = rows.concat();
    (Mat::from_vec(m.rows, m.cols, data), pivots)
}

/// In-place Gauss–Jordan elimination pivoting only on columns `< pivot_limit`;
/// row operations still act on all `width` columns.
fn rref_rows(rows: &mut [Vector], width: usize, pivot_limit: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_limit.min(width) {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        let support: Vec<usize> = (c..width).filter(|&j| !rows[r][j].is_zero()).collect();
        for &j in &support {
            rows[r][j] *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &support {
                let delta = &factor * &pivot_row[j];
                row[j] -= delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right null space, one vector per free column of the reduced
/// echelon form (free entry 1, other free entries 0).
pub fn kernel_basis(m: &Mat) -> Vec<Vector> {
    let (r, pivots) = rref(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Scalar::zero(); m.cols];
            v[f] = Scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, f)].clone();
            }
            v
        })
        .collect()
}

/// Unique `X` with `a · X = b`.
pub fn solve_unique(a: &Mat, b: &Mat) -> Result<Mat, LinAlgError> {
    if a.rows != b.rows {
        return Err(LinAlgError::Shape(format!(
            "solve {}x{} against {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let width = a.cols + b.cols;
    let mut rows: Vec<Vector> = (0..a.rows)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.extend_from_slice(b.row(i));
            r
        })
        .collect();
    let pivots = rref_rows(&mut rows, width, a.cols);
    let rank = pivots.len();
    if rows[rank..]
        .iter()
        .any(|r| r[a.cols..].iter().any(|x| !x.is_zero()))
    {
        return Err(LinAlgError::NoSolution);
    }
    if rank < a.cols {
        return Err(LinAlgError::NotUnique);
    }
    Ok(Mat::from_fn(a.cols, b.cols, |i, j| {
        rows[i][a.cols + j].clone()
    }))
}

/// Unique `X` with `X · f = g`.
pub fn solve_unique_left(f: &Mat, g: &Mat) -> Result<Mat, LinAlgError> {
    Ok(solve_unique(&f.transpose(), &g.transpose())?.transpose())
}

/// Canonical basis of the span: the nonzero rows of the reduced echelon form
/// of the matrix whose rows are `vectors`.
pub fn span_basis(vectors: &[Vector], dim: usize) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut rows: Vec<Vector> = vectors.to_vec();
    assert!(
        rows.iter().all(|v| v.len() == dim),
        "ambient dimension mismatch"
    );
    let rank = rref_rows(&mut rows, dim, dim).len();
    rows.truncate(rank);
    rows
}

pub fn rank_of(vectors: &[Vector], dim: usize) -> usize {
    span_basis(vectors, dim).len()
}

/// True iff the two lists span the same subspace.
pub fn subspace_equal(b1: &[Vector], b2: &[Vector]) -> bool {
    let dim = b1.first().or(b2.first()).map_or(0, Vec::len);
    let r1 = rank_of(b1, dim);
    let r2 = rank_of(b2, dim);
    if r1 != r2 {
        return false;
    }
    let both: Vec<Vector> = b1.iter().chain(b2).cloned().collect();
    rank_of(&both, dim) == r1
}

/// True iff every vector of `sub` lies in the span of `space`.
pub fn subspace_contains(space: &[Vector], sub: &[Vector]) -> bool {
    let dim = space.first().or(sub.first()).map_or(0, Vec::len);
    let r = rank_of(space, dim);
    let both: Vec<Vector> = space.iter().chain(sub).cloned().collect();
    rank_of(&both, dim) == r
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(r: usize, c: usize, e: &[i64]) -> Mat {
        Mat::from_ints(r, c, e)
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = kernel_basis(&m(2, 2, &[1, 2, 2, 4]));
        assert_eq!(k, vec![vec![int(-2), int(1)]]);
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert!(kernel_basis(&Mat::identity(4)).is_empty());
        let k = kernel_basis(&Mat::zeros(3, 3));
        assert_eq!(k, (0..3).map(|i| unit_vector(3, i)).collect::<Vec<_>>());
    }

    #[test]
    fn solve_examples() {
        let b = m(3, 2, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(solve_unique(&Mat::identity(3), &b).unwrap(), b);
        let x = solve_unique(&m(1, 1, &[2]), &m(1, 1, &[3])).unwrap();
        assert_eq!(x[(0, 0)], frac(3, 2));
        assert_eq!(
            solve_unique(&m(2, 1, &[1, 1]), &m(2, 1, &[1, 2])),
            Err(LinAlgError::NoSolution)
        );
        assert_eq!(
            solve_unique(&m(1, 2, &[1, 1]), &m(1, 1, &[1])),
            Err(LinAlgError::NotUnique)
        );
    }

    #[test]
    fn solve_left_recovers_factor() {
        let x = m(2, 2, &[1, -1, 3, 2]);
        let f = m(2, 3, &[1, 0, 2, 0, 1, 1]);
        let g = &x * &f;
        assert_eq!(solve_unique_left(&f, &g).unwrap(), x);
    }

    #[test]
    fn kron_examples() {
        assert_eq!(kron(&Mat::identity(2), &Mat::identity(3)), Mat::identity(6));
        let a = m(2, 2, &[1, 2, 3, 4]);
        assert_eq!(kron(&m(1, 1, &[2]), &a), a.scale(&int(2)));
        // index convention: (i, j) ↦ i * cols_b + j
        let k = kron(&m(1, 2, &[1, 2]), &m(1, 2, &[3, 5]));
        assert_eq!(k, m(1, 4, &[3, 5, 6, 10]));
    }

    #[test]
    fn subspace_examples() {
        assert!(subspace_equal(
            &[vec![int(1), int(0)]],
            &[vec![int(2), int(0)]]
        ));
        assert!(!subspace_equal(
            &[vec![int(1), int(0)]],
            &[vec![int(0), int(1)]]
        ));
        assert!(subspace_contains(
            &[vec![int(1), int(0)], vec![int(0), int(1)]],
            &[vec![int(3), int(7)]]
        ));
    }

    #[test]
    fn scalar_text_roundtrip() {
        let s = frac(-6, 4);
        assert_eq!(format_scalar(&s), "-3/2");
        assert_eq!(parse_scalar("-3/2").unwrap(), s);
        assert_eq!(parse_scalar(" 7 ").unwrap(), int(7));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn inverse_of_singular_fails() {
        assert!(m(2, 2, &[1, 2, 2, 4]).inverse().is_err());
        let a = m(2, 2, &[2, 1, 1, 1]);
        assert!((&a * &a.inverse().unwrap()).is_identity());
    }
}
