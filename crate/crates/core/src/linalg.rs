//! Dense row-major matrices, vectors, and the Householder least-squares
//! primitives the rest of the crate builds on.
//!
//! Every solve path goes through the orthogonal factorization; `X'X` is
//! never formed and inverted directly. Rank deficiency is a hard error,
//! detected when a triangular-factor diagonal falls below
//! [`RANK_TOLERANCE`] relative to the largest diagonal.

use serde::Serialize;

use crate::error::{Error, Result};

/// Relative threshold on the triangular-factor diagonal below which a
/// design is declared rank deficient.
pub const RANK_TOLERANCE: f64 = 1e-12;

/// Dense real matrix in row-major order. Entries are validated to be
/// finite at construction.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    /// Builds a matrix from row-major data, rejecting wrong lengths and
    /// non-finite entries.
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: "matrix entry count",
                expected: rows * cols,
                got: data.len(),
            });
        }
        if let Some(index) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                what: "matrix",
                index,
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Internal constructor for values produced by our own arithmetic.
    pub(crate) fn raw(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::raw(rows, cols, vec![0.0; rows * cols])
    }

    /// An n x 0 matrix, the legal "empty nuisance block".
    pub fn empty(rows: usize) -> Self {
        Matrix::raw(rows, 0, Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Stacks columns side by side into an n x m matrix.
    pub fn from_columns(rows: usize, columns: &[Vec<f64>]) -> Result<Self> {
        for col in columns {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    context: "column length",
                    expected: rows,
                    got: col.len(),
                });
            }
        }
        let cols = columns.len();
        let mut data = vec![0.0; rows * cols];
        for (j, col) in columns.iter().enumerate() {
            for (i, &v) in col.iter().enumerate() {
                data[i * cols + j] = v;
            }
        }
        Matrix::new(rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.cols + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.data[row * self.cols + col] = value;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn column(&self, col: usize) -> Vector {
        assert!(col < self.cols, "column index out of bounds");
        Vector::raw((0..self.rows).map(|i| self.get(i, col)).collect())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0.0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let mut out = vec![0.0; self.rows];
        for r in 0..self.rows {
            let mut sum = 0.0;
            for c in 0..self.cols {
                sum += self.get(r, c) * v.get(c);
            }
            out[r] = sum;
        }
        Vector::raw(out)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut data = vec![0.0; self.rows * cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                data[r * cols + c] = self.get(r, c);
            }
            for c in 0..other.cols {
                data[r * cols + self.cols + c] = other.get(r, c);
            }
        }
        Matrix::raw(self.rows, cols, data)
    }

    pub fn scale(&self, factor: f64) -> Matrix {
        Matrix::raw(
            self.rows,
            self.cols,
            self.data.iter().map(|v| v * factor).collect(),
        )
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    /// Largest elementwise absolute difference; panics on shape mismatch.
    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.rows, other.rows, "max_abs_diff row mismatch");
        assert_eq!(self.cols, other.cols, "max_abs_diff col mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |acc, (a, b)| acc.max((a - b).abs()))
    }
}

/// Dense real vector; entries validated finite at construction.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Vector {
    data: Vec<f64>,
}

impl Vector {
    pub fn new(data: Vec<f64>) -> Result<Self> {
        if let Some(index) = data.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                what: "vector",
                index,
            });
        }
        Ok(Vector { data })
    }

    pub(crate) fn raw(data: Vec<f64>) -> Self {
        Vector { data }
    }

    pub fn zeros(len: usize) -> Self {
        Vector::raw(vec![0.0; len])
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> f64 {
        self.data[i]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn iter(&self) -> impl Iterator<Item = &f64> {
        self.data.iter()
    }

    pub fn dot(&self, other: &Vector) -> f64 {
        assert_eq!(self.len(), other.len(), "dot length mismatch");
        self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum()
    }

    pub fn norm2_sq(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.len(), other.len(), "sub length mismatch");
        Vector::raw(
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn max_abs_diff(&self, other: &Vector) -> f64 {
        assert_eq!(self.len(), other.len(), "max_abs_diff length mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |acc, (a, b)| acc.max((a - b).abs()))
    }
}

/// Compact Householder QR factorization of a tall full-rank matrix.
///
/// Stores one unit reflector per column plus the square triangular
/// factor. Construction fails with [`Error::RankDeficient`] when a
/// diagonal of the triangular factor drops below [`RANK_TOLERANCE`]
/// relative to the largest one.
#[derive(Debug, Clone)]
pub struct HouseholderQr {
    n: usize,
    p: usize,
    reflectors: Vec<Vec<f64>>,
    r: Matrix,
}

impl HouseholderQr {
    pub fn factor(x: &Matrix) -> Result<Self> {
        let n = x.rows();
        let p = x.cols();
        if n < p {
            return Err(Error::DimensionMismatch {
                context: "factorization needs rows >= cols",
                expected: p,
                got: n,
            });
        }
        let mut work = x.clone();
        let mut reflectors = Vec::with_capacity(p);

        for k in 0..p {
            let mut v: Vec<f64> = (k..n).map(|i| work.get(i, k)).collect();
            let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
            if norm > 0.0 {
                // v = x + sign(x0) * ||x|| * e1, normalized; the sign
                // choice avoids cancellation.
                let sign = if v[0] >= 0.0 { 1.0 } else { -1.0 };
                v[0] += sign * norm;
                let vnorm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
                for a in &mut v {
                    *a /= vnorm;
                }
                // Apply H = I - 2vv' to the trailing block of the work matrix.
                for j in k..p {
                    let mut dot = 0.0;
                    for (i, vi) in v.iter().enumerate() {
                        dot += vi * work.get(k + i, j);
                    }
                    for (i, vi) in v.iter().enumerate() {
                        let val = work.get(k + i, j) - 2.0 * vi * dot;
                        work.set(k + i, j, val);
                    }
                }
            } else {
                v = vec![0.0; n - k];
            }
            reflectors.push(v);
        }

        let mut r = Matrix::zeros(p, p);
        for i in 0..p {
            for j in i..p {
                r.set(i, j, work.get(i, j));
            }
        }

        let max_diag = (0..p).fold(0.0_f64, |acc, i| acc.max(r.get(i, i).abs()));
        for k in 0..p {
            if max_diag == 0.0 || r.get(k, k).abs() < RANK_TOLERANCE * max_diag {
                return Err(Error::RankDeficient { column: k });
            }
        }

        Ok(HouseholderQr {
            n,
            p,
            reflectors,
            r,
        })
    }

    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.p
    }

    /// Applies Q' in place to a length-n slice.
    fn apply_qt(&self, v: &mut [f64]) {
        debug_assert_eq!(v.len(), self.n);
        for (k, refl) in self.reflectors.iter().enumerate() {
            let mut dot = 0.0;
            for (i, ri) in refl.iter().enumerate() {
                dot += ri * v[k + i];
            }
            if dot != 0.0 {
                for (i, ri) in refl.iter().enumerate() {
                    v[k + i] -= 2.0 * ri * dot;
                }
            }
        }
    }

    /// Applies Q in place to a length-n slice.
    fn apply_q(&self, v: &mut [f64]) {
        debug_assert_eq!(v.len(), self.n);
        for (k, refl) in self.reflectors.iter().enumerate().rev() {
            let mut dot = 0.0;
            for (i, ri) in refl.iter().enumerate() {
                dot += ri * v[k + i];
            }
            if dot != 0.0 {
                for (i, ri) in refl.iter().enumerate() {
                    v[k + i] -= 2.0 * ri * dot;
                }
            }
        }
    }

    /// Minimum-norm least-squares coefficients for the factored matrix.
    pub fn solve(&self, y: &Vector) -> Result<Vector> {
        if y.len() != self.n {
            return Err(Error::DimensionMismatch {
                context: "solve right-hand side",
                expected: self.n,
                got: y.len(),
            });
        }
        let mut w: Vec<f64> = y.as_slice().to_vec();
        self.apply_qt(&mut w);
        let mut beta = vec![0.0; self.p];
        for i in (0..self.p).rev() {
            let mut sum = w[i];
            for j in i + 1..self.p {
                sum -= self.r.get(i, j) * beta[j];
            }
            beta[i] = sum / self.r.get(i, i);
        }
        Ok(Vector::raw(beta))
    }

    /// The thin orthogonal factor, n x p.
    pub fn thin_q(&self) -> Matrix {
        let mut q = Matrix::zeros(self.n, self.p);
        for j in 0..self.p {
            let mut e = vec![0.0; self.n];
            e[j] = 1.0;
            self.apply_q(&mut e);
            for i in 0..self.n {
                q.set(i, j, e[i]);
            }
        }
        q
    }

    /// Diagonal of the hat matrix, via row norms of the thin factor.
    pub fn leverages(&self) -> Vector {
        let q = self.thin_q();
        let mut h = vec![0.0; self.n];
        for i in 0..self.n {
            let mut sum = 0.0;
            for j in 0..self.p {
                let v = q.get(i, j);
                sum += v * v;
            }
            h[i] = sum;
        }
        Vector::raw(h)
    }

    /// (X'X)^-1 as R^-1 R^-T, filled symmetrically.
    pub fn xtx_inverse(&self) -> Matrix {
        let rinv = self.r_inverse();
        let p = self.p;
        let mut out = Matrix::zeros(p, p);
        for i in 0..p {
            for j in i..p {
                let mut sum = 0.0;
                for k in j..p {
                    sum += rinv.get(i, k) * rinv.get(j, k);
                }
                out.set(i, j, sum);
                out.set(j, i, sum);
            }
        }
        out
    }

    fn r_inverse(&self) -> Matrix {
        let p = self.p;
        let mut inv = Matrix::zeros(p, p);
        for i in 0..p {
            inv.set(i, i, 1.0 / self.r.get(i, i));
            for j in (0..i).rev() {
                let mut sum = 0.0;
                for k in j + 1..=i {
                    sum += self.r.get(j, k) * inv.get(k, i);
                }
                inv.set(j, i, -sum / self.r.get(j, j));
            }
        }
        inv
    }

    /// Projects each column of `m` onto the column space of the factored
    /// matrix and returns the residual `(I - H) m`.
    pub fn residualize(&self, m: &Matrix) -> Result<Matrix> {
        if m.rows() != self.n {
            return Err(Error::DimensionMismatch {
                context: "residualize row count",
                expected: self.n,
                got: m.rows(),
            });
        }
        let mut out = Matrix::zeros(self.n, m.cols());
        for j in 0..m.cols() {
            let mut w: Vec<f64> = (0..self.n).map(|i| m.get(i, j)).collect();
            self.apply_qt(&mut w);
            for wi in w.iter_mut().skip(self.p) {
                *wi = 0.0;
            }
            self.apply_q(&mut w);
            for i in 0..self.n {
                out.set(i, j, m.get(i, j) - w[i]);
            }
        }
        Ok(out)
    }
}

/// Least-squares fit of `y` on the columns of `x`.
///
/// Returns the coefficients and the residual vector `y - x beta`.
pub fn least_squares_solve(x: &Matrix, y: &Vector) -> Result<(Vector, Vector)> {
    if x.cols() < 1 {
        return Err(Error::DimensionMismatch {
            context: "least-squares column count",
            expected: 1,
            got: 0,
        });
    }
    if x.rows() != y.len() {
        return Err(Error::DimensionMismatch {
            context: "least-squares row count",
            expected: x.rows(),
            got: y.len(),
        });
    }
    let qr = HouseholderQr::factor(x)?;
    let beta = qr.solve(y)?;
    let residuals = y.sub(&x.mul_vec(&beta));
    Ok((beta, residuals))
}

/// Residualizes every column of `m` on the block `x1`, i.e. `(I - H1) m`.
///
/// An empty `x1` (zero columns) returns `m` unchanged.
pub fn residualize(x1: &Matrix, m: &Matrix) -> Result<Matrix> {
    if x1.rows() != m.rows() {
        return Err(Error::DimensionMismatch {
            context: "residualize row count",
            expected: x1.rows(),
            got: m.rows(),
        });
    }
    if x1.cols() == 0 {
        return Ok(m.clone());
    }
    HouseholderQr::factor(x1)?.residualize(m)
}

/// Diagonal of the hat matrix `X (X'X)^-1 X'`.
pub fn leverages(x: &Matrix) -> Result<Vector> {
    Ok(HouseholderQr::factor(x)?.leverages())
}

/// Inverse of `X'X` through the orthogonal factorization.
pub fn xtx_inverse(x: &Matrix) -> Result<Matrix> {
    Ok(HouseholderQr::factor(x)?.xtx_inverse())
}

/// Full hat matrix `X (X'X)^-1 X'`; n x n, for diagnostics and tests.
pub fn hat_matrix(x: &Matrix) -> Result<Matrix> {
    let qr = HouseholderQr::factor(x)?;
    let q = qr.thin_q();
    Ok(q.matmul(&q.transpose()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn mat(rows: usize, cols: usize, data: &[f64]) -> Matrix {
        Matrix::new(rows, cols, data.to_vec()).unwrap()
    }

    fn vec_(data: &[f64]) -> Vector {
        Vector::new(data.to_vec()).unwrap()
    }

    #[test]
    fn intercept_only_fit_is_the_mean() {
        let x = mat(2, 1, &[1.0, 1.0]);
        let y = vec_(&[2.0, 4.0]);
        let (beta, res) = least_squares_solve(&x, &y).unwrap();
        assert_abs_diff_eq!(beta.get(0), 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(res.get(0), -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(res.get(1), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn identity_design_reproduces_y() {
        let x = Matrix::identity(2);
        let y = vec_(&[5.0, -3.0]);
        let (beta, res) = least_squares_solve(&x, &y).unwrap();
        assert_abs_diff_eq!(beta.get(0), 5.0, epsilon = 1e-12);
        assert_abs_diff_eq!(beta.get(1), -3.0, epsilon = 1e-12);
        assert!(res.max_abs() < 1e-12);
    }

    #[test]
    fn exact_line_has_zero_residuals() {
        let x = mat(3, 2, &[1.0, 0.0, 1.0, 1.0, 1.0, 2.0]);
        let y = vec_(&[0.0, 1.0, 2.0]);
        let (beta, res) = least_squares_solve(&x, &y).unwrap();
        assert_abs_diff_eq!(beta.get(0), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(beta.get(1), 1.0, epsilon = 1e-12);
        assert!(res.max_abs() < 1e-12);
    }

    #[test]
    fn normal_equations_hold_after_solve() {
        let x = mat(4, 2, &[1.0, 0.5, 1.0, -1.0, 1.0, 2.0, 1.0, 0.25]);
        let y = vec_(&[1.0, 0.0, 3.0, -2.0]);
        let (_, res) = least_squares_solve(&x, &y).unwrap();
        let xtr = x.transpose().mul_vec(&res);
        let xty = x.transpose().mul_vec(&y);
        assert!(xtr.max_abs() <= 1e-9 * (1.0 + xty.max_abs()));
    }

    #[test]
    fn residualize_on_ones_demeans() {
        let ones = mat(3, 1, &[1.0, 1.0, 1.0]);
        let m = mat(3, 1, &[1.0, 2.0, 3.0]);
        let r = residualize(&ones, &m).unwrap();
        assert_abs_diff_eq!(r.get(0, 0), -1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.get(1, 0), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(r.get(2, 0), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn residualize_on_square_full_rank_is_zero() {
        let x1 = mat(2, 2, &[1.0, 2.0, 3.0, 4.0]);
        let m = mat(2, 1, &[5.0, 6.0]);
        let r = residualize(&x1, &m).unwrap();
        assert!(r.max_abs() < 1e-12);
    }

    #[test]
    fn residualize_leaves_orthogonal_columns_alone() {
        // x1 and m orthogonal by construction
        let x1 = mat(4, 1, &[1.0, 1.0, 1.0, 1.0]);
        let m = mat(4, 1, &[1.0, -1.0, 1.0, -1.0]);
        let r = residualize(&x1, &m).unwrap();
        assert!(r.max_abs_diff(&m) < 1e-12);
    }

    #[test]
    fn residualize_with_empty_block_is_identity() {
        let x1 = Matrix::empty(3);
        let m = mat(3, 2, &[1.0, 2.0, 3.0, 4.0, 5.0, 6.0]);
        let r = residualize(&x1, &m).unwrap();
        assert_eq!(r, m);
    }

    #[test]
    fn residualize_is_idempotent() {
        let x1 = mat(5, 2, &[1.0, 0.1, 1.0, 1.3, 1.0, -0.7, 1.0, 2.2, 1.0, 0.9]);
        let m = mat(5, 1, &[3.0, 1.0, 4.0, 1.0, 5.0]);
        let once = residualize(&x1, &m).unwrap();
        let twice = residualize(&x1, &once).unwrap();
        assert!(twice.max_abs_diff(&once) < 1e-10);
    }

    #[test]
    fn leverages_of_intercept_are_uniform() {
        let x = mat(4, 1, &[1.0, 1.0, 1.0, 1.0]);
        let h = leverages(&x).unwrap();
        for i in 0..4 {
            assert_abs_diff_eq!(h.get(i), 0.25, epsilon = 1e-12);
        }
    }

    #[test]
    fn leverages_of_saturated_design_are_one() {
        let h = leverages(&Matrix::identity(3)).unwrap();
        for i in 0..3 {
            assert_abs_diff_eq!(h.get(i), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn leverages_of_three_point_line() {
        let x = mat(3, 2, &[1.0, 0.0, 1.0, 1.0, 1.0, 2.0]);
        let h = leverages(&x).unwrap();
        assert_abs_diff_eq!(h.get(0), 5.0 / 6.0, epsilon = 1e-12);
        assert_abs_diff_eq!(h.get(1), 1.0 / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(h.get(2), 5.0 / 6.0, epsilon = 1e-12);
        let sum: f64 = h.iter().sum();
        assert_abs_diff_eq!(sum, 2.0, epsilon = 1e-9);
    }

    #[test]
    fn xtx_inverse_of_intercept() {
        let x = mat(4, 1, &[1.0, 1.0, 1.0, 1.0]);
        let inv = xtx_inverse(&x).unwrap();
        assert_abs_diff_eq!(inv.get(0, 0), 0.25, epsilon = 1e-12);
    }

    #[test]
    fn xtx_inverse_of_identity_is_identity() {
        let inv = xtx_inverse(&Matrix::identity(3)).unwrap();
        assert!(inv.max_abs_diff(&Matrix::identity(3)) < 1e-12);
    }

    #[test]
    fn xtx_inverse_of_three_point_line() {
        // X'X = [[3,3],[3,5]], inverse [[5/6,-1/2],[-1/2,1/2]]
        let x = mat(3, 2, &[1.0, 0.0, 1.0, 1.0, 1.0, 2.0]);
        let inv = xtx_inverse(&x).unwrap();
        assert_abs_diff_eq!(inv.get(0, 0), 5.0 / 6.0, epsilon = 1e-12);
        assert_abs_diff_eq!(inv.get(0, 1), -0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(inv.get(1, 0), -0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(inv.get(1, 1), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn duplicate_column_is_rank_deficient() {
        let x = mat(3, 2, &[1.0, 1.0, 2.0, 2.0, 3.0, 3.0]);
        match HouseholderQr::factor(&x) {
            Err(Error::RankDeficient { column }) => assert_eq!(column, 1),
            other => panic!("expected rank deficiency, got {other:?}"),
        }
    }

    #[test]
    fn non_finite_entries_are_rejected() {
        assert!(matches!(
            Matrix::new(1, 2, vec![1.0, f64::NAN]),
            Err(Error::NonFinite { index: 1, .. })
        ));
        assert!(matches!(
            Vector::new(vec![f64::INFINITY]),
            Err(Error::NonFinite { index: 0, .. })
        ));
    }

    #[test]
    fn hat_matrix_is_symmetric_and_idempotent() {
        let x = mat(4, 2, &[1.0, 0.0, 1.0, 1.0, 1.0, 2.0, 1.0, 3.0]);
        let h = hat_matrix(&x).unwrap();
        assert!(h.max_abs_diff(&h.transpose()) < 1e-12);
        assert!(h.matmul(&h).max_abs_diff(&h) < 1e-10);
    }
}
