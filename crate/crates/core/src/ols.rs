//! The full regression of a response on a nuisance block and a focal
//! block, plus the bookkeeping every covariance estimator downstream
//! needs.
//!
//! Coefficients are ordered nuisance block first, focal block second, so
//! "the focal block" of any p x p covariance matrix is a fixed index
//! range. No intercept is ever added implicitly; callers that want one
//! put a ones column inside `x1` (or `x2`).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{HouseholderQr, Matrix, Vector};

/// A regression design: response, nuisance block `x1` (may have zero
/// columns), focal block `x2`, and optional cluster / time annotations.
#[derive(Debug, Clone, Serialize)]
pub struct DesignSpec {
    y: Vector,
    x1: Matrix,
    x2: Matrix,
    cluster_ids: Option<Vec<String>>,
    time_index: Option<Vec<i64>>,
}

impl DesignSpec {
    pub fn new(y: Vector, x1: Matrix, x2: Matrix) -> Result<Self> {
        let n = y.len();
        if x1.rows() != n {
            return Err(Error::DimensionMismatch {
                context: "nuisance block row count",
                expected: n,
                got: x1.rows(),
            });
        }
        if x2.rows() != n {
            return Err(Error::DimensionMismatch {
                context: "focal block row count",
                expected: n,
                got: x2.rows(),
            });
        }
        if x2.cols() == 0 {
            return Err(Error::DimensionMismatch {
                context: "focal block column count",
                expected: 1,
                got: 0,
            });
        }
        let p = x1.cols() + x2.cols();
        if p > n {
            return Err(Error::TooFewRows { n, p });
        }
        Ok(DesignSpec {
            y,
            x1,
            x2,
            cluster_ids: None,
            time_index: None,
        })
    }

    /// Attaches cluster labels; at least two distinct labels required.
    pub fn with_cluster_ids(mut self, ids: Vec<String>) -> Result<Self> {
        if ids.len() != self.n() {
            return Err(Error::MissingClusterId {
                expected: self.n(),
                got: ids.len(),
            });
        }
        let mut distinct: Vec<&str> = Vec::new();
        for id in &ids {
            if !distinct.contains(&id.as_str()) {
                distinct.push(id);
            }
        }
        if distinct.len() < 2 {
            return Err(Error::SingleClusterWithCorrection {
                found: distinct.len(),
            });
        }
        self.cluster_ids = Some(ids);
        Ok(self)
    }

    /// Attaches a strictly increasing time index.
    pub fn with_time_index(mut self, t: Vec<i64>) -> Result<Self> {
        if t.len() != self.n() {
            return Err(Error::DimensionMismatch {
                context: "time index length",
                expected: self.n(),
                got: t.len(),
            });
        }
        for i in 1..t.len() {
            if t[i] <= t[i - 1] {
                return Err(Error::UnorderedTime { position: i });
            }
        }
        self.time_index = Some(t);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.y.len()
    }

    /// Nuisance column count K.
    pub fn k(&self) -> usize {
        self.x1.cols()
    }

    /// Focal column count L.
    pub fn l(&self) -> usize {
        self.x2.cols()
    }

    pub fn y(&self) -> &Vector {
        &self.y
    }

    pub fn x1(&self) -> &Matrix {
        &self.x1
    }

    pub fn x2(&self) -> &Matrix {
        &self.x2
    }

    pub fn cluster_ids(&self) -> Option<&[String]> {
        self.cluster_ids.as_deref()
    }

    pub fn time_index(&self) -> Option<&[i64]> {
        self.time_index.as_deref()
    }

    /// The combined design `[x1 | x2]`, n x (K + L).
    pub fn design(&self) -> Matrix {
        self.x1.hstack(&self.x2)
    }
}

/// Everything a fitted regression exposes: coefficients (nuisance block
/// first), residuals, leverages, `(X'X)^-1`, and the residual variance
/// with denominator n - p.
#[derive(Debug, Clone, Serialize)]
pub struct OlsFit {
    beta: Vector,
    residuals: Vector,
    leverages: Vector,
    xtx_inv: Matrix,
    n: usize,
    p: usize,
    focal_offset: usize,
    focal_len: usize,
    sigma2_hat: f64,
}

impl OlsFit {
    pub fn beta(&self) -> &Vector {
        &self.beta
    }

    pub fn residuals(&self) -> &Vector {
        &self.residuals
    }

    pub fn leverages(&self) -> &Vector {
        &self.leverages
    }

    pub fn xtx_inv(&self) -> &Matrix {
        &self.xtx_inv
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn focal_offset(&self) -> usize {
        self.focal_offset
    }

    pub fn focal_len(&self) -> usize {
        self.focal_len
    }

    pub fn sigma2_hat(&self) -> f64 {
        self.sigma2_hat
    }

    /// The focal slice of the coefficient vector.
    pub fn focal_coefficients(&self) -> Vector {
        Vector::new(
            (self.focal_offset..self.focal_offset + self.focal_len)
                .map(|i| self.beta.get(i))
                .collect(),
        )
        .expect("fitted coefficients are finite")
    }
}

/// Fits the full regression of `y` on `[x1 | x2]`.
pub fn fit(spec: &DesignSpec) -> Result<OlsFit> {
    fit_design(spec.y(), &spec.design(), spec.k(), spec.l())
}

/// Fits a prepared design with a known focal range. Used by both the
/// full fit and the inner partial fit.
pub(crate) fn fit_design(
    y: &Vector,
    design: &Matrix,
    focal_offset: usize,
    focal_len: usize,
) -> Result<OlsFit> {
    let n = design.rows();
    let p = design.cols();
    if n <= p {
        return Err(Error::TooFewRows { n, p });
    }
    let qr = HouseholderQr::factor(design)?;
    let beta = qr.solve(y)?;
    let residuals = y.sub(&design.mul_vec(&beta));
    let leverages = qr.leverages();
    let xtx_inv = qr.xtx_inverse();
    let sigma2_hat = residuals.norm2_sq() / (n - p) as f64;
    Ok(OlsFit {
        beta,
        residuals,
        leverages,
        xtx_inv,
        n,
        p,
        focal_offset,
        focal_len,
        sigma2_hat,
    })
}

/// Extracts the focal L x L sub-block of a p x p covariance matrix.
pub fn focal_block(fit: &OlsFit, cov: &Matrix) -> Result<Matrix> {
    if cov.rows() != fit.p || cov.cols() != fit.p {
        return Err(Error::DimensionMismatch {
            context: "focal block extraction",
            expected: fit.p,
            got: cov.rows().max(cov.cols()),
        });
    }
    let off = fit.focal_offset;
    let l = fit.focal_len;
    let mut out = Matrix::zeros(l, l);
    for i in 0..l {
        for j in 0..l {
            out.set(i, j, cov.get(off + i, off + j));
        }
    }
    Ok(out)
}
