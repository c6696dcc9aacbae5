//! Numeric convexoid test, unitary diagonalization of normal matrices, and a
//! verifier for block decompositions `U* A U = A1 ⊕ A2` with `A1` normal and
//! `F(A2) ⊆ F(A1)`.
//!
//! The decomposition is only ever checked, never searched for.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fov::{self, DEFAULT_ANGLES};
use crate::linalg::{hermitian_eigen, is_normal, is_unitary, normality_defect, ComplexMatrix};

/// Relative gap below which eigenvalues of the Hermitian part are treated as
/// one cluster during joint diagonalization.
pub const CLUSTER_TOL: f64 = 1e-7;

/// Normality tolerance used for verdicts and CLI routing.
pub const NORMAL_TOL: f64 = 1e-10;

/// Result of the grid-based convexoid test.
///
/// The support gap is only evaluated at the sampled angles, so a positive
/// verdict certifies `F(A) = co(σ(A))` at those angles and nowhere else.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvexoidVerdict {
    pub is_convexoid: bool,
    pub max_support_gap: f64,
    pub n_angles: usize,
    pub worst_angle: f64,
    pub is_normal: bool,
    pub tolerance: f64,
}

/// `1e-8 * (1 + ||A||_F)`.
pub fn default_convexoid_tol(a: &ComplexMatrix) -> f64 {
    1e-8 * a.scale_factor()
}

pub fn is_convexoid_numeric(
    a: &ComplexMatrix,
    eigenvalues: &[Complex64],
    n_angles: usize,
    tol: f64,
) -> Result<ConvexoidVerdict> {
    let n = a.square_dim()?;
    if eigenvalues.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: eigenvalues.len() });
    }
    if n_angles < 90 {
        return Err(Error::InvalidArgument(format!("convexoid test needs at least 90 angles, got {n_angles}")));
    }
    let (gap, worst_angle) = fov::support_gap_profile(a, eigenvalues, n_angles)?;
    Ok(ConvexoidVerdict {
        is_convexoid: gap <= tol,
        max_support_gap: gap,
        n_angles,
        worst_angle,
        is_normal: is_normal(a, NORMAL_TOL)?,
        tolerance: tol,
    })
}

/// Checks that `U` is unitary, that `U* A U` is block diagonal at `split`,
/// that the leading block is normal, and that the trailing block's field
/// stays inside the leading block's field at every grid angle.
pub fn verify_johnson_decomposition(
    a: &ComplexMatrix,
    u: &ComplexMatrix,
    split: usize,
    tol: f64,
) -> Result<bool> {
    let n = a.square_dim()?;
    if u.rows() != n || u.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, got: u.rows() });
    }
    if split == 0 || split >= n {
        return Err(Error::BadSplit { split, n });
    }
    if !is_unitary(u, tol)? {
        return Ok(false);
    }
    let b = &(&u.adjoint() * a) * u;
    let upper = b.block(0, split, split, n).frobenius_norm();
    let lower = b.block(split, n, 0, split).frobenius_norm();
    if upper > tol || lower > tol {
        return Ok(false);
    }
    let leading = b.block(0, split, 0, split);
    let trailing = b.block(split, n, split, n);
    if !is_normal(&leading, tol)? {
        return Ok(false);
    }
    let outer = fov::boundary(&leading, DEFAULT_ANGLES)?;
    let inner = fov::boundary(&trailing, DEFAULT_ANGLES)?;
    Ok(inner
        .samples
        .iter()
        .zip(&outer.samples)
        .all(|(i, o)| i.support <= o.support + tol))
}

/// `(A - A*) / 2i`, written so the result is exactly Hermitian.
fn skew_part(a: &ComplexMatrix) -> ComplexMatrix {
    let n = a.rows();
    let half_i = Complex64::new(0.0, -0.5);
    let mut k = ComplexMatrix::from_fn(n, n, |i, j| (a[(i, j)] - a[(j, i)].conj()) * half_i);
    for i in 0..n {
        for j in 0..i {
            let z = k[(j, i)].conj();
            *k.get_mut(i, j) = z;
        }
        let d = k[(i, i)].re;
        *k.get_mut(i, i) = Complex64::new(d, 0.0);
    }
    k
}

/// Unitary diagonalization `A = U diag(λ) U*` of a normal matrix.
///
/// The Hermitian part `(A + A*)/2` is diagonalized first; inside each cluster
/// of its eigenvalues (gap at most `1e-7 * (1 + ||A||_F)`) the compressed
/// Hermitian matrix `Q_c* (A - A*)/(2i) Q_c` is diagonalized to split the
/// cluster. Eigenvalues are read off as `u_j* A u_j`.
pub fn eigen_decompose_normal(a: &ComplexMatrix, tol: f64) -> Result<(Vec<Complex64>, ComplexMatrix)> {
    let n = a.square_dim()?;
    if !is_normal(a, tol)? {
        return Err(Error::NotNormal { commutator: normality_defect(a)? });
    }
    let cluster_gap = CLUSTER_TOL * a.scale_factor();
    let hermitian = hermitian_eigen(&a.rotated_hermitian_part(0.0))?;
    let skew = skew_part(a);

    let mut q = hermitian.eigenvectors.clone();
    let mu = &hermitian.eigenvalues;
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && mu[end] - mu[end - 1] <= cluster_gap {
            end += 1;
        }
        if end - start > 1 {
            let qc = q.block(0, n, start, end);
            let compressed = &(&qc.adjoint() * &skew) * &qc;
            let m = end - start;
            let sym = ComplexMatrix::from_fn(m, m, |i, j| {
                if i == j {
                    Complex64::new(compressed[(i, i)].re, 0.0)
                } else if i < j {
                    (compressed[(i, j)] + compressed[(j, i)].conj()) * 0.5
                } else {
                    (compressed[(j, i)] + compressed[(i, j)].conj()).conj() * 0.5
                }
            });
            let inner = hermitian_eigen(&sym)?;
            let rotated = &qc * &inner.eigenvectors;
            for i in 0..n {
                for j in 0..m {
                    *q.get_mut(i, start + j) = rotated[(i, j)];
                }
            }
        }
        start = end;
    }

    let eigenvalues = (0..n)
        .map(|j| {
            let v = q.column(j);
            v.inner(&a.mul_vec(&v).expect("square"))
        })
        .collect();
    Ok((eigenvalues, q))
}
