//! Principal submatrices, deletion projectors and the two vector identities
//! the inscription construction relies on: eigenvector phase normalization
//! and lossless projection onto the coordinates that survive a deletion.
//!
//! Indices are 0-based throughout.

use num_complex::Complex64;

use super::{ComplexMatrix, ComplexVector, ONE, ZERO};
use crate::error::{Error, Result};

/// Relative threshold below which a vector component counts as zero:
/// `|v_k| <= ZERO_THRESHOLD * ||v||`.
pub const ZERO_THRESHOLD: f64 = 1e-12;

/// Whether `v[k]` is numerically zero relative to `||v||`.
pub fn is_negligible(v: &ComplexVector, k: usize) -> bool {
    v[k].norm() <= ZERO_THRESHOLD * v.norm()
}

/// Rotates `v` by the unimodular factor `exp(-i arg v_k)` so that the k-th
/// entry becomes real and positive. If `v` is an eigenvector the result is an
/// eigenvector for the same eigenvalue, with the same 2-norm.
pub fn phase_normalize(v: &ComplexVector, k: usize) -> Result<ComplexVector> {
    if k >= v.len() {
        return Err(Error::IndexOutOfRange { index: k, dim: v.len() });
    }
    let vk = v[k];
    let magnitude = vk.norm();
    if magnitude == 0.0 || is_negligible(v, k) {
        return Err(Error::ZeroComponent { index: k, magnitude });
    }
    let factor = vk.conj() / magnitude;
    let mut entries = v.scale(factor).into_vec();
    // Rounding in `factor` can leave ~1e-17 in the imaginary part.
    entries[k] = Complex64::new(magnitude, 0.0);
    Ok(entries.into())
}

/// The `n x (n-1)` matrix `[e_j : j != k]`, columns in ascending `j`.
pub fn deletion_projector(n: usize, k: usize) -> Result<ComplexMatrix> {
    if n < 2 {
        return Err(Error::TooSmall { dim: n, min: 2 });
    }
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, dim: n });
    }
    Ok(ComplexMatrix::from_fn(n, n - 1, |i, j| {
        let source = if j < k { j } else { j + 1 };
        if i == source {
            ONE
        } else {
            ZERO
        }
    }))
}

/// `P^T y` for the deletion projector `P` of index `k`. Requires `y_k = 0`
/// (up to [`ZERO_THRESHOLD`]), in which case `P x = y` and `x* x = y* y`.
pub fn project_down(y: &ComplexVector, k: usize) -> Result<ComplexVector> {
    let n = y.len();
    if n < 2 {
        return Err(Error::TooSmall { dim: n, min: 2 });
    }
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, dim: n });
    }
    if !is_negligible(y, k) {
        return Err(Error::NonzeroDeletedEntry { index: k, magnitude: y[k].norm() });
    }
    Ok(y.iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(_, &z)| z)
        .collect::<Vec<_>>()
        .into())
}

/// `A_(k)`: delete row `k` and column `k`.
pub fn principal_submatrix(a: &ComplexMatrix, k: usize) -> Result<ComplexMatrix> {
    let n = a.square_dim()?;
    if n < 2 {
        return Err(Error::TooSmall { dim: n, min: 2 });
    }
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, dim: n });
    }
    let skip = |i: usize| if i < k { i } else { i + 1 };
    Ok(ComplexMatrix::from_fn(n - 1, n - 1, |i, j| a[(skip(i), skip(j))]))
}

/// The Rayleigh quotient `x* A x` of a unit vector.
pub fn rayleigh(a: &ComplexMatrix, x: &ComplexVector) -> Result<Complex64> {
    let n = a.square_dim()?;
    if x.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: x.len() });
    }
    let norm = x.norm();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::NotUnit { norm });
    }
    Ok(x.inner(&a.mul_vec(x)?))
}
