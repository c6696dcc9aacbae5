//! Support functions and sampled boundaries of the field of values.
//!
//! Convention: the support value at angle `theta` is the maximal extent of
//! `F(A)` in the direction `e^{i theta}`,
//!
//! ```text
//! h(theta) = max { Re(e^{-i theta} z) : z in F(A) } = λ_max(H(theta)),
//! H(theta) = (e^{-i theta} A + e^{i theta} A*) / 2.
//! ```
//!
//! A top eigenvector `x` of `H(theta)` is a unit vector with `x* A x` on the
//! boundary of the field, so every sample carries its own witness.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{
    compress, hermitian_eigen, hermitian_eigen_compressed, ComplexMatrix, ComplexVector, EigenDecomposition,
    JacobiOptions,
};
use crate::random::SampleRng;

pub const DEFAULT_ANGLES: usize = 360;

/// Grid steps between cold eigensolver starts in [`boundary`].
const WARM_RESTART: usize = 24;
/// Grid steps sharing one compressed basis in [`boundary`].
const BASIS_REFRESH: usize = 4;

/// One support-function evaluation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SupportSample {
    pub theta: f64,
    /// `e^{i theta}`.
    pub direction: Complex64,
    pub support: f64,
    pub boundary_point: Complex64,
    pub witness: ComplexVector,
}

impl SupportSample {
    /// Same value as [`directional_extent`]`(z, self.theta)`.
    #[inline]
    pub fn extent(&self, z: Complex64) -> f64 {
        z.re * self.direction.re + z.im * self.direction.im
    }
}

/// `theta_j = 2πj / n` for `j = 0..n`.
pub fn grid_angles(n_angles: usize) -> Vec<f64> {
    (0..n_angles).map(|j| 2.0 * PI * j as f64 / n_angles as f64).collect()
}

/// `Re(e^{-i theta} z)`, the extent of `z` in direction `e^{i theta}`.
#[inline]
pub fn directional_extent(z: Complex64, theta: f64) -> f64 {
    let (sin, cos) = theta.sin_cos();
    z.re * cos + z.im * sin
}

pub fn support(a: &ComplexMatrix, theta: f64) -> Result<SupportSample> {
    a.square_dim()?;
    let eig = hermitian_eigen(&a.rotated_hermitian_part(theta))?;
    sample_from(a, theta, &eig)
}

fn sample_from(a: &ComplexMatrix, theta: f64, eig: &EigenDecomposition) -> Result<SupportSample> {
    let (support, witness) = eig.top();
    let boundary_point = witness.inner(&a.mul_vec(&witness)?);
    let (sin, cos) = theta.sin_cos();
    Ok(SupportSample { theta, direction: Complex64::new(cos, sin), support, boundary_point, witness })
}

/// Support samples of `F(A)` on a uniform angle grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FovBoundary {
    pub samples: Vec<SupportSample>,
    pub source_dim: usize,
}

pub fn boundary(a: &ComplexMatrix, n_angles: usize) -> Result<FovBoundary> {
    let source_dim = a.square_dim()?;
    if n_angles < 3 {
        return Err(Error::InvalidArgument(format!("need at least 3 angles, got {n_angles}")));
    }
    // H(theta) = cos(theta) H(0) + sin(theta) H(pi/2). Both parts are
    // compressed into the eigenbasis of a recent angle, so each step only
    // has to clean up the small off-diagonal drift. A cold solve every
    // WARM_RESTART steps keeps rounding in the carried basis from building up.
    let (h0, h1) = (a.rotated_hermitian_part(0.0), a.rotated_hermitian_part(FRAC_PI_2));
    let opts = JacobiOptions::default();
    let mut samples = Vec::with_capacity(n_angles);
    let mut basis: Option<(ComplexMatrix, ComplexMatrix, ComplexMatrix)> = None;
    let mut previous: Option<ComplexMatrix> = None;
    for (step, theta) in grid_angles(n_angles).into_iter().enumerate() {
        let eig = match previous.take() {
            Some(vectors) if step % WARM_RESTART != 0 => {
                if step % BASIS_REFRESH == 0 || basis.is_none() {
                    basis = Some((compress(&h0, &vectors), compress(&h1, &vectors), vectors));
                }
                let (p, q, g) = basis.as_ref().expect("basis set above");
                let (sin, cos) = theta.sin_cos();
                let b = p.scale(Complex64::new(cos, 0.0)).add(&q.scale(Complex64::new(sin, 0.0)))?;
                hermitian_eigen_compressed(&b, g, &opts)?
            }
            _ => {
                basis = None;
                hermitian_eigen(&a.rotated_hermitian_part(theta))?
            }
        };
        samples.push(sample_from(a, theta, &eig)?);
        previous = Some(eig.eigenvectors);
    }
    Ok(FovBoundary { samples, source_dim })
}

impl FovBoundary {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn points(&self) -> Vec<Complex64> {
        self.samples.iter().map(|s| s.boundary_point).collect()
    }

    pub fn supports(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.support).collect()
    }

    /// Outer membership test: `z` passes if it lies in every supporting
    /// half-plane of the grid, widened by `tol`. Points slightly outside the
    /// field between grid normals can pass; a negative `tol` shrinks the test.
    pub fn contains(&self, z: Complex64, tol: f64) -> bool {
        self.samples
            .iter()
            .all(|s| s.extent(z) <= s.support + tol)
    }

    /// Smallest signed turn `cross(p1 - p0, p2 - p1)` over consecutive
    /// boundary points, cyclically. Non-negative (up to rounding) for a
    /// convex counterclockwise trace.
    pub fn min_turn(&self) -> f64 {
        let pts = self.points();
        let m = pts.len();
        (0..m)
            .map(|j| {
                let (p0, p1, p2) = (pts[j], pts[(j + 1) % m], pts[(j + 2) % m]);
                let (e1, e2) = (p1 - p0, p2 - p1);
                e1.re * e2.im - e1.im * e2.re
            })
            .fold(f64::INFINITY, f64::min)
    }
}

pub fn contains(a: &ComplexMatrix, z: Complex64, n_angles: usize, tol: f64) -> Result<bool> {
    Ok(boundary(a, n_angles)?.contains(z, tol))
}

/// `count` Rayleigh quotients `x* A x` at random unit vectors `x` drawn from
/// normalized complex Gaussians; reproducible from `seed`.
pub fn random_field_samples(a: &ComplexMatrix, count: usize, seed: u64) -> Result<Vec<Complex64>> {
    let n = a.square_dim()?;
    let mut rng = SampleRng::seed_from(seed);
    (0..count)
        .map(|_| {
            let x = rng.unit_vector(n);
            Ok(x.inner(&a.mul_vec(&x)?))
        })
        .collect()
}

/// Largest support gap between `F(A)` and the hull of `eigenvalues` over the
/// grid, together with the angle where it occurs.
pub fn support_gap_profile(
    a: &ComplexMatrix,
    eigenvalues: &[Complex64],
    n_angles: usize,
) -> Result<(f64, f64)> {
    if eigenvalues.is_empty() {
        return Err(Error::EmptyInput);
    }
    let fov = boundary(a, n_angles)?;
    let mut worst = (f64::NEG_INFINITY, 0.0);
    for s in &fov.samples {
        let hull = eigenvalues
            .iter()
            .map(|&z| s.extent(z))
            .fold(f64::NEG_INFINITY, f64::max);
        let gap = s.support - hull;
        if gap > worst.0 {
            worst = (gap, s.theta);
        }
    }
    Ok(worst)
}

/// `max_theta [λ_max(H(theta)) - max_j Re(e^{-i theta} λ_j)]`; at most
/// rounding noise below zero since the spectrum lies in the field.
pub fn support_gap_to_hull(a: &ComplexMatrix, eigenvalues: &[Complex64], n_angles: usize) -> Result<f64> {
    Ok(support_gap_profile(a, eigenvalues, n_angles)?.0)
}
