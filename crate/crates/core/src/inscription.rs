//! Contact points of `F(A_(k))` with the sides of the spectral polygon.
//!
//! For a normal `A = U diag(λ) U*` and adjacent hull vertices `λ_i`, `λ_j`
//! with unit eigenvectors `v`, `w`:
//!
//! * if `v_k = 0` then `λ_i` itself is a Rayleigh quotient of `A_(k)`
//!   (witness `P^T v`), and likewise for `w`; if both vanish the whole side
//!   lies in `F(A_(k))`;
//! * otherwise, after rotating `v_k` and `w_k` to positive reals,
//!   `u = α v + β w` with `α = -w_k / r`, `β = v_k / r`, `r = sqrt(v_k² + w_k²)`
//!   is a unit vector with `u_k = 0` and `u* A u = α² λ_i + β² λ_j`, a point
//!   strictly inside the side.
//!
//! Deletion indices are 0-based.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::convexoid::eigen_decompose_normal;
use crate::error::{Error, Result};
use crate::fov::{self, FovBoundary, DEFAULT_ANGLES};
use crate::linalg::{
    dft_matrix, is_negligible, phase_normalize, principal_submatrix, project_down, rayleigh,
    ComplexMatrix, ComplexVector,
};
use crate::polygon::{convex_hull, default_collapse_tol, point_on_segment, SpectralPolygon};

/// Orthogonality tolerance for the eigenvector pair of an edge.
pub const ORTHOGONALITY_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CaseTag {
    /// `v_k = 0`; the contact is `λ_i`.
    VertexI,
    /// `w_k = 0`; the contact is `λ_j`.
    VertexJ,
    /// `v_k = w_k = 0`; the whole side is in the submatrix field.
    FullEdge,
    Interior,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::VertexI => "VERTEX_I",
            CaseTag::VertexJ => "VERTEX_J",
            CaseTag::FullEdge => "FULL_EDGE",
            CaseTag::Interior => "INTERIOR",
        }
    }
}

/// One point of `F(A_(k))` on a side `co(λ_i, λ_j)` of the polygon. For
/// `FullEdge` the midpoint stands in for the whole side.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeContact {
    /// Eigenvalue indices `(i, j)` of the edge endpoints.
    pub edge: (usize, usize),
    pub case_tag: CaseTag,
    pub contact_point: Complex64,
    pub alpha_sq: Option<f64>,
    pub beta_sq: Option<f64>,
    /// Unit vector `x` of length `n - 1` with `x* A_(k) x = contact_point`.
    pub witness: ComplexVector,
    /// Dimensions of the eigenspaces the two eigenvectors were chosen from.
    pub eigenspace_dims: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TangencyReport {
    /// Deletion index (0-based).
    pub k: usize,
    pub polygon: SpectralPolygon,
    /// One contact per polygon edge, in edge order. Empty when `d = 1`.
    pub contacts: Vec<EdgeContact>,
    pub all_verified: bool,
}

impl TangencyReport {
    pub fn count(&self, tag: CaseTag) -> usize {
        self.contacts.iter().filter(|c| c.case_tag == tag).count()
    }
}

/// The interior-case construction, exposed so the proof chain can be checked.
#[derive(Debug, Clone, PartialEq)]
pub struct InteriorCombination {
    pub alpha: f64,
    pub beta: f64,
    /// `α v' + β w'` with `v'`, `w'` phase-normalized at `k`.
    pub u: ComplexVector,
    pub contact_point: Complex64,
}

/// Builds `u = α v + β w` for eigenvectors whose k-th entries are both nonzero.
pub fn interior_combination(
    v: &ComplexVector,
    w: &ComplexVector,
    lambda_i: Complex64,
    lambda_j: Complex64,
    k: usize,
) -> Result<InteriorCombination> {
    let v = phase_normalize(v, k)?;
    let w = phase_normalize(w, k)?;
    let (vk, wk) = (v[k].re, w[k].re);
    let r = vk.hypot(wk);
    let alpha = -wk / r;
    let beta = vk / r;
    let u = v.combine(Complex64::new(alpha, 0.0), &w, Complex64::new(beta, 0.0));
    let contact_point = lambda_i * (alpha * alpha) + lambda_j * (beta * beta);
    Ok(InteriorCombination { alpha, beta, u, contact_point })
}

/// Zeroes entry `k` (already negligible), renormalizes, and drops it.
fn drop_negligible(y: &ComplexVector, k: usize) -> Result<ComplexVector> {
    let mut entries = y.clone().into_vec();
    entries[k] = Complex64::new(0.0, 0.0);
    let y: ComplexVector = entries.into();
    project_down(&y.normalized(), k)
}

fn check_unit(v: &ComplexVector) -> Result<()> {
    let norm = v.norm();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::NotUnit { norm });
    }
    Ok(())
}

/// Contact of `F(A_(k))` with the side `co(λ_i, λ_j)`, given orthonormal
/// eigenvectors `v`, `w` for the two endpoints.
pub fn contact_point(
    v: &ComplexVector,
    w: &ComplexVector,
    lambda_i: Complex64,
    lambda_j: Complex64,
    k: usize,
) -> Result<EdgeContact> {
    if v.len() != w.len() {
        return Err(Error::DimensionMismatch { expected: v.len(), got: w.len() });
    }
    if k >= v.len() {
        return Err(Error::IndexOutOfRange { index: k, dim: v.len() });
    }
    check_unit(v)?;
    check_unit(w)?;
    let inner = v.inner(w).norm();
    if inner > ORTHOGONALITY_TOL {
        return Err(Error::NotOrthogonal { inner });
    }

    let base = EdgeContact {
        edge: (0, 0),
        case_tag: CaseTag::Interior,
        contact_point: Complex64::new(0.0, 0.0),
        alpha_sq: None,
        beta_sq: None,
        witness: ComplexVector::zeros(0),
        eigenspace_dims: (1, 1),
    };
    match (is_negligible(v, k), is_negligible(w, k)) {
        (true, true) => {
            let r = std::f64::consts::FRAC_1_SQRT_2;
            let u = v.combine(Complex64::new(r, 0.0), w, Complex64::new(r, 0.0));
            Ok(EdgeContact {
                case_tag: CaseTag::FullEdge,
                contact_point: (lambda_i + lambda_j) * 0.5,
                witness: drop_negligible(&u, k)?,
                ..base
            })
        }
        (true, false) => Ok(EdgeContact {
            case_tag: CaseTag::VertexI,
            contact_point: lambda_i,
            witness: drop_negligible(v, k)?,
            ..base
        }),
        (false, true) => Ok(EdgeContact {
            case_tag: CaseTag::VertexJ,
            contact_point: lambda_j,
            witness: drop_negligible(w, k)?,
            ..base
        }),
        (false, false) => {
            let comb = interior_combination(v, w, lambda_i, lambda_j, k)?;
            Ok(EdgeContact {
                case_tag: CaseTag::Interior,
                contact_point: comb.contact_point,
                alpha_sq: Some(comb.alpha * comb.alpha),
                beta_sq: Some(comb.beta * comb.beta),
                witness: project_down(&comb.u, k)?,
                ..base
            })
        }
    }
}

/// Both sign choices `(α, β) = ∓(w_k, -v_k) / r` give the same contact point.
pub fn sign_invariance_check(
    v: &ComplexVector,
    w: &ComplexVector,
    lambda_i: Complex64,
    lambda_j: Complex64,
    k: usize,
) -> bool {
    let (Ok(v), Ok(w)) = (phase_normalize(v, k), phase_normalize(w, k)) else {
        return false;
    };
    let (vk, wk) = (v[k].re, w[k].re);
    let r = vk.hypot(wk);
    let branches = [(-wk / r, vk / r), (wk / r, -vk / r)];
    let points: Vec<Complex64> = branches
        .iter()
        .map(|&(a, b)| {
            let u = v.combine(Complex64::new(a, 0.0), &w, Complex64::new(b, 0.0));
            debug_assert!(u[k].norm() < 1e-10);
            lambda_i * (a * a) + lambda_j * (b * b)
        })
        .collect();
    (points[0] - points[1]).norm() <= 1e-12
}

/// Unit vector in `span{q_c : c in cols}` with the smallest k-th entry. With
/// two or more columns the minimum is zero.
fn eigenspace_vector(u: &ComplexMatrix, cols: &[usize], k: usize) -> ComplexVector {
    if cols.len() == 1 {
        return u.column(cols[0]);
    }
    let r: Vec<Complex64> = cols.iter().map(|&c| u[(k, c)]).collect();
    let a = (0..r.len()).max_by(|&x, &y| r[x].norm().total_cmp(&r[y].norm())).expect("nonempty");
    if r[a].norm() == 0.0 {
        return u.column(cols[0]);
    }
    let b = if a == 0 { 1 } else { 0 };
    // r_a c_a + r_b c_b = 0.
    let (ca, cb) = (-r[b], r[a]);
    let scale = 1.0 / ca.norm().hypot(cb.norm());
    let (qa, qb) = (u.column(cols[a]), u.column(cols[b]));
    qa.combine(ca * scale, &qb, cb * scale)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InscribeOptions {
    /// Normality tolerance passed to the diagonalization.
    pub normal_tol: f64,
    /// Verification tolerance relative to `1 + ||A||_F`.
    pub verify_tol_rel: f64,
    pub n_angles: usize,
}

impl Default for InscribeOptions {
    fn default() -> Self {
        Self { normal_tol: 1e-10, verify_tol_rel: 1e-8, n_angles: DEFAULT_ANGLES }
    }
}

/// Contacts of `F(A_(k))` with every side of `∂F(A)` for normal `A`.
pub fn inscribe(a: &ComplexMatrix, k: usize, tol: f64) -> Result<TangencyReport> {
    inscribe_with(a, k, &InscribeOptions { normal_tol: tol, ..Default::default() })
}

pub fn inscribe_with(a: &ComplexMatrix, k: usize, opts: &InscribeOptions) -> Result<TangencyReport> {
    let n = a.square_dim()?;
    if n < 2 {
        return Err(Error::TooSmall { dim: n, min: 2 });
    }
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, dim: n });
    }
    let (eigenvalues, u) = eigen_decompose_normal(a, opts.normal_tol)?;
    let collapse = default_collapse_tol(&eigenvalues);
    let polygon = convex_hull(&eigenvalues, collapse)?;

    let eigenspaces: Vec<Vec<usize>> = polygon
        .vertices
        .iter()
        .map(|&z| (0..n).filter(|&j| (eigenvalues[j] - z).norm() <= collapse).collect())
        .collect();

    let mut contacts = Vec::with_capacity(polygon.edges.len());
    for edge in &polygon.edges {
        let (si, sj) = (&eigenspaces[edge.start_vertex], &eigenspaces[edge.end_vertex]);
        let v = eigenspace_vector(&u, si, k);
        let w = eigenspace_vector(&u, sj, k);
        let mut contact = contact_point(&v, &w, edge.start, edge.end, k)?;
        contact.edge = (
            polygon.vertex_to_eigenindex[edge.start_vertex],
            polygon.vertex_to_eigenindex[edge.end_vertex],
        );
        contact.eigenspace_dims = (si.len(), sj.len());
        contacts.push(contact);
    }

    let mut report = TangencyReport { k, polygon, contacts, all_verified: false };
    report.all_verified =
        verify_inscription(a, k, &report, opts.n_angles, opts.verify_tol_rel * a.scale_factor())?;
    Ok(report)
}

/// Per-contact outcome of [`verify_inscription_detailed`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContactCheck {
    pub on_edge: bool,
    pub witness_matches: bool,
    pub in_submatrix_field: bool,
    pub edge_distance: f64,
    pub witness_error: f64,
}

impl ContactCheck {
    pub fn passed(&self) -> bool {
        self.on_edge && self.witness_matches && self.in_submatrix_field
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InscriptionCheck {
    pub contacts: Vec<ContactCheck>,
    /// `support(A_(k), θ) <= support(A, θ) + tol` on the whole grid.
    pub submatrix_contained: bool,
    pub shape_ok: bool,
}

impl InscriptionCheck {
    pub fn passed(&self) -> bool {
        self.shape_ok && self.submatrix_contained && self.contacts.iter().all(ContactCheck::passed)
    }
}

fn supports_dominated(inner: &FovBoundary, outer: &FovBoundary, tol: f64) -> bool {
    inner
        .samples
        .iter()
        .zip(&outer.samples)
        .all(|(i, o)| i.support <= o.support + tol)
}

pub fn verify_inscription_detailed(
    a: &ComplexMatrix,
    k: usize,
    report: &TangencyReport,
    n_angles: usize,
    tol: f64,
) -> Result<InscriptionCheck> {
    let sub = principal_submatrix(a, k)?;
    let sub_fov = fov::boundary(&sub, n_angles)?;
    let full_fov = fov::boundary(a, n_angles)?;
    let submatrix_contained = supports_dominated(&sub_fov, &full_fov, tol);
    let shape_ok = report.k == k && report.contacts.len() == report.polygon.edges.len();

    let contacts = report
        .contacts
        .iter()
        .zip(&report.polygon.edges)
        .map(|(c, edge)| {
            let edge_distance = edge.distance_to(c.contact_point);
            let witness_error = match rayleigh(&sub, &c.witness) {
                Ok(z) => (z - c.contact_point).norm(),
                Err(_) => f64::INFINITY,
            };
            ContactCheck {
                on_edge: point_on_segment(c.contact_point, edge, tol),
                witness_matches: witness_error <= tol,
                in_submatrix_field: sub_fov.contains(c.contact_point, tol),
                edge_distance,
                witness_error,
            }
        })
        .collect();
    Ok(InscriptionCheck { contacts, submatrix_contained, shape_ok })
}

/// True iff every contact lies on its edge, is realized by its witness, passes
/// the support test for `F(A_(k))`, and `F(A_(k))` stays inside `F(A)` at
/// every grid angle, all to `tol`.
pub fn verify_inscription(
    a: &ComplexMatrix,
    k: usize,
    report: &TangencyReport,
    n_angles: usize,
    tol: f64,
) -> Result<bool> {
    Ok(verify_inscription_detailed(a, k, report, n_angles, tol)?.passed())
}

/// `A = F diag(λ) F*` for the unitary DFT matrix `F`.
pub fn dft_normal_matrix(eigenvalues: &[Complex64]) -> ComplexMatrix {
    let f = dft_matrix(eigenvalues.len());
    &(&f * &ComplexMatrix::from_diagonal(eigenvalues)) * &f.adjoint()
}

/// Inscription for `A = F diag(λ) F*`; every interior contact must be the
/// midpoint of its side.
pub fn dft_inscribe(eigenvalues: &[Complex64], k: usize) -> Result<TangencyReport> {
    let n = eigenvalues.len();
    if n < 2 {
        return Err(Error::TooSmall { dim: n, min: 2 });
    }
    let a = dft_normal_matrix(eigenvalues);
    let report = inscribe(&a, k, 1e-10)?;
    let tol = 1e-9 * report.polygon.scale();
    for (c, edge) in report.contacts.iter().zip(&report.polygon.edges) {
        if c.case_tag == CaseTag::Interior {
            let distance = (c.contact_point - edge.midpoint()).norm();
            if distance > tol {
                return Err(Error::MidpointAssertionFailed { i: c.edge.0, j: c.edge.1, distance });
            }
        }
    }
    Ok(report)
}

/// Evidence that a side of the polygon meets `F(A_(k))`, found by sampling.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeProbe {
    pub edge: (usize, usize),
    /// Sampled edge point with the largest support margin, if any passes.
    pub hit: Option<Complex64>,
    pub margin: f64,
}

/// Sampling check used for convexoid matrices that are not normal, where no
/// diagonalizing unitary is available.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub k: usize,
    pub polygon: SpectralPolygon,
    pub probes: Vec<EdgeProbe>,
    pub submatrix_contained: bool,
    pub all_verified: bool,
}

/// Samples each side of `co(eigenvalues)` at `samples_per_edge + 1` points and
/// keeps the point deepest inside the outer support test for `F(A_(k))`.
pub fn probe_inscription(
    a: &ComplexMatrix,
    eigenvalues: &[Complex64],
    k: usize,
    n_angles: usize,
    tol: f64,
    samples_per_edge: usize,
) -> Result<ProbeReport> {
    let sub = principal_submatrix(a, k)?;
    let sub_fov = fov::boundary(&sub, n_angles)?;
    let full_fov = fov::boundary(a, n_angles)?;
    let polygon = convex_hull(eigenvalues, default_collapse_tol(eigenvalues))?;
    let pairs = if polygon.d() >= 2 { polygon.adjacent_vertex_pairs()? } else { Vec::new() };
    let m = samples_per_edge.max(1);

    let probes: Vec<EdgeProbe> = polygon
        .edges
        .iter()
        .zip(pairs)
        .map(|(edge, pair)| {
            let mut best = (f64::NEG_INFINITY, edge.start);
            for t in 0..=m {
                let z = edge.start + (edge.end - edge.start) * (t as f64 / m as f64);
                let margin = sub_fov
                    .samples
                    .iter()
                    .map(|s| s.support - s.extent(z))
                    .fold(f64::INFINITY, f64::min);
                if margin > best.0 {
                    best = (margin, z);
                }
            }
            EdgeProbe { edge: pair, hit: (best.0 >= -tol).then_some(best.1), margin: best.0 }
        })
        .collect();

    let submatrix_contained = supports_dominated(&sub_fov, &full_fov, tol);
    let all_verified = submatrix_contained && probes.iter().all(|p| p.hit.is_some());
    Ok(ProbeReport { k, polygon, probes, submatrix_contained, all_verified })
}
