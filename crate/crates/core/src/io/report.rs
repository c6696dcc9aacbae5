use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::convexoid::ConvexoidVerdict;
use crate::error::{Error, Result};
use crate::fov::FovBoundary;
use crate::inscription::{EdgeContact, EdgeProbe, ProbeReport, TangencyReport};
use crate::linalg::ComplexMatrix;
use crate::polygon::SpectralPolygon;

use super::matrix_digest;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixMeta {
    pub n: usize,
    pub is_normal: bool,
    pub normality_defect: f64,
    pub convexoid: ConvexoidVerdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonRecord {
    #[serde(flatten)]
    pub polygon: SpectralPolygon,
    pub midpoints: Vec<Complex64>,
}

/// Contacts for one deletion index. `k` is 1-based, as on the command line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KReport {
    pub k: usize,
    pub all_verified: bool,
    pub contacts: Vec<EdgeContact>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryRecord {
    pub theta: f64,
    pub support: f64,
    pub point: Complex64,
}

/// Everything `inscribe` and `dft` produce for one matrix. Complex numbers
/// are `[re, im]` pairs; eigenvalue indices are 0-based positions in
/// `eigenvalues`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    /// SHA-256 of the canonical matrix document.
    pub input_digest: String,
    pub matrix: MatrixMeta,
    pub eigenvalues: Vec<Complex64>,
    pub polygon: PolygonRecord,
    pub reports: Vec<KReport>,
    pub boundary: Vec<BoundaryRecord>,
}

impl ReportFile {
    /// Assembles the file from per-k reports that share one polygon.
    pub fn new(
        a: &ComplexMatrix,
        meta: MatrixMeta,
        reports: &[TangencyReport],
        boundary: &FovBoundary,
    ) -> Result<Self> {
        let first = reports.first().ok_or(Error::EmptyInput)?;
        let polygon = first.polygon.clone();
        let midpoints = polygon.edges.iter().map(|e| e.midpoint()).collect();
        Ok(Self {
            input_digest: matrix_digest(a)?,
            matrix: meta,
            eigenvalues: polygon.source_eigenvalues.clone(),
            polygon: PolygonRecord { polygon, midpoints },
            reports: reports
                .iter()
                .map(|r| KReport { k: r.k + 1, all_verified: r.all_verified, contacts: r.contacts.clone() })
                .collect(),
            boundary: boundary_records(boundary),
        })
    }

    pub fn all_verified(&self) -> bool {
        self.reports.iter().all(|r| r.all_verified)
    }

    /// Rebuilds the in-memory reports (0-based `k`).
    pub fn tangency_reports(&self) -> Result<Vec<TangencyReport>> {
        self.reports
            .iter()
            .map(|r| {
                if r.k == 0 {
                    return Err(Error::ShapeError("report k must be 1-based".into()));
                }
                Ok(TangencyReport {
                    k: r.k - 1,
                    polygon: self.polygon.polygon.clone(),
                    contacts: r.contacts.clone(),
                    all_verified: r.all_verified,
                })
            })
            .collect()
    }
}

/// Sampled field boundary, as written by the `boundary` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryFile {
    pub input_digest: String,
    pub n_angles: usize,
    pub samples: Vec<BoundaryRecord>,
}

impl BoundaryFile {
    pub fn new(a: &ComplexMatrix, boundary: &FovBoundary) -> Result<Self> {
        Ok(Self {
            input_digest: matrix_digest(a)?,
            n_angles: boundary.len(),
            samples: boundary_records(boundary),
        })
    }
}

fn boundary_records(boundary: &FovBoundary) -> Vec<BoundaryRecord> {
    boundary
        .samples
        .iter()
        .map(|s| BoundaryRecord { theta: s.theta, support: s.support, point: s.boundary_point })
        .collect()
}

/// Sampled side contacts for one deletion index (`k` 1-based).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KProbe {
    pub k: usize,
    pub submatrix_contained: bool,
    pub all_verified: bool,
    pub probes: Vec<EdgeProbe>,
}

/// Output of `inscribe` for convexoid matrices that are not normal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeFile {
    pub input_digest: String,
    pub matrix: MatrixMeta,
    pub eigenvalues: Vec<Complex64>,
    pub polygon: PolygonRecord,
    pub reports: Vec<KProbe>,
}

impl ProbeFile {
    pub fn new(a: &ComplexMatrix, meta: MatrixMeta, eigenvalues: &[Complex64], reports: &[ProbeReport]) -> Result<Self> {
        let first = reports.first().ok_or(Error::EmptyInput)?;
        let polygon = first.polygon.clone();
        let midpoints = polygon.edges.iter().map(|e| e.midpoint()).collect();
        Ok(Self {
            input_digest: matrix_digest(a)?,
            matrix: meta,
            eigenvalues: eigenvalues.to_vec(),
            polygon: PolygonRecord { polygon, midpoints },
            reports: reports
                .iter()
                .map(|r| KProbe {
                    k: r.k + 1,
                    submatrix_contained: r.submatrix_contained,
                    all_verified: r.all_verified,
                    probes: r.probes.clone(),
                })
                .collect(),
        })
    }

    pub fn all_verified(&self) -> bool {
        self.reports.iter().all(|r| r.all_verified)
    }
}
