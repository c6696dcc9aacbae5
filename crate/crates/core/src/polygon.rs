//! The spectral polygon: convex hull of a finite point multiset in the
//! complex plane, with counterclockwise strict vertices.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative tolerance for vertex strictness and containment, multiplied by
/// `1 + max |z|`.
pub const STRICT_TOL: f64 = 1e-9;

/// Directed edge between two consecutive hull vertices.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub start: Complex64,
    pub end: Complex64,
    /// Positions of the endpoints in [`SpectralPolygon::vertices`].
    pub start_vertex: usize,
    pub end_vertex: usize,
}

impl Segment {
    pub fn midpoint(&self) -> Complex64 {
        (self.start + self.end) * 0.5
    }

    pub fn length(&self) -> f64 {
        (self.end - self.start).norm()
    }

    pub fn distance_to(&self, z: Complex64) -> f64 {
        point_segment_distance(z, self.start, self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralPolygon {
    /// Strict extreme points, counterclockwise, starting at the vertex with
    /// the smallest polar angle about the vertex centroid.
    pub vertices: Vec<Complex64>,
    /// `d` edges `(v_k, v_{k+1})` with wraparound; empty when `d = 1`.
    /// For `d = 2` both directions of the single segment are kept.
    pub edges: Vec<Segment>,
    pub source_eigenvalues: Vec<Complex64>,
    /// For each vertex, the index of a source point it was taken from.
    pub vertex_to_eigenindex: Vec<usize>,
}

/// `1 + max |z|`.
pub fn point_scale(points: &[Complex64]) -> f64 {
    1.0 + points.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Default duplicate-collapse tolerance for a spectrum: `1e-9 * (1 + max |λ|)`.
pub fn default_collapse_tol(points: &[Complex64]) -> f64 {
    STRICT_TOL * point_scale(points)
}

fn cross(o: Complex64, a: Complex64, b: Complex64) -> f64 {
    let (u, v) = (a - o, b - o);
    u.re * v.im - u.im * v.re
}

pub fn point_segment_distance(z: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (z - a).norm();
    }
    let t = (((z - a) * ab.conj()).re / len2).clamp(0.0, 1.0);
    (z - (a + ab * t)).norm()
}

/// Whether `b` sits within `tol` of the segment joining `a` and `c`.
fn nearly_on(a: Complex64, b: Complex64, c: Complex64, tol: f64) -> bool {
    point_segment_distance(b, a, c) <= tol
}

/// Monotone-chain hull of `points`. Points within `collapse_tol` of an
/// earlier point are merged into it; vertices within `1e-9 * scale` of the
/// segment joining their neighbours are dropped.
pub fn convex_hull(points: &[Complex64], collapse_tol: f64) -> Result<SpectralPolygon> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let strict = STRICT_TOL * point_scale(points);

    let mut reps: Vec<(Complex64, usize)> = Vec::new();
    for (i, &p) in points.iter().enumerate() {
        if !reps.iter().any(|&(q, _)| (p - q).norm() <= collapse_tol) {
            reps.push((p, i));
        }
    }
    reps.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));

    let mut hull: Vec<(Complex64, usize)> = if reps.len() == 1 {
        reps
    } else {
        let mut lower: Vec<(Complex64, usize)> = Vec::new();
        for &p in &reps {
            while lower.len() >= 2 && {
                let (a, b) = (lower[lower.len() - 2].0, lower[lower.len() - 1].0);
                cross(a, b, p.0) <= strict * (p.0 - a).norm()
            } {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<(Complex64, usize)> = Vec::new();
        for &p in reps.iter().rev() {
            while upper.len() >= 2 && {
                let (a, b) = (upper[upper.len() - 2].0, upper[upper.len() - 1].0);
                cross(a, b, p.0) <= strict * (p.0 - a).norm()
            } {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        lower
    };

    // Junctions of the two chains are not covered by the chain test.
    loop {
        let d = hull.len();
        if d < 3 {
            break;
        }
        let drop = (0..d).find(|&j| {
            nearly_on(hull[(j + d - 1) % d].0, hull[j].0, hull[(j + 1) % d].0, strict)
        });
        match drop {
            Some(j) => {
                hull.remove(j);
            }
            None => break,
        }
    }

    let d = hull.len();
    if d > 1 {
        let centroid = hull.iter().map(|h| h.0).sum::<Complex64>() / d as f64;
        let angle = |z: Complex64| {
            let a = (z - centroid).arg();
            if a < 0.0 {
                a + 2.0 * PI
            } else {
                a
            }
        };
        let start = (0..d)
            .min_by(|&x, &y| angle(hull[x].0).total_cmp(&angle(hull[y].0)))
            .expect("nonempty");
        hull.rotate_left(start);
    }

    let vertices: Vec<Complex64> = hull.iter().map(|h| h.0).collect();
    let vertex_to_eigenindex = hull.iter().map(|h| h.1).collect();
    let edges = if d >= 2 {
        (0..d)
            .map(|k| Segment {
                start: vertices[k],
                end: vertices[(k + 1) % d],
                start_vertex: k,
                end_vertex: (k + 1) % d,
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(SpectralPolygon {
        vertices,
        edges,
        source_eigenvalues: points.to_vec(),
        vertex_to_eigenindex,
    })
}

impl SpectralPolygon {
    /// Number of strict vertices.
    pub fn d(&self) -> usize {
        self.vertices.len()
    }

    pub fn scale(&self) -> f64 {
        point_scale(&self.source_eigenvalues)
    }

    /// Midpoints of all `d` edges, wraparound included.
    pub fn edge_midpoints(&self) -> Result<Vec<Complex64>> {
        if self.d() < 2 {
            return Err(Error::Degenerate("single-point polygon has no edges".into()));
        }
        Ok(self.edges.iter().map(Segment::midpoint).collect())
    }

    /// Source-point index pairs `(i, j)` for every edge.
    pub fn adjacent_vertex_pairs(&self) -> Result<Vec<(usize, usize)>> {
        if self.d() < 2 {
            return Err(Error::Degenerate("single-point polygon has no edges".into()));
        }
        Ok(self
            .edges
            .iter()
            .map(|e| {
                (self.vertex_to_eigenindex[e.start_vertex], self.vertex_to_eigenindex[e.end_vertex])
            })
            .collect())
    }

    /// Distance from `z` to the polygon boundary (the vertex itself when `d = 1`).
    pub fn distance_to_boundary(&self, z: Complex64) -> f64 {
        if self.d() == 1 {
            return (z - self.vertices[0]).norm();
        }
        self.edges.iter().map(|e| e.distance_to(z)).fold(f64::INFINITY, f64::min)
    }

    /// Distance from `z` to the closed polygonal region; zero inside.
    pub fn distance_outside(&self, z: Complex64) -> f64 {
        if self.d() < 3 {
            return self.distance_to_boundary(z);
        }
        let inside = self.edges.iter().all(|e| cross(e.start, e.end, z) >= 0.0);
        if inside {
            0.0
        } else {
            self.distance_to_boundary(z)
        }
    }
}

pub fn point_on_segment(z: Complex64, seg: &Segment, tol: f64) -> bool {
    seg.distance_to(z) <= tol
}
