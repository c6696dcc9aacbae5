//! Figure output: the spectral polygon, the sampled field of a principal
//! submatrix, and the contact points, on a fixed 800x800 canvas.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_complex::Complex64;

use crate::error::Result;
use crate::fov::FovBoundary;
use crate::inscription::EdgeContact;
use crate::polygon::{default_collapse_tol, SpectralPolygon};

const CANVAS: u32 = 800;

fn bounds(points: impl Iterator<Item = Complex64>) -> (f64, f64, f64, f64) {
    points.fold(
        (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY),
        |(x0, x1, y0, y1), z| (x0.min(z.re), x1.max(z.re), y0.min(z.im), y1.max(z.im)),
    )
}

fn path_data(points: &[Complex64]) -> String {
    let mut d = String::new();
    for (i, p) in points.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        let _ = write!(d, "{cmd} {:.6} {:.6} ", p.re, p.im);
    }
    d.push('Z');
    d
}

/// Distinct points of `points` (first occurrence kept), with their indices.
fn distinct(points: &[Complex64]) -> Vec<(usize, Complex64)> {
    let tol = default_collapse_tol(points);
    let mut out: Vec<(usize, Complex64)> = Vec::new();
    for (i, &p) in points.iter().enumerate() {
        if !out.iter().any(|&(_, q)| (p - q).norm() <= tol) {
            out.push((i, p));
        }
    }
    out
}

/// Renders the figure. Output depends only on the inputs, so identical inputs
/// give byte-identical documents.
pub fn render_svg(
    polygon: &SpectralPolygon,
    submatrix_boundary: &FovBoundary,
    contacts: &[EdgeContact],
) -> String {
    let field = submatrix_boundary.points();
    let (x0, x1, y0, y1) = bounds(
        polygon
            .source_eigenvalues
            .iter()
            .copied()
            .chain(field.iter().copied())
            .chain(contacts.iter().map(|c| c.contact_point)),
    );
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let (w, h) = ((x1 - x0).max(1e-3 * span), (y1 - y0).max(1e-3 * span));
    let (mx, my) = (0.05 * w, 0.05 * h);
    // Geometry is drawn under scale(1,-1), so the visible y-range is [-y1, -y0].
    let view = (x0 - mx, -y1 - my, w + 2.0 * mx, h + 2.0 * my);
    let size = view.2.max(view.3);
    let marker = 0.01 * size;
    let stroke = 0.003 * size;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" viewBox="{:.6} {:.6} {:.6} {:.6}">"#,
        view.0, view.1, view.2, view.3
    );
    let _ = writeln!(out, "<!-- Complex plane: real axis right, imaginary axis up (geometry group is flipped by scale(1,-1)). -->");
    let _ = writeln!(
        out,
        r#"<rect x="{:.6}" y="{:.6}" width="{:.6}" height="{:.6}" fill="white"/>"#,
        view.0, view.1, view.2, view.3
    );
    let _ = writeln!(out, r#"<g transform="scale(1,-1)">"#);

    let field_extent = {
        let (a, b, c, d) = bounds(field.iter().copied());
        (b - a).max(d - c)
    };
    if field.len() >= 3 && field_extent > 1e-9 * span {
        let _ = writeln!(
            out,
            r##"<path class="field" d="{}" fill="#9ecae1" fill-opacity="0.6" stroke="#3182bd" stroke-width="{stroke:.6}"/>"##,
            path_data(&field)
        );
    }
    if polygon.d() >= 2 {
        let _ = writeln!(
            out,
            r#"<path class="polygon" d="{}" fill="none" stroke="black" stroke-width="{stroke:.6}"/>"#,
            path_data(&polygon.vertices)
        );
        for e in &polygon.edges {
            let m = e.midpoint();
            let _ = writeln!(
                out,
                r##"<circle class="midpoint" cx="{:.6}" cy="{:.6}" r="{:.6}" fill="none" stroke="#636363" stroke-width="{:.6}"/>"##,
                m.re,
                m.im,
                1.6 * marker,
                0.5 * stroke
            );
        }
    }
    for c in contacts {
        let p = c.contact_point;
        let _ = writeln!(
            out,
            r##"<circle class="contact" data-case="{}" cx="{:.6}" cy="{:.6}" r="{marker:.6}" fill="#d62728"/>"##,
            c.case_tag.as_str(),
            p.re,
            p.im
        );
    }
    let eigen = distinct(&polygon.source_eigenvalues);
    for &(_, z) in &eigen {
        let _ = writeln!(
            out,
            r#"<circle class="eigenvalue" cx="{:.6}" cy="{:.6}" r="{marker:.6}" fill="black"/>"#,
            z.re, z.im
        );
    }
    let _ = writeln!(out, "</g>");
    for &(i, z) in &eigen {
        let _ = writeln!(
            out,
            r#"<text class="label" x="{:.6}" y="{:.6}" font-size="{:.6}" font-family="serif">λ{}</text>"#,
            z.re + 1.5 * marker,
            -z.im - 1.5 * marker,
            4.0 * marker,
            i + 1
        );
    }
    let _ = writeln!(out, "</svg>");
    out
}

pub fn emit_svg(
    polygon: &SpectralPolygon,
    submatrix_boundary: &FovBoundary,
    contacts: &[EdgeContact],
    path: impl AsRef<Path>,
) -> Result<()> {
    fs::write(path, render_svg(polygon, submatrix_boundary, contacts))?;
    Ok(())
}
