//! `numrange` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 numerical failure (non-normal input, no convergence).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::convexoid::{
    default_convexoid_tol, eigen_decompose_normal, is_convexoid_numeric, ConvexoidVerdict, NORMAL_TOL,
};
use crate::error::{Error, Result};
use crate::fov::{self, DEFAULT_ANGLES};
use crate::inscription::{
    dft_inscribe, dft_normal_matrix, inscribe_with, probe_inscription, verify_inscription, InscribeOptions,
    TangencyReport,
};
use crate::io::{
    emit_svg, matrix_digest, parse_complex_list, parse_matrix, to_json_string, BoundaryFile, MatrixMeta,
    PolygonRecord, ProbeFile, ReportFile,
};
use crate::linalg::{general_eigenvalues, is_normal, normality_defect, principal_submatrix, ComplexMatrix};
use crate::polygon::{convex_hull, default_collapse_tol};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

/// Points sampled per polygon side when probing non-normal convexoid input.
const PROBE_SAMPLES: usize = 256;

#[derive(Debug, Parser)]
#[command(name = "numrange", version, about = "Fields of values and inscribed principal-submatrix fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample the boundary of the field of values.
    Boundary {
        matrix: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ANGLES)]
        angles: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Eigenvalues and their convex hull for a normal matrix.
    Polygon { matrix: PathBuf },
    /// Test whether the field of values equals the convex hull of the spectrum.
    Convexoid {
        matrix: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ANGLES)]
        angles: usize,
        /// Absolute support-gap tolerance (default 1e-8 (1 + ||A||_F)).
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Contacts between each side of the spectral polygon and F(A_(k)).
    Inscribe {
        matrix: PathBuf,
        /// Deleted index, 1-based; all indices when omitted.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Absolute verification tolerance (default 1e-8 (1 + ||A||_F)).
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_ANGLES)]
        angles: usize,
    },
    /// Inscribe for A = F diag(eigs) F* with F the unitary DFT matrix.
    Dft {
        /// Comma-separated complex literals, e.g. "0,1,0+1i".
        #[arg(long, allow_hyphen_values = true)]
        eigs: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Re-check a saved report against its matrix.
    Verify {
        matrix: PathBuf,
        report: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ANGLES)]
        angles: usize,
        #[arg(long)]
        tol: Option<f64>,
    },
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotNormal { .. }
        | Error::NoConvergence { .. }
        | Error::NonHermitian { .. }
        | Error::Degenerate(_)
        | Error::ZeroComponent { .. }
        | Error::NonzeroDeletedEntry { .. }
        | Error::NotUnit { .. }
        | Error::NotOrthogonal { .. } => EXIT_NUMERIC,
        Error::MidpointAssertionFailed { .. } => EXIT_VERIFY,
        _ => EXIT_USAGE,
    }
}

/// Runs the command line with `args` (including the program name) and
/// returns the process exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Boundary { matrix, angles, format, out: path } => {
            let a = parse_matrix(&matrix)?;
            let b = fov::boundary(&a, angles)?;
            let text = match format {
                Format::Json => to_json_string(&BoundaryFile::new(&a, &b)?)?,
                Format::Csv => {
                    let mut s = String::from("theta,support,re,im\n");
                    for p in &b.samples {
                        s.push_str(&format!(
                            "{:.16e},{:.16e},{:.16e},{:.16e}\n",
                            p.theta, p.support, p.boundary_point.re, p.boundary_point.im
                        ));
                    }
                    s
                }
            };
            emit(&text, path.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Polygon { matrix } => {
            let a = parse_matrix(&matrix)?;
            let (eigs, _) = eigen_decompose_normal(&a, NORMAL_TOL)?;
            let polygon = convex_hull(&eigs, default_collapse_tol(&eigs))?;
            let midpoints = polygon.edges.iter().map(|e| e.midpoint()).collect();
            #[derive(serde::Serialize)]
            struct PolygonOutput {
                eigenvalues: Vec<Complex64>,
                polygon: PolygonRecord,
            }
            let doc = PolygonOutput { eigenvalues: eigs, polygon: PolygonRecord { polygon, midpoints } };
            emit(&to_json_string(&doc)?, None, out)?;
            Ok(EXIT_OK)
        }
        Command::Convexoid { matrix, angles, tol } => {
            let a = parse_matrix(&matrix)?;
            let eigs = spectrum(&a)?;
            let verdict = is_convexoid_numeric(&a, &eigs, angles, tol.unwrap_or_else(|| default_convexoid_tol(&a)))?;
            emit(&to_json_string(&verdict)?, None, out)?;
            Ok(EXIT_OK)
        }
        Command::Inscribe { matrix, k, svg, json, tol, angles } => {
            let a = parse_matrix(&matrix)?;
            let n = a.square_dim()?;
            let ks = deletion_indices(k, n)?;
            let tol = tol.unwrap_or(1e-8 * a.scale_factor());
            if !is_normal(&a, NORMAL_TOL)? {
                return inscribe_non_normal(&a, &ks, angles, tol, svg.as_deref(), json.as_deref(), out, err);
            }
            let opts = InscribeOptions {
                normal_tol: NORMAL_TOL,
                verify_tol_rel: tol / a.scale_factor(),
                n_angles: angles,
            };
            let reports = ks.iter().map(|&k| inscribe_with(&a, k, &opts)).collect::<Result<Vec<_>>>()?;
            finish_reports(&a, &reports, angles, svg.as_deref(), json.as_deref(), out)
        }
        Command::Dft { eigs, k, svg, json } => {
            let eigenvalues = parse_complex_list(&eigs)?;
            let a = dft_normal_matrix(&eigenvalues);
            let ks = deletion_indices(k, eigenvalues.len())?;
            let reports = ks.iter().map(|&k| dft_inscribe(&eigenvalues, k)).collect::<Result<Vec<_>>>()?;
            finish_reports(&a, &reports, DEFAULT_ANGLES, svg.as_deref(), json.as_deref(), out)
        }
        Command::Verify { matrix, report, angles, tol } => {
            let a = parse_matrix(&matrix)?;
            let text = fs::read_to_string(&report).map_err(|e| Error::Io(format!("{}: {e}", report.display())))?;
            let file: ReportFile = serde_json::from_str(&text)
                .map_err(|e| Error::Parse { line: e.line(), column: e.column(), message: e.to_string() })?;
            if file.input_digest != matrix_digest(&a)? {
                let _ = writeln!(err, "report digest does not match the matrix");
                return Ok(EXIT_VERIFY);
            }
            let tol = tol.unwrap_or(1e-8 * a.scale_factor());
            let mut all = true;
            for r in file.tangency_reports()? {
                let ok = verify_inscription(&a, r.k, &r, angles, tol)?;
                all &= ok;
                writeln!(out, "k={} {}", r.k + 1, if ok { "verified" } else { "FAILED" })?;
            }
            Ok(if all { EXIT_OK } else { EXIT_VERIFY })
        }
    }
}

/// 0-based deletion indices from an optional 1-based `--k`.
fn deletion_indices(k: Option<usize>, n: usize) -> Result<Vec<usize>> {
    match k {
        None => Ok((0..n).collect()),
        Some(k) if (1..=n).contains(&k) => Ok(vec![k - 1]),
        Some(k) => Err(Error::InvalidArgument(format!("--k must be in 1..={n}, got {k}"))),
    }
}

fn spectrum(a: &ComplexMatrix) -> Result<Vec<Complex64>> {
    if is_normal(a, NORMAL_TOL)? {
        Ok(eigen_decompose_normal(a, NORMAL_TOL)?.0)
    } else {
        general_eigenvalues(a)
    }
}

fn metadata(a: &ComplexMatrix, eigs: &[Complex64], angles: usize) -> Result<MatrixMeta> {
    let convexoid: ConvexoidVerdict = is_convexoid_numeric(a, eigs, angles.max(90), default_convexoid_tol(a))?;
    Ok(MatrixMeta {
        n: a.square_dim()?,
        is_normal: is_normal(a, NORMAL_TOL)?,
        normality_defect: normality_defect(a)?,
        convexoid,
    })
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

/// `fig.svg` becomes `fig-k2.svg` when several indices are written.
fn svg_path(base: &Path, k: usize, several: bool) -> PathBuf {
    if !several {
        return base.to_path_buf();
    }
    let stem = base.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match base.extension() {
        Some(ext) => format!("{stem}-k{k}.{}", ext.to_string_lossy()),
        None => format!("{stem}-k{k}"),
    };
    base.with_file_name(name)
}

fn finish_reports(
    a: &ComplexMatrix,
    reports: &[TangencyReport],
    angles: usize,
    svg: Option<&Path>,
    json: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    let eigs = reports.first().ok_or(Error::EmptyInput)?.polygon.source_eigenvalues.clone();
    let meta = metadata(a, &eigs, angles)?;
    let file = ReportFile::new(a, meta, reports, &fov::boundary(a, angles)?)?;
    if let Some(base) = svg {
        for r in reports {
            let sub = fov::boundary(&principal_submatrix(a, r.k)?, angles)?;
            let path = svg_path(base, r.k + 1, reports.len() > 1);
            emit_svg(&r.polygon, &sub, &r.contacts, &path)
                .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        }
    }
    let text = to_json_string(&file)?;
    match json {
        Some(p) => {
            emit(&text, Some(p), out)?;
            for r in &file.reports {
                writeln!(
                    out,
                    "k={} contacts={} {}",
                    r.k,
                    r.contacts.len(),
                    if r.all_verified { "verified" } else { "FAILED" }
                )?;
            }
        }
        None => emit(&text, None, out)?,
    }
    Ok(if file.all_verified() { EXIT_OK } else { EXIT_VERIFY })
}

#[allow(clippy::too_many_arguments)]
fn inscribe_non_normal(
    a: &ComplexMatrix,
    ks: &[usize],
    angles: usize,
    tol: f64,
    svg: Option<&Path>,
    json: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let eigs = general_eigenvalues(a)?;
    let meta = metadata(a, &eigs, angles)?;
    if !meta.convexoid.is_convexoid {
        return Err(Error::NotNormal { commutator: meta.normality_defect });
    }
    let _ = writeln!(err, "matrix is convexoid but not normal; contacts are located by sampling");
    let reports = ks
        .iter()
        .map(|&k| probe_inscription(a, &eigs, k, angles, tol, PROBE_SAMPLES))
        .collect::<Result<Vec<_>>>()?;
    if let Some(base) = svg {
        for r in &reports {
            let sub = fov::boundary(&principal_submatrix(a, r.k)?, angles)?;
            let path = svg_path(base, r.k + 1, reports.len() > 1);
            emit_svg(&r.polygon, &sub, &[], &path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        }
    }
    let file = ProbeFile::new(a, meta, &eigs, &reports)?;
    emit(&to_json_string(&file)?, json, out)?;
    Ok(if file.all_verified() { EXIT_OK } else { EXIT_VERIFY })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::write_matrix;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_cli(std::iter::once("numrange").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(&[]).0, EXIT_USAGE);
        assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run(&["boundary", "/nonexistent/matrix.json"]).0, EXIT_USAGE);
        assert_eq!(run(&["dft", "--eigs", "1,,2"]).0, EXIT_USAGE);
        assert_eq!(run(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn jordan_inscribe_is_numerical_failure() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("jordan.json");
        write_matrix(&ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap(), &path).unwrap();
        let (code, _, err) = run(&["inscribe", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_NUMERIC, "{err}");
        assert_eq!(run(&["polygon", path.to_str().unwrap()]).0, EXIT_NUMERIC);
        let (code, out, _) = run(&["convexoid", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("\"is_convexoid\": false"));
    }

    #[test]
    fn k_out_of_range_is_usage_error() {
        assert_eq!(run(&["dft", "--eigs", "0,1,0+1i", "--k", "4"]).0, EXIT_USAGE);
        assert_eq!(run(&["dft", "--eigs", "0,1,0+1i", "--k", "0"]).0, EXIT_USAGE);
    }

    #[test]
    fn boundary_csv_has_one_row_per_angle() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("d.json");
        write_matrix(&ComplexMatrix::from_real_rows(&[&[1.0, 0.0], &[0.0, -1.0]]).unwrap(), &path).unwrap();
        let (code, out, _) = run(&["boundary", path.to_str().unwrap(), "--angles", "8", "--format", "csv"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.lines().count(), 9);
    }

    #[test]
    fn svg_names_get_k_suffix() {
        assert_eq!(svg_path(Path::new("out/fig.svg"), 2, true), PathBuf::from("out/fig-k2.svg"));
        assert_eq!(svg_path(Path::new("fig.svg"), 2, false), PathBuf::from("fig.svg"));
    }
}
