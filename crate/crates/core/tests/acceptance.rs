//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Every tolerance is pinned below.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{c, example_matrix, example_spectrum, example_u, jordan, square_plus_disk};
use numrange::cli::run_cli;
use numrange::convexoid::{
    default_convexoid_tol, eigen_decompose_normal, is_convexoid_numeric, verify_johnson_decomposition,
};
use numrange::fov::{self, random_field_samples, support};
use numrange::inscription::{
    dft_inscribe, inscribe, interior_combination, sign_invariance_check, verify_inscription, CaseTag,
};
use numrange::io::{write_matrix, ReportFile};
use numrange::linalg::{
    deletion_projector, general_eigenvalues, hermitian_eigen, phase_normalize, principal_submatrix, project_down,
    rayleigh,
};
use numrange::polygon::{convex_hull, default_collapse_tol, point_scale};
use numrange::random::SampleRng;
use numrange::{Complex64, ComplexMatrix, ComplexVector};

const ANGLES: usize = 360;

// AC1
const AC1_EDGE_TOL: f64 = 1e-8;
const AC1_CONTAINS_TOL: f64 = 1e-8;
const AC1_BUDGET: Duration = Duration::from_secs(1);
// AC2
const AC2_MIDPOINT_REL: f64 = 1e-9;
const AC2_WEIGHT_TOL: f64 = 1e-12;
const AC2_SETS_PER_N: usize = 20;
const AC2_BUDGET: Duration = Duration::from_secs(5);
// AC3
const AC3_REL: f64 = 1e-8;
const AC3_POLYGON_TOL: f64 = 1e-8;
const AC3_MATRICES: usize = 100;
// AC4
const AC4_ZERO_TOL: f64 = 1e-10;
const AC4_UNIT_TOL: f64 = 1e-10;
const AC4_RAYLEIGH_REL: f64 = 1e-9;
const AC4_WEIGHT_SUM_TOL: f64 = 1e-14;
const AC4_MATRICES: usize = 100;
// AC5
const AC5_TOL: f64 = 1e-12;
// AC6
const AC6_JORDAN_GAP_TOL: f64 = 1e-6;
const AC6_JOHNSON_TOL: f64 = 1e-10;
// AC7
const AC7_SAMPLES: usize = 100_000;
const AC7_CONTAINS_TOL: f64 = 1e-8;
const AC7_RADIUS_TOL: f64 = 1e-6;
const AC7_SUPPORT_TOL: f64 = 1e-8;
// AC8
const AC8_HERMITIAN_REL: f64 = 1e-10;
const AC8_NORMAL_REL: f64 = 1e-9;
// Normality and cluster tolerance handed to the normal diagonalization.
const NORMAL_TOL: f64 = 1e-10;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if $cond {
        } else {
            return Err(format!($($msg)+));
        }
    };
}

fn e<E: std::fmt::Debug>(err: E) -> String {
    format!("{err:?}")
}

/// Expected contact for side (λ_i, λ_j) when deleting row `k`, computed from
/// the k-th entries of the two unit eigenvectors: weights |w_k|^2 on λ_i and
/// |v_k|^2 on λ_j. `None` when both entries vanish (the whole side).
fn expected_contact(vk: f64, wk: f64, li: Complex64, lj: Complex64) -> Option<Complex64> {
    let (a, b) = (wk * wk, vk * vk);
    if a + b < 1e-24 {
        None
    } else {
        Some((li * a + lj * b) / (a + b))
    }
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let a = example_matrix();
    let u = example_u();
    let spectrum = example_spectrum();
    let mut summary = Vec::new();
    for k in 0..4 {
        let report = inscribe(&a, k, NORMAL_TOL).map_err(e)?;
        ensure!(report.contacts.len() == 4, "k={}: {} contacts", k + 1, report.contacts.len());
        let sub = principal_submatrix(&a, k).map_err(e)?;
        let sub_fov = fov::boundary(&sub, ANGLES).map_err(e)?;
        let eigs = &report.polygon.source_eigenvalues;
        for (contact, edge) in report.contacts.iter().zip(&report.polygon.edges) {
            let (i, j) = contact.edge;
            // Locate the eigenvalues in the known diagonal to read U's row k.
            let col = |z: Complex64| spectrum.iter().position(|&s| (s - z).norm() < 1e-9).unwrap();
            let (ci, cj) = (col(eigs[i]), col(eigs[j]));
            let oracle = expected_contact(u[(k, ci)].re, u[(k, cj)].re, spectrum[ci], spectrum[cj]);
            match (contact.case_tag, oracle) {
                (CaseTag::FullEdge, None) => {
                    // The whole side belongs to F(A_(k)).
                    for z in [edge.start, edge.end, contact.contact_point] {
                        ensure!(sub_fov.contains(z, AC1_CONTAINS_TOL), "k={}: side point {z} outside", k + 1);
                    }
                }
                (CaseTag::FullEdge, Some(_)) | (_, None) => {
                    return Err(format!("k={}: case {:?} disagrees with the eigenvector oracle", k + 1, contact.case_tag));
                }
                (_, Some(z)) => {
                    ensure!(
                        (contact.contact_point - z).norm() <= AC1_EDGE_TOL,
                        "k={}: contact {} expected {z}",
                        k + 1,
                        contact.contact_point
                    );
                }
            }
            ensure!(edge.distance_to(contact.contact_point) <= AC1_EDGE_TOL, "k={}: contact off its side", k + 1);
            ensure!(
                fov::contains(&sub, contact.contact_point, ANGLES, AC1_CONTAINS_TOL).map_err(e)?,
                "k={}: contact {} not in F(A_(k))",
                k + 1,
                contact.contact_point
            );
        }
        ensure!(report.all_verified, "k={}: report not verified", k + 1);
        ensure!(verify_inscription(&a, k, &report, ANGLES, AC1_EDGE_TOL).map_err(e)?, "k={}: verify failed", k + 1);
        let tags: Vec<&str> = report.contacts.iter().map(|c| c.case_tag.as_str()).collect();
        summary.push(format!("k={}:[{}]", k + 1, tags.join(",")));
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < AC1_BUDGET, "took {elapsed:?}");
    Ok(format!("{} in {elapsed:.2?}", summary.join(" ")))
}

fn ac2() -> Outcome {
    let start = Instant::now();
    let mut rng = SampleRng::seed_from(0xD1F7);
    let mut interior = 0usize;
    for n in 3..=8 {
        for set in 0..AC2_SETS_PER_N {
            let eigs: Vec<Complex64> = (0..n).map(|_| rng.complex_gaussian()).collect();
            for k in 0..n {
                let report = dft_inscribe(&eigs, k).map_err(|err| format!("n={n} set={set} k={k}: {err}"))?;
                let tol = AC2_MIDPOINT_REL * report.polygon.scale();
                for (contact, edge) in report.contacts.iter().zip(&report.polygon.edges) {
                    if contact.case_tag != CaseTag::Interior {
                        continue;
                    }
                    interior += 1;
                    let d = (contact.contact_point - edge.midpoint()).norm();
                    ensure!(d <= tol, "n={n} set={set} k={k}: midpoint distance {d:.3e}");
                    let (a2, b2) = (contact.alpha_sq.unwrap(), contact.beta_sq.unwrap());
                    ensure!(
                        (a2 - 0.5).abs() <= AC2_WEIGHT_TOL && (b2 - 0.5).abs() <= AC2_WEIGHT_TOL,
                        "n={n} set={set} k={k}: weights {a2}, {b2}"
                    );
                }
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(interior > 0, "no interior contacts exercised");
    ensure!(elapsed < AC2_BUDGET, "took {elapsed:?}");
    Ok(format!("{interior} interior contacts at midpoints in {elapsed:.2?}"))
}

fn random_test_matrix(rng: &mut SampleRng, idx: usize) -> (ComplexMatrix, bool) {
    let n = rng.range(2, 8);
    if idx.is_multiple_of(2) {
        (rng.normal(n), true)
    } else {
        (rng.complex_matrix(n, n), false)
    }
}

fn ac3() -> Outcome {
    let mut rng = SampleRng::seed_from(0xAC3);
    let mut worst_polygon = 0.0f64;
    for idx in 0..AC3_MATRICES {
        let (a, normal) = random_test_matrix(&mut rng, idx);
        let n = a.rows();
        let tol = AC3_REL * a.scale_factor();
        let fa = fov::boundary(&a, ANGLES).map_err(e)?;
        let eigs = if normal {
            eigen_decompose_normal(&a, NORMAL_TOL).map_err(e)?.0
        } else {
            general_eigenvalues(&a).map_err(e)?
        };
        // (i) eigenvalue containment
        for &z in &eigs {
            ensure!(fa.contains(z, tol), "matrix {idx}: eigenvalue {z} outside F(A)");
        }
        // (iii) direct sum
        let m = rng.range(1, 4);
        let b = rng.complex_matrix(m, m);
        let fb = fov::boundary(&b, ANGLES).map_err(e)?;
        let fab = fov::boundary(&a.direct_sum(&b), ANGLES).map_err(e)?;
        for ((sa, sb), sab) in fa.samples.iter().zip(&fb.samples).zip(&fab.samples) {
            let want = sa.support.max(sb.support);
            ensure!(
                (sab.support - want).abs() <= AC3_REL * (a.scale_factor() + b.scale_factor()),
                "matrix {idx}: direct-sum support {} vs {want} at {}",
                sab.support,
                sab.theta
            );
        }
        // (iv) principal submatrices
        for k in 0..n {
            let sub = principal_submatrix(&a, k).map_err(e)?;
            let fs = fov::boundary(&sub, ANGLES).map_err(e)?;
            for (s, o) in fs.samples.iter().zip(&fa.samples) {
                ensure!(s.support <= o.support + tol, "matrix {idx} k={k}: submatrix support exceeds at {}", s.theta);
            }
        }
        // (v) convexity: consecutive boundary turns never go clockwise
        let scale = point_scale(&fa.points()).max(1.0);
        ensure!(fa.min_turn() >= -AC3_REL * scale * scale, "matrix {idx}: clockwise turn {:.3e}", fa.min_turn());
        // (ii) normal: boundary lies on the spectral polygon
        if normal {
            let polygon = convex_hull(&eigs, default_collapse_tol(&eigs)).map_err(e)?;
            for p in fa.points() {
                let d = polygon.distance_to_boundary(p);
                worst_polygon = worst_polygon.max(d);
                ensure!(d <= AC3_POLYGON_TOL, "matrix {idx}: boundary point {p} is {d:.3e} from the polygon");
            }
        }
    }
    Ok(format!("{AC3_MATRICES} matrices, worst polygon distance {worst_polygon:.2e}"))
}

fn ac4() -> Outcome {
    let mut rng = SampleRng::seed_from(0xAC4);
    let (mut interior, mut worst) = (0usize, 0.0f64);
    for idx in 0..AC4_MATRICES {
        let n = rng.range(2, 8);
        let a = rng.normal(n);
        let scale = a.scale_factor();
        let (eigs, u) = eigen_decompose_normal(&a, NORMAL_TOL).map_err(e)?;
        let polygon = convex_hull(&eigs, default_collapse_tol(&eigs)).map_err(e)?;
        if polygon.d() < 2 {
            continue;
        }
        for k in 0..n {
            let report = inscribe(&a, k, NORMAL_TOL).map_err(e)?;
            ensure!(report.all_verified, "matrix {idx} k={k}: report not verified");
            for (edge, contact) in polygon.edges.iter().zip(&report.contacts) {
                let (i, j) = (polygon.vertex_to_eigenindex[edge.start_vertex], polygon.vertex_to_eigenindex[edge.end_vertex]);
                let (v, w) = (u.column(i), u.column(j));
                let comb = interior_combination(&v, &w, eigs[i], eigs[j], k).map_err(e)?;
                interior += 1;
                ensure!(comb.u[k].norm() <= AC4_ZERO_TOL, "matrix {idx}: u_k = {:.3e}", comb.u[k].norm());
                ensure!((comb.u.norm() - 1.0).abs() <= AC4_UNIT_TOL, "matrix {idx}: |u| = {}", comb.u.norm());
                let q = rayleigh(&a, &comb.u).map_err(e)?;
                let combo = eigs[i] * (comb.alpha * comb.alpha) + eigs[j] * (comb.beta * comb.beta);
                let d = (q - combo).norm();
                worst = worst.max(d / scale);
                ensure!(d <= AC4_RAYLEIGH_REL * scale, "matrix {idx}: u*Au off by {d:.3e}");
                let s = comb.alpha * comb.alpha + comb.beta * comb.beta;
                ensure!((s - 1.0).abs() <= AC4_WEIGHT_SUM_TOL, "matrix {idx}: alpha^2+beta^2 = {s}");
                ensure!(sign_invariance_check(&v, &w, eigs[i], eigs[j], k), "matrix {idx}: sign branches differ");
                // The reported contact is the same construction.
                ensure!(
                    contact.case_tag == CaseTag::Interior
                        && (contact.contact_point - comb.contact_point).norm() <= AC4_RAYLEIGH_REL * scale,
                    "matrix {idx} k={k}: report disagrees with the construction"
                );
            }
        }
    }
    ensure!(interior > 0, "no sides exercised");
    Ok(format!("{interior} side constructions, worst relative Rayleigh error {worst:.2e}"))
}

fn ac5() -> Outcome {
    let mut rng = SampleRng::seed_from(0xAC5);
    for t in 0..1000 {
        let n = rng.range(1, 10);
        let k = rng.range(0, n - 1);
        let v = rng.complex_vector(n);
        let p = phase_normalize(&v, k).map_err(e)?;
        ensure!((p.norm() - v.norm()).abs() <= AC5_TOL * v.norm(), "vector {t}: norm changed");
        ensure!(p[k].re > 0.0 && p[k].im == 0.0, "vector {t}: k-entry {}", p[k]);
        // Same ray: p = e^{i phi} v.
        let phase = p[k] / v[k];
        ensure!((phase.norm() - 1.0).abs() <= AC5_TOL, "vector {t}: not a phase");
        ensure!(p.max_abs_diff(&v.scale(phase)) <= AC5_TOL * v.norm(), "vector {t}: not a multiple of v");
    }
    for t in 0..1000 {
        let n = rng.range(2, 10);
        let k = rng.range(0, n - 1);
        let mut x = rng.complex_vector(n).into_vec();
        x[k] = c(0.0, 0.0);
        let x = ComplexVector::from(x);
        let y = project_down(&x, k).map_err(e)?;
        let back = deletion_projector(n, k).map_err(e)?.mul_vec(&y).map_err(e)?;
        ensure!(back.max_abs_diff(&x) == 0.0, "vector {t}: P y != x");
        ensure!((y.inner(&y).re - x.inner(&x).re).abs() <= AC5_TOL * x.inner(&x).re, "vector {t}: y*y != x*x");
    }
    for t in 0..100 {
        let n = rng.range(2, 10);
        let k = rng.range(0, n - 1);
        let a = rng.complex_matrix(n, n);
        let p = deletion_projector(n, k).map_err(e)?;
        let ptap = &(&p.transpose() * &a) * &p;
        let sub = principal_submatrix(&a, k).map_err(e)?;
        ensure!(ptap.max_abs_diff(&sub) == 0.0, "matrix {t}: P^T A P != A_(k)");
    }
    Ok("1000 phase normalizations, 1000 projector round trips, 100 compressions".into())
}

fn ac6() -> Outcome {
    let mut rng = SampleRng::seed_from(0xAC6);
    for t in 0..20 {
        let n = rng.range(1, 8);
        let a = rng.normal(n);
        let (eigs, _) = eigen_decompose_normal(&a, NORMAL_TOL).map_err(e)?;
        let v = is_convexoid_numeric(&a, &eigs, ANGLES, default_convexoid_tol(&a)).map_err(e)?;
        ensure!(v.is_convexoid && v.is_normal, "normal matrix {t} judged not convexoid ({:.3e})", v.max_support_gap);
    }
    let j = jordan();
    let zero = [c(0.0, 0.0), c(0.0, 0.0)];
    let v = is_convexoid_numeric(&j, &zero, ANGLES, default_convexoid_tol(&j)).map_err(e)?;
    ensure!(!v.is_convexoid, "Jordan block judged convexoid");
    let jordan_gap = v.max_support_gap;
    ensure!((jordan_gap - 0.5).abs() <= AC6_JORDAN_GAP_TOL, "Jordan gap {jordan_gap}");

    let b = square_plus_disk();
    let eigs = general_eigenvalues(&b).map_err(e)?;
    let v = is_convexoid_numeric(&b, &eigs, ANGLES, default_convexoid_tol(&b)).map_err(e)?;
    ensure!(v.is_convexoid && !v.is_normal, "square + disk: {v:?}");
    let id = ComplexMatrix::identity(6);
    ensure!(verify_johnson_decomposition(&b, &id, 4, AC6_JOHNSON_TOL).map_err(e)?, "split 4 rejected");
    ensure!(!verify_johnson_decomposition(&b, &id, 2, AC6_JOHNSON_TOL).map_err(e)?, "split 2 accepted");
    Ok(format!("Jordan gap {jordan_gap:.9}; square + disk convexoid, Johnson split 4 holds, split 2 fails"))
}

fn ac7() -> Outcome {
    let mut rng = SampleRng::seed_from(0xAC7);
    let mut matrices = vec![jordan(), example_matrix(), square_plus_disk()];
    for n in [3, 5, 8] {
        matrices.push(rng.normal(n));
    }
    for n in [2, 4, 6, 8] {
        matrices.push(rng.complex_matrix(n, n));
    }
    for (idx, a) in matrices.iter().enumerate() {
        let fa = fov::boundary(a, ANGLES).map_err(e)?;
        let samples = random_field_samples(a, AC7_SAMPLES, 1000 + idx as u64).map_err(e)?;
        // The cached grid is the same test `contains` performs; spot-check that.
        for &z in samples.iter().take(20) {
            ensure!(
                fov::contains(a, z, ANGLES, AC7_CONTAINS_TOL).map_err(e)? == fa.contains(z, AC7_CONTAINS_TOL),
                "matrix {idx}: cached test disagrees"
            );
        }
        if let Some(z) = samples.iter().find(|&&z| !fa.contains(z, AC7_CONTAINS_TOL)) {
            return Err(format!("matrix {idx}: Rayleigh sample {z} outside"));
        }
    }
    let j = jordan();
    let samples = random_field_samples(&j, AC7_SAMPLES, 7).map_err(e)?;
    let radius = samples.iter().map(|z| z.norm()).fold(0.0, f64::max);
    ensure!(radius <= 0.5 + AC7_RADIUS_TOL, "Jordan sample radius {radius}");
    for theta in fov::grid_angles(ANGLES) {
        let s = support(&j, theta).map_err(e)?.support;
        ensure!((s - 0.5).abs() <= AC7_SUPPORT_TOL, "Jordan support {s} at {theta}");
    }
    Ok(format!("{} matrices x {AC7_SAMPLES} samples inside; Jordan max |z| = {radius:.6}", matrices.len()))
}

fn ac8() -> Outcome {
    let mut rng = SampleRng::seed_from(0xAC8);
    let (mut worst_h, mut worst_n) = (0.0f64, 0.0f64);
    for t in 0..100 {
        let n = rng.range(1, 16);
        let h = rng.hermitian(n);
        let scale = h.scale_factor();
        let eig = hermitian_eigen(&h).map_err(e)?;
        let (res, orth) = (eig.residual(&h), eig.orthogonality_defect());
        worst_h = worst_h.max(res.max(orth) / scale);
        ensure!(res <= AC8_HERMITIAN_REL * scale, "hermitian {t}: residual {res:.3e}");
        ensure!(orth <= AC8_HERMITIAN_REL * scale, "hermitian {t}: unitarity defect {orth:.3e}");
    }
    for t in 0..100 {
        let n = rng.range(1, 8);
        // Every other matrix gets a repeated eigenvalue.
        let mut spectrum: Vec<Complex64> = (0..n).map(|_| rng.complex_gaussian()).collect();
        if t % 2 == 1 && n >= 2 {
            spectrum[1] = spectrum[0];
        }
        let (a, _) = rng.normal_with_spectrum(&spectrum);
        let scale = a.scale_factor();
        let (eigs, u) = eigen_decompose_normal(&a, NORMAL_TOL).map_err(e)?;
        let au = &a * &u;
        let ud = &u * &ComplexMatrix::from_diagonal(&eigs);
        let res = au.sub(&ud).map_err(e)?.frobenius_norm();
        let orth = (&u.adjoint() * &u).sub(&ComplexMatrix::identity(n)).map_err(e)?.frobenius_norm();
        worst_n = worst_n.max(res.max(orth) / scale);
        ensure!(res <= AC8_NORMAL_REL * scale, "normal {t}: residual {res:.3e}");
        ensure!(orth <= AC8_NORMAL_REL * scale, "normal {t}: unitarity defect {orth:.3e}");
    }
    Ok(format!("worst relative hermitian {worst_h:.2e}, normal {worst_n:.2e}"))
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_cli(std::iter::once("numrange").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned(), String::from_utf8_lossy(&err).into_owned())
}

fn ac9() -> Outcome {
    let dir = tempfile::tempdir().map_err(e)?;
    let p = |name: &str| dir.path().join(name).to_string_lossy().into_owned();
    let (matrix, jordan_path) = (p("example.json"), p("jordan.json"));
    write_matrix(&example_matrix(), &matrix).map_err(e)?;
    write_matrix(&jordan(), &jordan_path).map_err(e)?;

    // inscribe --k 1, twice
    for run in ["a", "b"] {
        let (code, _, err) =
            cli(&["inscribe", &matrix, "--k", "1", "--json", &p(&format!("r{run}.json")), "--svg", &p(&format!("f{run}.svg"))]);
        ensure!(code == 0, "inscribe exit {code}: {err}");
    }
    let json = std::fs::read_to_string(p("ra.json")).map_err(e)?;
    ensure!(json == std::fs::read_to_string(p("rb.json")).map_err(e)?, "inscribe JSON differs between runs");
    let svg = std::fs::read(p("fa.svg")).map_err(e)?;
    ensure!(svg == std::fs::read(p("fb.svg")).map_err(e)?, "SVG differs between runs");
    let report: ReportFile = serde_json::from_str(&json).map_err(e)?;
    ensure!(report.reports.len() == 1 && report.reports[0].k == 1, "unexpected report layout");
    ensure!(report.reports[0].contacts.len() == 4 && report.all_verified(), "expected 4 verified contacts");
    let svg = String::from_utf8(svg).map_err(e)?;
    ensure!(svg.matches(r#"class="contact""#).count() == 4, "SVG contact markers");
    ensure!(svg.matches(r#"class="field""#).count() == 1, "SVG field path");
    ensure!(svg.matches(r#"class="eigenvalue""#).count() == 4, "SVG eigenvalue markers");

    // verify round trip, then fault injection on the saved report
    let (code, _, err) = cli(&["verify", &matrix, &p("ra.json")]);
    ensure!(code == 0, "verify exit {code}: {err}");
    let mut bad = report.clone();
    bad.reports[0].contacts[0].contact_point += c(0.25, 0.25);
    std::fs::write(p("bad.json"), numrange::io::to_json_string(&bad).map_err(e)?).map_err(e)?;
    let (code, _, _) = cli(&["verify", &matrix, &p("bad.json")]);
    ensure!(code == 1, "corrupted report gave exit {code}");

    // dft --eigs "0,1,0+1i" --k 2, twice
    let mut outputs = Vec::new();
    for run in ["a", "b"] {
        let (code, out, err) = cli(&["dft", "--eigs", "0,1,0+1i", "--k", "2", "--svg", &p(&format!("d{run}.svg"))]);
        ensure!(code == 0, "dft exit {code}: {err}");
        outputs.push(out);
    }
    ensure!(outputs[0] == outputs[1], "dft JSON differs between runs");
    ensure!(std::fs::read(p("da.svg")).map_err(e)? == std::fs::read(p("db.svg")).map_err(e)?, "dft SVG differs");
    let dft: ReportFile = serde_json::from_str(&outputs[0]).map_err(e)?;
    let scale = dft.polygon.polygon.scale();
    for (contact, mid) in dft.reports[0].contacts.iter().zip(&dft.polygon.midpoints) {
        ensure!((contact.contact_point - mid).norm() <= AC2_MIDPOINT_REL * scale, "dft contact not at midpoint");
    }

    // Jordan block is not normal
    let (code, _, _) = cli(&["inscribe", &jordan_path]);
    ensure!(code == 3, "Jordan inscribe exit {code}");
    // malformed input
    std::fs::write(p("broken.json"), "{\"n\": 2, \"entries\": [[[0,0]]]}").map_err(e)?;
    let (code, _, _) = cli(&["inscribe", &p("broken.json")]);
    ensure!(code == 2, "malformed matrix exit {code}");
    Ok("inscribe 0, dft 0, Jordan 3, verify 0/1, malformed 2; outputs byte-identical".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("AC1 example fixture inscription", ac1),
        ("AC2 DFT midpoint contacts", ac2),
        ("AC3 field-of-values propositions", ac3),
        ("AC4 constructive invariants", ac4),
        ("AC5 phase and projector lemmas", ac5),
        ("AC6 convexoid verdicts", ac6),
        ("AC7 Rayleigh sampling oracle", ac7),
        ("AC8 eigensolver quality", ac8),
        ("AC9 CLI end to end", ac9),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(detail) => println!("PASS {name}: {detail} [{:.2?}]", start.elapsed()),
            Err(reason) => {
                failed += 1;
                println!("FAIL {name}: {reason} [{:.2?}]", start.elapsed());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
