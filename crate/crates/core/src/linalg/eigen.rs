//! Cyclic Jacobi eigensolver for complex Hermitian matrices.
//!
//! Each off-diagonal entry `a_pq` is first made real by a diagonal phase
//! similarity on index `q`, after which the ordinary real Jacobi rotation
//! annihilates it; both steps are applied in one pass. Sweeps run over all
//! pairs `p < q` in row order until the off-diagonal Frobenius norm drops
//! below `tolerance * ||H||_F`.

use num_complex::Complex64;

use super::{ComplexMatrix, ComplexVector};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiOptions {
    pub max_sweeps: usize,
    /// Convergence threshold on `off(A) / ||H||_F`.
    pub tolerance: f64,
}

impl Default for JacobiOptions {
    fn default() -> Self {
        Self { max_sweeps: 100, tolerance: 1e-14 }
    }
}

/// Eigenvalues in ascending order with unit eigenvectors as matrix columns.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
    pub sweeps: usize,
}

impl EigenDecomposition {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn eigenvector(&self, j: usize) -> ComplexVector {
        self.eigenvectors.column(j)
    }

    /// Largest eigenvalue and its eigenvector.
    pub fn top(&self) -> (f64, ComplexVector) {
        let j = self.len() - 1;
        (self.eigenvalues[j], self.eigenvector(j))
    }

    /// `||H Q - Q Λ||_F`.
    pub fn residual(&self, h: &ComplexMatrix) -> f64 {
        let hq = h * &self.eigenvectors;
        let n = self.len();
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += (hq[(i, j)] - self.eigenvectors[(i, j)] * self.eigenvalues[j]).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// `||Q* Q - I||_F`.
    pub fn orthogonality_defect(&self) -> f64 {
        let q = &self.eigenvectors;
        (&q.adjoint() * q)
            .sub(&ComplexMatrix::identity(q.cols()))
            .expect("square")
            .frobenius_norm()
    }
}

pub fn hermitian_eigen(h: &ComplexMatrix) -> Result<EigenDecomposition> {
    hermitian_eigen_with(h, &JacobiOptions::default())
}

pub fn hermitian_eigen_with(h: &ComplexMatrix, opts: &JacobiOptions) -> Result<EigenDecomposition> {
    let n = h.square_dim()?;
    let norm = check_hermitian(h)?;
    let mut a = h.clone();
    for i in 0..n {
        let d = a[(i, i)].re;
        a.set(i, i, Complex64::new(d, 0.0));
    }
    jacobi(a, ComplexMatrix::identity(n), norm, opts)
}

/// Like [`hermitian_eigen_with`], but starts from the unitary `guess` (for
/// example the eigenvectors of a nearby matrix), so that only the residual
/// `guess* H guess` is diagonalized.
pub fn hermitian_eigen_seeded(
    h: &ComplexMatrix,
    guess: &ComplexMatrix,
    opts: &JacobiOptions,
) -> Result<EigenDecomposition> {
    let n = h.square_dim()?;
    if guess.rows() != n || guess.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, got: guess.rows() });
    }
    check_hermitian(h)?;
    hermitian_eigen_compressed(&compress(h, guess), guess, opts)
}

/// `G* H G`, with the rounding asymmetry removed.
pub fn compress(h: &ComplexMatrix, g: &ComplexMatrix) -> ComplexMatrix {
    let b = &(&g.adjoint() * h) * g;
    let n = b.rows();
    ComplexMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Complex64::new(b[(i, i)].re, 0.0)
        } else if i < j {
            (b[(i, j)] + b[(j, i)].conj()) * 0.5
        } else {
            (b[(j, i)] + b[(i, j)].conj()).conj() * 0.5
        }
    })
}

/// Eigen-decomposition of `H = G B G*` from the compressed form `B = G* H G`
/// and the unitary `G`. Eigenvectors are returned in the original basis.
pub fn hermitian_eigen_compressed(
    b: &ComplexMatrix,
    g: &ComplexMatrix,
    opts: &JacobiOptions,
) -> Result<EigenDecomposition> {
    let n = b.square_dim()?;
    if g.rows() != n || g.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, got: g.rows() });
    }
    let norm = check_hermitian(b)?;
    let mut a = b.clone();
    for i in 0..n {
        let d = a[(i, i)].re;
        a.set(i, i, Complex64::new(d, 0.0));
    }
    jacobi(a, g.clone(), norm, opts)
}

fn check_hermitian(h: &ComplexMatrix) -> Result<f64> {
    let n = h.square_dim()?;
    let norm = h.frobenius_norm();
    let mut dev = 0.0;
    for i in 0..n {
        for j in i..n {
            dev += (h[(i, j)] - h[(j, i)].conj()).norm_sqr();
        }
    }
    let deviation = dev.sqrt();
    if deviation > 1e-12 * (1.0 + norm) {
        return Err(Error::NonHermitian { deviation });
    }
    Ok(norm)
}

fn jacobi(mut a: ComplexMatrix, v: ComplexMatrix, norm: f64, opts: &JacobiOptions) -> Result<EigenDecomposition> {
    let n = a.rows();
    let target = opts.tolerance * norm;
    // Rows of `w` are the columns of `v`, so both updates touch contiguous memory.
    let mut w = v.transpose();
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= target {
            break;
        }
        if sweeps == opts.max_sweeps {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a.data, &mut w.data, n, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(x, x)].re.total_cmp(&a[(y, y)].re));
    let eigenvalues = order.iter().map(|&j| a[(j, j)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |i, j| w[(order[j], i)]);
    Ok(EigenDecomposition { eigenvalues, eigenvectors, sweeps })
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut acc = 0.0;
    for i in 0..n {
        acc += a.row(i)[i + 1..].iter().map(|z| z.norm_sqr()).sum::<f64>();
    }
    (2.0 * acc).sqrt()
}

/// Rows `p < q` of an `n`-column row-major buffer.
fn row_pair(data: &mut [Complex64], n: usize, p: usize, q: usize) -> (&mut [Complex64], &mut [Complex64]) {
    let (head, tail) = data.split_at_mut(q * n);
    (&mut head[p * n..(p + 1) * n], &mut tail[..n])
}

/// Annihilates `a[p][q]` (and `a[q][p]`) in place; `w` holds the accumulated
/// unitary transposed.
///
/// The phase similarity `q -> q e^{-i phi}` and the real rotation are applied
/// together. Rows `p` and `q` are computed and columns filled in by symmetry.
fn rotate(a: &mut [Complex64], w: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let e = phase.conj();

    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let theta = (aqq - app) / (2.0 * mag);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    {
        let (rp, rq) = row_pair(a, n, p, q);
        for (x, y) in rp.iter_mut().zip(rq.iter_mut()) {
            let (apr, aqr) = (*x, *y * phase);
            *x = apr * c - aqr * s;
            *y = apr * s + aqr * c;
        }
        rp[p] = Complex64::new(app - t * mag, 0.0);
        rq[q] = Complex64::new(aqq + t * mag, 0.0);
        rp[q] = Complex64::new(0.0, 0.0);
        rq[p] = Complex64::new(0.0, 0.0);
    }
    for r in 0..n {
        if r != p && r != q {
            a[r * n + p] = a[p * n + r].conj();
            a[r * n + q] = a[q * n + r].conj();
        }
    }

    let (wp, wq) = row_pair(w, n, p, q);
    for (x, y) in wp.iter_mut().zip(wq.iter_mut()) {
        let (vrp, vrq) = (*x, *y * e);
        *x = vrp * c - vrq * s;
        *y = vrp * s + vrq * c;
    }
}

/// Eigenvalues of a general square matrix from a complex Schur form, sorted
/// by real part and then imaginary part.
pub fn general_eigenvalues(a: &ComplexMatrix) -> Result<Vec<Complex64>> {
    let n = a.square_dim()?;
    let m = nalgebra::DMatrix::from_row_slice(n, n, a.as_slice());
    let schur = nalgebra::Schur::try_new(m, 1e-15, 10_000 * n.max(1))
        .ok_or(Error::NoConvergence { sweeps: 10_000 * n.max(1), off_norm: f64::NAN })?;
    let mut eigs: Vec<Complex64> = schur
        .eigenvalues()
        .ok_or_else(|| Error::Degenerate("Schur form is not triangular".into()))?
        .iter()
        .copied()
        .collect();
    eigs.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
    Ok(eigs)
}
