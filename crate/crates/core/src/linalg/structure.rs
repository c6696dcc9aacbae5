use std::f64::consts::PI;

use num_complex::Complex64;

use super::ComplexMatrix;
use crate::error::Result;

/// `||U*U - I||_F <= tol`.
pub fn is_unitary(u: &ComplexMatrix, tol: f64) -> Result<bool> {
    let n = u.square_dim()?;
    let defect = (&u.adjoint() * u).sub(&ComplexMatrix::identity(n))?.frobenius_norm();
    Ok(defect <= tol)
}

/// Frobenius norm of the commutator `A*A - AA*`.
pub fn normality_defect(a: &ComplexMatrix) -> Result<f64> {
    a.square_dim()?;
    let adj = a.adjoint();
    Ok((&adj * a).sub(&(a * &adj))?.frobenius_norm())
}

/// `||A*A - AA*||_F <= tol * (1 + ||A||_F^2)`.
pub fn is_normal(a: &ComplexMatrix, tol: f64) -> Result<bool> {
    let defect = normality_defect(a)?;
    let norm = a.frobenius_norm();
    Ok(defect <= tol * (1.0 + norm * norm))
}

/// Unitary DFT matrix with entries `ω^{ij} / sqrt(n)`, `ω = exp(-2πi/n)`.
///
/// The exponent is reduced mod `n` before evaluating the root of unity so
/// large products do not lose phase accuracy.
pub fn dft_matrix(n: usize) -> ComplexMatrix {
    let scale = 1.0 / (n as f64).sqrt();
    ComplexMatrix::from_fn(n, n, |i, j| {
        let e = (i * j) % n;
        Complex64::from_polar(scale, -2.0 * PI * e as f64 / n as f64)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn unitary_examples() {
        assert!(is_unitary(&ComplexMatrix::identity(4), 1e-10).unwrap());
        let d = ComplexMatrix::from_diagonal(&[c(2.0, 0.0), c(1.0, 0.0)]);
        assert!(!is_unitary(&d, 1e-10).unwrap());
        assert!(matches!(is_unitary(&ComplexMatrix::zeros(2, 3), 1e-10), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn normal_examples() {
        let d = ComplexMatrix::from_diagonal(&[c(1.0, 2.0), c(-3.0, 0.5), c(0.0, -1.0)]);
        assert!(is_normal(&d, 1e-12).unwrap());
        let jordan = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!(!is_normal(&jordan, 1e-10).unwrap());
        assert!((normality_defect(&jordan).unwrap() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn dft_small_cases() {
        assert_eq!(dft_matrix(1), ComplexMatrix::identity(1));
        let f2 = dft_matrix(2);
        let r = FRAC_1_SQRT_2;
        let expect = ComplexMatrix::from_real_rows(&[&[r, r], &[r, -r]]).unwrap();
        assert!(f2.max_abs_diff(&expect) < 1e-15);
        let f4 = dft_matrix(4);
        assert!(is_unitary(&f4, 1e-12).unwrap());
        // ω = -i for n = 4.
        assert!((f4[(1, 1)] - c(0.0, -0.5)).norm() < 1e-16);
    }

    #[test]
    fn dft_unitary_up_to_32() {
        for n in 1..=32 {
            let f = dft_matrix(n);
            assert!(is_unitary(&f, 1e-11).unwrap(), "n={n}");
            let first = 1.0 / (n as f64).sqrt();
            for i in 0..n {
                assert!((f[(0, i)] - c(first, 0.0)).norm() < 1e-15);
                assert!((f[(i, 0)] - c(first, 0.0)).norm() < 1e-15);
            }
        }
    }
}
