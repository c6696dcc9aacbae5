#![allow(dead_code)]

use numrange::{Complex64, ComplexMatrix};

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Real orthogonal U with first column (1/2, 1/2, 1/2, 1/2).
pub fn example_u() -> ComplexMatrix {
    let (s3, s2, s6) = (3f64.sqrt(), 2f64.sqrt(), 6f64.sqrt());
    ComplexMatrix::from_real_rows(&[
        &[0.5, s3 / 2.0, 0.0, 0.0],
        &[0.5, -s3 / 6.0, 0.0, s6 / 3.0],
        &[0.5, -s3 / 6.0, s2 / 2.0, -s6 / 6.0],
        &[0.5, -s3 / 6.0, -s2 / 2.0, -s6 / 6.0],
    ])
    .unwrap()
}

pub fn example_spectrum() -> [Complex64; 4] {
    [c(-1.0, -5.0), c(-2.0, 0.0), c(3.0, -2.0), c(2.0, 5.0)]
}

/// `U D U^T` with `D = diag(-1-5i, -2, 3-2i, 2+5i)`.
pub fn example_matrix() -> ComplexMatrix {
    let u = example_u();
    &(&u * &ComplexMatrix::from_diagonal(&example_spectrum())) * &u.transpose()
}

pub fn jordan() -> ComplexMatrix {
    ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap()
}

/// Square with vertices ±2, ±2i, direct sum with a 2x2 Jordan block whose
/// field is the disk of radius 1/2.
pub fn square_plus_disk() -> ComplexMatrix {
    ComplexMatrix::from_diagonal(&[c(2.0, 0.0), c(-2.0, 0.0), c(0.0, 2.0), c(0.0, -2.0)]).direct_sum(&jordan())
}
