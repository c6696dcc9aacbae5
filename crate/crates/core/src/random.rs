//! Seeded random vectors and matrices.
//!
//! All randomness in the crate flows through [`SampleRng`], a SplitMix64
//! stream, so that every sample sequence is reproducible from its seed.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_distr::StandardNormal;
use rand_xoshiro::SplitMix64;

use crate::linalg::{ComplexMatrix, ComplexVector};

#[derive(Debug, Clone)]
pub struct SampleRng {
    inner: SplitMix64,
}

impl SampleRng {
    pub fn seed_from(seed: u64) -> Self {
        Self { inner: SplitMix64::seed_from_u64(seed) }
    }

    pub fn uniform(&mut self) -> f64 {
        self.inner.random::<f64>()
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.inner.random_range(lo..=hi)
    }

    pub fn gaussian(&mut self) -> f64 {
        self.inner.sample(StandardNormal)
    }

    /// Standard complex Gaussian (independent real and imaginary parts).
    pub fn complex_gaussian(&mut self) -> Complex64 {
        Complex64::new(self.gaussian(), self.gaussian())
    }

    pub fn complex_vector(&mut self, n: usize) -> ComplexVector {
        (0..n).map(|_| self.complex_gaussian()).collect::<Vec<_>>().into()
    }

    /// Uniformly distributed point on the unit sphere of `C^n`.
    pub fn unit_vector(&mut self, n: usize) -> ComplexVector {
        loop {
            let v = self.complex_vector(n);
            let norm = v.norm();
            if norm > 1e-300 {
                return v.scale(Complex64::new(1.0 / norm, 0.0));
            }
        }
    }

    pub fn complex_matrix(&mut self, rows: usize, cols: usize) -> ComplexMatrix {
        ComplexMatrix::from_fn(rows, cols, |_, _| self.complex_gaussian())
    }

    pub fn hermitian(&mut self, n: usize) -> ComplexMatrix {
        let g = self.complex_matrix(n, n);
        ComplexMatrix::from_fn(n, n, |i, j| (g[(i, j)] + g[(j, i)].conj()) * 0.5)
    }

    /// Random unitary from Gram-Schmidt (applied twice) on a Gaussian matrix.
    pub fn unitary(&mut self, n: usize) -> ComplexMatrix {
        let mut cols: Vec<ComplexVector> = Vec::with_capacity(n);
        while cols.len() < n {
            let mut v = self.complex_vector(n);
            for _ in 0..2 {
                for q in &cols {
                    let proj = q.inner(&v);
                    v = v.combine(Complex64::new(1.0, 0.0), q, -proj);
                }
            }
            let norm = v.norm();
            if norm > 1e-8 {
                cols.push(v.scale(Complex64::new(1.0 / norm, 0.0)));
            }
        }
        ComplexMatrix::from_columns(&cols).expect("square")
    }

    /// `U diag(eigenvalues) U*` for a random unitary `U`; returns the matrix and `U`.
    pub fn normal_with_spectrum(&mut self, eigenvalues: &[Complex64]) -> (ComplexMatrix, ComplexMatrix) {
        let u = self.unitary(eigenvalues.len());
        let a = &(&u * &ComplexMatrix::from_diagonal(eigenvalues)) * &u.adjoint();
        (a, u)
    }

    /// Random normal matrix with complex Gaussian spectrum.
    pub fn normal(&mut self, n: usize) -> ComplexMatrix {
        let eigs: Vec<Complex64> = (0..n).map(|_| self.complex_gaussian()).collect();
        self.normal_with_spectrum(&eigs).0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::is_unitary;

    #[test]
    fn reproducible_from_seed() {
        let a: Vec<f64> = {
            let mut r = SampleRng::seed_from(42);
            (0..5).map(|_| r.gaussian()).collect()
        };
        let b: Vec<f64> = {
            let mut r = SampleRng::seed_from(42);
            (0..5).map(|_| r.gaussian()).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn unitary_is_unitary() {
        let mut r = SampleRng::seed_from(1);
        for n in 1..10 {
            assert!(is_unitary(&r.unitary(n), 1e-12).unwrap());
        }
    }
}
