//! Fields of values (numerical ranges) of small dense complex matrices.
//!
//! The crate computes support functions and sampled boundaries of
//! `F(A) = { x* A x : ||x|| = 1 }`, tests whether `F(A)` equals the convex hull
//! of the spectrum (the convexoid property), and for normal `A` constructs,
//! for each deletion index `k`, a point of `F(A_(k))` on every side of the
//! spectral polygon together with the unit vector that realizes it.
//!
//! Library indices are 0-based. The CLI and report files use 1-based `k`.

pub mod cli;
pub mod convexoid;
pub mod error;
pub mod fov;
pub mod inscription;
pub mod io;
pub mod linalg;
pub mod polygon;
pub mod random;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, ComplexVector};
pub use num_complex::Complex64;
