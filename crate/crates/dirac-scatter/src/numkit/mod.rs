//! Shared numerical kernels: Hankel/Bessel evaluation, 2D FFT, Krylov
//! solvers (CG, GMRES), and banded sparse LU factorization.

mod banded;
mod bessel;
mod fft;
mod krylov;

pub use banded::{sparse_factor, sparse_solve, SparseFactorization};
pub use bessel::{hankel1, hankel1_pair};
pub use fft::{fft2, ComplexGridArray, Fft2, FftDirection};
pub use krylov::{cg_hermitian, gmres, LinearOperatorHandle, SolveOutcome};

use num_complex::Complex64;

/// Euclidean inner product ⟨a, b⟩ = Σ conj(a_i) b_i.
pub fn dot(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Euclidean norm of a complex vector.
pub fn norm(a: &[Complex64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}
