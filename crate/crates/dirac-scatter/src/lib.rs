//! Forward and inverse scattering for two-dimensional Dirac equations.
//!
//! Two first-order systems for a spinor field ψ = (ψ1, ψ2)ᵀ are supported:
//!
//! * the *chiral* model, `-i ∂x ψ + i α ∂y ψ + k(β + V)ψ = 0`, a hyperbolic
//!   equation marched in the time-like variable x with final-trace
//!   measurements, and
//! * the *anti-chiral* model, `i β ∂x ψ + i α ∂y ψ + k(V - 1)ψ = 0`, an
//!   elliptic equation solved through a Lippmann–Schwinger integral equation
//!   with boundary measurements,
//!
//! where α, β are Pauli matrices and V is a real, compactly supported
//! scattering potential. Both models expose the Born operators K_m and the
//! discrete adjoint of K_1, which drive the inverse Born series (IBS) and the
//! reduced inverse Born series (RIBS) reconstruction engines in [`inverse`].
//! [`harness`] reproduces complete synthetic experiments (phantoms, incident
//! fields, error tables, file outputs) and backs the `dirac-scatter` CLI.

pub mod antichiral;
pub mod chiral;
pub mod error;
pub mod field;
pub mod harness;
pub mod inverse;
pub mod numkit;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[cfg(test)]
pub(crate) mod testutil;
