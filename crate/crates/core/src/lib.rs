//! Arithmetic and spectral numerics for the modular surface.
//!
//! The crate bundles the ingredients needed to study the length spectrum of
//! the modular surface and the identities that tie it to spectral data:
//!
//! * [`quadform`] — exact arithmetic of real quadratic discriminants: narrow
//!   class numbers via reduction cycles, Pell solutions x² − Dy² = 4 via
//!   continued fractions, fundamental units and regulators.
//! * [`geodesics`] — the hyperbolic conjugacy classes of PSL₂(ℤ) enumerated
//!   by norm, their local Lefschetz numbers, and a CSV spectrum cache.
//! * [`replab`] — the admissible dual of PSL₂(ℝ), n-cohomology weight tables
//!   and representation-theoretic Lefschetz numbers, in exact rational
//!   arithmetic.
//! * [`mellin`] — a test-function class on (1, ∞) with closed-form Mellin
//!   transforms, adaptive quadrature, numerical Mellin inversion and
//!   seminorm estimation.
//! * [`selberg`] — the Selberg zeta function as a truncated Euler product,
//!   its logarithmic derivative as a Dirichlet series, and zero/pole data
//!   ingestion.
//! * [`lefschetz`] — the verification engine comparing the geometric sum,
//!   the vertical-contour integral and the residue expansion, plus the
//!   prime-geodesic counting function Ψ and its class-number form.
//!
//! Numeric code is generic over the scalar type through the [`Real`] trait;
//! [`Scalar`] (= `f64`) is the concrete type used by the CLI and the test
//! suite.

pub mod error;
pub mod geodesics;
pub mod lefschetz;
pub mod mellin;
mod quad;
pub mod quadform;
pub mod real;
pub mod replab;
pub mod selberg;

pub use error::{Error, Result};
pub use real::Real;

/// Concrete scalar type used throughout the CLI and tests.
pub type Scalar = f64;

/// Complex numbers over [`Scalar`].
pub type CScalar = num_complex::Complex<Scalar>;
