//! Numerical engine for Levy models with analytically tractable
//! characteristic exponents.
//!
//! The crate evaluates analytically-continued characteristic exponents with
//! regularity metadata (strips, cones, growth orders), runs sinh-accelerated
//! Fourier and Laplace inversion for transition densities and option prices,
//! evaluates Wiener-Hopf factors on deformed contours, extracts and verifies
//! Stieltjes-Levy measures from boundary values of the exponent, and
//! composes models by tilting, mixing and subordination.
//!
//! Quadrature parameters are chosen automatically from an error tolerance
//! and the model metadata; the node count scales like `E ln E` with
//! `E = ln(1/eps)` for power-order models.

pub mod construct;
pub mod error;
pub mod fixtures;
pub mod inversion;
pub mod laplace;
pub mod models;
pub mod oracle;
pub mod sinhq;
pub mod special;
pub mod stieltjes;
pub mod wiener_hopf;

pub use error::{LevyError, Result};
pub use models::{AngleCone, ExtOrder, LevyModel, SinhType, Strip};

#[cfg(test)]
pub(crate) use fixtures as test_fixtures;
