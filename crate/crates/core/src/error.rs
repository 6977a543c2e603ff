//! Error type shared across the engine.

use thiserror::Error;

/// Errors produced by model validation, analytic-continuation domain checks
/// and the numerical machinery.
#[derive(Debug, Clone, Error)]
pub enum LevyError {
    /// Model parameters violate a family constraint.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// Evaluation point lies outside the analyticity domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation point lies on (or beyond) a branch cut.
    #[error("cut error: {0}")]
    Cut(String),

    /// Requested configuration is not supported.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// No admissible contour/grid exists for the requested tolerance.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// Payoff strip and model strip do not intersect.
    #[error("strip conflict: {0}")]
    StripConflict(String),

    /// A zero of q + psi obstructs a contour deformation.
    #[error("zero crossing: {0}")]
    ZeroCrossing(String),

    /// Iterative limit/extrapolation failed to converge.
    #[error("non-convergence: {0}")]
    NonConvergence(String),

    /// Cancellation exceeded the working precision budget.
    #[error("precision loss: {0}")]
    PrecisionLoss(String),

    /// A series or integral diverges for the given data.
    #[error("divergence: {0}")]
    Divergence(String),

    /// The symmetry condition required by the construction fails.
    #[error("symmetry violation: max defect {max_defect:e}")]
    SymmetryViolation { max_defect: f64 },

    /// Strips or cones of the operands do not intersect.
    #[error("empty intersection: {0}")]
    EmptyIntersection(String),

    /// NaN/overflow at a quadrature node.
    #[error("numerical failure at node {node}: {message}")]
    Numerical { node: i64, message: String },
}

pub type Result<T> = std::result::Result<T, LevyError>;
