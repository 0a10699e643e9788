//! Library-wide error type.

use thiserror::Error;

/// Errors raised by geometry, conjugation and valuation operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("origin is not an interior point")]
    OriginNotInterior,
    #[error("origin is not in the domain")]
    OriginNotInDomain,
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("function is not coercive")]
    NotCoercive,
    #[error("derivative of order {order} unavailable for this weight kind")]
    DerivativeUnavailable { order: usize },
    #[error("quadrature did not converge (last gap {gap:e})")]
    QuadratureNotConverged { gap: f64 },
    #[error("linear system ill-conditioned (cond {cond:e})")]
    IllConditioned { cond: f64 },
    #[error("t-grid value below the attained minimum")]
    GridBelowMin,
    #[error("empty polytope")]
    Empty,
    #[error("complexity guard tripped: {0}")]
    ComplexityGuard(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
