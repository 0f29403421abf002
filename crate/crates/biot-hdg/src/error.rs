//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("quadrature degree {requested} not supported (maximum {max})")]
    UnsupportedDegree { requested: usize, max: usize },

    #[error("unsupported element order {order} for family {family}")]
    UnsupportedOrder { family: &'static str, order: usize },

    #[error("singular geometry: {0}")]
    SingularGeometry(String),

    #[error("singular local block on element {cell}: {detail}")]
    SingularLocalBlock { cell: usize, detail: String },

    #[error("matrix not positive definite: {0}")]
    Definiteness(String),

    #[error("solver did not converge: {iterations} iterations, relative residual {residual:.3e}")]
    ConvergenceFailure { iterations: usize, residual: f64 },

    #[error("incompatible right-hand side: {0}")]
    Incompatible(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
