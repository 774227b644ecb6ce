//! Error types shared by the solver crates.

use thiserror::Error;

/// Errors raised by the model, the exact solutions and the steppers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An input lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The velocity smallness condition behind the contact-point root is violated.
    #[error("branch error: {what}{}", time.map(|t| format!(" (at t = {t})")).unwrap_or_default())]
    Branch { what: String, time: Option<f64> },

    /// A quadrature or root solve failed to converge.
    #[error("numerical error: {0}")]
    Numerical(String),

    /// Invalid scenario or solver configuration.
    #[error("configuration error: {0}")]
    Config(String),

    /// The advective CFL bound was exceeded; the step was rejected.
    #[error("CFL violation at t = {time}: cfl = {cfl} > limit {limit}")]
    Cfl { time: f64, cfl: f64, limit: f64 },

    /// A water column lost positivity.
    #[error("non-positive depth h = {depth} in cell {cell} at t = {time}")]
    Blowup { time: f64, cell: usize, depth: f64 },

    /// The hull came too close to the bottom for the model to stay valid.
    #[error("grounding guard at t = {time}: min wetted depth {min_depth}")]
    Grounding { time: f64, min_depth: f64 },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn branch(msg: impl Into<String>) -> Self {
        Error::Branch {
            what: msg.into(),
            time: None,
        }
    }

    pub fn branch_at(msg: impl Into<String>, time: f64) -> Self {
        Error::Branch {
            what: msg.into(),
            time: Some(time),
        }
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
