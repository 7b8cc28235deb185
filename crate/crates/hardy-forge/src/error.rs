use std::fmt;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Invalid argument or violated precondition.
    Domain(String),
    /// Evaluation at (or too close to) a kernel singularity.
    Singular(String),
    /// Adaptive quadrature did not reach the requested relative tolerance.
    Quadrature { requested: f64, achieved: f64 },
    /// Iterative solver or eigensolver failed to converge.
    Convergence(String),
    /// Operation not supported for this (kind, data) combination.
    Unsupported(String),
    /// Malformed configuration or expression.
    Config(String),
    /// Filesystem problem while writing artifacts.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Singular(m) => write!(f, "singularity: {m}"),
            Error::Quadrature {
                requested,
                achieved,
            } => write!(
                f,
                "quadrature tolerance not reached: requested {requested:.3e}, achieved {achieved:.3e}"
            ),
            Error::Convergence(m) => write!(f, "convergence failure: {m}"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
            Error::Config(m) => write!(f, "config error: {m}"),
            Error::Io(m) => write!(f, "io error: {m}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
