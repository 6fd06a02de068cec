use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the requested operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The evaluation point is within tolerance of a pole.
    #[error("singularity: {function} at x = {x} (|{guard}| = {magnitude:e})")]
    Singularity {
        function: &'static str,
        x: f64,
        guard: &'static str,
        magnitude: f64,
    },

    /// A first-order operator does not map the extension ring into itself.
    #[error("configuration error: {0}")]
    Configuration(String),

    /// A complex-intermediate route left an imaginary residual above tolerance.
    #[error("consistency error: {function} order {order} left imaginary residual {residual:e} (value {value:e})")]
    Consistency {
        function: &'static str,
        order: usize,
        value: f64,
        residual: f64,
    },

    /// A table family or routine needs a parameter the caller did not supply.
    #[error("missing parameter: {0}")]
    MissingParameter(&'static str),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}
