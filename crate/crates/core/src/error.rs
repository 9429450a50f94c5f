use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sequence too short: need at least {needed} points, got {got}")]
    TooShort { needed: usize, got: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("dimension {got} is too low, at least {needed} required")]
    DimensionTooLow { needed: usize, got: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("non-finite coordinate at point {index}")]
    NonFinite { index: usize },

    #[error("grid is not strictly increasing at index {index}")]
    NotIncreasing { index: usize },

    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("invalid symbol order {order} with derivative {derivative}")]
    InvalidOrder { order: usize, derivative: usize },

    #[error("open data exhausted at iteration {iteration}: {points} points left, 4 needed")]
    Exhausted { iteration: u32, points: usize },

    #[error("{0}")]
    InvalidConfig(&'static str),
}
