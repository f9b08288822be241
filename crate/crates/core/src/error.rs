use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A construction would exceed a configured resource budget. `quantity`
    /// names the offending amount (e.g. `"beta^i = 2^30 = 1073741824"`).
    #[error("budget exceeded: {quantity} > limit {limit}")]
    BudgetExceeded { quantity: String, limit: u64 },

    /// A numeric routine failed to reach the requested precision.
    #[error("precision failure: {0}")]
    Precision(String),

    /// An exact identity that must hold by construction was violated;
    /// this always signals an implementation bug, not bad input.
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    /// Parameters outside their documented domain.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn budget(quantity: impl Into<String>, limit: u64) -> Self {
        Error::BudgetExceeded {
            quantity: quantity.into(),
            limit,
        }
    }
}
