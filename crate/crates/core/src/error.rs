use alloc::string::String;

/// Errors raised by validation and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("expected {expected} coordinates, found {found}")]
    Length { expected: usize, found: usize },
    #[error("coordinate sums differ ({left} vs {right})")]
    UnequalSums { left: String, right: String },
    #[error("{name} is not dominant: consecutive differences must be non-negative integers")]
    NotDominant { name: &'static str },
    #[error("{name} has non-integral consecutive differences")]
    NonIntegralDifferences { name: &'static str },
    #[error("vector has non-integral coordinates")]
    NotIntegral,
    #[error("vector coordinates do not sum to zero")]
    NotZeroSum,
    #[error("input lies outside the reference oracle's domain: {0}")]
    OutsideOracleDomain(String),
    #[error("enumeration exceeded the limit of {limit} entries")]
    SearchLimit { limit: usize },
    #[error("signed sum evaluated to a negative count ({0})")]
    NegativeCount(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroRank => "zero_rank",
            Error::Length { .. } => "wrong_length",
            Error::UnequalSums { .. } => "unequal_sums",
            Error::NotDominant { .. } => "not_dominant",
            Error::NonIntegralDifferences { .. } => "non_integral_differences",
            Error::NotIntegral => "not_integral",
            Error::NotZeroSum => "not_zero_sum",
            Error::OutsideOracleDomain(_) => "outside_oracle_domain",
            Error::SearchLimit { .. } => "search_limit",
            Error::NegativeCount(_) => "negative_count",
        }
    }

    /// Whether the error stems from resource limits rather than invalid input.
    pub fn is_resource_exhaustion(&self) -> bool {
        matches!(self, Error::SearchLimit { .. })
    }
}

pub type Result<T> = core::result::Result<T, Error>;
