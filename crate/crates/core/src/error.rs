use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible congruences: {0}")]
    Incompatible(String),
    #[error("effort budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("inputs share the common factor {0} over the fraction field")]
    CommonFactor(String),
    #[error("zero input")]
    ZeroInput,
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("assumption AV1 fails at the prime {prime}")]
    Av1Violation { prime: String },
    #[error("assumption AV2 fails at the prime {prime}")]
    Av2Violation { prime: String },
    #[error("assumption AV3 fails at the prime {prime}")]
    Av3Violation { prime: String },
}

impl Error {
    /// True for budget and cap exhaustion, as opposed to bad inputs.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded(_) | Error::CapExceeded(_))
    }

    /// The offending prime for assumption-on-values failures.
    pub fn failing_prime(&self) -> Option<&str> {
        match self {
            Error::Av1Violation { prime } | Error::Av2Violation { prime } | Error::Av3Violation { prime } => {
                Some(prime)
            }
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
