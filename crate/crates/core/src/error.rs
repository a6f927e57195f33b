use thiserror::Error;

/// Outcome classes shared by every analysis.
///
/// A theorem violation is kept apart from hypothesis and resource failures:
/// it always carries a machine-readable bundle that reproduces the instance.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    #[error("theorem violation: {claim}")]
    TheoremViolation {
        claim: String,
        bundle: Box<serde_json::Value>,
    },
}

impl Error {
    pub(crate) fn violation(claim: impl Into<String>, bundle: serde_json::Value) -> Self {
        Error::TheoremViolation {
            claim: claim.into(),
            bundle: Box::new(bundle),
        }
    }

    pub fn is_theorem_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
