use thiserror::Error;

/// Failure to parse a Lie type, coordinate or monomial.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

/// Errors raised by the character engine and the verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("illegal Lie type {series}{rank}: {reason}")]
    IllegalType {
        series: char,
        rank: usize,
        reason: String,
    },
    #[error("node {node} out of range for rank {rank}")]
    InvalidNode { node: usize, rank: usize },
    #[error("monomial {monomial} is not dominant")]
    NonDominant { monomial: String },
    #[error("term budget of {budget} exceeded at height {height}")]
    BudgetExceeded { budget: usize, height: u32 },
    #[error(
        "expansion failed at {monomial}: node {node} carries an unexplained multiplicity \
         but the monomial is not {node}-dominant"
    )]
    ExpansionFailure { monomial: String, node: usize },
    #[error("no stabilization for node {node} at height {height} below k = {ceiling}")]
    Stabilization {
        node: usize,
        height: u32,
        ceiling: u32,
    },
    #[error("negative coefficient {coeff} at {avector} in {context}")]
    NegativeCoefficient {
        context: String,
        avector: String,
        coeff: i64,
    },
    #[error("top mismatch: {0}")]
    TopMismatch(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl EngineError {
    /// Budget and stabilization failures are resource limits rather than
    /// refutations; the CLI maps them to a distinct exit code.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            EngineError::BudgetExceeded { .. } | EngineError::Stabilization { .. }
        )
    }
}
