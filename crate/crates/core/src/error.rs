use thiserror::Error;

/// Errors produced by the rc2 pipeline.
///
/// Each variant corresponds to a violated precondition or a malformed input;
/// the CLI maps all of them to exit code 2 except [`Error::BudgetExceeded`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input at line {line}: {reason}")]
    InvalidInput { line: usize, reason: String },

    #[error("invalid generator parameters: {0}")]
    InvalidSpec(String),

    #[error("graph is not 2-connected")]
    NotTwoConnected,

    #[error("no pair of internally disjoint paths from {0} to the anchor set")]
    NoFan(usize),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("graph is not minimally 2-connected: {0}")]
    NotMinimal(String),

    #[error("malformed ear decomposition: {0}")]
    MalformedDecomposition(String),

    #[error("no valid base labeling: {0}")]
    LabelingImpossible(String),

    #[error("invalid base labeling: {0}")]
    LabelingInvalid(String),

    #[error("graph is not a cycle")]
    NotACycle,

    #[error("not a Hamiltonian cycle: {0}")]
    NotHamiltonianCycle(String),

    #[error("invalid chord {u}-{v}: {reason}")]
    ChordInvalid { u: usize, v: usize, reason: String },

    #[error("ear endpoint {0} has no unique-color entry")]
    EndpointNotEligible(usize),

    #[error("ear {0:?} has no interior vertex of degree two")]
    NoInteriorDegreeTwo(Vec<usize>),

    #[error("coloring result carries no induction trace")]
    TraceMissing,

    #[error("budget of {budget} verifier calls exhausted; rc2 >= {lower_bound}")]
    BudgetExceeded { budget: u64, lower_bound: usize },
}

impl Error {
    /// Variant name, used as a stable tag in CLI messages.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidInput { .. } => "InvalidInput",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::NotTwoConnected => "NotTwoConnected",
            Error::NoFan(_) => "NoFan",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::NotApplicable(_) => "NotApplicable",
            Error::NotMinimal(_) => "NotMinimal",
            Error::MalformedDecomposition(_) => "MalformedDecomposition",
            Error::LabelingImpossible(_) => "LabelingImpossible",
            Error::LabelingInvalid(_) => "LabelingInvalid",
            Error::NotACycle => "NotACycle",
            Error::NotHamiltonianCycle(_) => "NotHamiltonianCycle",
            Error::ChordInvalid { .. } => "ChordInvalid",
            Error::EndpointNotEligible(_) => "EndpointNotEligible",
            Error::NoInteriorDegreeTwo(_) => "NoInteriorDegreeTwo",
            Error::TraceMissing => "TraceMissing",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
