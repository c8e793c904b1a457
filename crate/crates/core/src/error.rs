use alloc::string::String;

/// Errors shared across the crate.
///
/// Constructive routines distinguish "the hypothesis of this method does not
/// hold here" ([`Error::NotApplicable`]) from genuine failures. A
/// [`Error::TheoremViolation`] means a guaranteed construction step failed and
/// should be treated as a bug, not an input problem.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {v} out of range (graph has {n} vertices)")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid group spec: {0}")]
    BadGroup(String),
    #[error("element has {got} coordinates, group has {expected}")]
    ElementShapeMismatch { expected: usize, got: usize },
    #[error("no even walk between {u} and {v}")]
    NoEvenWalk { u: usize, v: usize },
    #[error("graph is disconnected")]
    Disconnected,

    #[error("target color sum has no half in the group")]
    InfeasibleSum,
    #[error("parity targets have an odd number of ones")]
    InfeasibleParity,
    #[error("weighting covers {got} edges, graph has {expected}")]
    IncompleteWeighting { expected: usize, got: usize },
    #[error("weighting is not over the two-element group")]
    NotBinaryGroup,

    #[error("method not applicable: {0}")]
    NotApplicable(String),
    #[error("no feasible degree bounds: {0}")]
    InfeasibleBounds(String),
    #[error("subgraph search exhausted (best remaining deficit {best_deficit})")]
    SearchFailed { best_deficit: usize },
    #[error("construction failed where theory guarantees success: {0}")]
    TheoremViolation(String),

    #[error("enumeration needs {needed} assignments, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("invalid family spec: {0}")]
    BadFamily(String),
    #[error("generation failed after {attempts} attempts")]
    GenerationFailed { attempts: u32 },
}

pub type Result<T> = core::result::Result<T, Error>;
