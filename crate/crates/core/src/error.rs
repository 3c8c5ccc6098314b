use thiserror::Error;

use crate::verdict::Verdict;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex label `{0}`")]
    UnknownVertex(String),

    #[error("vertex id {0} is out of range")]
    VertexOutOfRange(usize),

    #[error("vertices {0:?} do not span a simplex")]
    NotASimplex(Vec<usize>),

    #[error("simplex {0:?} does not lie in a single sphere around the base")]
    MixedSphere(Vec<usize>),

    #[error("search budget of {limit} nodes exhausted")]
    BudgetExceeded { limit: u64 },

    #[error("the complex is disconnected")]
    Disconnected,

    #[error("found a clique of size {size}, above the configured bound {bound}")]
    CliqueBound { size: usize, bound: usize },

    #[error("precondition `{condition}` does not hold")]
    Precondition {
        condition: String,
        verdict: Option<Box<Verdict>>,
    },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("subcomplex is not full")]
    NotFull,

    #[error("empty subcomplex")]
    EmptySubcomplex,

    #[error("cell complex is not simple: {0}")]
    NonSimple(String),

    #[error("nerve is not flag: clique {0:?} is not a declared simplex")]
    NerveNotFlag(Vec<usize>),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown corpus generator `{0}`")]
    UnknownGenerator(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn precondition(condition: impl Into<String>, verdict: Verdict) -> Self {
        Error::Precondition {
            condition: condition.into(),
            verdict: Some(Box::new(verdict)),
        }
    }

    /// True for errors that mean "ran out of budget" rather than a definite answer.
    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
