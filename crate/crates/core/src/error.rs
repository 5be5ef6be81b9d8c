use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex label `{0}`")]
    UnknownLabel(String),
    #[error("vertex `{0}` does not occur in any facet")]
    UnusedVertex(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("graph has a loop at `{0}`")]
    Loop(String),
    #[error("vertex tables differ between a complex and its subcomplex")]
    VertexTableMismatch,
    #[error("facet {0} of the subcomplex is not a simplex of the ambient complex")]
    NotASubcomplex(String),
    #[error("facet order is not a permutation of 0..{facets}")]
    NotAPermutation { facets: usize },
    #[error("family has {pairs} pairs but M has {vertices} vertices")]
    FamilyArity { pairs: usize, vertices: usize },
    #[error("{what} exceeds budget of {limit}")]
    BudgetExceeded { what: &'static str, limit: u64 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(&'static str),
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("internal defect: {0}")]
    Defect(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn budget(what: &'static str, limit: impl TryInto<u64>) -> Self {
        Error::BudgetExceeded { what, limit: limit.try_into().unwrap_or(u64::MAX) }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
