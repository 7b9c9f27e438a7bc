use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A scalar function was evaluated on one of its poles.
    #[error("{func}({x}, {y}) is singular for c = {c}")]
    DivisionByCoincidence {
        func: &'static str,
        x: String,
        y: String,
        c: String,
    },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("Z_{{{a},{b}}} is not a boundary case (need a = 0 or b = 0)")]
    NotBoundaryCase { a: usize, b: usize },
    #[error("lattice has {vertices} vertices, enumeration budget is {budget}")]
    BudgetExceeded { vertices: usize, budget: usize },
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("singular linear system")]
    SingularSystem,
    #[error("samples are inconsistent with a simple-pole decomposition")]
    InconsistentSamples,
    #[error("degenerate point: {0}")]
    DegeneratePoint(String),
    #[error("coupling constant c must be nonzero")]
    ZeroCoupling,
    #[error("sampler exhausted after {0} attempts")]
    SamplerExhausted(usize),
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
