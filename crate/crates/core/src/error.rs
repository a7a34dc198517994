use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Grassmannian G({k},{n}): need n >= 1 and 0 <= k <= n-1")]
    InvalidContext { k: usize, n: usize },

    #[error("parts {parts:?} are not weakly decreasing")]
    NotAPartition { parts: Vec<usize> },

    #[error("partition {parts:?} does not fit in the {rows}x{cols} box")]
    OutsideBox {
        parts: Vec<usize>,
        rows: usize,
        cols: usize,
    },

    #[error("invalid Schubert symbol {indices:?} for G({k},{n}): {reason}")]
    InvalidSymbol {
        indices: Vec<usize>,
        k: usize,
        n: usize,
        reason: &'static str,
    },

    #[error("operands belong to different Grassmannians: G({0},{1}) vs G({2},{3})")]
    ContextMismatch(usize, usize, usize, usize),

    #[error("class is not homogeneous")]
    NotHomogeneous,

    #[error("degrees {left} + {right} do not sum to the dimension {dim}")]
    DegreeMismatch {
        left: usize,
        right: usize,
        dim: usize,
    },

    #[error("coefficient arithmetic overflowed")]
    Overflow,

    #[error("Schur expansion needs at least {needed} variables, got {got}")]
    InsufficientVariables { needed: usize, got: usize },

    #[error("G({k},{n}) is outside the range 1 <= k <= n-2")]
    OutsideHypothesis { k: usize, n: usize },

    #[error("codimension bound {max} exceeds twice the dimension {dim}")]
    CodimBoundTooLarge { max: usize, dim: usize },

    #[error("fast vanishing criterion and LR product disagree on {a} * {b}")]
    CriterionMismatch { a: String, b: String },

    #[error("invalid morphism query G({l},{n}) -> G({k},{n})")]
    InvalidQuery { l: usize, k: usize, n: usize },

    #[error("classification table needs n >= 3, got {0}")]
    TableTooSmall(usize),
}
