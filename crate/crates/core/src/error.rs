use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system {0}")]
    UnsupportedType(String),

    #[error("expected a vector of length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("not Shi-Catalan: orbit {orbit} has a−b = {diff} ∉ {{−1,0}}")]
    NotShiCatalan { orbit: usize, diff: i64 },

    #[error("characteristic polynomial {poly} does not split into integer linear factors")]
    NonIntegralExponents { poly: String },

    #[error("arrangement is not central")]
    NotCentral,

    #[error("hyperplane {0} is not in the arrangement")]
    MissingHyperplane(String),

    #[error("hyperplane {0} is already in the arrangement")]
    DuplicateHyperplane(String),

    #[error("flat budget of {budget} exceeded at codimension {codim}")]
    FlatBudgetExceeded { codim: usize, budget: usize },

    #[error("expected rank {expected}, got rank {found}")]
    WrongRank { expected: usize, found: usize },

    #[error("flat is not contained in the hyperplane at infinity")]
    NotAtInfinity,

    #[error("derivation is not in D(A,m)")]
    NotInDerivationModule,

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("certificate failed at step {step}: {detail}")]
    Certificate { step: usize, detail: String },

    #[error("table row {row}: expected {expected}, computed {computed}")]
    TableMismatch {
        row: usize,
        expected: String,
        computed: String,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
