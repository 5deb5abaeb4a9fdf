use thiserror::Error;

/// Errors raised while building environments, graphs, policies and runs.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("environment needs at least one arm and {expected} means, got {got}")]
    ArmCount { expected: usize, got: usize },
    #[error("mean reward range {range} exceeds 1")]
    GapTooLarge { range: f64 },
    #[error("Bernoulli mean {mean} of arm {arm} is outside [0, 1]")]
    BadSupport { arm: usize, mean: f64 },
    #[error("mean of arm {arm} is not finite")]
    NonFiniteMean { arm: usize },
    #[error("arm index {arm} out of range for {k} arms")]
    ArmOutOfRange { arm: usize, k: usize },

    #[error("cost matrix must be square and non-empty")]
    NotSquare,
    #[error("cost matrix is asymmetric at ({i}, {j})")]
    Asymmetric { i: usize, j: usize },
    #[error("negative or NaN cost at ({i}, {j})")]
    NegativeCost { i: usize, j: usize },
    #[error("diagonal cost at ({i}, {i}) is not zero")]
    NonzeroDiagonal { i: usize },
    #[error("switching graph violates the triangle inequality")]
    NotMetric,
    #[error("exact Hamiltonian path solver is capped at {cap} arms, got {k}")]
    TooLarge { k: usize, cap: usize },
    #[error("no Hamiltonian path avoids infinite switching costs")]
    NoFinitePath,
    #[error("budget indices are undefined for a single-arm graph")]
    DegenerateGraph,

    #[error("horizon {horizon} is smaller than the number of arms {k}")]
    HorizonTooSmall { horizon: u64, k: usize },
    #[error("switching budget must be a non-negative number, got {0}")]
    BadBudget(f64),
    #[error("an expansion path needs {needed} rounds but a block may only have {available}")]
    PathTooLong { needed: u64, available: u64 },
    #[error("path expansion requires k*k <= T (k = {k}, T = {horizon})")]
    ExpansionGuard { k: usize, horizon: u64 },
    #[error("policy variant {0} needs a switching graph")]
    MissingGraph(&'static str),
    #[error("hamiltonian path does not match the graph: {0}")]
    BadPath(String),

    #[error("hard instances need k >= 2 and T >= 2k (k = {k}, T = {horizon})")]
    HardInstancePrecondition { k: usize, horizon: u64 },
    #[error("invalid hard-instance case: {0}")]
    BadCase(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
