use thiserror::Error;

use crate::oracle::MAX_ORACLE_VERTICES;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has {n} vertices; brute force is limited to {MAX_ORACLE_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("n = {n} is below the minimum {min} for this computation")]
    TooFewVertices { n: usize, min: usize },
    #[error("power must be at least 1")]
    ZeroPower,
    #[error("exempt prefix {prefix} exceeds vertex count {n}")]
    ExemptPrefixTooLarge { prefix: usize, n: usize },
    #[error("window length {0} is below 3")]
    WindowTooShort(usize),
    #[error("expected {k} or {} seed polynomials, got {got}", k + 1)]
    SeedCount { k: usize, got: usize },
    #[error("seed f_{k} does not satisfy f_n = x * (f_(n-1) + ... + f_(n-k))")]
    SeedMismatch { k: usize },
    #[error("horizon {horizon} is below the window length {k}")]
    HorizonTooSmall { horizon: usize, k: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
