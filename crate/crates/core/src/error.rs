use thiserror::Error;

/// Errors raised by the exact-arithmetic, group and series engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic conductor must be positive")]
    ZeroConductor,
    #[error("exponent {exp} out of range for conductor {conductor}")]
    ExponentRange { exp: u32, conductor: u32 },
    #[error("division by zero")]
    DivByZero,
    #[error("denominator vanishes at t = 0")]
    PoleAtZero,
    #[error("unknown module label `{0}`")]
    LabelError(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("generators did not close within {0} elements")]
    BadGenerators(usize),
    #[error("character table incomplete: sum of squared degrees {found} != group order {order}")]
    IncompleteTable { found: u64, order: u64 },
    #[error("N is not a subgroup of G")]
    NotASubgroup,
    #[error("N is not normal in G")]
    NotNormal,
    #[error("non-integral multiplicity: {0}")]
    NonIntegralMultiplicity(String),
    #[error("not a character: {0}")]
    NonCharacter(String),
    #[error("expected an integer polynomial: {0}")]
    NonIntegral(String),
    #[error("no affine type matches: {0}")]
    Unclassified(String),
    #[error("no label bijection found: {0}")]
    NoMatching(String),
    #[error("exterior power degree {r} out of range for dimension {n}")]
    ExteriorRange { r: usize, n: usize },
    #[error("invalid group or pair: {0}")]
    InvalidSpec(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
