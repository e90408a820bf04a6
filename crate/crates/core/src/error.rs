use thiserror::Error;

/// Errors raised by the toolkit's operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid weight system: {0}")]
    InvalidWeights(String),

    #[error("weight systems differ: {left:?} vs {right:?}")]
    WeightMismatch { left: Vec<u32>, right: Vec<u32> },

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("monomial count {count} exceeds the cap of {cap}")]
    ResourceLimit { count: u64, cap: u64 },

    #[error("no monomials of degree {degree} for weights {weights:?}")]
    EmptyDegree { weights: Vec<u32>, degree: i64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("flop count is undefined for genus 0")]
    GenusZero,

    #[error("unsupported singularity: {0}")]
    UnsupportedSingularity(String),

    #[error("no plane-curve model: {0}")]
    InapplicableModel(String),

    #[error("class has components outside degree {expected}")]
    DegreeMismatch { expected: u32 },

    #[error("expected a {expected} model")]
    KindMismatch { expected: &'static str },

    #[error("not Calabi-Yau: c1 of the base differs from the half-branch class")]
    CyViolation,

    #[error("the c2 linear form vanishes identically")]
    DegenerateC2,

    #[error("several variables have weight {half}: {indices:?}")]
    AmbiguousInvolution { half: u32, indices: Vec<usize> },

    #[error("coefficient of z^2 vanishes; member is not general")]
    VanishingSquare,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
