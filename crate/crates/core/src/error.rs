use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error("denominator of {value} is divisible by {p}")]
    NonInvertibleDenominator { value: String, p: u64 },
    #[error("cofactor {0} has a prime factor above the bound")]
    NotSmooth(String),
    #[error("expected a positive even index, got {0}")]
    BadIndex(i64),
    #[error("series domains differ: {0} vs {1}")]
    DomainMismatch(String, String),
    #[error("constant term {0} is not a unit")]
    NonUnitConstantTerm(String),
    #[error("inner series has nonzero constant term")]
    NonzeroConstantInner,
    #[error("series is not reversible (needs c0 = 0 and c1 a unit)")]
    NotReversible,
    #[error("constant term must be 1")]
    ConstantTermNotOne,
    #[error("bad constant term for {0}")]
    BadConstantTerm(&'static str),
    #[error("{0} is not invertible in the coefficient domain")]
    NotInvertible(String),
    #[error("degree {degree} exceeds {bound}")]
    DegreeExceeded { degree: usize, bound: usize },
    #[error("linear system is inconsistent")]
    Inconsistent,
    #[error("linear system has a {0}-dimensional solution space")]
    Underdetermined(usize),
    #[error("malformed series text: {0}")]
    Parse(String),
    #[error("lower parameter {0} is a nonpositive integer")]
    BadLowerParameter(String),
    #[error("there is no quasimodular form of weight 4 and depth 1")]
    WeightFour,
    #[error("weight {0} is odd or negative")]
    OddWeight(i64),
    #[error("QM_{weight}^({depth}) is zero")]
    EmptySpace { weight: i64, depth: u32 },
    #[error("extremal form of weight {weight} and depth {depth} is not determined at this truncation")]
    NonUnique { weight: i64, depth: u32 },
    #[error("Hermite-Pade system for (m, a) = ({m}, {a}) is singular")]
    SingularSystem { m: u32, a: u32 },
    #[error("family index a = {0} is not one of 0, 2, 6, 8")]
    BadFamily(u32),
    #[error("generalized Atkin extraction failed: {0}")]
    ExtractionFailed(String),
    #[error("Moebius inversion produced the non-integer exponent {value} at n = {n}")]
    NonIntegralExponent { n: usize, value: String },
    #[error("check failed at coefficient {0}")]
    CheckFailed(usize),
    #[error("no multiplier data for modulus {0}")]
    UnsupportedModulus(String),
    #[error("derived multiplier for {0} differs from the tabulated one")]
    DerivationMismatch(String),
    #[error("weight {0} is not handled by the depth-1 families")]
    UnsupportedWeight(i64),
    #[error("truncation too short: need {needed}, have {have}")]
    TruncationTooShort { needed: usize, have: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
