use num_bigint::BigUint;
use thiserror::Error;

/// Failures constructing, parsing, or enumerating wreath-product elements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WreathError {
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("expected {expected} letters, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("value {value} at position {position} is outside 1..={size}")]
    ValueOutOfRange {
        position: usize,
        value: u32,
        size: usize,
    },
    #[error("value {value} appears more than once; letters do not form a permutation")]
    NotAPermutation { value: u32 },
    #[error("exponent {exponent} at position {position} is outside 0..{modulus}")]
    ExponentOutOfRange {
        position: usize,
        exponent: u32,
        modulus: u32,
    },
    #[error("the boundary letter 0 cannot be used here")]
    ZeroLetter,
    #[error("refusing to enumerate {cardinality} elements (bound {bound})")]
    TooLarge { cardinality: BigUint, bound: u64 },
    #[error("cannot parse letter {token:?}: {reason}")]
    Parse { token: String, reason: String },
    #[error("words share the value {value}; shuffles need disjoint alphabets")]
    OverlappingAlphabets { value: u32 },
    #[error("cannot relabel an element of size {size} into the alphabet [{alphabet}]")]
    AlphabetTooSmall { size: usize, alphabet: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("q-binomial [{m} choose {k}] needs k <= m")]
    BinomialRange { m: usize, k: usize },
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("division by zero")]
    DivisionByZero,
    #[error("series divisor has a non-invertible constant term")]
    NonInvertibleSeries,
    #[error("coefficient {index} of the series is not an integer polynomial: {value}")]
    NotAPolynomial { index: usize, value: String },
    #[error("series index {index} is beyond truncation order {order}")]
    BeyondOrder { index: usize, order: usize },
    #[error("expected a polynomial in q alone, found a t-degree {degree} term")]
    NotUnivariate { degree: u32 },
    #[error("value {value:?} is not an exact rational")]
    ParseRational { value: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountingError {
    #[error("alternating sum for ({r}, {n}) is not integral: {value}")]
    NonIntegral { r: u32, n: usize, value: String },
    #[error("the mixed binomial transform needs r >= 2; use d_formula for r = 1")]
    TransformNeedsModulusTwo,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Wreath(#[from] WreathError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("the zero polynomial has no Sturm chain")]
    ZeroPolynomial,
    #[error("polynomial is not squarefree (gcd with its derivative has degree {gcd_degree})")]
    NotSquarefree { gcd_degree: usize },
    #[error("empty interval ({lo}, {hi}]")]
    EmptyInterval { lo: String, hi: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Crate-wide error, mostly for callers that chain several modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Wreath(#[from] WreathError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Counting(#[from] CountingError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
