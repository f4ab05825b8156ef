//! Cyclic derangements in the wreath product `C_r ≀ S_n`: enumeration,
//! permutation statistics, exact counting by several independent routes,
//! `q`- and `(q, t)`-refinements, generating functions, and exact real-root
//! analysis of the excedance derangement polynomials.

pub mod algebra;
pub mod analysis;
pub mod counting;
pub mod error;
pub mod lemmas;
pub mod stats;
pub mod verify;
pub mod wreath;

pub use algebra::{BivariatePolynomial, RatPoly, RationalFunctionQ, TruncatedSeries};
pub use error::{AlgebraError, AnalysisError, CountingError, Error, Result, WreathError};
pub use stats::{DescentSet, StatRecord};
pub use wreath::{CyclicPermutation, OrderVariant, SignedLetter, Word, DEFAULT_ENUMERATION_BOUND};
