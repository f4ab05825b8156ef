//! `d_n^{(r)} / (r^n n!)` against `e^{-1/r}` with the alternating-series
//! tail bound, in exact rational arithmetic.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::numbers::d_one_term;
use crate::algebra::format_rational;

/// Extra terms past `n` used to bracket `e^{-1/r}`.
const BRACKET_EXTRA_TERMS: usize = 30;
/// `Σ_{k ≤ 20} 1/k!` is a lower bound for `e`; using it keeps the bound conservative.
const E_TERMS: usize = 20;

fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Partial sums `S_K` and `S_{K+1}` of `Σ (-1/r)^i / i!`; since the terms
/// alternate and shrink, `e^{-1/r}` lies between them.
pub fn exp_neg_inv_bracket(r: u32, k: usize) -> (BigRational, BigRational) {
    let x = BigRational::new(-BigInt::one(), BigInt::from(r));
    let mut term = BigRational::one();
    let mut sum = BigRational::zero();
    for i in 0..=k {
        if i > 0 {
            term = term * &x / BigRational::from_integer(BigInt::from(i));
        }
        sum += &term;
    }
    let next = &sum + term * &x / BigRational::from_integer(BigInt::from(k + 1));
    if sum < next {
        (sum, next)
    } else {
        (next, sum)
    }
}

pub fn e_lower_bound() -> BigRational {
    (0..=E_TERMS)
        .map(|k| BigRational::new(BigInt::one(), factorial(k)))
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbabilityCheck {
    pub r: u32,
    pub n: usize,
    /// `d_n^{(r)} / (r^n n!)`.
    pub ratio: String,
    /// Largest distance from the ratio to either end of the bracket.
    pub worst_error: String,
    /// A lower bound for `e / (r^{n+1} (n+1)!)`.
    pub bound: String,
    pub pass: bool,
}

pub fn probability_check(r: u32, n: usize) -> ProbabilityCheck {
    let order = BigInt::from(r).pow(n as u32) * factorial(n);
    let ratio = BigRational::new(d_one_term(r, n), order);
    let (lo, hi) = exp_neg_inv_bracket(r, n + BRACKET_EXTRA_TERMS);
    let worst = {
        let a = (&ratio - &lo).abs();
        let b = (&ratio - &hi).abs();
        if a > b {
            a
        } else {
            b
        }
    };
    let bound = e_lower_bound()
        / BigRational::from_integer(BigInt::from(r).pow(n as u32 + 1) * factorial(n + 1));
    ProbabilityCheck {
        r,
        n,
        ratio: format_rational(&ratio),
        worst_error: format_rational(&worst),
        pass: worst < bound,
        bound: format_rational(&bound),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bracket_is_tight_and_ordered() {
        let (lo, hi) = exp_neg_inv_bracket(2, 10);
        assert!(lo < hi);
        // e^{-1/2} ≈ 0.60653
        assert!(lo > BigRational::new(60653.into(), 100000.into()));
        assert!(hi < BigRational::new(60654.into(), 100000.into()));
    }

    #[test]
    fn e_bound_is_below_e() {
        let e = e_lower_bound();
        assert!(e > BigRational::new(271828.into(), 100000.into()));
        assert!(e < BigRational::new(271829.into(), 100000.into()));
    }

    #[test]
    fn grid() {
        for r in 1..=5 {
            for n in 0..=8 {
                assert!(probability_check(r, n).pass, "r={r} n={n}");
            }
        }
    }
}
