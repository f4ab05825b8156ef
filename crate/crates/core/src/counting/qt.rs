//! `(q, t)`-refinements by major index and sign.

use num_bigint::BigInt;
use num_traits::One;

use super::{generating_polynomial, Domain};
use crate::algebra::{q_factorial, q_integer, t_bracket, BivariatePolynomial};
use crate::error::CountingError;
use crate::stats::{maj, sgn};
use crate::wreath::OrderVariant;

fn q_power(k: usize) -> BivariatePolynomial {
    BivariatePolynomial::monomial(BigInt::one(), k as u32, 0)
}

fn choose2(i: usize) -> usize {
    i * i.saturating_sub(1) / 2
}

/// `[r]_t^n [n]_q! Σ_i (-1)^i q^{C(i,2)} / ([r]_t^i [i]_q!)`. Each summand is
/// divided exactly, so a term that fails to cancel is an error.
pub fn qt_formula(r: u32, n: usize) -> Result<BivariatePolynomial, CountingError> {
    let bracket = t_bracket(r);
    let top = &bracket.pow(n as u32) * &q_factorial(n);
    let mut sum = BivariatePolynomial::zero();
    for i in 0..=n {
        let den = &bracket.pow(i as u32) * &q_factorial(i);
        let term = (&top * &q_power(choose2(i))).div_exact(&den)?;
        sum = if i % 2 == 0 {
            &sum + &term
        } else {
            &sum - &term
        };
    }
    Ok(sum)
}

/// `d_n = ([r]_t [n]_q - q^{n-1}) d_{n-1} + q^{n-1} [r]_t [n-1]_q d_{n-2}`,
/// from `d_0 = 1`, `d_1 = [r]_t - 1`.
pub fn qt_two_term(r: u32, n: usize) -> BivariatePolynomial {
    let bracket = t_bracket(r);
    let mut prev = BivariatePolynomial::one();
    if n == 0 {
        return prev;
    }
    let mut cur = &bracket - &BivariatePolynomial::one();
    for m in 2..=n {
        let a = &(&bracket * &q_integer(m)) - &q_power(m - 1);
        let b = &(&q_power(m - 1) * &bracket) * &q_integer(m - 1);
        let next = &(&a * &cur) + &(&b * &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `d_n = [r]_t [n]_q d_{n-1} + (-1)^n q^{C(n,2)}`, from `d_0 = 1`.
pub fn qt_one_term(r: u32, n: usize) -> BivariatePolynomial {
    let bracket = t_bracket(r);
    (1..=n).fold(BivariatePolynomial::one(), |d, m| {
        let step = &(&bracket * &q_integer(m)) * &d;
        let corr = q_power(choose2(m));
        if m % 2 == 0 {
            &step + &corr
        } else {
            &step - &corr
        }
    })
}

/// `Σ q^{maj} t^{sgn}` over derangements, by enumeration in the standard order.
pub fn qt_bruteforce(r: u32, n: usize, bound: u64) -> Result<BivariatePolynomial, CountingError> {
    qt_bruteforce_with_order(r, n, OrderVariant::Standard, Domain::Derangements, bound)
}

/// Joint `(maj, sgn)` distribution over the chosen domain and order.
pub fn qt_bruteforce_with_order(
    r: u32,
    n: usize,
    order: OrderVariant,
    domain: Domain,
    bound: u64,
) -> Result<BivariatePolynomial, CountingError> {
    Ok(generating_polynomial(r, n, domain, bound, |s| {
        (maj(s, order) as u32, sgn(s) as u32)
    })?)
}

/// `[r]_t^n [n]_q!`.
pub fn group_total_qt(r: u32, n: usize) -> BivariatePolynomial {
    &t_bracket(r).pow(n as u32) * &q_factorial(n)
}

pub fn group_total_qt_bruteforce(
    r: u32,
    n: usize,
    bound: u64,
) -> Result<BivariatePolynomial, CountingError> {
    qt_bruteforce_with_order(r, n, OrderVariant::Standard, Domain::Group, bound)
}

/// `Σ q^{maj}` over ordinary derangements of `S_n`, by enumeration.
pub fn gessel_q_derangement(n: usize, bound: u64) -> Result<BivariatePolynomial, CountingError> {
    Ok(generating_polynomial(
        1,
        n,
        Domain::Derangements,
        bound,
        |s| (maj(s, OrderVariant::Standard) as u32, 0),
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wreath::DEFAULT_ENUMERATION_BOUND as B;

    fn p(s: &[((u32, u32), i64)]) -> BivariatePolynomial {
        BivariatePolynomial::from_terms(s.iter().map(|&(k, c)| (k, BigInt::from(c))))
    }

    #[test]
    fn two_by_two() {
        let expected = p(&[
            ((1, 0), 1),
            ((0, 1), 1),
            ((1, 1), 1),
            ((0, 2), 1),
            ((1, 2), 1),
        ]);
        assert_eq!(qt_formula(2, 2).unwrap(), expected);
        assert_eq!(qt_two_term(2, 2), expected);
        assert_eq!(qt_one_term(2, 2), expected);
        assert_eq!(qt_bruteforce(2, 2, B).unwrap(), expected);
    }

    #[test]
    fn small_cases() {
        for r in 1..5 {
            assert_eq!(qt_formula(r, 0).unwrap(), BivariatePolynomial::one());
            assert_eq!(qt_one_term(r, 0), BivariatePolynomial::one());
            let t_run = BivariatePolynomial::from_terms((1..r).map(|j| ((0, j), BigInt::one())));
            assert_eq!(qt_two_term(r, 1), t_run);
        }
        assert_eq!(qt_two_term(1, 2), BivariatePolynomial::q());
        assert_eq!(qt_one_term(1, 2), BivariatePolynomial::q());
    }

    #[test]
    fn group_totals() {
        assert_eq!(group_total_qt(1, 3), q_factorial(3));
        assert_eq!(group_total_qt(2, 1), p(&[((0, 0), 1), ((0, 1), 1)]));
        assert_eq!(group_total_qt(3, 0), BivariatePolynomial::one());
        for (r, n) in [(1, 4), (2, 3), (3, 3)] {
            assert_eq!(
                group_total_qt_bruteforce(r, n, B).unwrap(),
                group_total_qt(r, n)
            );
        }
    }

    #[test]
    fn routes_agree() {
        for r in 1..=3 {
            for n in 0..=4 {
                let f = qt_formula(r, n).unwrap();
                assert_eq!(qt_two_term(r, n), f, "r={r} n={n}");
                assert_eq!(qt_one_term(r, n), f, "r={r} n={n}");
                assert_eq!(qt_bruteforce(r, n, B).unwrap(), f, "r={r} n={n}");
            }
        }
    }

    #[test]
    fn gessel_specialisation() {
        for n in 0..=6 {
            assert_eq!(
                gessel_q_derangement(n, B).unwrap(),
                qt_formula(1, n).unwrap().at_t_one()
            );
        }
    }
}
