//! Eulerian polynomials by descents and by weak excedances, and the
//! excedance-refined derangement polynomials `D_n(q)`.

use num_bigint::BigInt;

use super::numbers::binomial;
use super::{generating_polynomial, Domain};
use crate::algebra::BivariatePolynomial;
use crate::error::CountingError;
use crate::stats::{des, weak_excedance_count};
use crate::wreath::OrderVariant;

/// `A_n(q) = Σ q^{n - des}` over the group, standard order.
pub fn eulerian_poly(r: u32, n: usize, bound: u64) -> Result<BivariatePolynomial, CountingError> {
    Ok(generating_polynomial(r, n, Domain::Group, bound, |s| {
        ((n - des(s, OrderVariant::Standard)) as u32, 0)
    })?)
}

/// `A_n(q) = Σ q^{exc}` over the group.
pub fn eulerian_poly_by_excedances(
    r: u32,
    n: usize,
    bound: u64,
) -> Result<BivariatePolynomial, CountingError> {
    Ok(generating_polynomial(r, n, Domain::Group, bound, |s| {
        (weak_excedance_count(s) as u32, 0)
    })?)
}

/// `Σ q^{des}` over the group, i.e. `q^n A_n(1/q)`.
pub fn descent_generating_poly(
    r: u32,
    n: usize,
    bound: u64,
) -> Result<BivariatePolynomial, CountingError> {
    Ok(generating_polynomial(r, n, Domain::Group, bound, |s| {
        (des(s, OrderVariant::Standard) as u32, 0)
    })?)
}

/// `D_0, …, D_N` from
/// `D_n = (n-1) r q (D_{n-1} + D_{n-2}) + (r-1) D_{n-1} + r q (1-q) D'_{n-1}`
/// with `D_0 = 1`, `D_1 = r - 1`.
pub fn exc_derangement_table(r: u32, max_size: usize) -> Vec<BivariatePolynomial> {
    let r_big = BigInt::from(r);
    let rq = BivariatePolynomial::monomial(r_big.clone(), 1, 0);
    let one_minus_q = &BivariatePolynomial::one() - &BivariatePolynomial::q();
    let mut table = vec![
        BivariatePolynomial::one(),
        BivariatePolynomial::constant(r_big.clone() - 1),
    ];
    for n in 2..=max_size {
        let (a, b) = (&table[n - 1], &table[n - 2]);
        let next = &(&(&rq.scale(&BigInt::from(n - 1)) * &(a + b))
            + &a.scale(&(r_big.clone() - 1)))
            + &(&(&rq * &one_minus_q) * &a.derivative_q());
        table.push(next);
    }
    table.truncate(max_size + 1);
    table
}

/// `D_n(q) = Σ q^{exc}` over derangements, by the recurrence.
pub fn exc_derangement_poly(r: u32, n: usize) -> BivariatePolynomial {
    exc_derangement_table(r, n).pop().unwrap()
}

pub fn exc_derangement_bruteforce(
    r: u32,
    n: usize,
    bound: u64,
) -> Result<BivariatePolynomial, CountingError> {
    Ok(generating_polynomial(
        r,
        n,
        Domain::Derangements,
        bound,
        |s| (weak_excedance_count(s) as u32, 0),
    )?)
}

/// `A_n(q) = Σ_k C(n, k) q^k D_{n-k}(q)`, using the recurrence for `D`.
pub fn eulerian_from_exc(r: u32, n: usize) -> BivariatePolynomial {
    let d = exc_derangement_table(r, n);
    (0..=n)
        .map(|k| d[n - k].shift(k as u32, 0).scale(&binomial(n, k)))
        .sum()
}
