//! q-integers, q-factorials, Gaussian binomials and the t-bracket `[r]_t`.

use num_bigint::BigInt;
use num_traits::One;

use super::bipoly::BivariatePolynomial;
use crate::error::AlgebraError;

/// `[i]_q = 1 + q + … + q^{i-1}`; `[0]_q = 0`.
pub fn q_integer(i: usize) -> BivariatePolynomial {
    BivariatePolynomial::from_q_coeffs(std::iter::repeat_n(BigInt::one(), i))
}

/// `[r]_t = 1 + t + … + t^{r-1}`.
pub fn t_bracket(r: u32) -> BivariatePolynomial {
    BivariatePolynomial::from_terms((0..r).map(|j| ((0, j), BigInt::one())))
}

/// `[n]_q! = [n]_q [n-1]_q ⋯ [1]_q`, with `[0]_q! = 1`.
pub fn q_factorial(n: usize) -> BivariatePolynomial {
    (1..=n).fold(BivariatePolynomial::one(), |acc, i| &acc * &q_integer(i))
}

/// Gaussian binomial `[m choose k]_q` by the Pascal-type recurrence
/// `[m, k] = [m-1, k-1] + q^k [m-1, k]`, which never divides.
pub fn q_binomial(m: usize, k: usize) -> Result<BivariatePolynomial, AlgebraError> {
    if k > m {
        return Err(AlgebraError::BinomialRange { m, k });
    }
    // row[j] holds [i choose j] for the current i.
    let mut row = vec![BivariatePolynomial::one()];
    for i in 1..=m {
        let mut next = Vec::with_capacity(i + 1);
        for j in 0..=i {
            let left = if j > 0 {
                row[j - 1].clone()
            } else {
                BivariatePolynomial::zero()
            };
            let right = if j < i {
                row[j].shift(j as u32, 0)
            } else {
                BivariatePolynomial::zero()
            };
            next.push(&left + &right);
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

/// `[m]_q! / ([k]_q! [m-k]_q!)` by exact polynomial division.
pub fn q_binomial_by_division(m: usize, k: usize) -> Result<BivariatePolynomial, AlgebraError> {
    if k > m {
        return Err(AlgebraError::BinomialRange { m, k });
    }
    q_factorial(m).div_exact(&(&q_factorial(k) * &q_factorial(m - k)))
}
