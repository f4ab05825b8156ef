//! Truncated formal power series in `x` over an exact coefficient field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use serde_json::json;

use super::bipoly::BivariatePolynomial;
use super::format_rational;
use super::ratfunc::RationalFunctionQ;
use crate::error::AlgebraError;

/// Default truncation order for series checks.
pub const DEFAULT_SERIES_ORDER: usize = 8;

/// The exact fields series coefficients can live in.
pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_rational(c: &BigRational) -> Self;
    fn to_json(&self) -> serde_json::Value;
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn from_rational(c: &BigRational) -> Self {
        c.clone()
    }
    fn to_json(&self) -> serde_json::Value {
        json!(format_rational(self))
    }
}

impl Field for RationalFunctionQ {
    fn zero() -> Self {
        RationalFunctionQ::default()
    }
    fn one() -> Self {
        RationalFunctionQ::from_rational(One::one())
    }
    fn is_zero(&self) -> bool {
        RationalFunctionQ::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        RationalFunctionQ::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        RationalFunctionQ::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        RationalFunctionQ::mul(self, rhs)
    }
    fn inv(&self) -> Option<Self> {
        RationalFunctionQ::inv(self)
    }
    fn from_rational(c: &BigRational) -> Self {
        RationalFunctionQ::from_rational(c.clone())
    }
    fn to_json(&self) -> serde_json::Value {
        let list = |p: &super::RatPoly| -> Vec<String> {
            p.coeffs().iter().map(format_rational).collect()
        };
        json!({ "num": list(self.numerator()), "den": list(self.denominator()) })
    }
}

/// `c_0 + c_1 x + … + c_N x^N + O(x^{N+1})`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<F: Field> {
    coeffs: Vec<F>,
}

impl<F: Field> TruncatedSeries<F> {
    /// Pads with zeros or drops terms so exactly `order + 1` coefficients remain.
    pub fn new(mut coeffs: Vec<F>, order: usize) -> Self {
        coeffs.resize(order + 1, F::zero());
        TruncatedSeries { coeffs }
    }

    pub fn constant(c: F, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(F::one(), order)
    }

    /// `a + b x`.
    pub fn linear(a: F, b: F, order: usize) -> Self {
        Self::new(vec![a, b], order)
    }

    /// `exp(c x)`, whose `k`-th coefficient is `c^k / k!`.
    pub fn exp_linear(c: &F, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = F::one();
        for k in 0..=order {
            if k > 0 {
                let inv_k = BigRational::new(BigInt::one(), BigInt::from(k));
                term = term.mul(c).mul(&F::from_rational(&inv_k));
            }
            coeffs.push(term.clone());
        }
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Result<&F, AlgebraError> {
        self.coeffs.get(k).ok_or(AlgebraError::BeyondOrder {
            index: k,
            order: self.order(),
        })
    }

    fn common_order(&self, rhs: &Self) -> usize {
        self.order().min(rhs.order())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.common_order(rhs);
        TruncatedSeries {
            coeffs: (0..=n)
                .map(|k| self.coeffs[k].add(&rhs.coeffs[k]))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.common_order(rhs);
        TruncatedSeries {
            coeffs: (0..=n)
                .map(|k| self.coeffs[k].sub(&rhs.coeffs[k]))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.common_order(rhs);
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(F::zero(), |acc, i| {
                    acc.add(&self.coeffs[i].mul(&rhs.coeffs[k - i]))
                })
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// `self / divisor`; the divisor's constant term must be invertible.
    pub fn divide(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        let n = self.common_order(divisor);
        let inv0 = divisor.coeffs[0]
            .inv()
            .ok_or(AlgebraError::NonInvertibleSeries)?;
        let mut out: Vec<F> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                acc = acc.sub(&divisor.coeffs[j].mul(&out[k - j]));
            }
            out.push(acc.mul(&inv0));
        }
        Ok(TruncatedSeries { coeffs: out })
    }
}

fn factorial(k: usize) -> BigInt {
    (2..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

impl TruncatedSeries<BigRational> {
    /// `k! · c_k`, which must be an integer.
    pub fn egf_integer(&self, k: usize) -> Result<BigInt, AlgebraError> {
        let c = self.coeff(k)? * BigRational::from_integer(factorial(k));
        if c.is_integer() {
            Ok(c.to_integer())
        } else {
            Err(AlgebraError::NotAPolynomial {
                index: k,
                value: format_rational(&c),
            })
        }
    }
}

/// `k! · c_k` as an integer polynomial in `q`. Anything else (a leftover
/// denominator, a fractional coefficient) is reported as an error.
pub fn coefficient_as_polynomial(
    s: &TruncatedSeries<RationalFunctionQ>,
    k: usize,
) -> Result<BivariatePolynomial, AlgebraError> {
    let c = s.coeff(k)?.scale(&BigRational::from_integer(factorial(k)));
    let not_poly = || AlgebraError::NotAPolynomial {
        index: k,
        value: c.to_string(),
    };
    let poly = c.as_polynomial().ok_or_else(not_poly)?;
    let ints = poly.integer_coeffs().ok_or_else(not_poly)?;
    Ok(BivariatePolynomial::from_q_coeffs(ints))
}

impl<F: Field> Serialize for TruncatedSeries<F> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for (k, c) in self.coeffs.iter().enumerate() {
            seq.serialize_element(&json!({ "k": k, "c": c.to_json() }))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RatPoly;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn exp_of_minus_x() {
        let e = TruncatedSeries::exp_linear(&rat(-1, 1), 3);
        assert_eq!(e.coeffs(), &[rat(1, 1), rat(-1, 1), rat(1, 2), rat(-1, 6)]);
    }

    #[test]
    fn derangement_series_coefficient() {
        let e = TruncatedSeries::exp_linear(&rat(-1, 1), 4);
        let den = TruncatedSeries::linear(rat(1, 1), rat(-2, 1), 4);
        let d = e.divide(&den).unwrap();
        assert_eq!(d.coeff(2).unwrap(), &rat(5, 2));
        assert_eq!(d.egf_integer(2).unwrap(), BigInt::from(5));
    }

    #[test]
    fn multiplying_by_one_is_identity() {
        let a = TruncatedSeries::new(vec![rat(3, 7), rat(-1, 2), rat(5, 1)], 4);
        assert_eq!(a.mul(&TruncatedSeries::one(4)), a);
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        let a = TruncatedSeries::one(3);
        let x = TruncatedSeries::linear(rat(0, 1), rat(1, 1), 3);
        assert_eq!(a.divide(&x), Err(AlgebraError::NonInvertibleSeries));
    }

    #[test]
    fn beyond_order_is_an_error() {
        let a = TruncatedSeries::<BigRational>::one(2);
        assert!(matches!(a.coeff(3), Err(AlgebraError::BeyondOrder { .. })));
    }

    #[test]
    fn rational_function_series() {
        // (1-q) / (1-q) = 1, so k = 0 gives the constant polynomial 1.
        let one_minus_q = RationalFunctionQ::from_poly(RatPoly::from_i64s(&[1, -1]));
        let s = TruncatedSeries::constant(one_minus_q.clone(), 3)
            .divide(&TruncatedSeries::constant(one_minus_q, 3))
            .unwrap();
        assert_eq!(
            coefficient_as_polynomial(&s, 0).unwrap(),
            BivariatePolynomial::one()
        );
        // x / (1-q) has a genuine denominator at k = 1.
        let q = RationalFunctionQ::from_poly(RatPoly::from_i64s(&[1, -1]));
        let bad = TruncatedSeries::linear(RationalFunctionQ::default(), q.inv().unwrap(), 3);
        assert!(matches!(
            coefficient_as_polynomial(&bad, 1),
            Err(AlgebraError::NotAPolynomial { index: 1, .. })
        ));
    }

    #[test]
    fn json_uses_rational_strings() {
        let e = TruncatedSeries::exp_linear(&rat(-1, 1), 2);
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"[{"c":"1/1","k":0},{"c":"-1/1","k":1},{"c":"1/2","k":2}]"#
        );
    }

    fn arb_series() -> impl Strategy<Value = TruncatedSeries<BigRational>> {
        prop::collection::vec((-9i64..9, 1i64..5), 1..6).prop_map(|cs| {
            TruncatedSeries::new(cs.into_iter().map(|(n, d)| rat(n, d)).collect(), 5)
        })
    }

    proptest! {
        #[test]
        fn divide_undoes_mul(a in arb_series(), b in arb_series()) {
            prop_assume!(!Field::is_zero(&b.coeffs()[0]));
            prop_assert_eq!(a.mul(&b).divide(&b).unwrap(), a);
        }
    }
}
