//! Sparse polynomials in `q` and `t` with arbitrary-precision integer
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ratpoly::RatPoly;
use crate::error::AlgebraError;

/// Map from `(q-degree, t-degree)` to a nonzero coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigInt, q_deg: u32, t_deg: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(q_deg, t_deg, c);
        p
    }

    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// `c_0 + c_1 q + c_2 q^2 + …`
    pub fn from_q_coeffs<I: IntoIterator<Item = BigInt>>(coeffs: I) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            p.add_term(i as u32, 0, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), BigInt)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for ((a, b), c) in terms {
            p.add_term(a, b, c);
        }
        p
    }

    pub fn add_term(&mut self, q_deg: u32, t_deg: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((q_deg, t_deg))
            .or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(q_deg, t_deg));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, q_deg: u32, t_deg: u32) -> BigInt {
        self.terms
            .get(&(q_deg, t_deg))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending `(q, t)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn min_q_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).min()
    }

    pub fn is_univariate_q(&self) -> bool {
        self.terms.keys().all(|k| k.1 == 0)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, v)| (k, v * c)))
    }

    /// Multiplies by `q^a t^b`.
    pub fn shift(&self, q_deg: u32, t_deg: u32) -> Self {
        BivariatePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), v)| ((a + q_deg, b + t_deg), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Partial derivative in `q`.
    pub fn derivative_q(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(k, _)| k.0 > 0)
                .map(|(&(a, b), v)| ((a - 1, b), v * BigInt::from(a))),
        )
    }

    pub fn evaluate(&self, q: &BigRational, t: &BigRational) -> BigRational {
        self.terms
            .iter()
            .fold(BigRational::zero(), |acc, (&(a, b), c)| {
                acc + BigRational::from_integer(c.clone()) * q.pow(a as i32) * t.pow(b as i32)
            })
    }

    /// The polynomial in `q` obtained by setting `t = 1`.
    pub fn at_t_one(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(a, _), c)| ((a, 0), c.clone())))
    }

    /// Sum of all coefficients, i.e. the value at `q = t = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Tests `q^n · p(1/q, t) = p(q, t)`.
    pub fn reciprocal_check(&self, n: u32) -> bool {
        self.terms
            .iter()
            .all(|(&(a, b), c)| a <= n && self.terms.get(&(n - a, b)) == Some(c))
    }

    /// `q^n · p(1/q, t)`; `None` if some q-degree exceeds `n`.
    pub fn reverse_q(&self, n: u32) -> Option<Self> {
        if self.q_degree().is_some_and(|d| d > n) {
            return None;
        }
        Some(Self::from_terms(
            self.terms
                .iter()
                .map(|(&(a, b), c)| ((n - a, b), c.clone())),
        ))
    }

    /// Symmetric coefficient sequence between the lowest and highest q-degree.
    pub fn is_palindromic(&self) -> bool {
        match (self.min_q_degree(), self.q_degree()) {
            (Some(lo), Some(hi)) => self.reciprocal_check(lo + hi),
            _ => true,
        }
    }

    /// Coefficients `[c_0, …, c_d]` of a polynomial in `q` alone.
    pub fn q_coefficients(&self) -> Result<Vec<BigInt>, AlgebraError> {
        if let Some(&(_, b)) = self.terms.keys().find(|k| k.1 != 0) {
            return Err(AlgebraError::NotUnivariate { degree: b });
        }
        let Some(d) = self.q_degree() else {
            return Ok(Vec::new());
        };
        Ok((0..=d).map(|i| self.coeff(i, 0)).collect())
    }

    pub fn to_rat_poly(&self) -> Result<RatPoly, AlgebraError> {
        Ok(RatPoly::from_integers(self.q_coefficients()?))
    }

    fn leading(&self) -> Option<((u32, u32), &BigInt)> {
        self.terms.iter().next_back().map(|(&k, v)| (k, v))
    }

    /// Exact quotient `self / divisor`, by division on lex-leading terms.
    /// Fails if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, AlgebraError> {
        let ((dq, dt), dc) = divisor.leading().ok_or(AlgebraError::DivisionByZero)?;
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(((rq, rt), rc)) = rem.leading() {
            if rq < dq || rt < dt {
                return Err(AlgebraError::InexactDivision);
            }
            let (c, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return Err(AlgebraError::InexactDivision);
            }
            let step = Self::monomial(c, rq - dq, rt - dt);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Ok(quot)
    }
}

impl fmt::Display for BivariatePolynomial {
    /// Terms by descending total degree, then descending q-degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by_key(|&&(a, b)| std::cmp::Reverse((a + b, a)));
        for (i, &&(a, b)) in keys.iter().enumerate() {
            let c = &self.terms[&(a, b)];
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                factors.push(mag.to_string());
            }
            for (var, d) in [("q", a), ("t", b)] {
                match d {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{d}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    q: u32,
    t: u32,
    c: String,
}

impl Serialize for BivariatePolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(&(q, t), c)| TermJson {
                q,
                t,
                c: c.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BivariatePolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(d)?;
        let mut p = Self::zero();
        for t in terms {
            let c: BigInt = t.c.parse().map_err(serde::de::Error::custom)?;
            p.add_term(t.q, t.t, c);
        }
        Ok(p)
    }
}

impl Add<&BivariatePolynomial> for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Sub<&BivariatePolynomial> for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, -c);
        }
        out
    }
}

impl Mul<&BivariatePolynomial> for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(&k, v)| (k, -v)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<BivariatePolynomial> for BivariatePolynomial {
            type Output = BivariatePolynomial;
            fn $m(self, rhs: BivariatePolynomial) -> BivariatePolynomial { (&self).$m(&rhs) }
        }
        impl $tr<&BivariatePolynomial> for BivariatePolynomial {
            type Output = BivariatePolynomial;
            fn $m(self, rhs: &BivariatePolynomial) -> BivariatePolynomial { (&self).$m(rhs) }
        }
        impl $tr<BivariatePolynomial> for &BivariatePolynomial {
            type Output = BivariatePolynomial;
            fn $m(self, rhs: BivariatePolynomial) -> BivariatePolynomial { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        -&self
    }
}

impl std::iter::Sum for BivariatePolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

impl From<i64> for BivariatePolynomial {
    fn from(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qpoly(c: &[i64]) -> BivariatePolynomial {
        BivariatePolynomial::from_q_coeffs(c.iter().map(|&x| BigInt::from(x)))
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = &BivariatePolynomial::q() - &BivariatePolynomial::q();
        assert!(p.is_zero());
        assert_eq!(p, BivariatePolynomial::zero());
    }

    #[test]
    fn reciprocal_examples() {
        assert!(qpoly(&[1, 1]).reciprocal_check(1));
        assert!(!qpoly(&[2, 1]).reciprocal_check(1));
        assert!(qpoly(&[0, 1, 1]).is_palindromic());
        assert!(!qpoly(&[0, 1, 1]).reciprocal_check(2));
    }

    #[test]
    fn derivative_example() {
        let q2 = BivariatePolynomial::monomial(BigInt::one(), 2, 0);
        assert_eq!(q2.derivative_q(), qpoly(&[0, 2]));
    }

    #[test]
    fn exact_division() {
        let a = qpoly(&[1, 1]);
        let b = &(&a + &BivariatePolynomial::t()) * &a;
        assert_eq!(b.div_exact(&a).unwrap(), &a + &BivariatePolynomial::t());
        assert_eq!(
            qpoly(&[1, 0, 1]).div_exact(&a),
            Err(AlgebraError::InexactDivision)
        );
        assert_eq!(
            a.div_exact(&BivariatePolynomial::zero()),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn json_is_sorted_by_q_then_t() {
        let p = BivariatePolynomial::from_terms([
            ((0, 1), BigInt::from(1)),
            ((1, 0), BigInt::from(-3)),
            ((0, 0), BigInt::from(2)),
        ]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"[{"q":0,"t":0,"c":"2"},{"q":0,"t":1,"c":"1"},{"q":1,"t":0,"c":"-3"}]"#
        );
        let back: BivariatePolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn display() {
        let p = BivariatePolynomial::from_terms([
            ((1, 0), BigInt::from(1)),
            ((0, 1), BigInt::from(1)),
            ((1, 1), BigInt::from(1)),
            ((0, 2), BigInt::from(1)),
            ((1, 2), BigInt::from(1)),
        ]);
        assert_eq!(p.to_string(), "q*t^2 + q*t + t^2 + q + t");
        assert_eq!(qpoly(&[1, 20, 8]).to_string(), "8*q^2 + 20*q + 1");
        assert_eq!(qpoly(&[-1]).to_string(), "-1");
    }

    fn arb_poly() -> impl Strategy<Value = BivariatePolynomial> {
        prop::collection::vec(((0u32..4, 0u32..4), -20i64..20), 0..6).prop_map(|ts| {
            BivariatePolynomial::from_terms(ts.into_iter().map(|(k, c)| (k, BigInt::from(c))))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }

        #[test]
        fn evaluation_is_a_ring_map(a in arb_poly(), b in arb_poly(), x in -5i64..5, y in -5i64..5) {
            let (x, y) = (BigRational::from_integer(x.into()), BigRational::from_integer(y.into()));
            prop_assert_eq!((&a * &b).evaluate(&x, &y), a.evaluate(&x, &y) * b.evaluate(&x, &y));
        }
    }
}
