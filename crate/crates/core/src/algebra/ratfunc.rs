use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::ratpoly::RatPoly;
use crate::error::AlgebraError;

/// A reduced quotient of univariate polynomials in `q` over the rationals.
///
/// The denominator is monic and coprime to the numerator; zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunctionQ {
    num: RatPoly,
    den: RatPoly,
}

impl RationalFunctionQ {
    pub fn new(num: RatPoly, den: RatPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(RatPoly::zero()));
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let lc = den.leading().unwrap().recip();
        Ok(RationalFunctionQ {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn from_poly(p: RatPoly) -> Self {
        RationalFunctionQ {
            num: p,
            den: RatPoly::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(RatPoly::constant(c))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_poly(RatPoly::x())
    }

    pub fn numerator(&self) -> &RatPoly {
        &self.num
    }

    pub fn denominator(&self) -> &RatPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The numerator, when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&RatPoly> {
        (self.den == RatPoly::one()).then_some(&self.num)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("product of nonzero denominators")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunctionQ {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::new(self.den.clone(), self.num.clone()).expect("numerator is nonzero"))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::from_poly(RatPoly::zero());
        }
        RationalFunctionQ {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
}

impl Default for RationalFunctionQ {
    fn default() -> Self {
        Self::from_poly(RatPoly::zero())
    }
}

impl fmt::Display for RationalFunctionQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_polynomial() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({}) / ({})", self.num, self.den),
        }
    }
}
