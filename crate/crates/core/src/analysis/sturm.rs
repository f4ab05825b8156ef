use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{format_rational, RatPoly};
use crate::error::AnalysisError;

/// An end of a real interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-inf"),
            Bound::Finite(x) => f.write_str(&format_rational(x)),
            Bound::PosInf => f.write_str("+inf"),
        }
    }
}

impl From<BigRational> for Bound {
    fn from(x: BigRational) -> Self {
        Bound::Finite(x)
    }
}

/// Positive multiple of `p` with coprime integer coefficients. Signs, and so
/// sign variations, are unchanged; the coefficients stay small.
fn primitive(p: &RatPoly) -> RatPoly {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return p.clone();
    }
    RatPoly::from_integers(ints.into_iter().map(|c| c / &g))
}

/// `p, p', -rem(p, p'), …` down to a nonzero constant.
///
/// Only squarefree polynomials are accepted, so the last entry is constant
/// and every real root of `p` is simple. Each entry is stored as a positive
/// multiple of itself with coprime integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<RatPoly>,
    ints: Vec<Vec<BigInt>>,
}

/// Sign of the integer polynomial `c` at `x = a/b`, from the integer
/// `b^d c(a/b) = Σ c_i a^i b^{d-i}`.
pub(crate) fn sign_of(c: &[BigInt], x: &BigRational) -> i32 {
    let (a, b) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut bpow = BigInt::one();
    for (i, ci) in c.iter().enumerate().rev() {
        if i + 1 == c.len() {
            acc = ci.clone();
        } else {
            bpow *= b;
            acc = acc * a + ci * &bpow;
        }
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

impl SturmChain {
    pub fn new(p: &RatPoly) -> Result<Self, AnalysisError> {
        if p.is_zero() {
            return Err(AnalysisError::ZeroPolynomial);
        }
        let dp = p.derivative();
        let g = p.gcd(&dp);
        if !dp.is_zero() && !g.is_constant() {
            return Err(AnalysisError::NotSquarefree {
                gcd_degree: g.degree().unwrap_or(0),
            });
        }
        let mut chain = vec![primitive(p)];
        if !dp.is_zero() {
            chain.push(primitive(&dp));
        }
        while chain.len() >= 2 {
            let k = chain.len();
            let (_, rem) = chain[k - 2].div_rem(&chain[k - 1])?;
            if rem.is_zero() {
                break;
            }
            chain.push(primitive(&-rem));
        }
        let ints = chain
            .iter()
            .map(|p| p.integer_coeffs().expect("entries are primitive"))
            .collect();
        Ok(SturmChain { chain, ints })
    }

    pub fn polynomials(&self) -> &[RatPoly] {
        &self.chain
    }

    pub fn polynomial(&self) -> &RatPoly {
        &self.chain[0]
    }

    /// Sign of the polynomial itself at `x`.
    pub fn sign_at_point(&self, x: &BigRational) -> i32 {
        sign_of(&self.ints[0], x)
    }

    fn sign_at(&self, k: usize, x: &Bound) -> i32 {
        let p = &self.chain[k];
        let s = match x {
            Bound::Finite(v) => return sign_of(&self.ints[k], v),
            Bound::PosInf => 1,
            Bound::NegInf if p.degree().unwrap_or(0).is_multiple_of(2) => 1,
            Bound::NegInf => -1,
        };
        if p.leading().is_some_and(Signed::is_negative) {
            -s
        } else {
            s
        }
    }

    /// Sign changes along the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &Bound) -> usize {
        let mut last = 0;
        let mut count = 0;
        for k in 0..self.chain.len() {
            let s = self.sign_at(k, x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    pub fn count_roots(&self, lo: &Bound, hi: &Bound) -> Result<usize, AnalysisError> {
        let ordered = match (lo, hi) {
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
            (Bound::PosInf, _) | (_, Bound::NegInf) => false,
            _ => true,
        };
        if !ordered {
            return Err(AnalysisError::EmptyInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(self.variations(lo) - self.variations(hi))
    }

    /// Roots in the open interval `(a, b)` with finite ends.
    pub fn count_open(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b {
            return 0;
        }
        let half_open =
            self.variations(&Bound::Finite(a.clone())) - self.variations(&Bound::Finite(b.clone()));
        half_open - usize::from(self.sign_at_point(b) == 0)
    }

    pub fn count_real_roots(&self) -> usize {
        self.variations(&Bound::NegInf) - self.variations(&Bound::PosInf)
    }
}

pub fn sturm_chain(p: &RatPoly) -> Result<SturmChain, AnalysisError> {
    SturmChain::new(p)
}

/// Real roots of `p` in `(lo, hi]`.
pub fn count_roots(p: &RatPoly, lo: &Bound, hi: &Bound) -> Result<usize, AnalysisError> {
    SturmChain::new(p)?.count_roots(lo, hi)
}
