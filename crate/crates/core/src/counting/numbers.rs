use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CountingError, WreathError};
use crate::wreath::partition_group;

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| {
        acc * BigInt::from(n - i) / BigInt::from(i + 1)
    })
}

fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `d_n^{(r)} = r^n n! Σ_{i=0}^{n} (-1)^i / (r^i i!)`, summed over the
/// rationals and then required to be an integer.
pub fn d_formula(r: u32, n: usize) -> Result<BigInt, CountingError> {
    if r == 0 {
        return Err(WreathError::ZeroModulus.into());
    }
    let r_big = BigInt::from(r);
    let mut sum = BigRational::zero();
    for i in 0..=n {
        let term = BigRational::new(BigInt::one(), r_big.pow(i as u32) * factorial(i));
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let total = sum * BigRational::from_integer(r_big.pow(n as u32) * factorial(n));
    if total.is_integer() {
        Ok(total.to_integer())
    } else {
        Err(CountingError::NonIntegral {
            r,
            n,
            value: total.to_string(),
        })
    }
}

/// `d_n = (rn - 1) d_{n-1} + r(n-1) d_{n-2}`, `d_0 = 1`, `d_1 = r - 1`.
pub fn d_two_term(r: u32, n: usize) -> BigInt {
    CountTable::two_term(r, n).values.pop().unwrap()
}

/// `d_n = rn d_{n-1} + (-1)^n`, `d_0 = 1`.
pub fn d_one_term(r: u32, n: usize) -> BigInt {
    CountTable::one_term(r, n).values.pop().unwrap()
}

/// `d_n^{(r)} = Σ_i C(n, i) r^i (r-1)^{n-i} d_i`, where `d_i` counts plain
/// derangements. Only meaningful for `r >= 2`.
pub fn d_mixed_transform(r: u32, n: usize) -> Result<BigInt, CountingError> {
    if r < 2 {
        return Err(CountingError::TransformNeedsModulusTwo);
    }
    let plain = CountTable::one_term(1, n).values;
    let (r, s) = (BigInt::from(r), BigInt::from(r - 1));
    Ok((0..=n)
        .map(|i| binomial(n, i) * r.pow(i as u32) * s.pow((n - i) as u32) * &plain[i])
        .sum())
}

/// Counts fixed-point-free elements by enumeration.
pub fn d_bruteforce(r: u32, n: usize, bound: u64) -> Result<BigInt, CountingError> {
    let chunks = partition_group(r, n, bound)?;
    let count: u64 = chunks
        .into_par_iter()
        .map(|c| c.filter(|s| s.is_derangement()).count() as u64)
        .sum();
    Ok(BigInt::from(count))
}

/// Elements with exactly `k` fixed points: `C(n, k) d_{n-k}^{(r)}`.
pub fn fixed_point_count(r: u32, n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    binomial(n, k) * d_one_term(r, n - k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountMethod {
    Formula,
    TwoTerm,
    OneTerm,
    Transform,
    BruteForce,
}

impl CountMethod {
    pub const ALL: [CountMethod; 5] = [
        CountMethod::Formula,
        CountMethod::TwoTerm,
        CountMethod::OneTerm,
        CountMethod::Transform,
        CountMethod::BruteForce,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CountMethod::Formula => "formula",
            CountMethod::TwoTerm => "two-term",
            CountMethod::OneTerm => "one-term",
            CountMethod::Transform => "transform",
            CountMethod::BruteForce => "brute-force",
        }
    }

    /// `d_n^{(r)}` by this route.
    pub fn count(self, r: u32, n: usize, bound: u64) -> Result<BigInt, CountingError> {
        if r == 0 {
            return Err(WreathError::ZeroModulus.into());
        }
        match self {
            CountMethod::Formula => d_formula(r, n),
            CountMethod::TwoTerm => Ok(d_two_term(r, n)),
            CountMethod::OneTerm => Ok(d_one_term(r, n)),
            CountMethod::Transform => d_mixed_transform(r, n),
            CountMethod::BruteForce => d_bruteforce(r, n, bound),
        }
    }
}

impl std::str::FromStr for CountMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CountMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

/// `d_0^{(r)}, …, d_N^{(r)}` computed by one method.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub modulus: u32,
    pub max_size: usize,
    pub values: Vec<BigInt>,
    pub method: CountMethod,
}

impl CountTable {
    pub fn two_term(r: u32, max_size: usize) -> Self {
        let r_big = BigInt::from(r);
        let mut values = vec![BigInt::one(), r_big.clone() - 1];
        for n in 2..=max_size {
            let n_big = BigInt::from(n);
            let next =
                (&r_big * &n_big - 1) * &values[n - 1] + &r_big * (n_big - 1) * &values[n - 2];
            values.push(next);
        }
        values.truncate(max_size + 1);
        CountTable {
            modulus: r,
            max_size,
            values,
            method: CountMethod::TwoTerm,
        }
    }

    pub fn one_term(r: u32, max_size: usize) -> Self {
        let mut values = vec![BigInt::one()];
        for n in 1..=max_size {
            let sign = if n % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            let next = BigInt::from(r) * BigInt::from(n) * &values[n - 1] + sign;
            values.push(next);
        }
        CountTable {
            modulus: r,
            max_size,
            values,
            method: CountMethod::OneTerm,
        }
    }

    pub fn build(
        method: CountMethod,
        r: u32,
        max_size: usize,
        bound: u64,
    ) -> Result<Self, CountingError> {
        match method {
            CountMethod::TwoTerm => Ok(Self::two_term(r, max_size)),
            CountMethod::OneTerm => Ok(Self::one_term(r, max_size)),
            _ => Ok(CountTable {
                modulus: r,
                max_size,
                values: (0..=max_size)
                    .map(|n| method.count(r, n, bound))
                    .collect::<Result<_, _>>()?,
                method,
            }),
        }
    }

    pub fn get(&self, n: usize) -> Option<&BigInt> {
        self.values.get(n)
    }
}
