//! Exponential generating functions, expanded as truncated series and
//! compared coefficient by coefficient with the counting routes.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::eulerian::{eulerian_from_exc, exc_derangement_table};
use super::numbers::CountTable;
use crate::algebra::{coefficient_as_polynomial, RatPoly, RationalFunctionQ, TruncatedSeries};
use crate::error::AlgebraError;

type QSeries = TruncatedSeries<RationalFunctionQ>;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn qpoly(coeffs: &[i64]) -> RationalFunctionQ {
    RationalFunctionQ::from_poly(RatPoly::from_i64s(coeffs))
}

/// `e^{-x} / (1 - r x)`.
pub fn derangement_egf(r: u32, order: usize) -> TruncatedSeries<BigRational> {
    TruncatedSeries::exp_linear(&rat(-1), order)
        .divide(&TruncatedSeries::linear(rat(1), rat(-(r as i64)), order))
        .expect("constant term is 1")
}

/// `(1-q) e^{x(1-q)} / (1 - q e^{r x (1-q)})`.
pub fn eulerian_egf(r: u32, order: usize) -> Result<QSeries, AlgebraError> {
    let one_minus_q = qpoly(&[1, -1]);
    let r_one_minus_q = qpoly(&[r as i64, -(r as i64)]);
    let num = TruncatedSeries::exp_linear(&one_minus_q, order).scale(&one_minus_q);
    let den = TruncatedSeries::one(order)
        .sub(&TruncatedSeries::exp_linear(&r_one_minus_q, order).scale(&RationalFunctionQ::q()));
    num.divide(&den)
}

/// `(1-q) e^{x(r-1)} / (e^{q r x} - q e^{r x})`.
pub fn exc_derangement_egf(r: u32, order: usize) -> Result<QSeries, AlgebraError> {
    let r = r as i64;
    let num = TruncatedSeries::exp_linear(&qpoly(&[r - 1]), order).scale(&qpoly(&[1, -1]));
    let den = TruncatedSeries::exp_linear(&qpoly(&[0, r]), order)
        .sub(&TruncatedSeries::exp_linear(&qpoly(&[r]), order).scale(&RationalFunctionQ::q()));
    num.divide(&den)
}

/// `e^{q x}` times the excedance derangement series.
pub fn eulerian_egf_from_fixed_points(r: u32, order: usize) -> Result<QSeries, AlgebraError> {
    Ok(TruncatedSeries::exp_linear(&RationalFunctionQ::q(), order)
        .mul(&exc_derangement_egf(r, order)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EgfKind {
    Derangements,
    /// Compared with `Σ q^{des}`.
    Eulerian,
    EulerianFixedPoints,
    ExcDerangements,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EgfRow {
    pub n: usize,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    /// Eulerian rows only: whether the coefficient also equals `Σ q^{n-des}`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equals_excedance_form: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EgfReport {
    pub kind: EgfKind,
    pub modulus: u32,
    pub rows: Vec<EgfRow>,
}

impl EgfReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

fn row<T: ToString + PartialEq>(
    n: usize,
    expected: T,
    computed: Result<T, AlgebraError>,
) -> EgfRow {
    let (computed, pass) = match computed {
        Ok(c) => (c.to_string(), c == expected),
        Err(e) => (e.to_string(), false),
    };
    EgfRow {
        n,
        expected: expected.to_string(),
        computed,
        pass,
        equals_excedance_form: None,
    }
}

pub fn egf_check_derangements(r: u32, max_n: usize) -> EgfReport {
    let series = derangement_egf(r, max_n);
    let counts = CountTable::one_term(r, max_n);
    EgfReport {
        kind: EgfKind::Derangements,
        modulus: r,
        rows: (0..=max_n)
            .map(|n| row(n, counts.values[n].clone(), series.egf_integer(n)))
            .collect(),
    }
}

fn failed_series(kind: EgfKind, r: u32, max_n: usize, e: AlgebraError) -> EgfReport {
    EgfReport {
        kind,
        modulus: r,
        rows: (0..=max_n)
            .map(|n| EgfRow {
                n,
                expected: String::new(),
                computed: e.to_string(),
                pass: false,
                equals_excedance_form: None,
            })
            .collect(),
    }
}

pub fn egf_check_eulerian(r: u32, max_n: usize) -> EgfReport {
    let series = match eulerian_egf(r, max_n) {
        Ok(s) => s,
        Err(e) => return failed_series(EgfKind::Eulerian, r, max_n, e),
    };
    let rows = (0..=max_n)
        .map(|n| {
            let a = eulerian_from_exc(r, n);
            let by_des = a.reverse_q(n as u32).expect("degree of A_n is at most n");
            let computed = coefficient_as_polynomial(&series, n);
            let literal = computed.as_ref().ok().map(|c| *c == a);
            EgfRow {
                equals_excedance_form: literal,
                ..row(n, by_des, computed)
            }
        })
        .collect();
    EgfReport {
        kind: EgfKind::Eulerian,
        modulus: r,
        rows,
    }
}

pub fn egf_check_eulerian_fixed_points(r: u32, max_n: usize) -> EgfReport {
    let kind = EgfKind::EulerianFixedPoints;
    let series = match eulerian_egf_from_fixed_points(r, max_n) {
        Ok(s) => s,
        Err(e) => return failed_series(kind, r, max_n, e),
    };
    EgfReport {
        kind,
        modulus: r,
        rows: (0..=max_n)
            .map(|n| {
                row(
                    n,
                    eulerian_from_exc(r, n),
                    coefficient_as_polynomial(&series, n),
                )
            })
            .collect(),
    }
}

pub fn egf_check_exc_derangements(r: u32, max_n: usize) -> EgfReport {
    let kind = EgfKind::ExcDerangements;
    let series = match exc_derangement_egf(r, max_n) {
        Ok(s) => s,
        Err(e) => return failed_series(kind, r, max_n, e),
    };
    let table = exc_derangement_table(r, max_n);
    EgfReport {
        kind,
        modulus: r,
        rows: (0..=max_n)
            .map(|n| row(n, table[n].clone(), coefficient_as_polynomial(&series, n)))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::BivariatePolynomial;
    use num_traits::One;

    #[test]
    fn derangement_series() {
        assert_eq!(
            derangement_egf(2, 4).egf_integer(2).unwrap(),
            BigInt::from(5)
        );
        for r in 1..=4 {
            assert!(egf_check_derangements(r, 8).passed());
        }
    }

    #[test]
    fn eulerian_series_constant_term() {
        let s = eulerian_egf(1, 3).unwrap();
        assert_eq!(
            coefficient_as_polynomial(&s, 0).unwrap(),
            BivariatePolynomial::one()
        );
    }

    #[test]
    fn exc_series() {
        let s = exc_derangement_egf(2, 3).unwrap();
        assert_eq!(
            coefficient_as_polynomial(&s, 2).unwrap(),
            BivariatePolynomial::from_q_coeffs([BigInt::one(), BigInt::from(4)])
        );
        for r in 1..=3 {
            assert!(egf_check_exc_derangements(r, 6).passed());
            assert!(egf_check_eulerian_fixed_points(r, 6).passed());
        }
    }

    #[test]
    fn eulerian_series_counts_descents() {
        for r in 1..=3 {
            let report = egf_check_eulerian(r, 5);
            assert!(report.passed(), "{report:?}");
            // Only r = 2 makes Σ q^{des} and Σ q^{n-des} coincide for all n >= 1.
            let literal = report
                .rows
                .iter()
                .skip(1)
                .all(|row| row.equals_excedance_form == Some(true));
            assert_eq!(literal, r == 2);
        }
    }
}
