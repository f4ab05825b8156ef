//! Exact real-root analysis: Sturm chains, root isolation by bisection,
//! negativity and interlacing certificates, log-concavity and unimodality.

pub mod roots;
pub mod sturm;

use num_rational::BigRational;
use serde::Serialize;

pub use roots::{
    default_tolerance, isolate_roots, log_concave, nonnegative, unimodal, verify_interlacing,
    verify_negative_distinct, InterlacingReport, NegativeDistinctReport, RootIsolation, Verdict,
    MAX_REFINEMENT_DEPTH,
};
pub use sturm::{count_roots, sturm_chain, Bound, SturmChain};

use crate::algebra::{BivariatePolynomial, RatPoly};
use crate::counting::exc_derangement_table;
use crate::error::{AnalysisError, Error};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootVerdicts {
    pub negative_distinct: bool,
    pub log_concave: bool,
    pub unimodal: bool,
    /// Against `D_{n+1}`, when the report is for `D_n`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interlaces_next: Option<InterlacingReport>,
}

impl RootVerdicts {
    pub fn passed(&self) -> bool {
        self.negative_distinct
            && self.log_concave
            && self.unimodal
            && self
                .interlaces_next
                .as_ref()
                .is_none_or(|r| r.verdict == Verdict::Pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootReport {
    pub polynomial: String,
    pub degree: usize,
    pub real_roots: usize,
    #[serde(flatten)]
    pub isolation: RootIsolation,
    pub verdicts: RootVerdicts,
}

/// Isolation plus the shape verdicts for an integer polynomial in `q`.
pub fn root_report(p: &BivariatePolynomial, tolerance: &BigRational) -> Result<RootReport, Error> {
    let coeffs = p.q_coefficients()?;
    let rp = RatPoly::from_integers(coeffs.iter().cloned());
    let nd = verify_negative_distinct(&rp)?;
    let isolation = match isolate_roots(&rp, tolerance) {
        Ok(iso) => iso,
        Err(AnalysisError::NotSquarefree { .. }) => RootIsolation {
            polynomial: rp.clone(),
            intervals: Vec::new(),
            exact_roots: Vec::new(),
        },
        Err(e) => return Err(e.into()),
    };
    Ok(RootReport {
        polynomial: p.to_string(),
        degree: nd.degree,
        real_roots: isolation.root_count(),
        isolation,
        verdicts: RootVerdicts {
            negative_distinct: nd.pass,
            log_concave: log_concave(&coeffs),
            unimodal: unimodal(&coeffs),
            interlaces_next: None,
        },
    })
}

/// The report for `D_n^{(r)}(q)`, including interlacing with `D_{n+1}^{(r)}`.
pub fn exc_derangement_root_report(
    r: u32,
    n: usize,
    tolerance: &BigRational,
) -> Result<RootReport, Error> {
    let table = exc_derangement_table(r, n + 1);
    let mut report = root_report(&table[n], tolerance)?;
    let small = table[n].to_rat_poly()?;
    let large = table[n + 1].to_rat_poly()?;
    report.verdicts.interlaces_next = Some(verify_interlacing(&small, &large)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn desk_scale_roots() {
        let tol = default_tolerance();
        for r in 1..=4 {
            for n in 2..=7 {
                let rep = exc_derangement_root_report(r, n, &tol).unwrap();
                assert!(rep.verdicts.passed(), "r={r} n={n}: {rep:?}");
                assert_eq!(rep.real_roots, rep.degree);
            }
        }
    }

    #[test]
    fn report_json_shape() {
        let tol = default_tolerance();
        let p = BivariatePolynomial::from_q_coeffs([1, 4].map(num_bigint::BigInt::from));
        let json = serde_json::to_value(root_report(&p, &tol).unwrap()).unwrap();
        assert_eq!(json["degree"], 1);
        assert_eq!(json["real_roots"], 1);
        assert_eq!(json["exact_roots"][0], "-1/4");
        assert_eq!(json["verdicts"]["negative_distinct"], true);
    }
}
