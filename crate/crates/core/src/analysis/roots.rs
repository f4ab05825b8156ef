use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::sturm::{Bound, SturmChain};
use crate::algebra::{format_rational, RatPoly};
use crate::error::AnalysisError;

/// Extra bisection steps allowed when separating the roots of two polynomials.
pub const MAX_REFINEMENT_DEPTH: usize = 20;

/// `2^{-40}`.
pub fn default_tolerance() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << 40)
}

fn midpoint(a: &BigRational, b: &BigRational) -> BigRational {
    (a + b) / BigRational::from_integer(BigInt::from(2))
}

fn rational_strings<S: Serializer>(xs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(format_rational))
}

fn interval_strings<S: Serializer>(
    xs: &[(BigRational, BigRational)],
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_seq(
        xs.iter()
            .map(|(a, b)| [format_rational(a), format_rational(b)]),
    )
}

/// Disjoint open intervals, ascending, each holding exactly one real root,
/// plus the roots that bisection hit exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootIsolation {
    #[serde(skip)]
    pub polynomial: RatPoly,
    #[serde(serialize_with = "interval_strings")]
    pub intervals: Vec<(BigRational, BigRational)>,
    #[serde(serialize_with = "rational_strings")]
    pub exact_roots: Vec<BigRational>,
}

impl RootIsolation {
    pub fn root_count(&self) -> usize {
        self.intervals.len() + self.exact_roots.len()
    }
}

/// Narrows `(lo, hi)`, which holds exactly one simple root, by sign changes
/// alone. `Err` carries a midpoint that turned out to be the root.
fn bisect_simple_root(
    chain: &SturmChain,
    mut lo: BigRational,
    mut hi: BigRational,
    tolerance: &BigRational,
) -> Result<(BigRational, BigRational), BigRational> {
    // Move endpoints off other roots so the signs at both ends differ.
    while chain.sign_at_point(&lo) == 0 || chain.sign_at_point(&hi) == 0 {
        let m = midpoint(&lo, &hi);
        if chain.sign_at_point(&m) == 0 {
            return Err(m);
        }
        if chain.count_open(&lo, &m) == 1 {
            hi = m;
        } else {
            lo = m;
        }
    }
    let lo_sign = chain.sign_at_point(&lo);
    while &hi - &lo > *tolerance {
        let m = midpoint(&lo, &hi);
        match chain.sign_at_point(&m) {
            0 => return Err(m),
            s if s == lo_sign => lo = m,
            _ => hi = m,
        }
    }
    Ok((lo, hi))
}

/// Bisection on `(-B, B)` with `B` the Cauchy bound, until every interval
/// holds one root and is no wider than `tolerance`.
pub fn isolate_roots(p: &RatPoly, tolerance: &BigRational) -> Result<RootIsolation, AnalysisError> {
    let chain = SturmChain::new(p)?;
    let mut out = RootIsolation {
        polynomial: p.clone(),
        intervals: Vec::new(),
        exact_roots: Vec::new(),
    };
    match p.degree() {
        Some(0) => return Ok(out),
        Some(1) => {
            out.exact_roots.push(-p.coeff(0) / p.coeff(1));
            return Ok(out);
        }
        _ => {}
    }
    let b = p.cauchy_bound();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let count = chain.count_open(&lo, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 {
            match bisect_simple_root(&chain, lo, hi, tolerance) {
                Ok(interval) => out.intervals.push(interval),
                Err(root) => out.exact_roots.push(root),
            }
            continue;
        }
        let m = midpoint(&lo, &hi);
        if chain.sign_at_point(&m) == 0 {
            out.exact_roots.push(m.clone());
        }
        stack.push((lo, m.clone()));
        stack.push((m, hi));
    }
    out.intervals.sort();
    out.exact_roots.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegativeDistinctReport {
    pub degree: usize,
    /// Multiplicity of the root `0`, which is divided out before the test.
    pub zero_root_multiplicity: usize,
    pub squarefree: bool,
    /// Distinct real roots of the reduced polynomial.
    pub real_roots: usize,
    pub nonnegative_roots: usize,
    pub pass: bool,
}

/// All `deg p` roots real, simple and `≤ 0`, where `0` may occur at most once.
/// The factor `q^m` is stripped first and the rest must have only negative roots.
pub fn verify_negative_distinct(p: &RatPoly) -> Result<NegativeDistinctReport, AnalysisError> {
    let degree = p.degree().ok_or(AnalysisError::ZeroPolynomial)?;
    let (reduced, m) = p.strip_zero_roots();
    let mut report = NegativeDistinctReport {
        degree,
        zero_root_multiplicity: m,
        squarefree: false,
        real_roots: 0,
        nonnegative_roots: 0,
        pass: false,
    };
    let chain = match SturmChain::new(&reduced) {
        Ok(c) => c,
        Err(AnalysisError::NotSquarefree { .. }) => return Ok(report),
        Err(e) => return Err(e),
    };
    report.squarefree = m <= 1;
    report.real_roots = chain.count_real_roots();
    report.nonnegative_roots =
        chain.count_roots(&Bound::Finite(BigRational::zero()), &Bound::PosInf)?;
    report.pass =
        report.squarefree && report.real_roots == degree - m && report.nonnegative_roots == 0;
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InterlacingReport {
    pub verdict: Verdict,
    pub reason: String,
}

impl InterlacingReport {
    fn fail(reason: impl Into<String>) -> Self {
        InterlacingReport {
            verdict: Verdict::Fail,
            reason: reason.into(),
        }
    }
}

/// Closed interval `[a, b]` around one root of the larger polynomial.
type Cell = (BigRational, BigRational);

fn closed_count(chain: &SturmChain, (a, b): &Cell) -> usize {
    let at_a = usize::from(chain.polynomial().eval(a).is_zero());
    if a == b {
        return at_a;
    }
    chain.count_open(a, b) + usize::from(chain.polynomial().eval(b).is_zero()) + at_a
}

/// Whether the roots of `large` (degree `d + 1`) strictly separate those of
/// `small` (degree `d`). Both must have only real, simple, nonpositive roots;
/// a shared factor `q` is divided out of both first.
pub fn verify_interlacing(
    small: &RatPoly,
    large: &RatPoly,
) -> Result<InterlacingReport, AnalysisError> {
    let (ds, dl) = (
        small.degree().ok_or(AnalysisError::ZeroPolynomial)?,
        large.degree().ok_or(AnalysisError::ZeroPolynomial)?,
    );
    if dl != ds + 1 {
        return Ok(InterlacingReport::fail(format!(
            "degrees {ds} and {dl} do not differ by one"
        )));
    }
    for (name, p) in [("smaller", small), ("larger", large)] {
        if !verify_negative_distinct(p)?.pass {
            return Ok(InterlacingReport::fail(format!(
                "{name} polynomial does not have distinct nonpositive real roots"
            )));
        }
    }
    let (small, ms) = small.strip_zero_roots();
    let (large, ml) = large.strip_zero_roots();
    if ms != ml {
        return Ok(InterlacingReport::fail(
            "unequal multiplicity of the root 0",
        ));
    }
    if !small.gcd(&large).is_constant() {
        return Ok(InterlacingReport::fail("common root"));
    }
    let small_chain = SturmChain::new(&small)?;
    let large_chain = SturmChain::new(&large)?;
    let iso = isolate_roots(&large, &default_tolerance())?;
    let mut cells: Vec<Cell> = iso
        .intervals
        .into_iter()
        .chain(iso.exact_roots.into_iter().map(|x| (x.clone(), x)))
        .collect();
    cells.sort();

    // Shrink each cell until it holds no root of the smaller polynomial.
    for cell in &mut cells {
        let mut depth = 0;
        while closed_count(&small_chain, cell) > 0 {
            if depth == MAX_REFINEMENT_DEPTH {
                return Ok(InterlacingReport {
                    verdict: Verdict::Inconclusive,
                    reason: format!(
                        "roots not separated near [{}, {}] after {depth} bisections",
                        format_rational(&cell.0),
                        format_rational(&cell.1)
                    ),
                });
            }
            let m = midpoint(&cell.0, &cell.1);
            *cell = if large.eval(&m).is_zero() {
                (m.clone(), m)
            } else if large_chain.count_open(&cell.0, &m) == 1 {
                (cell.0.clone(), m)
            } else {
                (m, cell.1.clone())
            };
            depth += 1;
        }
    }
    for (i, pair) in cells.windows(2).enumerate() {
        let gap = small_chain.count_open(&pair[0].1, &pair[1].0);
        if gap != 1 {
            return Ok(InterlacingReport::fail(format!(
                "{gap} roots of the smaller polynomial between roots {i} and {} of the larger",
                i + 1
            )));
        }
    }
    Ok(InterlacingReport {
        verdict: Verdict::Pass,
        reason: String::new(),
    })
}

/// `a_i^2 ≥ a_{i-1} a_{i+1}` for every interior index.
pub fn log_concave(coeffs: &[BigInt]) -> bool {
    coeffs.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

/// Weakly increasing, then weakly decreasing.
pub fn unimodal(coeffs: &[BigInt]) -> bool {
    let peak = coeffs
        .windows(2)
        .position(|w| w[1] < w[0])
        .unwrap_or(coeffs.len());
    coeffs[peak.min(coeffs.len())..]
        .windows(2)
        .all(|w| w[1] <= w[0])
}

/// Nonnegative coefficients, as the Pólya-frequency criterion requires.
pub fn nonnegative(coeffs: &[BigInt]) -> bool {
    coeffs.iter().all(|c| !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn isolation_examples() {
        let tol = default_tolerance();
        let lin = isolate_roots(&RatPoly::from_i64s(&[1, 4]), &tol).unwrap();
        assert_eq!(lin.exact_roots, vec![rat(-1, 4)]);
        assert!(lin.intervals.is_empty());

        let quad = isolate_roots(&RatPoly::from_i64s(&[1, 20, 8]), &tol).unwrap();
        assert_eq!(quad.intervals.len(), 2);
        let (a, b) = &quad.intervals[0];
        assert!(*a >= rat(-3, 1) && *b <= rat(-2, 1));
        let (a, b) = &quad.intervals[1];
        assert!(*a >= rat(-1, 10) && *b <= rat(0, 1));
        assert!(quad.intervals.iter().all(|(a, b)| b - a <= tol));

        assert_eq!(
            isolate_roots(&RatPoly::from_i64s(&[5]), &tol)
                .unwrap()
                .root_count(),
            0
        );
    }

    #[test]
    fn neighbouring_exact_roots() {
        // Roots -3, -2, -1, 0, 1, 2, 3: bisection of (-B, B) lands on several.
        let p = (-3..=3).fold(RatPoly::one(), |acc, a| {
            &acc * &RatPoly::from_i64s(&[-a, 1])
        });
        let iso = isolate_roots(&p, &default_tolerance()).unwrap();
        assert_eq!(iso.root_count(), 7);
        for (a, b) in &iso.intervals {
            assert!(a < b);
        }
    }

    #[test]
    fn midpoint_hits_are_exact() {
        // q(q+1)(q-1)
        let iso = isolate_roots(&RatPoly::from_i64s(&[0, -1, 0, 1]), &default_tolerance()).unwrap();
        assert!(iso.exact_roots.contains(&rat(0, 1)));
        assert_eq!(iso.root_count(), 3);
    }

    #[test]
    fn negative_distinct_examples() {
        assert!(
            verify_negative_distinct(&RatPoly::from_i64s(&[1, 4]))
                .unwrap()
                .pass
        );
        assert!(
            verify_negative_distinct(&RatPoly::from_i64s(&[8, 81, 27]))
                .unwrap()
                .pass
        );
        let r = verify_negative_distinct(&RatPoly::from_i64s(&[1, 0, 1])).unwrap();
        assert!(!r.pass);
        assert_eq!(r.real_roots, 0);
        // q(q^2 + 7q + 1) has a simple root at 0.
        let r = verify_negative_distinct(&RatPoly::from_i64s(&[0, 1, 7, 1])).unwrap();
        assert!(r.pass);
        assert_eq!(r.zero_root_multiplicity, 1);
        assert!(
            !verify_negative_distinct(&RatPoly::from_i64s(&[0, 0, 1]))
                .unwrap()
                .pass
        );
        assert!(
            !verify_negative_distinct(&RatPoly::from_i64s(&[-1, 1]))
                .unwrap()
                .pass
        );
        assert!(
            !verify_negative_distinct(&RatPoly::from_i64s(&[1, 2, 1]))
                .unwrap()
                .pass
        );
    }

    #[test]
    fn interlacing_examples() {
        let v = |a: &[i64], b: &[i64]| {
            verify_interlacing(&RatPoly::from_i64s(a), &RatPoly::from_i64s(b))
                .unwrap()
                .verdict
        };
        assert_eq!(v(&[1, 4], &[1, 20, 8]), Verdict::Pass);
        assert_eq!(v(&[4, 9], &[8, 81, 27]), Verdict::Pass);
        assert_eq!(v(&[1, 1], &[1, 2, 1]), Verdict::Fail);
        // (q+3) against (q+1)(q+2): the root -3 lies outside.
        assert_eq!(v(&[3, 1], &[2, 3, 1]), Verdict::Fail);
        // Shared root -1.
        assert_eq!(v(&[1, 1], &[2, 3, 1]), Verdict::Fail);
        assert_eq!(v(&[1, 1], &[1, 1]), Verdict::Fail);
        // r = 1 pair with a common factor q.
        assert_eq!(v(&[0, 1, 1], &[0, 1, 7, 1]), Verdict::Pass);
    }

    #[test]
    fn close_roots_are_inconclusive() {
        // Roots -1 and -1 + 2^-200 cannot be separated in 20 extra steps.
        let eps = BigRational::new(BigInt::one(), BigInt::one() << 200);
        let small = RatPoly::new(vec![BigRational::one(), BigRational::one()]);
        let other = RatPoly::new(vec![BigRational::one() - &eps, BigRational::one()]);
        let large = &RatPoly::from_i64s(&[4, 1]) * &other;
        let r = verify_interlacing(&small, &large).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive, "{r:?}");
    }

    #[test]
    fn sequence_examples() {
        assert!(log_concave(&ints(&[1, 20, 8])));
        assert!(log_concave(&ints(&[1, 1])) && unimodal(&ints(&[1, 1])));
        assert!(!log_concave(&ints(&[1, 0, 1])));
        assert!(!unimodal(&ints(&[1, 0, 1])));
        assert!(unimodal(&ints(&[1, 3, 3, 2])));
        assert!(unimodal(&[]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        /// Products of distinct negative linear factors pass, and then their
        /// coefficients are log-concave and unimodal.
        #[test]
        fn real_rooted_implies_log_concave(roots in prop::collection::btree_set(1i64..40, 1..6)) {
            let p = roots.iter().fold(RatPoly::one(), |acc, &a| &acc * &RatPoly::from_i64s(&[a, 1]));
            prop_assert!(verify_negative_distinct(&p).unwrap().pass);
            let c = p.integer_coeffs().unwrap();
            prop_assert!(log_concave(&c));
            prop_assert!(unimodal(&c));
            let iso = isolate_roots(&p, &default_tolerance()).unwrap();
            prop_assert_eq!(iso.root_count(), roots.len());
        }
    }
}
