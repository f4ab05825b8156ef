//! The verification matrix: every identity, recurrence and bijection
//! checked cell by cell over a grid of `(r, n)`, with a JSON report.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{
    default_tolerance, log_concave, unimodal, verify_interlacing, verify_negative_distinct, Verdict,
};
use crate::counting::{
    self, d_bruteforce, eulerian_from_exc, exc_derangement_bruteforce, exc_derangement_table,
    fixed_point_count, gessel_q_derangement, group_total_qt, group_total_qt_bruteforce,
    probability_check, qt_bruteforce_with_order, qt_formula, qt_one_term, qt_two_term,
    table_discrepancies, CountMethod, Discrepancy, Domain, EgfReport,
};
use crate::error::{CountingError, Error, WreathError};
use crate::lemmas::{fibre_check, shuffle_identity_exhaustive};
use crate::wreath::{group_order, OrderVariant, DEFAULT_ENUMERATION_BOUND};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Counts,
    Qt,
    Bijections,
    Eulerian,
    Egf,
    Roots,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Counts,
        Suite::Qt,
        Suite::Bijections,
        Suite::Eulerian,
        Suite::Egf,
        Suite::Roots,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Qt => "qt",
            Suite::Bijections => "bijections",
            Suite::Eulerian => "eulerian",
            Suite::Egf => "egf",
            Suite::Roots => "roots",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

/// A suite name, or `all`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    One(Suite),
}

impl Selection {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            Selection::All => Suite::ALL.to_vec(),
            Selection::One(s) => vec![s],
        }
    }
}

impl FromStr for Selection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            return Ok(Selection::All);
        }
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .map(Selection::One)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub r: RangeInclusive<u32>,
    pub n: RangeInclusive<usize>,
    pub order: OrderVariant,
    pub bound: u64,
    pub tolerance: BigRational,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            r: 1..=3,
            n: 0..=5,
            order: OrderVariant::Standard,
            bound: DEFAULT_ENUMERATION_BOUND,
            tolerance: default_tolerance(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    /// Refused because enumeration would exceed the bound.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub identity: &'static str,
    pub r: u32,
    pub n: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub pass: bool,
    pub summary: Summary,
    pub checks: Vec<Check>,
    /// Published table cells that disagree with the computed counts.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub discrepancies: Vec<Discrepancy>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| matches!(c.status, Status::Fail | Status::Inconclusive))
    }
}

struct Cell {
    suite: Suite,
    r: u32,
    n: usize,
    out: Vec<Check>,
}

impl Cell {
    fn push(&mut self, identity: &'static str, status: Status, detail: impl Into<String>) {
        self.out.push(Check {
            suite: self.suite,
            identity,
            r: self.r,
            n: self.n,
            status,
            detail: detail.into(),
        });
    }

    fn expect(&mut self, identity: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.push(identity, Status::Pass, "");
        } else {
            self.push(identity, Status::Fail, detail());
        }
    }

    /// Runs a fallible check; an enumeration refusal becomes `Skipped`.
    fn attempt<T>(
        &mut self,
        identity: &'static str,
        result: Result<T, Error>,
        judge: impl FnOnce(T) -> (bool, String),
    ) {
        match result {
            Ok(v) => {
                let (ok, detail) = judge(v);
                self.expect(identity, ok, || detail);
            }
            Err(e) if is_refusal(&e) => self.push(identity, Status::Skipped, e.to_string()),
            Err(e) => self.push(identity, Status::Fail, e.to_string()),
        }
    }
}

fn is_refusal(e: &Error) -> bool {
    matches!(
        e,
        Error::Wreath(WreathError::TooLarge { .. })
            | Error::Counting(CountingError::Wreath(WreathError::TooLarge { .. }))
    )
}

fn mismatch(a: impl fmt::Display, b: impl fmt::Display) -> String {
    format!("{a} != {b}")
}

fn counts_cell(c: &mut Cell, cfg: &VerifyConfig) {
    let (r, n) = (c.r, c.n);
    let reference = counting::d_one_term(r, n);
    let mut disagreements = Vec::new();
    for method in [
        CountMethod::Formula,
        CountMethod::TwoTerm,
        CountMethod::Transform,
    ] {
        if method == CountMethod::Transform && r < 2 {
            continue;
        }
        match method.count(r, n, cfg.bound) {
            Ok(v) if v == reference => {}
            Ok(v) => disagreements.push(format!("{}: {v}", method.name())),
            Err(e) => disagreements.push(format!("{}: {e}", method.name())),
        }
    }
    c.expect("count-routes-agree", disagreements.is_empty(), || {
        format!("one-term gives {reference}; {}", disagreements.join(", "))
    });
    c.attempt(
        "count-enumeration",
        d_bruteforce(r, n, cfg.bound).map_err(Error::from),
        |v| (v == reference, mismatch(&v, &reference)),
    );
    let total: BigInt = (0..=n).map(|k| fixed_point_count(r, n, k)).sum();
    let order = BigInt::from(group_order(r, n));
    c.expect("fixed-point-partition", total == order, || {
        mismatch(&total, &order)
    });
    let p = probability_check(r, n);
    c.expect("probability-bound", p.pass, || {
        format!("error {} not below {}", p.worst_error, p.bound)
    });
}

fn qt_cell(c: &mut Cell, cfg: &VerifyConfig) {
    let (r, n) = (c.r, c.n);
    let formula = match qt_formula(r, n) {
        Ok(f) => f,
        Err(e) => return c.push("qt-routes-agree", Status::Fail, e.to_string()),
    };
    let two = qt_two_term(r, n);
    let one = qt_one_term(r, n);
    c.expect("qt-routes-agree", two == formula && one == formula, || {
        format!("formula {formula}; two-term {two}; one-term {one}")
    });
    c.attempt(
        "qt-enumeration",
        qt_bruteforce_with_order(r, n, cfg.order, Domain::Derangements, cfg.bound)
            .map_err(Error::from),
        |b| (b == formula, mismatch(&b, &formula)),
    );
    let d = counting::d_one_term(r, n);
    let at_one = formula.coefficient_sum();
    c.expect("qt-at-one", at_one == d, || mismatch(&at_one, &d));
    if r == 1 {
        let specialised = formula.at_t_one();
        c.attempt(
            "qt-gessel",
            gessel_q_derangement(n, cfg.bound).map_err(Error::from),
            |g| (g == specialised, mismatch(&g, &specialised)),
        );
    }
    let closed = group_total_qt(r, n);
    c.attempt(
        "group-total-qt",
        group_total_qt_bruteforce(r, n, cfg.bound).map_err(Error::from),
        |b| (b == closed, mismatch(&b, &closed)),
    );
    for (identity, domain) in [
        ("order-invariance-group", Domain::Group),
        ("order-invariance-derangements", Domain::Derangements),
    ] {
        let both = qt_bruteforce_with_order(r, n, OrderVariant::Standard, domain, cfg.bound)
            .and_then(|a| {
                Ok((
                    a,
                    qt_bruteforce_with_order(r, n, OrderVariant::Alternate, domain, cfg.bound)?,
                ))
            });
        c.attempt(identity, both.map_err(Error::from), |(a, b)| {
            (a == b, mismatch(&a, &b))
        });
    }
}

fn bijections_cell(c: &mut Cell, cfg: &VerifyConfig) {
    let (r, n) = (c.r, c.n);
    c.attempt(
        "dp-fibre-bijection",
        fibre_check(r, n, cfg.bound).map_err(Error::from),
        |rep| (rep.passed(), format!("{rep:?}")),
    );
    c.attempt(
        "shuffle-identity",
        shuffle_identity_exhaustive(r, n, cfg.bound).map_err(Error::from),
        |rep| {
            (
                rep.failures == 0,
                format!("{} of {} pairs fail", rep.failures, rep.pairs),
            )
        },
    );
}

fn eulerian_cell(c: &mut Cell, cfg: &VerifyConfig) {
    let (r, n) = (c.r, c.n);
    let by_des = counting::eulerian_poly(r, n, cfg.bound);
    let by_exc = counting::eulerian_poly_by_excedances(r, n, cfg.bound);
    let pair = by_des.and_then(|a| Ok((a, by_exc?)));
    let a = pair.as_ref().ok().map(|(a, _)| a.clone());
    c.attempt(
        "eulerian-equidistribution",
        pair.map_err(Error::from),
        |(a, b)| (a == b, mismatch(&a, &b)),
    );
    let table = exc_derangement_table(r, n);
    c.attempt(
        "exc-derangement-enumeration",
        exc_derangement_bruteforce(r, n, cfg.bound).map_err(Error::from),
        |b| (b == table[n], mismatch(&b, &table[n])),
    );
    let total = table[n].coefficient_sum();
    let d = counting::d_one_term(r, n);
    c.expect("exc-derangement-at-one", total == d, || {
        mismatch(&total, &d)
    });
    let Some(a) = a else {
        c.push(
            "eulerian-from-exc",
            Status::Skipped,
            "group exceeds the enumeration bound",
        );
        return;
    };
    let ad = eulerian_from_exc(r, n);
    c.expect("eulerian-from-exc", ad == a, || mismatch(&ad, &a));
    // Symmetric coefficients for r <= 2; the q^n reflection only for r = 2.
    if r <= 2 {
        c.expect("eulerian-palindromic", a.is_palindromic(), || a.to_string());
    }
    if r == 2 {
        c.expect("eulerian-reciprocal", a.reciprocal_check(n as u32), || {
            a.to_string()
        });
    }
    if r >= 3 && n >= 1 {
        c.expect("eulerian-not-palindromic", !a.is_palindromic(), || {
            a.to_string()
        });
    }
}

fn egf_cells(suite: Suite, r: u32, cfg: &VerifyConfig) -> Vec<Check> {
    let max_n = *cfg.n.end();
    let reports: [(&'static str, EgfReport); 4] = [
        (
            "egf-derangements",
            counting::egf_check_derangements(r, max_n),
        ),
        (
            "egf-eulerian-descents",
            counting::egf_check_eulerian(r, max_n),
        ),
        (
            "egf-eulerian-fixed-points",
            counting::egf_check_eulerian_fixed_points(r, max_n),
        ),
        (
            "egf-exc-derangements",
            counting::egf_check_exc_derangements(r, max_n),
        ),
    ];
    let mut out = Vec::new();
    for (identity, report) in reports {
        for row in report.rows.into_iter().filter(|row| cfg.n.contains(&row.n)) {
            let detail = if row.pass {
                String::new()
            } else {
                format!("expected {}; series gives {}", row.expected, row.computed)
            };
            out.push(Check {
                suite,
                identity,
                r,
                n: row.n,
                status: if row.pass { Status::Pass } else { Status::Fail },
                detail,
            });
        }
    }
    out
}

fn roots_cell(c: &mut Cell, cfg: &VerifyConfig) {
    let (r, n) = (c.r, c.n);
    if n < 2 {
        return;
    }
    let table = exc_derangement_table(r, n + 1);
    let d = &table[n];
    let coeffs = d.q_coefficients().expect("D_n is univariate");
    let lead = BigInt::from(r).pow(n as u32);
    let constant = BigInt::from(r - 1).pow(n as u32);
    c.expect(
        "exc-derangement-extremes",
        coeffs.last() == Some(&lead) && coeffs[0] == constant,
        || format!("{d}: expected leading {lead}, constant {constant}"),
    );
    let p = d.to_rat_poly().expect("D_n is univariate");
    match verify_negative_distinct(&p) {
        Ok(rep) => c.expect("negative-distinct-roots", rep.pass, || format!("{rep:?}")),
        Err(e) => c.push("negative-distinct-roots", Status::Fail, e.to_string()),
    }
    c.expect("log-concave", log_concave(&coeffs), || d.to_string());
    c.expect("unimodal", unimodal(&coeffs), || d.to_string());
    if n < *cfg.n.end() {
        let next = table[n + 1].to_rat_poly().expect("D_n is univariate");
        match verify_interlacing(&p, &next) {
            Ok(rep) => match rep.verdict {
                Verdict::Pass => c.push("interlacing", Status::Pass, ""),
                Verdict::Fail => c.push("interlacing", Status::Fail, rep.reason),
                Verdict::Inconclusive => c.push("interlacing", Status::Inconclusive, rep.reason),
            },
            Err(e) => c.push("interlacing", Status::Fail, e.to_string()),
        }
    }
}

/// Runs the selected suites over every `(r, n)` in the configured ranges.
/// Cells run in parallel; the report is sorted by `(suite, r, n, identity)`.
pub fn run(selection: Selection, cfg: &VerifyConfig) -> Report {
    let suites = selection.suites();
    let mut jobs: Vec<(Suite, u32, Option<usize>)> = Vec::new();
    for &suite in &suites {
        for r in cfg.r.clone() {
            if suite == Suite::Egf {
                jobs.push((suite, r, None));
                continue;
            }
            for n in cfg.n.clone() {
                jobs.push((suite, r, Some(n)));
            }
        }
    }
    let mut checks: Vec<Check> = jobs
        .into_par_iter()
        .flat_map_iter(|(suite, r, n)| {
            let Some(n) = n else {
                return egf_cells(suite, r, cfg);
            };
            let mut cell = Cell {
                suite,
                r,
                n,
                out: Vec::new(),
            };
            match suite {
                Suite::Counts => counts_cell(&mut cell, cfg),
                Suite::Qt => qt_cell(&mut cell, cfg),
                Suite::Bijections => bijections_cell(&mut cell, cfg),
                Suite::Eulerian => eulerian_cell(&mut cell, cfg),
                Suite::Roots => roots_cell(&mut cell, cfg),
                Suite::Egf => unreachable!("series suites run per modulus"),
            }
            cell.out
        })
        .collect();
    checks.sort_by(|a, b| (a.suite, a.r, a.n, a.identity).cmp(&(b.suite, b.r, b.n, b.identity)));

    let discrepancies = if suites.contains(&Suite::Counts) {
        table_discrepancies(CountMethod::OneTerm, cfg.bound)
            .expect("recurrence needs no enumeration")
            .into_iter()
            .filter(|d| cfg.r.contains(&d.r) && cfg.n.contains(&d.n))
            .collect()
    } else {
        Vec::new()
    };
    let mut summary = Summary::default();
    for c in &checks {
        match c.status {
            Status::Pass => summary.passed += 1,
            Status::Fail => summary.failed += 1,
            Status::Inconclusive => summary.inconclusive += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    Report {
        schema: SCHEMA_VERSION,
        pass: summary.failed == 0 && summary.inconclusive == 0,
        summary,
        checks,
        discrepancies,
    }
}
