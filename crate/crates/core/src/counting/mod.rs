//! Counting formulas, recurrences and generating polynomials, each available
//! by several independent routes so they can be checked against one another.

pub mod egf;
pub mod eulerian;
pub mod numbers;
pub mod probability;
pub mod qt;
pub mod table;

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::BivariatePolynomial;
use crate::error::WreathError;
use crate::wreath::{partition_group, CyclicPermutation};

pub use egf::{
    derangement_egf, egf_check_derangements, egf_check_eulerian, egf_check_eulerian_fixed_points,
    egf_check_exc_derangements, eulerian_egf, eulerian_egf_from_fixed_points, exc_derangement_egf,
    EgfKind, EgfReport, EgfRow,
};
pub use eulerian::{
    descent_generating_poly, eulerian_from_exc, eulerian_poly, eulerian_poly_by_excedances,
    exc_derangement_bruteforce, exc_derangement_poly, exc_derangement_table,
};
pub use numbers::{
    binomial, d_bruteforce, d_formula, d_mixed_transform, d_one_term, d_two_term,
    fixed_point_count, CountMethod, CountTable,
};
pub use probability::{probability_check, ProbabilityCheck};
pub use qt::{
    gessel_q_derangement, group_total_qt, group_total_qt_bruteforce, qt_bruteforce,
    qt_bruteforce_with_order, qt_formula, qt_one_term, qt_two_term,
};
pub use table::{published_value, table_discrepancies, Discrepancy, PUBLISHED_TABLE};

/// Which elements a brute-force sum ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Group,
    Derangements,
}

/// `Σ q^a t^b` over the domain, where `(a, b) = weight(σ)`. Runs the
/// first-letter chunks of the enumeration in parallel.
pub fn generating_polynomial<F>(
    r: u32,
    n: usize,
    domain: Domain,
    bound: u64,
    weight: F,
) -> Result<BivariatePolynomial, WreathError>
where
    F: Fn(&CyclicPermutation) -> (u32, u32) + Sync,
{
    let chunks = partition_group(r, n, bound)?;
    let counts = chunks
        .into_par_iter()
        .map(|chunk| {
            let mut local: HashMap<(u32, u32), u64> = HashMap::new();
            for sigma in chunk {
                if domain == Domain::Derangements && !sigma.is_derangement() {
                    continue;
                }
                *local.entry(weight(&sigma)).or_default() += 1;
            }
            local
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(BivariatePolynomial::from_terms(
        counts.into_iter().map(|(k, v)| (k, BigInt::from(v))),
    ))
}
