//! Exhaustive checks of the two combinatorial lemmas behind the
//! `(q, t)`-derangement formula: the `dp`-fibre bijection onto shuffles,
//! and the shuffle generating function.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::q_binomial;
use crate::counting::binomial;
use crate::error::WreathError;
use crate::stats::{descent_set, dp, fixed_point_run, maj, phi, sgn, shuffles};
use crate::wreath::{
    enumerate_group_bounded, group_order, partition_group, OrderVariant, SignedLetter, Word,
};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FibreReport {
    pub r: u32,
    pub n: usize,
    pub fibres: usize,
    pub elements: u64,
    /// `φ` is injective on every fibre and its image is the shuffle set.
    pub bijective: bool,
    pub descents_preserved: bool,
    pub sgn_preserved: bool,
    /// Fibres over derangements of size `n - k` have `C(n, k)` elements.
    pub fibre_sizes: bool,
    /// Fibre sizes add up to `r^n n!`.
    pub total: bool,
}

impl FibreReport {
    pub fn passed(&self) -> bool {
        self.bijective
            && self.descents_preserved
            && self.sgn_preserved
            && self.fibre_sizes
            && self.total
    }
}

type Key = Vec<SignedLetter>;

struct Partial {
    fibres: HashMap<Key, Vec<Key>>,
    descents: bool,
    sgn: bool,
}

impl Partial {
    fn new() -> Self {
        Partial {
            fibres: HashMap::new(),
            descents: true,
            sgn: true,
        }
    }
}

/// Groups `C_r ≀ S_n` by `dp` and checks each fibre against
/// `Sh(φ(α), γ)` with `γ = sub(α)+1, …, sub(α)+k`.
pub fn fibre_check(r: u32, n: usize, bound: u64) -> Result<FibreReport, WreathError> {
    let order = OrderVariant::Standard;
    let chunks = partition_group(r, n, bound)?;
    let merged = chunks
        .into_par_iter()
        .map(|chunk| {
            let mut p = Partial::new();
            for sigma in chunk {
                let image = phi(&sigma, n)?;
                p.descents &= descent_set(&image, order) == descent_set(&sigma, order);
                p.sgn &= sgn(&image) == sgn(&sigma);
                p.fibres
                    .entry(dp(&sigma).letters().to_vec())
                    .or_default()
                    .push(image.letters().to_vec());
            }
            Ok(p)
        })
        .try_reduce(Partial::new, |mut a, b| {
            for (k, v) in b.fibres {
                a.fibres.entry(k).or_default().extend(v);
            }
            a.descents &= b.descents;
            a.sgn &= b.sgn;
            Ok::<_, WreathError>(a)
        })?;

    let mut report = FibreReport {
        r,
        n,
        fibres: merged.fibres.len(),
        descents_preserved: merged.descents,
        sgn_preserved: merged.sgn,
        bijective: true,
        fibre_sizes: true,
        ..Default::default()
    };
    for (alpha, images) in &merged.fibres {
        let alpha = crate::wreath::CyclicPermutation::from_letters(r, alpha.clone())?;
        let k = n - alpha.size();
        report.elements += images.len() as u64;
        report.fibre_sizes &= BigInt::from(images.len()) == binomial(n, k);
        let image_set: HashSet<&Key> = images.iter().collect();
        let target: HashSet<Key> = shuffles(&phi(&alpha, n)?, &fixed_point_run(&alpha, k))?
            .map(|w| w.letters().to_vec())
            .collect();
        report.bijective &= image_set.len() == images.len()
            && image_set.len() == target.len()
            && image_set.iter().all(|w| target.contains(*w));
    }
    report.total = group_order(r, n).to_u64() == Some(report.elements);
    Ok(report)
}

/// `Σ_{Sh(α, β)} q^{maj} t^{sgn} = [a+b choose a]_q q^{maj α + maj β} t^{sgn α + sgn β}`
/// for one disjoint pair, in the standard order.
pub fn shuffle_identity_holds(alpha: &Word, beta: &Word) -> Result<bool, WreathError> {
    let order = OrderVariant::Standard;
    let (a, b) = (alpha.len(), beta.len());
    let gauss = q_binomial(a + b, a).expect("a <= a + b");
    let shift = maj(alpha, order) + maj(beta, order);
    let sign = sgn(alpha) + sgn(beta);
    let mut hist: Vec<u64> = Vec::new();
    for w in shuffles(alpha, beta)? {
        if sgn(&w) != sign {
            return Ok(false);
        }
        let m = maj(&w, order);
        if m < shift {
            return Ok(false);
        }
        if hist.len() <= m - shift {
            hist.resize(m - shift + 1, 0);
        }
        hist[m - shift] += 1;
    }
    let expected: Vec<BigInt> = gauss
        .q_coefficients()
        .expect("Gaussian binomials are univariate");
    Ok(hist.len() == expected.len()
        && hist
            .iter()
            .zip(&expected)
            .all(|(&h, e)| BigInt::from(h) == *e))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShuffleReport {
    pub r: u32,
    pub total: usize,
    pub pairs: u64,
    pub failures: u64,
}

/// Work estimate for [`shuffle_identity_exhaustive`]: pairs times the
/// largest number of shuffles per pair.
pub fn shuffle_work(r: u32, total: usize) -> Option<u64> {
    let pairs = group_order(r, total)
        .to_u64()?
        .checked_mul(total as u64 + 1)?;
    pairs.checked_mul(binomial(total, total / 2).to_u64()?)
}

fn relabel(w: &Word, alphabet: &[u32]) -> Word {
    Word::new(
        w.letters()
            .iter()
            .map(|l| l.with_value(alphabet[l.value().unwrap() as usize - 1]))
            .collect(),
    )
    .expect("relabelling is injective")
}

/// Every pair `(α, β)` with `α` on `A`, `β` on `[total] \ A`, over all
/// subsets `A`. Refuses when [`shuffle_work`] exceeds `bound`.
pub fn shuffle_identity_exhaustive(
    r: u32,
    total: usize,
    bound: u64,
) -> Result<ShuffleReport, WreathError> {
    let work = shuffle_work(r, total);
    if work.is_none_or(|w| w > bound) {
        return Err(WreathError::TooLarge {
            cardinality: work.map_or_else(|| group_order(r, total), Into::into),
            bound,
        });
    }
    let subsets: Vec<u32> = (0..1u32 << total).collect();
    let (pairs, failures) = subsets
        .into_par_iter()
        .map(|mask| {
            let left: Vec<u32> = (1..=total as u32)
                .filter(|v| mask >> (v - 1) & 1 == 1)
                .collect();
            let right: Vec<u32> = (1..=total as u32)
                .filter(|v| mask >> (v - 1) & 1 == 0)
                .collect();
            let betas: Vec<Word> = enumerate_group_bounded(r, right.len(), u64::MAX)?
                .map(|s| relabel(&Word::from(&s), &right))
                .collect();
            let (mut pairs, mut failures) = (0u64, 0u64);
            for s in enumerate_group_bounded(r, left.len(), u64::MAX)? {
                let alpha = relabel(&Word::from(&s), &left);
                for beta in &betas {
                    pairs += 1;
                    if !shuffle_identity_holds(&alpha, beta)? {
                        failures += 1;
                    }
                }
            }
            Ok::<_, WreathError>((pairs, failures))
        })
        .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))?;
    Ok(ShuffleReport {
        r,
        total,
        pairs,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wreath::DEFAULT_ENUMERATION_BOUND as B;

    #[test]
    fn fibres_small() {
        for r in 1..=3 {
            for n in 0..=3 {
                let rep = fibre_check(r, n, B).unwrap();
                assert!(rep.passed(), "{rep:?}");
            }
        }
    }

    #[test]
    fn single_pair() {
        let alpha: Word = "2,1".parse().unwrap();
        let beta: Word = "3".parse().unwrap();
        assert!(shuffle_identity_holds(&alpha, &beta).unwrap());
        let alpha: Word = "3^1,1".parse().unwrap();
        let beta: Word = "4,2^2".parse().unwrap();
        assert!(shuffle_identity_holds(&alpha, &beta).unwrap());
    }

    #[test]
    fn exhaustive_small() {
        for (r, total) in [(1, 4), (2, 3), (3, 3)] {
            let rep = shuffle_identity_exhaustive(r, total, B).unwrap();
            assert_eq!(rep.failures, 0);
            assert_eq!(
                rep.pairs,
                (total as u64 + 1) * group_order(r, total).to_u64().unwrap()
            );
        }
        assert!(shuffle_identity_exhaustive(3, 7, B).is_err());
    }
}
