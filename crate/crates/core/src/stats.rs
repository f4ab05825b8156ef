//! Permutation statistics on signed words, plus the reduction (`dp`),
//! relabelling (`phi`) and shuffle maps used to move between an element and
//! its fixed-point-free part.

use serde::Serialize;

use crate::error::WreathError;
use crate::wreath::{CyclicPermutation, OrderVariant, SignedLetter, Word};

/// Descent positions `0 <= i < n`, where position 0 compares the boundary
/// letter against the first letter.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DescentSet(Vec<usize>);

impl DescentSet {
    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }
}

pub fn descent_set<W: AsRef<[SignedLetter]> + ?Sized>(w: &W, order: OrderVariant) -> DescentSet {
    let letters = w.as_ref();
    let mut prev = SignedLetter::Zero;
    let mut out = Vec::new();
    for (i, &l) in letters.iter().enumerate() {
        if order.less(l, prev) {
            out.push(i);
        }
        prev = l;
    }
    DescentSet(out)
}

pub fn maj<W: AsRef<[SignedLetter]> + ?Sized>(w: &W, order: OrderVariant) -> usize {
    descent_set(w, order).sum()
}

pub fn des<W: AsRef<[SignedLetter]> + ?Sized>(w: &W, order: OrderVariant) -> usize {
    descent_set(w, order).len()
}

/// Sum of the raw exponents, without reduction mod `r`.
pub fn sgn<W: AsRef<[SignedLetter]> + ?Sized>(w: &W) -> usize {
    w.as_ref()
        .iter()
        .map(|l| l.exponent().unwrap_or(0) as usize)
        .sum()
}

/// Counts weak excedants: indices with `σ(i) = i`, or with `|σ(i)| ≠ i` and
/// `σ(|σ(i)|) > σ(i)` in the standard order.
///
/// The second application reads the letter at position `|σ(i)|` without
/// composing exponents. An index with `|σ(i)| = i` and a nonzero exponent is
/// never a weak excedant.
pub fn weak_excedance_count(sigma: &CyclicPermutation) -> usize {
    let order = OrderVariant::Standard;
    (1..=sigma.size())
        .filter(|&i| {
            let image = sigma.at(i);
            if image == SignedLetter::plain(i as u32) {
                return true;
            }
            let s = image.value().expect("words hold no boundary letter") as usize;
            s != i && order.less(image, sigma.at(s))
        })
        .count()
}

/// Positions `i` (1-based) whose letter lies below the plain letter `i`.
pub fn subcedant_positions<W: AsRef<[SignedLetter]> + ?Sized>(
    w: &W,
    order: OrderVariant,
) -> Vec<usize> {
    w.as_ref()
        .iter()
        .enumerate()
        .filter(|&(i, &l)| order.less(l, SignedLetter::plain(i as u32 + 1)))
        .map(|(i, _)| i + 1)
        .collect()
}

pub fn subcedant_count<W: AsRef<[SignedLetter]> + ?Sized>(w: &W, order: OrderVariant) -> usize {
    subcedant_positions(w, order).len()
}

/// The five statistics of one element, serialised as a flat JSON object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StatRecord {
    pub maj: usize,
    pub des: usize,
    pub sgn: usize,
    pub exc: usize,
    pub sub: usize,
}

impl StatRecord {
    pub fn of(sigma: &CyclicPermutation, order: OrderVariant) -> Self {
        let d = descent_set(sigma, order);
        StatRecord {
            maj: d.sum(),
            des: d.len(),
            sgn: sgn(sigma),
            exc: weak_excedance_count(sigma),
            sub: subcedant_count(sigma, order),
        }
    }
}

/// Reduction to the non-fixed positions: drops every fixed point and
/// relabels the surviving values order-isomorphically onto `1..=n-k`,
/// keeping exponents.
pub fn dp(sigma: &CyclicPermutation) -> CyclicPermutation {
    let kept: Vec<SignedLetter> = sigma
        .letters()
        .iter()
        .enumerate()
        .filter(|&(i, &l)| l != SignedLetter::plain(i as u32 + 1))
        .map(|(_, &l)| l)
        .collect();
    let mut values: Vec<u32> = kept.iter().filter_map(|l| l.value()).collect();
    values.sort_unstable();
    let letters = kept
        .iter()
        .map(|&l| {
            let v = l.value().unwrap();
            let rank = values.binary_search(&v).unwrap() as u32 + 1;
            l.with_value(rank)
        })
        .collect();
    CyclicPermutation::from_letters(sigma.modulus(), letters)
        .expect("reduction of a valid element is valid")
}

/// Relabels an element of `C_r ≀ S_m` into the alphabet `[n]`, `m <= n`.
///
/// Subcedant values `s_1 < … < s_j` go to `1..=j`, fixed-point values
/// `f_1 < … < f_k` go to `j+1..=j+k`, and the remaining values
/// `x_1 > x_2 > …` go to `n, n-1, …`. Exponents are carried over.
pub fn phi(sigma: &CyclicPermutation, n: usize) -> Result<Word, WreathError> {
    let m = sigma.size();
    if m > n {
        return Err(WreathError::AlphabetTooSmall {
            size: m,
            alphabet: n,
        });
    }
    let mut target = vec![0u32; m + 1];
    let mut subcedants: Vec<u32> = subcedant_positions(sigma, OrderVariant::Standard)
        .into_iter()
        .map(|i| sigma.at(i).value().unwrap())
        .collect();
    subcedants.sort_unstable();
    let fixed: Vec<u32> = sigma.fixed_points().into_iter().map(|i| i as u32).collect();
    for (i, &s) in subcedants.iter().enumerate() {
        target[s as usize] = i as u32 + 1;
    }
    let offset = subcedants.len() as u32;
    for (i, &f) in fixed.iter().enumerate() {
        target[f as usize] = offset + i as u32 + 1;
    }
    let mut next = n as u32;
    for v in (1..=m).rev() {
        if target[v] == 0 {
            target[v] = next;
            next -= 1;
        }
    }
    Word::new(
        sigma
            .letters()
            .iter()
            .map(|&l| l.with_value(target[l.value().unwrap() as usize]))
            .collect(),
    )
}

/// The increasing plain word `sub(α)+1, …, sub(α)+k` that gets shuffled
/// into `phi(α)` to rebuild the `dp`-fibre of `α`.
pub fn fixed_point_run(alpha: &CyclicPermutation, k: usize) -> Word {
    let start = subcedant_count(alpha, OrderVariant::Standard) as u32;
    Word::new(
        (1..=k as u32)
            .map(|i| SignedLetter::plain(start + i))
            .collect(),
    )
    .expect("an increasing run has distinct values")
}

/// All interleavings of `alpha` and `beta` that keep each word's internal order.
#[derive(Clone, Debug)]
pub struct Shuffles {
    alpha: Vec<SignedLetter>,
    beta: Vec<SignedLetter>,
    // Positions taken by `alpha`, as a strictly increasing combination.
    slots: Vec<usize>,
    done: bool,
}

impl Shuffles {
    fn advance(&mut self) -> bool {
        let total = self.alpha.len() + self.beta.len();
        let k = self.slots.len();
        for i in (0..k).rev() {
            if self.slots[i] < total - k + i {
                self.slots[i] += 1;
                for j in i + 1..k {
                    self.slots[j] = self.slots[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Shuffles {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let total = self.alpha.len() + self.beta.len();
        let mut out = Vec::with_capacity(total);
        let (mut a, mut b, mut s) = (0, 0, 0);
        for pos in 0..total {
            if s < self.slots.len() && self.slots[s] == pos {
                out.push(self.alpha[a]);
                a += 1;
                s += 1;
            } else {
                out.push(self.beta[b]);
                b += 1;
            }
        }
        if !self.advance() {
            self.done = true;
        }
        Some(Word::new(out).expect("disjoint alphabets give distinct values"))
    }
}

pub fn shuffles(alpha: &Word, beta: &Word) -> Result<Shuffles, WreathError> {
    let left: std::collections::HashSet<u32> = alpha.values().collect();
    if let Some(value) = beta.values().find(|v| left.contains(v)) {
        return Err(WreathError::OverlappingAlphabets { value });
    }
    Ok(Shuffles {
        alpha: alpha.letters().to_vec(),
        beta: beta.letters().to_vec(),
        slots: (0..alpha.len()).collect(),
        done: false,
    })
}
