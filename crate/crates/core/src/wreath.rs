//! Elements of the wreath product `C_r ≀ S_n` in one-line notation.
//!
//! An element is stored as a word of `n` signed letters `ζ^e · s`, where the
//! values `s` form a permutation of `1..=n` and each exponent `e` lies in
//! `0..r`. Two total orders on signed letters (plus the boundary letter `0`)
//! drive every descent-based statistic; see [`OrderVariant`].
//!
//! The canonical text form is a comma-separated list of letters, each either
//! `s` (exponent 0) or `s^e` (exponent `e >= 1`), e.g. `3,2^1,1`. The empty
//! word prints as the empty string.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::WreathError;

/// Default cap on the number of elements an enumeration may visit.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 10_000_000;

/// One symbol of the alphabet `(C_r × [n]) ∪ {0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignedLetter {
    /// The boundary symbol `0`, placed before position 1 when reading descents.
    Zero,
    Letter {
        value: u32,
        exponent: u32,
    },
}

impl SignedLetter {
    pub const fn new(value: u32, exponent: u32) -> Self {
        SignedLetter::Letter { value, exponent }
    }

    /// A letter with exponent 0.
    pub const fn plain(value: u32) -> Self {
        SignedLetter::Letter { value, exponent: 0 }
    }

    pub fn value(self) -> Option<u32> {
        match self {
            SignedLetter::Zero => None,
            SignedLetter::Letter { value, .. } => Some(value),
        }
    }

    pub fn exponent(self) -> Option<u32> {
        match self {
            SignedLetter::Zero => None,
            SignedLetter::Letter { exponent, .. } => Some(exponent),
        }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, SignedLetter::Zero)
    }

    /// True for letters carrying a nonzero exponent.
    pub fn is_signed(self) -> bool {
        matches!(self, SignedLetter::Letter { exponent, .. } if exponent != 0)
    }

    /// Same exponent, different value.
    pub fn with_value(self, value: u32) -> Self {
        match self {
            SignedLetter::Zero => SignedLetter::Zero,
            SignedLetter::Letter { exponent, .. } => SignedLetter::Letter { value, exponent },
        }
    }

    // Sort key realising the order: a larger key is a larger letter.
    // Signed letters sit below 0, which sits below every plain letter.
    fn key(self, order: OrderVariant) -> (u8, i64, i64) {
        match self {
            SignedLetter::Zero => (1, 0, 0),
            SignedLetter::Letter { value, exponent: 0 } => (2, i64::from(value), 0),
            SignedLetter::Letter { value, exponent } => match order {
                OrderVariant::Standard => (0, -i64::from(value), -i64::from(exponent)),
                OrderVariant::Alternate => (0, -i64::from(exponent), -i64::from(value)),
            },
        }
    }
}

impl fmt::Display for SignedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SignedLetter::Zero => f.write_str("0"),
            SignedLetter::Letter { value, exponent: 0 } => write!(f, "{value}"),
            SignedLetter::Letter { value, exponent } => write!(f, "{value}^{exponent}"),
        }
    }
}

impl FromStr for SignedLetter {
    type Err = WreathError;

    fn from_str(token: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| WreathError::Parse {
            token: token.to_string(),
            reason: reason.to_string(),
        };
        let parse_num = |s: &str| -> Result<u32, WreathError> {
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("expected a decimal number"));
            }
            if s.len() > 1 && s.starts_with('0') {
                return Err(err("leading zeros are not canonical"));
            }
            s.parse::<u32>().map_err(|_| err("number too large"))
        };
        match token.split_once('^') {
            None => {
                let value = parse_num(token)?;
                if value == 0 {
                    return Ok(SignedLetter::Zero);
                }
                Ok(SignedLetter::plain(value))
            }
            Some((v, e)) => {
                let value = parse_num(v)?;
                let exponent = parse_num(e)?;
                if value == 0 {
                    return Err(err("the boundary letter carries no exponent"));
                }
                if exponent == 0 {
                    return Err(err("exponent 0 is written without '^'"));
                }
                Ok(SignedLetter::new(value, exponent))
            }
        }
    }
}

/// The two total orders on signed letters.
///
/// `Standard`: `ζ^{r-1}n < … < ζn < ζ^{r-1}(n-1) < … < ζ1 < 0 < 1 < … < n`.
///
/// `Alternate`: `ζ^{r-1}n < … < ζ^{r-1}1 < ζ^{r-2}n < … < ζ1 < 0 < 1 < … < n`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum OrderVariant {
    #[default]
    Standard,
    Alternate,
}

impl OrderVariant {
    pub const ALL: [OrderVariant; 2] = [OrderVariant::Standard, OrderVariant::Alternate];

    pub fn compare(self, a: SignedLetter, b: SignedLetter) -> Ordering {
        a.key(self).cmp(&b.key(self))
    }

    pub fn less(self, a: SignedLetter, b: SignedLetter) -> bool {
        self.compare(a, b) == Ordering::Less
    }
}

impl FromStr for OrderVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "standard" => Ok(OrderVariant::Standard),
            "alternate" => Ok(OrderVariant::Alternate),
            other => Err(format!(
                "unknown order {other:?} (expected standard|alternate)"
            )),
        }
    }
}

pub fn compare(a: SignedLetter, b: SignedLetter, order: OrderVariant) -> Ordering {
    order.compare(a, b)
}

/// A sequence of non-boundary signed letters with distinct values, not
/// necessarily forming a permutation of `1..=len`. Shuffles and the
/// relabelling map produce words of this kind.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<SignedLetter>);

impl Word {
    pub fn new(letters: Vec<SignedLetter>) -> Result<Self, WreathError> {
        let mut seen = std::collections::HashSet::new();
        for l in &letters {
            match l.value() {
                None | Some(0) => return Err(WreathError::ZeroLetter),
                Some(value) => {
                    if !seen.insert(value) {
                        return Err(WreathError::NotAPermutation { value });
                    }
                }
            }
        }
        Ok(Word(letters))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.0
    }

    pub fn values(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().filter_map(|l| l.value())
    }
}

impl AsRef<[SignedLetter]> for Word {
    fn as_ref(&self) -> &[SignedLetter] {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, self.0.iter().copied())
    }
}

impl FromStr for Word {
    type Err = WreathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::new(parse_letters(s)?)
    }
}

impl From<&CyclicPermutation> for Word {
    fn from(p: &CyclicPermutation) -> Self {
        Word(p.letters.clone())
    }
}

fn write_letters(
    f: &mut fmt::Formatter<'_>,
    letters: impl Iterator<Item = SignedLetter>,
) -> fmt::Result {
    for (i, l) in letters.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

fn parse_letters(s: &str) -> Result<Vec<SignedLetter>, WreathError> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(str::parse).collect()
}

/// An element of `C_r ≀ S_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicPermutation {
    modulus: u32,
    letters: Vec<SignedLetter>,
}

impl CyclicPermutation {
    /// Builds and validates an element from `(exponent, value)` pairs.
    pub fn make(r: u32, n: usize, letters: &[(u32, u32)]) -> Result<Self, WreathError> {
        if letters.len() != n {
            return Err(WreathError::WrongLength {
                expected: n,
                found: letters.len(),
            });
        }
        Self::from_letters(
            r,
            letters
                .iter()
                .map(|&(e, v)| SignedLetter::new(v, e))
                .collect(),
        )
    }

    pub fn from_letters(r: u32, letters: Vec<SignedLetter>) -> Result<Self, WreathError> {
        if r == 0 {
            return Err(WreathError::ZeroModulus);
        }
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for (i, l) in letters.iter().enumerate() {
            let position = i + 1;
            let SignedLetter::Letter { value, exponent } = *l else {
                return Err(WreathError::ZeroLetter);
            };
            if value == 0 || value as usize > n {
                return Err(WreathError::ValueOutOfRange {
                    position,
                    value,
                    size: n,
                });
            }
            if exponent >= r {
                return Err(WreathError::ExponentOutOfRange {
                    position,
                    exponent,
                    modulus: r,
                });
            }
            if std::mem::replace(&mut seen[value as usize], true) {
                return Err(WreathError::NotAPermutation { value });
            }
        }
        Ok(CyclicPermutation {
            modulus: r,
            letters,
        })
    }

    pub fn identity(r: u32, n: usize) -> Self {
        assert!(r >= 1, "modulus must be at least 1");
        CyclicPermutation {
            modulus: r,
            letters: (1..=n as u32).map(SignedLetter::plain).collect(),
        }
    }

    /// Parses the canonical text form for an element of `C_r ≀ S_n`.
    pub fn parse(r: u32, text: &str) -> Result<Self, WreathError> {
        Self::from_letters(r, parse_letters(text.trim())?)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn size(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.letters
    }

    /// The letter `σ(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> SignedLetter {
        self.letters[i - 1]
    }

    fn value_at(&self, i: usize) -> u32 {
        self.letters[i - 1]
            .value()
            .expect("words hold no boundary letter")
    }

    fn exponent_at(&self, i: usize) -> u32 {
        self.letters[i - 1]
            .exponent()
            .expect("words hold no boundary letter")
    }

    /// The image of a signed letter under the group action,
    /// `σ(ζ^a · j) = ζ^{(a + e_j) mod r} · s_j`.
    pub fn apply(&self, x: SignedLetter) -> Result<SignedLetter, WreathError> {
        let SignedLetter::Letter { value, exponent } = x else {
            return Err(WreathError::ZeroLetter);
        };
        if value == 0 || value as usize > self.size() {
            return Err(WreathError::ValueOutOfRange {
                position: 0,
                value,
                size: self.size(),
            });
        }
        let j = value as usize;
        Ok(SignedLetter::new(
            self.value_at(j),
            (exponent + self.exponent_at(j)) % self.modulus,
        ))
    }

    pub fn inverse(&self) -> Self {
        let n = self.size();
        let r = self.modulus;
        let mut letters = vec![SignedLetter::Zero; n];
        for j in 1..=n {
            let s = self.value_at(j) as usize;
            let e = self.exponent_at(j);
            letters[s - 1] = SignedLetter::new(j as u32, (r - e) % r);
        }
        CyclicPermutation {
            modulus: r,
            letters,
        }
    }

    /// Positions `i` with `σ(i) = i`, i.e. exponent 0 and value `i`.
    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.size())
            .filter(|&i| self.at(i) == SignedLetter::plain(i as u32))
            .collect()
    }

    pub fn is_derangement(&self) -> bool {
        (1..=self.size()).all(|i| self.at(i) != SignedLetter::plain(i as u32))
    }

    /// Cycles of the underlying permutation `i ↦ s_i`, each led by its
    /// largest element, sorted by leader.
    pub fn cycle_decomposition(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in (1..=n).rev() {
            if seen[start] {
                continue;
            }
            // Visiting leaders from the top means `start` is the largest in its cycle.
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.value_at(start) as usize;
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.value_at(i) as usize;
            }
            cycles.push(cycle);
        }
        cycles.reverse();
        cycles
    }
}

impl fmt::Display for CyclicPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, self.letters.iter().copied())
    }
}

impl AsRef<[SignedLetter]> for CyclicPermutation {
    fn as_ref(&self) -> &[SignedLetter] {
        &self.letters
    }
}

/// `|C_r ≀ S_n| = r^n · n!`.
pub fn group_order(r: u32, n: usize) -> BigUint {
    let mut total = BigUint::from(r).pow(n as u32);
    for k in 2..=n {
        total *= k;
    }
    total
}

fn check_bound(r: u32, n: usize, bound: u64) -> Result<(), WreathError> {
    if r == 0 {
        return Err(WreathError::ZeroModulus);
    }
    let cardinality = group_order(r, n);
    match cardinality.to_u64() {
        Some(c) if c <= bound => Ok(()),
        _ => Err(WreathError::TooLarge { cardinality, bound }),
    }
}

/// Lazily enumerates `C_r ≀ S_n` in lexicographic order of
/// (value word, exponent word).
///
/// The first `pinned` values can be held fixed (exponents still vary), which
/// is how the enumeration is split into independent chunks for parallel workers.
#[derive(Clone, Debug)]
pub struct GroupIter {
    modulus: u32,
    values: Vec<u32>,
    exponents: Vec<u32>,
    pinned: usize,
    done: bool,
}

impl GroupIter {
    fn new(r: u32, n: usize) -> Self {
        GroupIter {
            modulus: r,
            values: (1..=n as u32).collect(),
            exponents: vec![0; n],
            pinned: 0,
            done: false,
        }
    }

    fn advance_exponents(&mut self) -> bool {
        for i in (0..self.exponents.len()).rev() {
            if self.exponents[i] + 1 < self.modulus {
                self.exponents[i] += 1;
                return true;
            }
            self.exponents[i] = 0;
        }
        false
    }

    fn advance_values(&mut self) -> bool {
        let tail = &mut self.values[self.pinned..];
        let len = tail.len();
        if len < 2 {
            return false;
        }
        let Some(i) = (0..len - 1).rev().find(|&i| tail[i] < tail[i + 1]) else {
            return false;
        };
        let j = (i + 1..len).rev().find(|&j| tail[j] > tail[i]).unwrap();
        tail.swap(i, j);
        tail[i + 1..].reverse();
        true
    }
}

impl Iterator for GroupIter {
    type Item = CyclicPermutation;

    fn next(&mut self) -> Option<CyclicPermutation> {
        if self.done {
            return None;
        }
        let current = CyclicPermutation {
            modulus: self.modulus,
            letters: self
                .values
                .iter()
                .zip(&self.exponents)
                .map(|(&v, &e)| SignedLetter::new(v, e))
                .collect(),
        };
        if !self.advance_exponents() && !self.advance_values() {
            self.done = true;
        }
        Some(current)
    }
}

/// Every element of `C_r ≀ S_n`, refusing when `r^n·n!` exceeds the default bound.
pub fn enumerate_group(r: u32, n: usize) -> Result<GroupIter, WreathError> {
    enumerate_group_bounded(r, n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_group_bounded(r: u32, n: usize, bound: u64) -> Result<GroupIter, WreathError> {
    check_bound(r, n, bound)?;
    Ok(GroupIter::new(r, n))
}

/// The cyclic derangements of `C_r ≀ S_n`, in enumeration order.
pub fn enumerate_derangements(
    r: u32,
    n: usize,
) -> Result<impl Iterator<Item = CyclicPermutation>, WreathError> {
    enumerate_derangements_bounded(r, n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_derangements_bounded(
    r: u32,
    n: usize,
    bound: u64,
) -> Result<impl Iterator<Item = CyclicPermutation>, WreathError> {
    Ok(enumerate_group_bounded(r, n, bound)?.filter(CyclicPermutation::is_derangement))
}

/// Splits the enumeration of `C_r ≀ S_n` by first letter. Concatenating the
/// chunks in order reproduces [`enumerate_group`] exactly.
pub fn partition_group(r: u32, n: usize, bound: u64) -> Result<Vec<GroupIter>, WreathError> {
    check_bound(r, n, bound)?;
    if n == 0 {
        return Ok(vec![GroupIter::new(r, 0)]);
    }
    let chunks = (1..=n as u32)
        .map(|first| {
            let mut values = vec![first];
            values.extend((1..=n as u32).filter(|&v| v != first));
            GroupIter {
                modulus: r,
                values,
                exponents: vec![0; n],
                pinned: 1,
                done: false,
            }
        })
        .collect();
    Ok(chunks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn letters_for(r: u32, n: u32) -> Vec<SignedLetter> {
        let mut all = vec![SignedLetter::Zero];
        for v in 1..=n {
            for e in 0..r {
                all.push(SignedLetter::new(v, e));
            }
        }
        all
    }

    #[test]
    fn make_accepts_identity_and_signed_words() {
        let id = CyclicPermutation::make(1, 3, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(id, CyclicPermutation::identity(1, 3));
        let w = CyclicPermutation::make(2, 2, &[(1, 1), (1, 2)]).unwrap();
        assert_eq!(w.to_string(), "1^1,2^1");
    }

    #[test]
    fn make_rejects_each_kind_of_bad_input() {
        assert_eq!(
            CyclicPermutation::make(2, 2, &[(0, 1), (0, 1)]),
            Err(WreathError::NotAPermutation { value: 1 })
        );
        assert!(matches!(
            CyclicPermutation::make(2, 2, &[(2, 1), (0, 2)]),
            Err(WreathError::ExponentOutOfRange { exponent: 2, .. })
        ));
        assert!(matches!(
            CyclicPermutation::make(2, 3, &[(0, 1), (0, 2)]),
            Err(WreathError::WrongLength {
                expected: 3,
                found: 2
            })
        ));
        assert!(matches!(
            CyclicPermutation::make(2, 2, &[(0, 1), (0, 3)]),
            Err(WreathError::ValueOutOfRange { value: 3, .. })
        ));
        assert_eq!(
            CyclicPermutation::make(0, 0, &[]),
            Err(WreathError::ZeroModulus)
        );
    }

    #[test]
    fn standard_order_examples() {
        let s = OrderVariant::Standard;
        assert_eq!(
            s.compare(SignedLetter::new(2, 2), SignedLetter::new(2, 1)),
            Ordering::Less
        );
        assert_eq!(
            s.compare(SignedLetter::Zero, SignedLetter::plain(1)),
            Ordering::Less
        );
        // ζ·1 is the largest signed letter, just below 0.
        assert!(s.less(SignedLetter::new(2, 1), SignedLetter::new(1, 1)));
        assert!(s.less(SignedLetter::new(1, 1), SignedLetter::Zero));
    }

    #[test]
    fn alternate_order_example() {
        let a = OrderVariant::Alternate;
        assert_eq!(
            a.compare(SignedLetter::new(1, 2), SignedLetter::new(2, 1)),
            Ordering::Less
        );
    }

    #[test]
    fn orders_are_strict_total_orders() {
        for order in OrderVariant::ALL {
            for r in 1..=4 {
                for n in 1..=4 {
                    let all = letters_for(r, n);
                    for &a in &all {
                        for &b in &all {
                            let ab = order.compare(a, b);
                            assert_eq!(ab, order.compare(b, a).reverse());
                            assert_eq!(ab == Ordering::Equal, a == b);
                            for &c in &all {
                                if order.less(a, b) && order.less(b, c) {
                                    assert!(order.less(a, c));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn modulus_one_order_is_integer_order() {
        let mut all = letters_for(1, 5);
        all.sort_by(|&a, &b| OrderVariant::Standard.compare(a, b));
        let ints: Vec<u32> = all.iter().map(|l| l.value().unwrap_or(0)).collect();
        assert_eq!(ints, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn apply_examples() {
        let s = CyclicPermutation::make(2, 2, &[(1, 1), (1, 2)]).unwrap();
        assert_eq!(
            s.apply(SignedLetter::plain(1)).unwrap(),
            SignedLetter::new(1, 1)
        );
        let id = CyclicPermutation::identity(3, 3);
        assert_eq!(
            id.apply(SignedLetter::new(3, 1)).unwrap(),
            SignedLetter::new(3, 1)
        );
        let w = CyclicPermutation::make(2, 2, &[(1, 2), (0, 1)]).unwrap();
        assert_eq!(
            w.apply(SignedLetter::new(1, 1)).unwrap(),
            SignedLetter::plain(2)
        );
        assert_eq!(w.apply(SignedLetter::Zero), Err(WreathError::ZeroLetter));
    }

    #[test]
    fn inverse_undoes_apply() {
        for sigma in enumerate_group(3, 3).unwrap() {
            let inv = sigma.inverse();
            for l in letters_for(3, 3).into_iter().skip(1) {
                assert_eq!(inv.apply(sigma.apply(l).unwrap()).unwrap(), l);
                assert_eq!(sigma.apply(inv.apply(l).unwrap()).unwrap(), l);
            }
        }
    }

    #[test]
    fn fixed_point_examples() {
        let s = CyclicPermutation::parse(1, "5,3,1,4,7,6,2").unwrap();
        assert_eq!(s.fixed_points(), vec![4, 6]);
        assert_eq!(
            CyclicPermutation::identity(2, 4).fixed_points(),
            vec![1, 2, 3, 4]
        );
        let w = CyclicPermutation::parse(2, "1^1,2^1").unwrap();
        assert!(w.fixed_points().is_empty());
    }

    #[test]
    fn enumeration_sizes_and_distinctness() {
        assert_eq!(enumerate_group(1, 3).unwrap().count(), 6);
        assert_eq!(enumerate_group(2, 2).unwrap().count(), 8);
        assert_eq!(enumerate_group(3, 2).unwrap().count(), 18);
        assert_eq!(enumerate_group(4, 0).unwrap().count(), 1);
        let all: HashSet<_> = enumerate_group(3, 3).unwrap().collect();
        assert_eq!(all.len(), 27 * 6);
    }

    #[test]
    fn derangement_counts() {
        assert_eq!(enumerate_derangements(2, 2).unwrap().count(), 5);
        assert_eq!(enumerate_derangements(1, 1).unwrap().count(), 0);
        assert_eq!(enumerate_derangements(3, 2).unwrap().count(), 13);
        assert_eq!(enumerate_derangements(5, 0).unwrap().count(), 1);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let words: Vec<_> = enumerate_group(2, 2)
            .unwrap()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(
            words,
            ["1,2", "1,2^1", "1^1,2", "1^1,2^1", "2,1", "2,1^1", "2^1,1", "2^1,1^1"]
        );
    }

    #[test]
    fn bound_refusal_reports_cardinality() {
        match enumerate_group_bounded(2, 5, 100) {
            Err(WreathError::TooLarge { cardinality, bound }) => {
                assert_eq!(cardinality, BigUint::from(3840u32));
                assert_eq!(bound, 100);
            }
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn partitioned_enumeration_matches_sequential() {
        let seq: Vec<_> = enumerate_group(2, 4).unwrap().collect();
        let parts: Vec<_> = partition_group(2, 4, DEFAULT_ENUMERATION_BOUND)
            .unwrap()
            .into_iter()
            .flatten()
            .collect();
        assert_eq!(seq, parts);
    }

    #[test]
    fn cycle_decomposition_examples() {
        let s = CyclicPermutation::parse(1, "2,1").unwrap();
        assert_eq!(s.cycle_decomposition(), vec![vec![2, 1]]);
        assert_eq!(
            CyclicPermutation::identity(1, 3).cycle_decomposition(),
            vec![vec![1], vec![2], vec![3]]
        );
        // 1→4→5→2→3→1, led by 5.
        let s = CyclicPermutation::parse(1, "4,3,1,5,2").unwrap();
        assert_eq!(s.cycle_decomposition(), vec![vec![5, 2, 3, 1, 4]]);
    }

    #[test]
    fn text_form_round_trips() {
        for text in ["3,2^1,1", "", "1^2,2", "2^1,1^1"] {
            let s = CyclicPermutation::parse(3, text).unwrap();
            assert_eq!(s.to_string(), text);
        }
        assert!(CyclicPermutation::parse(3, "1^0").is_err());
        assert!(CyclicPermutation::parse(3, "01").is_err());
        assert!(CyclicPermutation::parse(3, "1,,2").is_err());
    }
}
