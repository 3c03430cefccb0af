//! Exact counting of ordered words and of their permutation classes.
//!
//! Ordered words of length `r` over a `k`-letter alphabet number `k^r`. Two
//! words are equivalent when one is a permutation of the other; the classes
//! are multisets, and there are `C(k + r - 1, r)` of them, which is also the
//! number of ways to put `r` indistinguishable bosons into `k` levels.
//!
//! Everything here is integer arithmetic on [`BigUint`].

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest number of classes [`enumerate_multisets`] will materialize.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

const LATIN: &str = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

/// Alphabet size `k` and word length `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CountParams {
    pub k: u32,
    pub r: u32,
}

impl CountParams {
    pub fn new(k: u32, r: u32) -> Self {
        Self { k, r }
    }

    /// Four bases, three positions.
    pub const CODON: CountParams = CountParams { k: 4, r: 3 };

    fn require_nonempty_alphabet(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::InvalidParams("alphabet size k must be at least 1".into()));
        }
        Ok(())
    }
}

/// A totally ordered set of distinct letters. Position in the alphabet is the letter's rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::InvalidParams("alphabet must not be empty".into()));
        }
        for (i, c) in letters.iter().enumerate() {
            if letters[..i].contains(c) {
                return Err(Error::InvalidParams(format!("letter {c:?} repeated in alphabet")));
            }
        }
        Ok(Self { letters })
    }

    /// `A, B, C, ...` followed by lowercase letters; at most 52 letters.
    pub fn latin(k: u32) -> Result<Self> {
        if k == 0 || k as usize > LATIN.len() {
            return Err(Error::InvalidParams(format!(
                "latin alphabet supports 1..={} letters, got {k}",
                LATIN.len()
            )));
        }
        Self::new(LATIN.chars().take(k as usize))
    }

    /// RNA bases in canonical order `A < C < G < U`.
    pub fn rna() -> Self {
        Self { letters: vec!['A', 'C', 'G', 'U'] }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn rank(&self, c: char) -> Option<usize> {
        self.letters.iter().position(|&l| l == c)
    }

    pub fn letter(&self, rank: usize) -> Option<char> {
        self.letters.get(rank).copied()
    }
}

/// An unordered word: how many times each letter of the alphabet occurs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MultisetClass {
    counts: Vec<u32>,
}

impl MultisetClass {
    /// Builds a class from its occupancy vector, one entry per letter.
    pub fn from_counts(counts: Vec<u32>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::InvalidParams("occupancy vector must have k >= 1 entries".into()));
        }
        Ok(Self { counts })
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn k(&self) -> u32 {
        self.counts.len() as u32
    }

    /// Word length.
    pub fn r(&self) -> u32 {
        self.counts.iter().sum()
    }

    /// Letter ranks of the sorted representative, e.g. `[0, 0, 2]` for `AAC`.
    pub fn canonical_indices(&self) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .flat_map(|(rank, &n)| std::iter::repeat(rank).take(n as usize))
            .collect()
    }

    /// The non-decreasing representative word spelled in `alphabet`.
    pub fn canonical_word(&self, alphabet: &Alphabet) -> Result<String> {
        if alphabet.len() != self.counts.len() {
            return Err(Error::InvalidParams(format!(
                "class has k = {} but alphabet has {} letters",
                self.counts.len(),
                alphabet.len()
            )));
        }
        Ok(self
            .canonical_indices()
            .into_iter()
            .map(|rank| alphabet.letters[rank])
            .collect())
    }
}

impl Ord for MultisetClass {
    /// Lexicographic order of canonical words; shorter alphabets first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.counts
            .len()
            .cmp(&other.counts.len())
            .then_with(|| self.canonical_indices().cmp(&other.canonical_indices()))
    }
}

impl PartialOrd for MultisetClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultisetClass {
    /// Latin letters when `k <= 52`, otherwise the occupancy vector.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match Alphabet::latin(self.k()) {
            Ok(alphabet) => {
                let word: String =
                    self.canonical_indices().into_iter().map(|i| alphabet.letters[i]).collect();
                f.write_str(&word)
            }
            Err(_) => {
                let parts: Vec<String> = self.counts.iter().map(u32::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

/// `k^r`. The empty word counts once, so `r = 0` gives 1 for every `k`, and
/// `k = 0` with `r > 0` gives 0.
pub fn arrangements(p: CountParams) -> BigUint {
    BigUint::from(p.k).pow(p.r)
}

/// `C(k + r - 1, r)`, the number of multisets of size `r` over `k` letters.
pub fn multiset_count(p: CountParams) -> Result<BigUint> {
    p.require_nonempty_alphabet()?;
    // After step i the accumulator is C(k - 1 + i, i), so every division is exact.
    let mut acc = BigUint::one();
    for i in 1..=p.r as u64 {
        acc *= BigUint::from(p.k as u64 - 1 + i);
        acc /= BigUint::from(i);
    }
    Ok(acc)
}

/// All classes in lexicographic order of their canonical words, refusing to
/// materialize more than [`DEFAULT_ENUMERATION_CAP`] of them.
pub fn enumerate_multisets(p: CountParams) -> Result<Vec<MultisetClass>> {
    enumerate_multisets_capped(p, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_multisets_capped(p: CountParams, cap: u64) -> Result<Vec<MultisetClass>> {
    let total = multiset_count(p)?;
    if total > BigUint::from(cap) {
        return Err(Error::CapacityExceeded { requested: total.to_string(), cap });
    }
    let total = total.to_usize().expect("bounded by cap");
    let k = p.k as usize;
    let r = p.r as usize;

    let mut out = Vec::with_capacity(total);
    // Non-decreasing rank sequence, advanced like an odometer.
    let mut word = vec![0usize; r];
    loop {
        let mut counts = vec![0u32; k];
        for &rank in &word {
            counts[rank] += 1;
        }
        out.push(MultisetClass { counts });

        let Some(pos) = word.iter().rposition(|&rank| rank + 1 < k) else {
            break;
        };
        let next = word[pos] + 1;
        for slot in &mut word[pos..] {
            *slot = next;
        }
    }
    debug_assert_eq!(out.len(), total);
    Ok(out)
}

/// Number of ordered words in the class: `r! / (c_1! c_2! ... c_k!)`.
pub fn class_size(c: &MultisetClass) -> BigUint {
    let mut size = factorial(c.r());
    for &n in &c.counts {
        size /= factorial(n);
    }
    size
}

/// Sorts `word` into its class. Fails on the first letter outside `alphabet`.
pub fn canonicalize(word: &str, alphabet: &Alphabet) -> Result<MultisetClass> {
    let mut counts = vec![0u32; alphabet.len()];
    for (position, letter) in word.chars().enumerate() {
        let rank = alphabet
            .rank(letter)
            .ok_or(Error::UnknownLetter { letter, position })?;
        counts[rank] += 1;
    }
    Ok(MultisetClass { counts })
}

pub(crate) fn factorial(n: u32) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Sum of `class_size` over all classes; equals [`arrangements`] when the classes partition the words.
pub fn total_class_size(classes: &[MultisetClass]) -> BigUint {
    classes.iter().map(class_size).fold(BigUint::zero(), |acc, s| acc + s)
}
