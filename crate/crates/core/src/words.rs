//! The Fibonacci word and its minimal forbidden factors.
//!
//! Letters are `L` and `S`, interchanged with bits as `L=0`, `S=1`; this
//! bit convention is used everywhere downstream (automata, energies,
//! annealing assignments).
//!
//! Minimal forbidden factors (MFFs) are produced by two independent
//! routes: an exhaustive scan of a sufficiency-checked prefix of the
//! infinite word, and the boundary-flip recursion. One MFF exists per
//! Fibonacci length `F_3, F_4, ...` (with `F_1 = F_2 = 1`); an [`MffSet`]
//! at rung `K` holds the members of length `F_3..=F_K`. Note the index
//! offset: the n-th word of the flip recursion has length `F_{n+1}`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::Result;

/// One chain site symbol. `L` maps to bit 0, `S` to bit 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    L,
    S,
}

impl Letter {
    pub fn bit(self) -> u8 {
        match self {
            Letter::L => 0,
            Letter::S => 1,
        }
    }

    pub fn from_bit(bit: u8) -> Letter {
        if bit == 0 {
            Letter::L
        } else {
            Letter::S
        }
    }

    pub fn flipped(self) -> Letter {
        match self {
            Letter::L => Letter::S,
            Letter::S => Letter::L,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::S => 'S',
        }
    }
}

/// A finite binary word over `{L, S}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Bits of the word, `L=0`, `S=1`, in site order.
    pub fn bits(&self) -> Vec<u8> {
        self.0.iter().map(|l| l.bit()).collect()
    }

    /// Decode a word of `len` letters from the low `len` bits of `bits`,
    /// most significant bit first, so numeric order equals lexicographic
    /// order at fixed length. `len` must be at most 63.
    pub fn from_bits(bits: u64, len: usize) -> Word {
        assert!(len <= 63, "bit-packed words are limited to 63 letters");
        Word(
            (0..len)
                .map(|i| Letter::from_bit(((bits >> (len - 1 - i)) & 1) as u8))
                .collect(),
        )
    }

    /// Inverse of [`Word::from_bits`]. The word must have at most 63 letters.
    pub fn encode_bits(&self) -> u64 {
        assert!(self.len() <= 63, "bit-packed words are limited to 63 letters");
        self.0
            .iter()
            .fold(0u64, |acc, l| (acc << 1) | u64::from(l.bit()))
    }

    /// True if `pattern` occurs as a contiguous factor of `self`.
    pub fn contains_factor(&self, pattern: &Word) -> bool {
        let m = pattern.len();
        if m == 0 || m > self.len() {
            return m == 0;
        }
        self.0.windows(m).any(|w| w == pattern.letters())
    }

    /// Number of occurrences of `pattern` as a contiguous factor.
    pub fn count_occurrences(&self, pattern: &Word) -> usize {
        let m = pattern.len();
        if m == 0 || m > self.len() {
            return 0;
        }
        self.0.windows(m).filter(|w| *w == pattern.letters()).count()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        s.chars()
            .map(|c| match c {
                'L' => Ok(Letter::L),
                'S' => Ok(Letter::S),
                other => Err(Error::Parse(format!("invalid letter {other:?}, expected L or S"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<Se: Serializer>(&self, serializer: Se) -> std::result::Result<Se::Ok, Se::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Word, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// First `count` Fibonacci numbers with `F_1 = F_2 = 1`.
pub fn fibonacci_numbers(count: usize) -> Vec<u64> {
    let mut fib = Vec::with_capacity(count);
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 0..count {
        fib.push(a);
        let next = a + b;
        a = b;
        b = next;
    }
    fib
}

/// First `length` letters of the infinite Fibonacci word, the fixed point
/// of the substitution `L -> LS`, `S -> L` (bits: `0 -> 01`, `1 -> 0`).
pub fn fibonacci_word_prefix(length: usize) -> Word {
    assert!(length >= 1, "prefix length must be positive");
    let mut current = vec![Letter::L];
    while current.len() < length {
        let mut next = Vec::with_capacity(current.len() * 2);
        for &l in &current {
            match l {
                Letter::L => {
                    next.push(Letter::L);
                    next.push(Letter::S);
                }
                Letter::S => next.push(Letter::L),
            }
        }
        current = next;
    }
    current.truncate(length);
    Word(current)
}

/// All distinct contiguous length-`n` factors of `w`, in lexicographic order.
pub fn factor_set(w: &Word, n: usize) -> Result<std::collections::BTreeSet<Word>> {
    if n == 0 || n > w.len() {
        return Err(Error::WindowTooLong { n, len: w.len() });
    }
    Ok(w.letters().windows(n).map(|win| Word(win.to_vec())).collect())
}

/// The ordered family of minimal forbidden factors up to rung `K`:
/// exactly one member per Fibonacci length `F_3..=F_K`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MffSet {
    #[serde(rename = "K")]
    k: u32,
    mffs: Vec<Word>,
}

impl MffSet {
    /// Validates the length law: `members[i]` has length `F_{i+3}`.
    pub fn new(k: u32, members: Vec<Word>) -> Result<MffSet> {
        if k < 3 {
            return Err(Error::InvalidParameter(format!("rung K must be at least 3, got {k}")));
        }
        let fib = fibonacci_numbers(k as usize);
        let expected: Vec<u64> = fib[2..].to_vec();
        let got: Vec<u64> = members.iter().map(|m| m.len() as u64).collect();
        if got != expected {
            return Err(Error::InvalidParameter(format!(
                "member lengths {got:?} do not match Fibonacci lengths {expected:?}"
            )));
        }
        Ok(MffSet { k, mffs: members })
    }

    pub fn rung(&self) -> u32 {
        self.k
    }

    pub fn members(&self) -> &[Word] {
        &self.mffs
    }

    pub fn max_pattern_len(&self) -> usize {
        self.mffs.last().map_or(0, Word::len)
    }
}

/// Distinct length-`n` windows of `prefix`, bit-packed. `n <= 63`.
fn packed_factors(prefix: &Word, n: usize) -> HashSet<u64> {
    let mask = if n == 63 { u64::MAX >> 1 } else { (1u64 << n) - 1 };
    let mut set = HashSet::new();
    let mut acc = 0u64;
    for (i, l) in prefix.letters().iter().enumerate() {
        acc = ((acc << 1) | u64::from(l.bit())) & mask;
        if i + 1 >= n {
            set.insert(acc);
        }
    }
    set
}

/// Scan a Fibonacci-word prefix of the given length for every minimal
/// forbidden factor of length at most `max_length`.
///
/// The prefix is certified before use: for each `n <= max_length` the
/// prefix must exhibit exactly `n + 1` distinct length-`n` factors (the
/// factor complexity of the infinite word), otherwise an
/// insufficient-prefix error is returned rather than a possibly wrong
/// answer.
pub fn scan_mffs(max_length: usize, prefix_length: usize) -> Result<MffSet> {
    if !(2..=62).contains(&max_length) {
        return Err(Error::InvalidParameter(format!(
            "max_length must be in 2..=62, got {max_length}"
        )));
    }
    if prefix_length <= max_length {
        return Err(Error::InsufficientPrefix {
            prefix_len: prefix_length,
            n: max_length,
            found: 0,
            expected: max_length + 1,
        });
    }
    let prefix = fibonacci_word_prefix(prefix_length);

    let mut factors: Vec<HashSet<u64>> = Vec::with_capacity(max_length + 1);
    factors.push(HashSet::new()); // length 0 placeholder
    for n in 1..=max_length {
        let set = packed_factors(&prefix, n);
        if set.len() != n + 1 {
            return Err(Error::InsufficientPrefix {
                prefix_len: prefix_length,
                n,
                found: set.len(),
                expected: n + 1,
            });
        }
        factors.push(set);
    }

    // A word M is minimal forbidden iff M is absent while both one-letter
    // trims occur; candidates are single-letter right extensions of factors.
    let mut found: Vec<Word> = Vec::new();
    for n in 2..=max_length {
        let suffix_mask = (1u64 << (n - 1)) - 1;
        for &v in &factors[n - 1] {
            for b in 0..2u64 {
                let cand = (v << 1) | b;
                if !factors[n].contains(&cand) && factors[n - 1].contains(&(cand & suffix_mask)) {
                    found.push(Word::from_bits(cand, n));
                }
            }
        }
    }
    found.sort_by_key(|w| (w.len(), w.encode_bits()));

    // Exactly one per Fibonacci length, none elsewhere.
    let fib = fibonacci_numbers(64);
    let expected_lengths: Vec<usize> = fib
        .iter()
        .skip(2)
        .map(|&f| f as usize)
        .take_while(|&f| f <= max_length)
        .collect();
    let got_lengths: Vec<usize> = found.iter().map(Word::len).collect();
    if got_lengths != expected_lengths {
        return Err(Error::InvalidParameter(format!(
            "scan produced lengths {got_lengths:?}, expected one per Fibonacci length {expected_lengths:?}"
        )));
    }
    let k = 2 + expected_lengths.len() as u32;
    MffSet::new(k, found)
}

/// [`scan_mffs`] with the prefix grown geometrically until the factor-count
/// certificate holds.
pub fn scan_mffs_auto(max_length: usize) -> Result<MffSet> {
    let mut prefix_length = (8 * max_length.max(16)).next_power_of_two();
    loop {
        match scan_mffs(max_length, prefix_length) {
            Err(Error::InsufficientPrefix { .. }) if prefix_length < (1 << 28) => {
                prefix_length *= 2;
            }
            other => return other,
        }
    }
}

/// Generate the minimal forbidden factors up to rung `K` by the
/// boundary-flip recursion: starting from `SS` and `LLL`, each next word is
/// the concatenation of the previous two with the three letters at the
/// junction boundary flipped (positions `1`, `|prev|`, `|prev|+1`,
/// 1-indexed).
pub fn boundary_flip_mffs(k: u32) -> Result<MffSet> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("rung K must be at least 3, got {k}")));
    }
    let mut members: Vec<Word> = vec!["SS".parse().unwrap(), "LLL".parse().unwrap()];
    while members.len() < (k - 2) as usize {
        let prev = &members[members.len() - 1];
        let prev2 = &members[members.len() - 2];
        let boundary = prev.len();
        let mut letters: Vec<Letter> = prev.letters().iter().chain(prev2.letters()).copied().collect();
        for pos in [1, boundary, boundary + 1] {
            letters[pos - 1] = letters[pos - 1].flipped();
        }
        members.push(Word(letters));
    }
    members.truncate((k - 2) as usize);
    MffSet::new(k, members)
}
