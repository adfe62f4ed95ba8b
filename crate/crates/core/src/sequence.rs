//! Canonical degree sequences and the arithmetic around them.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Rational, Result, MAX_LEN};

/// A non-empty list of non-negative integers, stored non-increasing.
///
/// Values are not capped at `n - 1`; operations that need a simple-graph
/// range check it themselves. The sum is cached because almost every
/// consumer wants it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence {
    values: Vec<u32>,
    sum: u64,
}

impl DegreeSequence {
    /// Sorts `values` into canonical order.
    pub fn new(mut values: Vec<u32>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty);
        }
        if values.len() > MAX_LEN {
            return Err(Error::TooLong { len: values.len() });
        }
        values.sort_unstable_by(|a, b| b.cmp(a));
        let sum = values.iter().map(|&v| v as u64).sum();
        Ok(DegreeSequence { values, sum })
    }

    /// `value` repeated `count` times.
    pub fn regular(count: usize, value: u32) -> Result<Self> {
        DegreeSequence::new(alloc::vec![value; count])
    }

    /// Builds from run-length blocks `(value, multiplicity)` in any order.
    pub fn from_blocks(blocks: &[(u32, usize)]) -> Result<Self> {
        let total: usize = blocks.iter().map(|&(_, k)| k).sum();
        if total > MAX_LEN {
            return Err(Error::TooLong { len: total });
        }
        let mut values = Vec::with_capacity(total);
        for &(v, k) in blocks {
            values.extend(core::iter::repeat_n(v, k));
        }
        DegreeSequence::new(values)
    }

    /// Trusted constructor for callers that already hold a sorted vector.
    pub(crate) fn from_sorted(values: Vec<u32>) -> Self {
        debug_assert!(!values.is_empty() && values.len() <= MAX_LEN);
        debug_assert!(values.windows(2).all(|w| w[0] >= w[1]));
        let sum = values.iter().map(|&v| v as u64).sum();
        DegreeSequence { values, sum }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; a sequence holds at least one value.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> u64 {
        self.sum
    }

    /// Largest value, `Δ`.
    pub fn max_degree(&self) -> u32 {
        self.values[0]
    }

    /// Smallest value, `δ`.
    pub fn min_degree(&self) -> u32 {
        self.values[self.values.len() - 1]
    }

    pub fn spread(&self) -> u32 {
        self.max_degree() - self.min_degree()
    }

    pub fn has_even_sum(&self) -> bool {
        self.sum.is_multiple_of(2)
    }

    /// True when every value is at most `n - 1`.
    pub fn fits_simple_graph(&self) -> bool {
        (self.max_degree() as usize) < self.len()
    }

    pub fn mean(&self) -> Rational {
        Rational::new(self.sum as i128, self.len() as i128)
    }

    /// Maximum absolute deviation of any value from the mean.
    ///
    /// The extremes of a sorted list are the only candidates, so this is
    /// `max(Δ - s/n, s/n - δ)`.
    pub fn rg(&self) -> Rational {
        let mean = self.mean();
        let up = Rational::from(self.max_degree()) - mean;
        let down = mean - Rational::from(self.min_degree());
        up.max(down)
    }

    pub fn stats(&self) -> SequenceStats {
        SequenceStats {
            n: self.len(),
            s: self.sum,
            mean: self.mean(),
            max_deg: self.max_degree(),
            min_deg: self.min_degree(),
            spread: self.spread(),
            rg: self.rg(),
        }
    }

    /// `(n-1-d_n, ..., n-1-d_1)`, which is again non-increasing.
    pub fn complement(&self) -> Result<Self> {
        let n = self.len();
        if !self.fits_simple_graph() {
            return Err(Error::ValueOutOfRange {
                value: self.max_degree(),
                n,
            });
        }
        let top = (n - 1) as u32;
        let values = self.values.iter().rev().map(|&d| top - d).collect();
        Ok(DegreeSequence::from_sorted(values))
    }

    /// Prefix-sum dominance: `self` majorizes `other`.
    pub fn majorizes(&self, other: &DegreeSequence) -> Result<bool> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        if self.sum != other.sum {
            return Err(Error::SumMismatch {
                left: self.sum,
                right: other.sum,
            });
        }
        let (mut pa, mut pb) = (0u64, 0u64);
        for (&a, &b) in self.values.iter().zip(&other.values) {
            pa += a as u64;
            pb += b as u64;
            if pa < pb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Moves one unit from position `from` to position `to`, where
    /// `d_from >= d_to + 2`, and re-sorts. The result is majorized by `self`.
    pub fn down_transfer(&self, from: usize, to: usize) -> Result<Self> {
        let bad = Error::InvalidTransfer { from, to };
        let (Some(&hi), Some(&lo)) = (self.values.get(from), self.values.get(to)) else {
            return Err(bad);
        };
        if hi < lo + 2 {
            return Err(bad);
        }
        let mut values = self.values.clone();
        values[from] -= 1;
        values[to] += 1;
        values.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence::from_sorted(values))
    }

    /// Run-length blocks `(value, multiplicity)` in descending value order.
    pub fn blocks(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &v in &self.values {
            match out.last_mut() {
                Some((last, k)) if *last == v => *k += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }
}

/// Exact summary statistics of a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceStats {
    pub n: usize,
    pub s: u64,
    pub mean: Rational,
    pub max_deg: u32,
    pub min_deg: u32,
    pub spread: u32,
    pub rg: Rational,
}

/// Parses `term(,term)*` where a term is `v` or `v^k`.
///
/// Whitespace around tokens is ignored. Terms may come in any order.
pub fn parse_sequence(text: &str) -> Result<DegreeSequence> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Empty);
    }
    let mut values = Vec::new();
    for raw in text.split(',') {
        let term = raw.trim();
        let (value, count) = match term.split_once('^') {
            Some((v, k)) => (parse_int(term, v)?, parse_int(term, k)?),
            None => (parse_int(term, term)?, 1),
        };
        if count == 0 {
            return Err(parse_err(term, "repetition count must be at least 1"));
        }
        let value = u32::try_from(value).map_err(|_| parse_err(term, "value too large"))?;
        let count = usize::try_from(count).unwrap_or(usize::MAX);
        if count > MAX_LEN - values.len().min(MAX_LEN) {
            return Err(Error::TooLong {
                len: values.len().saturating_add(count),
            });
        }
        values.extend(core::iter::repeat_n(value, count));
    }
    DegreeSequence::new(values)
}

fn parse_int(term: &str, digits: &str) -> Result<u64> {
    let digits = digits.trim();
    if digits.is_empty() {
        return Err(parse_err(term, "missing number"));
    }
    if digits.starts_with('-') {
        return Err(parse_err(term, "negative value"));
    }
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(term, "expected a decimal integer"));
    }
    digits
        .parse::<u64>()
        .map_err(|_| parse_err(term, "number too large"))
}

fn parse_err(term: &str, reason: &'static str) -> Error {
    Error::Parse {
        token: String::from(term),
        reason,
    }
}

/// Inverse of [`parse_sequence`]: `5^2,1^6`, with bare `v` for single values.
pub fn format_sequence(seq: &DegreeSequence) -> String {
    seq.to_string()
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, k)) in self.blocks().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if k == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DegreeSequence({self})")
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_sequence(s)
    }
}
