//! The maximum graphic difference `m(n)`.
//!
//! `m(n)` is the largest `d` such that every even-sum sequence of length `n`
//! with mean in `[(n-2)/4, (3n-2)/4]` and `Δ - δ ≤ d` is graphic. A
//! non-graphic sequence in that set with spread `m(n) + 1` is a witness.
//!
//! Fast mode never enumerates sequences. Any witness `π` is majorized by the
//! majorization-maximal sequence with the same length, sum and value range
//! `[δ(π), Δ(π)]`. Graphicality is closed downward under majorization, so
//! that maximal sequence is non-graphic too, and it is itself a witness.
//! Deciding whether a witness of spread `≤ d` exists therefore needs one
//! Erdős–Gallai test per `(δ, s)` pair, each on a sequence with at most three
//! distinct values.
//!
//! Exhaustive mode enumerates every candidate and exists to validate that
//! reduction on small `n`.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::bounds::in_central_window;
use crate::graphicality::{erdos_gallai_sorted, is_graphic, is_graphic_blocks};
use crate::{DegreeSequence, Error, Result};

/// Largest `n` accepted by [`compute_mn_exhaustive`].
pub const EXHAUSTIVE_MAX_N: usize = 14;
/// Largest `n` accepted by [`compute_mn_fast`].
pub const FAST_MAX_N: usize = 1_000;
/// Smallest `n` either mode accepts.
pub const MIN_N: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Fast,
    Exhaustive,
}

/// One line of the `m(n)` table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchRow {
    pub n: usize,
    pub m: u32,
    pub witness: DegreeSequence,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub mode: Mode,
    pub n_range: RangeInclusive<usize>,
    /// Worker count hint for drivers that parallelise; results never depend
    /// on it.
    pub parallelism: usize,
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        let (&lo, &hi) = (self.n_range.start(), self.n_range.end());
        if lo > hi {
            return Err(Error::Domain("empty n range"));
        }
        if lo < MIN_N {
            return Err(Error::Domain("n must be at least 4"));
        }
        let max = match self.mode {
            Mode::Fast => FAST_MAX_N,
            Mode::Exhaustive => EXHAUSTIVE_MAX_N,
        };
        if hi > max {
            return Err(Error::Domain(match self.mode {
                Mode::Fast => "fast mode supports n <= 1000",
                Mode::Exhaustive => "exhaustive mode supports n <= 14",
            }));
        }
        Ok(())
    }
}

/// Up to three `(value, multiplicity)` runs, values strictly decreasing.
#[derive(Debug, Clone, Copy)]
struct Blocks {
    runs: [(u32, usize); 3],
    len: usize,
}

impl Blocks {
    fn push(&mut self, value: u32, count: usize) {
        if count == 0 {
            return;
        }
        if self.len > 0 && self.runs[self.len - 1].0 == value {
            self.runs[self.len - 1].1 += count;
        } else {
            self.runs[self.len] = (value, count);
            self.len += 1;
        }
    }

    fn as_slice(&self) -> &[(u32, usize)] {
        &self.runs[..self.len]
    }
}

fn check_maximal_args(n: usize, s: u64, lo: u32, hi: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::Empty);
    }
    if lo > hi {
        return Err(Error::Domain("maximal sequence needs lo <= hi"));
    }
    if hi as usize >= n {
        return Err(Error::ValueOutOfRange { value: hi, n });
    }
    if s < n as u64 * lo as u64 || s > n as u64 * hi as u64 {
        return Err(Error::Domain("maximal sequence needs n*lo <= s <= n*hi"));
    }
    Ok(())
}

/// `(hi^p, r, lo^q)` without range checks.
fn maximal_blocks(n: usize, s: u64, lo: u32, hi: u32) -> Blocks {
    let mut blocks = Blocks {
        runs: [(0, 0); 3],
        len: 0,
    };
    if lo == hi {
        blocks.push(hi, n);
        return blocks;
    }
    let excess = s - n as u64 * lo as u64;
    let width = (hi - lo) as u64;
    let p = (excess / width) as usize;
    if p >= n {
        blocks.push(hi, n);
        return blocks;
    }
    let r = lo + (excess % width) as u32;
    blocks.push(hi, p);
    blocks.push(r, 1);
    blocks.push(lo, n - p - 1);
    blocks
}

/// The sequence of length `n`, sum `s` and values in `[lo, hi]` that
/// majorizes every other such sequence: as many `hi` as fit, one remainder
/// value, then `lo`.
pub fn maximal_sequence(n: usize, s: u64, lo: u32, hi: u32) -> Result<DegreeSequence> {
    check_maximal_args(n, s, lo, hi)?;
    let blocks = maximal_blocks(n, s, lo, hi);
    DegreeSequence::from_blocks(blocks.as_slice())
}

/// A candidate found by the fast scan: the maximal sequence for
/// `(n, s, lo, lo + d)` is non-graphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessKey {
    pub s: u64,
    pub lo: u32,
}

impl WitnessKey {
    /// Tie-break order: smaller sum first, then larger minimum value.
    pub fn better_than(&self, other: &WitnessKey) -> bool {
        (self.s, core::cmp::Reverse(self.lo)) < (other.s, core::cmp::Reverse(other.lo))
    }
}

/// Even sums whose mean lies in the closed window `[(n-2)/4, (3n-2)/4]`.
pub fn window_sums(n: usize) -> RangeInclusive<u64> {
    let n = n as u64;
    let lo = (n * (n - 2)).div_ceil(4);
    let hi = n * (3 * n - 2) / 4;
    let lo = lo + lo % 2;
    lo..=hi
}

/// Scans the even sums in `sums` (intersected with the mean window) in
/// ascending order and, for each, the minimum values from largest to
/// smallest. Returns the first `(s, lo)` whose maximal sequence with spread
/// `d` is non-graphic, which is the best one under
/// [`WitnessKey::better_than`].
pub fn first_witness_in(n: usize, d: u32, sums: RangeInclusive<u64>) -> Option<WitnessKey> {
    if n < 2 || d as usize >= n {
        return None;
    }
    let window = window_sums(n);
    let start = (*sums.start()).max(*window.start());
    let end = (*sums.end()).min(*window.end());
    let top_lo = (n - 1) as u32 - d;
    let nn = n as u64;
    let mut s = start + start % 2;
    while s <= end {
        // n*lo <= s <= n*(lo + d)
        let lo_max = ((s / nn) as u32).min(top_lo);
        let lo_min = (s.div_ceil(nn) as u32).saturating_sub(d);
        let mut lo = lo_max;
        while lo >= lo_min {
            let blocks = maximal_blocks(n, s, lo, lo + d);
            if !is_graphic_blocks(blocks.as_slice()) {
                return Some(WitnessKey { s, lo });
            }
            if lo == 0 {
                break;
            }
            lo -= 1;
        }
        s += 2;
    }
    None
}

/// A non-graphic even-sum sequence of length `n` with mean in the central
/// window and spread at most `d`, or `None` if every such sequence is
/// graphic.
pub fn exists_nongraphic_with_spread(n: usize, d: u32) -> Option<DegreeSequence> {
    let key = first_witness_in(n, d, window_sums(n))?;
    Some(witness_for(n, d, key))
}

/// Materialises the witness behind a scan result.
pub fn witness_for(n: usize, d: u32, key: WitnessKey) -> DegreeSequence {
    maximal_sequence(n, key.s, key.lo, key.lo + d).expect("scan only yields in-range keys")
}

/// Least spread admitting a witness, by bisection over `d`.
///
/// `has_witness` must be monotone in `d`; debug builds check the step after
/// every positive probe.
pub fn least_witness_spread(n: usize, mut has_witness: impl FnMut(u32) -> bool) -> Result<u32> {
    if n < MIN_N {
        return Err(Error::Domain("n must be at least 4"));
    }
    // spread 0 is regular and always graphic under even sum
    let (mut none, mut some) = (0u32, (n - 1) as u32);
    if !has_witness(some) {
        return Err(Error::Domain("no non-graphic sequence in the mean window"));
    }
    while some - none > 1 {
        let mid = none + (some - none) / 2;
        if has_witness(mid) {
            debug_assert!(
                has_witness(mid + 1),
                "witness existence not monotone at n={n}, d={mid}"
            );
            some = mid;
        } else {
            none = mid;
        }
    }
    Ok(some)
}

/// `m(n)` by the majorization-maximal reduction.
pub fn compute_mn_fast(n: usize) -> Result<SearchRow> {
    if !(MIN_N..=FAST_MAX_N).contains(&n) {
        return Err(Error::Domain("fast mode supports 4 <= n <= 1000"));
    }
    let sums = window_sums(n);
    let spread = least_witness_spread(n, |d| first_witness_in(n, d, sums.clone()).is_some())?;
    let key = first_witness_in(n, spread, sums).expect("bisection ended on a witness spread");
    Ok(SearchRow {
        n,
        m: spread - 1,
        witness: witness_for(n, spread, key),
    })
}

/// `m(n)` by enumerating every candidate sequence.
///
/// The witness is chosen with the same tie-break as fast mode (smallest
/// sum, then largest minimum) and reported as the maximal sequence for its
/// `(n, s, δ, Δ)`, so both modes return identical rows.
pub fn compute_mn_exhaustive(n: usize) -> Result<SearchRow> {
    if !(MIN_N..=EXHAUSTIVE_MAX_N).contains(&n) {
        return Err(Error::Domain("exhaustive mode supports 4 <= n <= 14"));
    }
    // (spread, s, lo) of the best witness so far
    let mut best: Option<(u32, WitnessKey)> = None;
    for_each_bounded(n, 0, (n - 1) as u32, |d| {
        let s: u64 = d.iter().map(|&x| x as u64).sum();
        if !s.is_multiple_of(2) || !in_central_window(s, n) {
            return;
        }
        let lo = d[n - 1];
        let spread = d[0] - lo;
        if let Some((bs, bk)) = best {
            if spread > bs {
                return;
            }
            let key = WitnessKey { s, lo };
            if spread == bs && !key.better_than(&bk) {
                return;
            }
        }
        if !erdos_gallai_sorted(d).graphic {
            best = Some((spread, WitnessKey { s, lo }));
        }
    });
    let (spread, key) = best.ok_or(Error::Domain("no non-graphic sequence in the mean window"))?;
    Ok(SearchRow {
        n,
        m: spread - 1,
        witness: witness_for(n, spread, key),
    })
}

pub fn compute_row(n: usize, mode: Mode) -> Result<SearchRow> {
    match mode {
        Mode::Fast => compute_mn_fast(n),
        Mode::Exhaustive => compute_mn_exhaustive(n),
    }
}

/// Calls `visit` on every non-increasing sequence of length `n` with values
/// in `[lo, hi]`, in decreasing lexicographic order, reusing one buffer.
pub fn for_each_bounded(n: usize, lo: u32, hi: u32, mut visit: impl FnMut(&[u32])) {
    let mut it = BoundedSequences::new(n, lo, hi);
    while let Some(d) = it.advance() {
        visit(d);
    }
}

/// Iterator over non-increasing sequences of fixed length with bounded
/// values, largest first. Yields nothing when `n == 0` or `lo > hi`.
#[derive(Debug, Clone)]
pub struct BoundedSequences {
    state: Vec<u32>,
    lo: u32,
    started: bool,
    done: bool,
}

impl BoundedSequences {
    pub fn new(n: usize, lo: u32, hi: u32) -> Self {
        BoundedSequences {
            state: alloc::vec![hi; n],
            lo,
            started: false,
            done: n == 0 || lo > hi || n > crate::MAX_LEN,
        }
    }

    fn advance(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if self.started {
            // rightmost position that can still drop
            let Some(i) = self.state.iter().rposition(|&v| v > self.lo) else {
                self.done = true;
                return None;
            };
            let v = self.state[i] - 1;
            for x in &mut self.state[i..] {
                *x = v;
            }
        }
        self.started = true;
        Some(&self.state)
    }
}

impl Iterator for BoundedSequences {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<DegreeSequence> {
        self.advance()
            .map(|d| DegreeSequence::from_sorted(d.to_vec()))
    }
}

pub fn enumerate_bounded_sequences(n: usize, lo: u32, hi: u32) -> BoundedSequences {
    BoundedSequences::new(n, lo, hi)
}

/// Independent checks on a claimed `m(n)` witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessCheck {
    pub length_ok: bool,
    pub even_sum: bool,
    pub in_window: bool,
    pub spread_ok: bool,
    pub non_graphic: bool,
}

impl WitnessCheck {
    pub fn passed(&self) -> bool {
        self.length_ok && self.even_sum && self.in_window && self.spread_ok && self.non_graphic
    }
}

/// Checks that `witness` has length `n`, even sum, mean in the window,
/// spread `m + 1`, and fails Erdős–Gallai.
pub fn validate_witness(n: usize, m: u32, witness: &DegreeSequence) -> WitnessCheck {
    WitnessCheck {
        length_ok: witness.len() == n,
        even_sum: witness.has_even_sum(),
        in_window: in_central_window(witness.sum(), witness.len()),
        spread_ok: witness.spread() == m + 1,
        non_graphic: !is_graphic(witness),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::parse_sequence;
    use alloc::string::ToString;

    #[test]
    fn maximal_examples() {
        assert_eq!(
            maximal_sequence(5, 16, 2, 4).unwrap().values(),
            &[4, 4, 4, 2, 2]
        );
        assert_eq!(
            maximal_sequence(4, 8, 1, 3).unwrap().values(),
            &[3, 3, 1, 1]
        );
        assert_eq!(
            maximal_sequence(4, 8, 2, 2).unwrap().values(),
            &[2, 2, 2, 2]
        );
        assert_eq!(
            maximal_sequence(4, 12, 1, 3).unwrap().values(),
            &[3, 3, 3, 3]
        );
        assert_eq!(
            maximal_sequence(5, 13, 1, 4).unwrap().values(),
            &[4, 4, 3, 1, 1]
        );
        assert!(maximal_sequence(4, 13, 1, 3).is_err());
        assert!(maximal_sequence(4, 3, 1, 3).is_err());
        assert!(maximal_sequence(4, 8, 3, 1).is_err());
        assert!(maximal_sequence(4, 8, 1, 4).is_err());
    }

    #[test]
    fn spread_existence_examples() {
        assert_eq!(exists_nongraphic_with_spread(4, 1), None);
        let w = exists_nongraphic_with_spread(4, 2).unwrap();
        assert!(validate_witness(4, 1, &w).passed());
        assert_eq!(exists_nongraphic_with_spread(10, 3), None);
        assert!(exists_nongraphic_with_spread(10, 4).is_some());
    }

    #[test]
    fn fast_small_rows() {
        assert_eq!(compute_mn_fast(4).unwrap().m, 1);
        assert_eq!(compute_mn_fast(10).unwrap().m, 3);
        assert!(compute_mn_fast(3).is_err());
        assert!(compute_mn_fast(1001).is_err());
    }

    #[test]
    fn exhaustive_matches_fast_small() {
        for n in 4..=8 {
            assert_eq!(
                compute_mn_exhaustive(n).unwrap(),
                compute_mn_fast(n).unwrap(),
                "n={n}"
            );
        }
        assert!(compute_mn_exhaustive(15).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let all: Vec<_> = enumerate_bounded_sequences(2, 0, 1)
            .map(|s| s.to_string())
            .collect();
        assert_eq!(all, ["1^2", "1,0", "0^2"]);
        assert_eq!(enumerate_bounded_sequences(8, 0, 7).count(), 6435);
        let one: Vec<_> = enumerate_bounded_sequences(1, 3, 3).collect();
        assert_eq!(one, [parse_sequence("3").unwrap()]);
        assert_eq!(enumerate_bounded_sequences(3, 2, 1).count(), 0);
    }

    #[test]
    fn window_sums_are_even_and_closed() {
        // n = 10: s/n in [2, 7]
        assert_eq!(window_sums(10), 20..=70);
        // n = 5: s/n in [3/4, 13/4] -> s in [3.75, 16.25] -> even from 4
        assert_eq!(window_sums(5), 4..=16);
    }

    #[test]
    fn config_validation() {
        let cfg = |mode, r: RangeInclusive<usize>| SearchConfig {
            mode,
            n_range: r,
            parallelism: 1,
        };
        assert!(cfg(Mode::Exhaustive, 4..=14).validate().is_ok());
        assert!(cfg(Mode::Exhaustive, 4..=15).validate().is_err());
        assert!(cfg(Mode::Fast, 3..=10).validate().is_err());
        assert!(cfg(Mode::Fast, RangeInclusive::new(10, 4))
            .validate()
            .is_err());
        assert!(cfg(Mode::Fast, 4..=1000).validate().is_ok());
    }
}
