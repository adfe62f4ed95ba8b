//! Parallel computation of `m(n)` rows.
//!
//! Rows are independent and run on a rayon pool sized by
//! [`SearchConfig::parallelism`]. For large `n` the sum range of each fast
//! scan is also split across workers; the chunk results are merged by the
//! same tie-break the sequential scan uses, so output never depends on the
//! worker count.

use std::ops::RangeInclusive;

use degseq_core::search::{
    compute_mn_exhaustive, first_witness_in, least_witness_spread, window_sums, witness_for, Mode,
    SearchConfig, SearchRow, WitnessKey, FAST_MAX_N, MIN_N,
};
use degseq_core::Error as CoreError;
use rayon::prelude::*;

use crate::Result;

/// Below this length a row is scanned on one worker.
const SPLIT_MIN_N: usize = 200;

pub fn default_parallelism() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Computes every row in `config.n_range`, ordered by `n`.
pub fn compute_rows(config: &SearchConfig) -> Result<Vec<SearchRow>> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism.max(1))
        .build()?;
    let mode = config.mode;
    let rows: std::result::Result<Vec<_>, CoreError> = pool.install(|| {
        config
            .n_range
            .clone()
            .into_par_iter()
            .map(|n| match mode {
                Mode::Fast => fast_row(n),
                Mode::Exhaustive => compute_mn_exhaustive(n),
            })
            .collect()
    });
    Ok(rows?)
}

fn chunks(sums: RangeInclusive<u64>, parts: usize) -> Vec<RangeInclusive<u64>> {
    let (lo, hi) = (*sums.start(), *sums.end());
    if lo > hi {
        return vec![sums];
    }
    let len = hi - lo + 1;
    let step = len.div_ceil(parts as u64).max(2);
    let mut out = Vec::new();
    let mut start = lo;
    while start <= hi {
        let end = (start + step - 1).min(hi);
        out.push(start..=end);
        start = end + 1;
    }
    out
}

fn best_key(n: usize, d: u32, parts: &[RangeInclusive<u64>]) -> Option<WitnessKey> {
    parts
        .par_iter()
        .filter_map(|r| first_witness_in(n, d, r.clone()))
        .reduce_with(|a, b| if b.better_than(&a) { b } else { a })
}

/// Fast-mode row, splitting the scan for large `n`. Identical output to
/// [`degseq_core::search::compute_mn_fast`].
pub fn fast_row(n: usize) -> std::result::Result<SearchRow, CoreError> {
    if n < SPLIT_MIN_N {
        return degseq_core::search::compute_mn_fast(n);
    }
    if !(MIN_N..=FAST_MAX_N).contains(&n) {
        return Err(CoreError::Domain("fast mode supports 4 <= n <= 1000"));
    }
    let parts = chunks(window_sums(n), rayon::current_num_threads() * 4);
    let spread = least_witness_spread(n, |d| {
        parts
            .par_iter()
            .any(|r| first_witness_in(n, d, r.clone()).is_some())
    })?;
    let key = best_key(n, spread, &parts).expect("bisection ended on a witness spread");
    Ok(SearchRow {
        n,
        m: spread - 1,
        witness: witness_for(n, spread, key),
    })
}
