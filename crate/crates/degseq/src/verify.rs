//! Recomputes `m(n)` and checks it, and the shipped witnesses, against the
//! reference table.

use std::ops::RangeInclusive;

use degseq_core::search::{validate_witness, Mode, SearchConfig, WitnessCheck};
use degseq_core::DegreeSequence;

use crate::driver::compute_rows;
use crate::table::{embedded_table, lookup, TableRow, FIRST_N, LAST_N};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow {
    pub n: usize,
    pub expected_m: u32,
    pub computed_m: u32,
    pub table_witness: DegreeSequence,
    pub computed_witness: DegreeSequence,
    pub witness_check: WitnessCheck,
}

impl VerifyRow {
    pub fn passed(&self) -> bool {
        self.expected_m == self.computed_m && self.witness_check.passed()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub mode: Mode,
    pub rows: Vec<VerifyRow>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(VerifyRow::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerifyRow> {
        self.rows.iter().filter(|r| !r.passed())
    }
}

/// Checks a table witness on its own: length, even sum, mean window,
/// spread `m + 1`, and failure of Erdős–Gallai.
pub fn check_table_row(row: &TableRow) -> WitnessCheck {
    validate_witness(row.n, row.m, &row.witness)
}

/// Recomputes every `n` in `range` (which must lie in `4..=100`) and
/// compares against the embedded table.
pub fn verify_table(
    range: RangeInclusive<usize>,
    mode: Mode,
    jobs: usize,
) -> Result<VerificationReport> {
    if range.start() < &FIRST_N || range.end() > &LAST_N || range.start() > range.end() {
        return Err(Error::Table(format!(
            "verification range must lie within {FIRST_N}..={LAST_N}"
        )));
    }
    let table = embedded_table();
    let computed = compute_rows(&SearchConfig {
        mode,
        n_range: range,
        parallelism: jobs,
    })?;
    let rows = computed
        .into_iter()
        .map(|row| {
            let reference = lookup(&table, row.n).expect("table covers 4..=100");
            VerifyRow {
                n: row.n,
                expected_m: reference.m,
                computed_m: row.m,
                table_witness: reference.witness.clone(),
                computed_witness: row.witness,
                witness_check: check_table_row(reference),
            }
        })
        .collect();
    Ok(VerificationReport { mode, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_range_passes() {
        let report = verify_table(4..=12, Mode::Fast, 2).unwrap();
        assert_eq!(report.rows.len(), 9);
        assert!(report.passed());
    }

    #[test]
    fn range_is_guarded() {
        assert!(verify_table(3..=10, Mode::Fast, 1).is_err());
        assert!(verify_table(4..=101, Mode::Fast, 1).is_err());
        assert!(verify_table(15..=20, Mode::Exhaustive, 1).is_err());
    }

    #[test]
    fn row_20_witness() {
        let table = embedded_table();
        let row = lookup(&table, 20).unwrap();
        let check = check_table_row(row);
        assert!(check.passed());
        assert_eq!(row.witness.sum(), 96);
        assert_eq!(row.witness.spread(), 8);
    }

    #[test]
    fn tampered_row_fails() {
        let table = embedded_table();
        let mut row = lookup(&table, 4).unwrap().clone();
        row.m = 2;
        assert!(!check_table_row(&row).spread_ok);
    }
}
