//! The reference `m(n)` table for `n = 4..=100`, shipped as
//! `data/table1.csv` (`n,m,witness`, witness in the `v^k` syntax).

use degseq_core::sequence::parse_sequence;
use degseq_core::DegreeSequence;
use serde::Deserialize;

use crate::{Error, Result};

pub const TABLE_CSV: &str = include_str!("../data/table1.csv");
pub const FIRST_N: usize = 4;
pub const LAST_N: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub m: u32,
    pub witness: DegreeSequence,
}

#[derive(Deserialize)]
struct RawRow {
    n: usize,
    m: u32,
    witness: String,
}

/// Parses a table in the `n,m,witness` CSV schema.
pub fn parse_table(text: &str) -> Result<Vec<TableRow>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers()?.clone();
    if headers.iter().collect::<Vec<_>>() != ["n", "m", "witness"] {
        return Err(Error::Table(format!("unexpected header {headers:?}")));
    }
    let mut rows = Vec::new();
    for record in reader.deserialize() {
        let raw: RawRow = record?;
        let witness = parse_sequence(&raw.witness)
            .map_err(|e| Error::Table(format!("row n={}: {e}", raw.n)))?;
        rows.push(TableRow {
            n: raw.n,
            m: raw.m,
            witness,
        });
    }
    Ok(rows)
}

/// The shipped table, one row per `n` in ascending order.
pub fn embedded_table() -> Vec<TableRow> {
    parse_table(TABLE_CSV).expect("embedded table is well-formed")
}

pub fn lookup(rows: &[TableRow], n: usize) -> Option<&TableRow> {
    rows.iter().find(|r| r.n == n)
}
