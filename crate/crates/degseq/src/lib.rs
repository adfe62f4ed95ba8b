//! Std companion to `degseq-core`: the embedded `m(n)` reference table,
//! parallel row computation, table verification, output formats and the
//! `degseq` command line.

pub mod cli;
pub mod driver;
pub mod output;
pub mod table;
pub mod verify;

pub use degseq_core as core;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] degseq_core::Error),
    #[error("reference table: {0}")]
    Table(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

pub type Result<T> = std::result::Result<T, Error>;
