//! Degree-sequence graphicality, regularity certificates and the
//! maximum-graphic-difference search.
//!
//! Everything here is pure computation over owned values and runs without
//! `std`; file formats, parallel drivers and the command-line front end live
//! in the companion `degseq` crate.
//!
//! The crate is organised bottom-up:
//!
//! * [`sequence`]: the canonical [`DegreeSequence`], the `v^k` shorthand,
//!   exact statistics, complement and majorization.
//! * [`rational`]: the exact [`Rational`] used for every mean, deviation and
//!   bound value. No verdict path touches floating point.
//! * [`graphicality`]: Erdős–Gallai decider with failure certificates and a
//!   Havel–Hakimi realizer used as an independent witness generator.
//! * [`bounds`]: the `D` function certifier, the mean-range regularity
//!   certifier and the two-valued counterexample family.
//! * [`search`]: `m(n)` by majorization-maximal reduction plus an exhaustive
//!   validation mode.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
mod error;
pub mod graphicality;
pub mod rational;
pub mod search;
pub mod sequence;

pub use error::Error;
pub use rational::Rational;
pub use sequence::{DegreeSequence, SequenceStats};

/// Largest sequence length accepted by [`DegreeSequence`].
pub const MAX_LEN: usize = 10_000;

pub type Result<T> = core::result::Result<T, Error>;
