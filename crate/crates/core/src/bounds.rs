//! Sufficient conditions for graphicality based on how tightly the values
//! cluster around the mean, and the two-valued family showing the
//! central-range bound cannot be relaxed.
//!
//! # The `D` function
//!
//! For an upper value `a`, lower value `b`, sum `s` and length `n`, with
//! `μ = s/n` strictly between `b` and `a`:
//!
//! ```text
//!              (a - b) · [ (μ - b)(n - 1 - 2a + μ) + (a - μ) · μ ]
//! D(a,b,s,n) = ---------------------------------------------------
//!                          n · (a - μ) · (μ - b)
//! ```
//!
//! A sequence with `Δ ≤ n - 1`, even sum and `nδ < s < nΔ` is graphic when
//! `D(Δ, δ, s, n) ≥ 1`.
//!
//! The published statement of this function was not legible in the source
//! available when this crate was written. The closed form above is a
//! reconstruction. It is fixed by the identities it must satisfy, all of
//! which are checked with exact arithmetic in `tests/d_identities.rs`:
//!
//! * symmetric width: `D(μ+c, μ-c, s, n) = 2(n - (2c+1))/n`, so `D = 1` at
//!   `c = (n-2)/4`;
//! * width shift: `D(c₁) - D(c₂) = 4(c₂ - c₁)/n` for symmetric widths;
//! * sum shift: moving the sum by `n·d` with fixed offsets `c₁`, `c₂` changes
//!   `D` by `(d/n)(c₂² - c₁²)/(c₁c₂)`;
//! * complement invariance: `D(a,b,s,n) = D(n-1-b, n-1-a, n(n-1)-s, n)`;
//! * the floor form in `⌊s/n⌋` and `{s/n}`.
//!
//! The certifiers never consult the Erdős–Gallai decider. Their soundness is
//! cross-checked in tests only.

use core::fmt;

use crate::{DegreeSequence, Error, Rational, Result};

/// Arguments of [`d_function`] in the integer setting used by the
/// certifier: `a` plays the role of `Δ`, `b` of `δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DFunctionInput {
    pub a: i64,
    pub b: i64,
    pub s: i64,
    pub n: i64,
}

/// `D(a, b, s, n)` for integer arguments.
///
/// Requires `n ≥ 1`, `a ≥ b` and `n·a > s > n·b`. A sum sitting exactly on
/// `n·a` or `n·b` gives [`Error::NotApplicable`].
pub fn d_function(input: DFunctionInput) -> Result<Rational> {
    let DFunctionInput { a, b, s, n } = input;
    if n < 1 || a < b {
        return Err(Error::Domain("D function needs n >= 1 and a >= b"));
    }
    let (na, nb) = (n as i128 * a as i128, n as i128 * b as i128);
    let s128 = s as i128;
    if s128 == na || s128 == nb {
        return Err(Error::NotApplicable);
    }
    if s128 > na || s128 < nb {
        return Err(Error::Domain("D function needs n*b < s < n*a"));
    }
    d_value(
        Rational::from(a),
        Rational::from(b),
        Rational::from(s),
        n as i128,
    )
}

/// `D` over rational arguments, as used when the upper and lower values are
/// `μ ± c` for fractional `c`.
///
/// Fails with [`Error::NotApplicable`] when `μ` coincides with `a` or `b`.
pub fn d_value(a: Rational, b: Rational, s: Rational, n: i128) -> Result<Rational> {
    if n < 1 {
        return Err(Error::Domain("D function needs n >= 1"));
    }
    let nr = Rational::from_int(n);
    let mean = s / nr;
    let above = a - mean;
    let below = mean - b;
    if above.is_zero() || below.is_zero() {
        return Err(Error::NotApplicable);
    }
    let one = Rational::ONE;
    let two = Rational::from_int(2);
    let bracket = below * (nr - one - two * a + mean) + above * mean;
    Ok((a - b) * bracket / (nr * above * below))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertStatus {
    CertifiedGraphic,
    Inconclusive,
    NotApplicable,
}

impl fmt::Display for CertStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertStatus::CertifiedGraphic => "CertifiedGraphic",
            CertStatus::Inconclusive => "Inconclusive",
            CertStatus::NotApplicable => "NotApplicable",
        })
    }
}

/// Which mean range the regularity certifier used.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeanCase {
    /// `(n-2)/4 ≤ μ ≤ (3n-2)/4`, bound `(n-2)/4`.
    Central,
    /// `μ > (3n-2)/4`, bound `n - 1 - μ`.
    High,
    /// `μ < (n-2)/4`, bound `μ`.
    Low,
}

impl MeanCase {
    /// 1, 2 or 3, in the order the cases are usually listed.
    pub fn index(self) -> u8 {
        match self {
            MeanCase::Central => 1,
            MeanCase::High => 2,
            MeanCase::Low => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertDetail {
    /// `D(Δ, δ, s, n)` was evaluated.
    DFunction {
        d_value: Rational,
    },
    /// `s = nΔ`: every value equals the mean.
    Regular,
    Regularity {
        case: MeanCase,
        mean: Rational,
        rg: Rational,
        bound: Rational,
    },
    OddSum,
    ValueOutOfRange {
        max: u32,
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertificateOutcome {
    pub status: CertStatus,
    pub detail: CertDetail,
}

impl CertificateOutcome {
    pub fn is_certified(&self) -> bool {
        self.status == CertStatus::CertifiedGraphic
    }

    pub fn d_value(&self) -> Option<Rational> {
        match self.detail {
            CertDetail::DFunction { d_value } => Some(d_value),
            _ => None,
        }
    }

    fn skipped(detail: CertDetail) -> Self {
        CertificateOutcome {
            status: CertStatus::NotApplicable,
            detail,
        }
    }
}

fn screen(seq: &DegreeSequence) -> Option<CertificateOutcome> {
    if !seq.has_even_sum() {
        return Some(CertificateOutcome::skipped(CertDetail::OddSum));
    }
    if !seq.fits_simple_graph() {
        return Some(CertificateOutcome::skipped(CertDetail::ValueOutOfRange {
            max: seq.max_degree(),
            n: seq.len(),
        }));
    }
    None
}

/// Certifies graphicality when `D(Δ, δ, s, n) ≥ 1`.
///
/// Regular sequences (`s = nΔ = nδ`) fall outside the `D` window and are
/// certified directly.
pub fn theorem1_certify(seq: &DegreeSequence) -> CertificateOutcome {
    if let Some(out) = screen(seq) {
        return out;
    }
    if seq.spread() == 0 {
        return CertificateOutcome {
            status: CertStatus::CertifiedGraphic,
            detail: CertDetail::Regular,
        };
    }
    let d = d_function(DFunctionInput {
        a: seq.max_degree() as i64,
        b: seq.min_degree() as i64,
        s: seq.sum() as i64,
        n: seq.len() as i64,
    })
    .expect("non-regular sequence lies strictly inside the D window");
    let status = if d >= Rational::ONE {
        CertStatus::CertifiedGraphic
    } else {
        CertStatus::Inconclusive
    };
    CertificateOutcome {
        status,
        detail: CertDetail::DFunction { d_value: d },
    }
}

/// Picks the mean range for sum `s` and length `n` by exact comparison.
/// The upper boundary `μ = (3n-2)/4` belongs to the central case.
pub fn mean_case(s: u64, n: usize) -> MeanCase {
    let (s4, n) = (4 * s as i128, n as i128);
    if s4 < n * (n - 2) {
        MeanCase::Low
    } else if s4 > n * (3 * n - 2) {
        MeanCase::High
    } else {
        MeanCase::Central
    }
}

/// True when `(n-2)/4 ≤ s/n ≤ (3n-2)/4`.
pub fn in_central_window(s: u64, n: usize) -> bool {
    mean_case(s, n) == MeanCase::Central
}

/// Certifies graphicality from `rg(π)` and the mean range:
///
/// | case | mean range              | bound on `rg` |
/// |------|-------------------------|---------------|
/// | 1    | `[(n-2)/4, (3n-2)/4]`   | `(n-2)/4`     |
/// | 2    | `((3n-2)/4, n-1]`       | `n - 1 - μ`   |
/// | 3    | `[0, (n-2)/4)`          | `μ`           |
pub fn theorem2_certify(seq: &DegreeSequence) -> CertificateOutcome {
    if let Some(out) = screen(seq) {
        return out;
    }
    let n = seq.len();
    let mean = seq.mean();
    let case = mean_case(seq.sum(), n);
    let bound = match case {
        MeanCase::Central => Rational::new(n as i128 - 2, 4),
        MeanCase::High => Rational::from_int(n as i128 - 1) - mean,
        MeanCase::Low => mean,
    };
    let rg = seq.rg();
    let status = if rg <= bound {
        CertStatus::CertifiedGraphic
    } else {
        CertStatus::Inconclusive
    };
    CertificateOutcome {
        status,
        detail: CertDetail::Regularity {
            case,
            mean,
            rg,
            bound,
        },
    }
}

/// `(⌊s/n + (n-2)/4⌋, ⌈s/n - (n-2)/4⌉)`: the widest integer value range a
/// central-case sequence may use under the regularity bound.
pub fn extremal_pair(s: u64, n: usize) -> Result<(u32, u32)> {
    if n < 2 {
        return Err(Error::Domain("extremal pair needs n >= 2"));
    }
    let (s, n) = (s as i128, n as i128);
    if s > n * (n - 1) {
        return Err(Error::Domain("extremal pair needs s <= n(n-1)"));
    }
    if mean_case(s as u64, n as usize) != MeanCase::Central {
        return Err(Error::Domain("mean outside [(n-2)/4, (3n-2)/4]"));
    }
    let den = 4 * n;
    let upper = num_integer::Integer::div_floor(&(4 * s + n * (n - 2)), &den);
    let lower = num_integer::Integer::div_ceil(&(4 * s - n * (n - 2)), &den);
    Ok((upper as u32, lower as u32))
}

/// `((mu+c)^{n/2}, (mu-c)^{n/2})`.
///
/// Non-graphic exactly when `c > (n-2)/4`.
pub fn counterexample_family(n: usize, mu: u32, c: u32) -> Result<DegreeSequence> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::Domain("family needs an even length n >= 2"));
    }
    if c > mu {
        return Err(Error::Domain("family needs mu - c >= 0"));
    }
    if (mu + c) as usize > n - 1 {
        return Err(Error::ValueOutOfRange { value: mu + c, n });
    }
    DegreeSequence::from_blocks(&[(mu + c, n / 2), (mu - c, n / 2)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphicality::is_graphic;
    use crate::sequence::parse_sequence;
    use alloc::string::ToString;

    fn d(a: i64, b: i64, s: i64, n: i64) -> Result<Rational> {
        d_function(DFunctionInput { a, b, s, n })
    }

    #[test]
    fn d_function_examples() {
        assert_eq!(d(7, 3, 50, 10).unwrap(), Rational::ONE);
        assert_eq!(d(6, 4, 50, 10).unwrap(), Rational::new(7, 5));
        assert_eq!(d(7, 4, 50, 10).unwrap(), Rational::new(3, 2));
        assert_eq!(d(4, 2, 16, 5).unwrap(), Rational::new(2, 3));
    }

    #[test]
    fn d_function_window() {
        assert_eq!(d(5, 5, 50, 10), Err(Error::NotApplicable));
        assert_eq!(d(7, 5, 50, 10), Err(Error::NotApplicable));
        assert_eq!(d(7, 3, 70, 10), Err(Error::NotApplicable));
        assert!(matches!(d(7, 3, 80, 10), Err(Error::Domain(_))));
        assert!(matches!(d(3, 7, 50, 10), Err(Error::Domain(_))));
    }

    #[test]
    fn theorem1_examples() {
        let out = theorem1_certify(&parse_sequence("7^5,3^5").unwrap());
        assert_eq!(out.status, CertStatus::CertifiedGraphic);
        assert_eq!(out.d_value(), Some(Rational::ONE));

        let out = theorem1_certify(&parse_sequence("4^3,2^2").unwrap());
        assert_eq!(out.status, CertStatus::Inconclusive);
        assert_eq!(out.d_value(), Some(Rational::new(2, 3)));

        let out = theorem1_certify(&parse_sequence("3^4").unwrap());
        assert_eq!(out.status, CertStatus::CertifiedGraphic);
        assert_eq!(out.detail, CertDetail::Regular);

        assert_eq!(
            theorem1_certify(&parse_sequence("1^3").unwrap()).detail,
            CertDetail::OddSum
        );
        assert_eq!(
            theorem1_certify(&parse_sequence("4,2^3").unwrap()).status,
            CertStatus::NotApplicable
        );
    }

    #[test]
    fn theorem2_examples() {
        let out = theorem2_certify(&parse_sequence("7^5,3^5").unwrap());
        assert_eq!(out.status, CertStatus::CertifiedGraphic);
        assert_eq!(
            out.detail,
            CertDetail::Regularity {
                case: MeanCase::Central,
                mean: Rational::from_int(5),
                rg: Rational::from_int(2),
                bound: Rational::from_int(2),
            }
        );

        let out = theorem2_certify(&parse_sequence("9^10").unwrap());
        assert_eq!(out.status, CertStatus::CertifiedGraphic);
        assert!(
            matches!(out.detail, CertDetail::Regularity { case: MeanCase::High, bound, .. } if bound.is_zero())
        );

        let seq = parse_sequence("8^5,2^5").unwrap();
        let out = theorem2_certify(&seq);
        assert_eq!(out.status, CertStatus::Inconclusive);
        assert!(!is_graphic(&seq));

        // mean 1/3 < (n-2)/4 = 1 for n = 6, rg 2/3 > 1/3
        let out = theorem2_certify(&parse_sequence("1^2,0^4").unwrap());
        assert!(matches!(
            out.detail,
            CertDetail::Regularity {
                case: MeanCase::Low,
                ..
            }
        ));
        assert_eq!(out.status, CertStatus::Inconclusive);
    }

    #[test]
    fn mean_case_boundaries() {
        // n = 10: central window is [2, 7] for the mean, so s in [20, 70]
        assert_eq!(mean_case(19, 10), MeanCase::Low);
        assert_eq!(mean_case(20, 10), MeanCase::Central);
        assert_eq!(mean_case(70, 10), MeanCase::Central);
        assert_eq!(mean_case(71, 10), MeanCase::High);
    }

    #[test]
    fn extremal_pair_examples() {
        assert_eq!(extremal_pair(50, 10), Ok((7, 3)));
        assert_eq!(extremal_pair(16, 5), Ok((3, 3)));
        assert_eq!(extremal_pair(8, 4), Ok((2, 2)));
        assert!(extremal_pair(10, 10).is_err());
        assert!(extremal_pair(80, 10).is_err());
        assert!(extremal_pair(0, 1).is_err());
    }

    #[test]
    fn family_examples() {
        let f = counterexample_family(10, 5, 3).unwrap();
        assert_eq!(f.to_string(), "8^5,2^5");
        assert!(!is_graphic(&f));
        let f = counterexample_family(10, 5, 2).unwrap();
        assert_eq!(f.to_string(), "7^5,3^5");
        assert!(is_graphic(&f));
        let f = counterexample_family(4, 2, 1).unwrap();
        assert_eq!(f.to_string(), "3^2,1^2");
        assert!(!is_graphic(&f));
        assert!(counterexample_family(5, 2, 1).is_err());
        assert!(counterexample_family(10, 2, 3).is_err());
        assert!(counterexample_family(10, 5, 5).is_err());
    }
}
