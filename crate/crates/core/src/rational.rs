//! Exact fractions over `i128`.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// A fraction kept in lowest terms with a positive denominator.
///
/// Comparisons never round. Construction from a zero denominator panics,
/// as integer division does.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<i128>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    pub fn new(num: i128, den: i128) -> Self {
        Rational(Ratio::new(num, den))
    }

    pub fn from_int(v: i128) -> Self {
        Rational(Ratio::from_integer(v))
    }

    pub fn num(&self) -> i128 {
        *self.0.numer()
    }

    pub fn den(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn floor(&self) -> i128 {
        Integer::div_floor(&self.num(), &self.den())
    }

    pub fn ceil(&self) -> i128 {
        Integer::div_ceil(&self.num(), &self.den())
    }

    /// `x - floor(x)`, always in `[0, 1)`.
    pub fn fract(&self) -> Self {
        *self - Rational::from_int(self.floor())
    }

    /// Renders `p/q` even when `q == 1`, the form used in machine output.
    pub fn to_fraction_string(&self) -> alloc::string::String {
        alloc::format!("{}/{}", self.num(), self.den())
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_int(v as i128)
    }
}

impl From<u64> for Rational {
    fn from(v: u64) -> Self {
        Rational::from_int(v as i128)
    }
}

impl From<u32> for Rational {
    fn from(v: u32) -> Self {
        Rational::from_int(v as i128)
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $f(self, rhs: Rational) -> Rational {
                Rational(self.0.$f(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// Compact form: `3` for integers, `16/5` otherwise.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den() == 1 {
            write!(f, "{}", self.num())
        } else {
            write!(f, "{}/{}", self.num(), self.den())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn lowest_terms_and_sign() {
        let r = Rational::new(6, -4);
        assert_eq!((r.num(), r.den()), (-3, 2));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(Rational::new(10, 5).to_string(), "2");
        assert_eq!(Rational::from_int(5).to_fraction_string(), "5/1");
    }

    #[test]
    fn floor_ceil_fract() {
        let r = Rational::new(16, 5);
        assert_eq!((r.floor(), r.ceil()), (3, 4));
        assert_eq!(r.fract(), Rational::new(1, 5));
        let neg = Rational::new(-7, 4);
        assert_eq!((neg.floor(), neg.ceil()), (-2, -1));
        assert_eq!(neg.fract(), Rational::new(1, 4));
        assert_eq!(Rational::from_int(3).fract(), Rational::ZERO);
    }

    #[test]
    fn ordering_is_exact() {
        // 1/3 and 333333333333/1000000000000 differ below f64 noise for some ops
        let a = Rational::new(1, 3);
        let b = Rational::new(333_333_333_333, 1_000_000_000_000);
        assert!(a > b);
        assert!(Rational::new(-1, 2) < Rational::ZERO);
    }
}
