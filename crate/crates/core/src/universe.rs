use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Largest finite ground set; subsets are stored as `u64` bitmasks.
pub const MAX_FINITE: u32 = 64;

/// Ground set a [`SymSet`](crate::SymSet) lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Universe {
    /// `{0, …, n−1}`.
    Finite(u32),
    /// ℤ, optionally extended by the point at infinity.
    Integers { with_infinity: bool },
    /// `[0,1] ∩ ℚ`.
    UnitInterval,
}

impl Universe {
    pub fn finite(n: u32) -> Result<Self> {
        if n == 0 || n > MAX_FINITE {
            return Err(Error::UniverseTooLarge(n, MAX_FINITE));
        }
        Ok(Universe::Finite(n))
    }

    pub const fn integers() -> Self {
        Universe::Integers { with_infinity: false }
    }

    pub const fn integers_with_infinity() -> Self {
        Universe::Integers { with_infinity: true }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Universe::Finite(_))
    }

    pub fn has_infinity(&self) -> bool {
        matches!(self, Universe::Integers { with_infinity: true })
    }

    pub fn finite_size(&self) -> Option<u32> {
        match self {
            Universe::Finite(n) => Some(*n),
            _ => None,
        }
    }

    pub fn ensure_same(&self, other: &Universe) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::UniverseMismatch { left: *self, right: *other })
        }
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        match (self, p) {
            (Universe::Finite(n), Point::Index(i)) => i < n,
            (Universe::Integers { .. }, Point::Int(_)) => true,
            (Universe::Integers { with_infinity }, Point::Infinity) => *with_infinity,
            (Universe::UnitInterval, Point::Rat(r)) => *r >= Rational64::zero() && *r <= Rational64::one(),
            _ => false,
        }
    }

    pub fn check_point(&self, p: &Point) -> Result<()> {
        if self.contains_point(p) {
            Ok(())
        } else {
            Err(Error::PointOutsideUniverse(p.to_string(), *self))
        }
    }

    /// All points of a finite universe, in index order.
    pub fn points(&self) -> Option<Vec<Point>> {
        self.finite_size().map(|n| (0..n).map(Point::Index).collect())
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Universe::Finite(n) => write!(f, "finite({n})"),
            Universe::Integers { with_infinity: false } => f.write_str("integers"),
            Universe::Integers { with_infinity: true } => f.write_str("integers with_infinity"),
            Universe::UnitInterval => f.write_str("unit_interval"),
        }
    }
}

/// A single element of some universe.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Index(u32),
    Int(i64),
    Infinity,
    Rat(Rational64),
}

impl Point {
    pub fn rat(n: i64, d: i64) -> Point {
        Point::Rat(Rational64::new(n, d))
    }

    pub fn as_rational(&self) -> Option<Rational64> {
        match self {
            Point::Rat(r) => Some(*r),
            _ => None,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Index(i) => write!(f, "{i}"),
            Point::Int(k) => write!(f, "{k}"),
            Point::Infinity => f.write_str("inf"),
            Point::Rat(r) => write_rational(f, r),
        }
    }
}

pub(crate) fn write_rational(f: &mut impl fmt::Write, r: &Rational64) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

