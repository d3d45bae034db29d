//! Finite unions of rational intervals inside `[0,1]`.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::universe::write_rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational64,
    pub lo_closed: bool,
    pub hi: Rational64,
    pub hi_closed: bool,
}

impl Interval {
    pub fn new(lo: Rational64, lo_closed: bool, hi: Rational64, hi_closed: bool) -> Self {
        Interval { lo, lo_closed, hi, hi_closed }
    }

    pub fn closed(lo: Rational64, hi: Rational64) -> Self {
        Self::new(lo, true, hi, true)
    }

    pub fn point(x: Rational64) -> Self {
        Self::closed(x, x)
    }

    pub fn is_empty(&self) -> bool {
        match self.lo.cmp(&self.hi) {
            Ordering::Less => false,
            Ordering::Equal => !(self.lo_closed && self.hi_closed),
            Ordering::Greater => true,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational64) -> bool {
        let above = if self.lo_closed { *x >= self.lo } else { *x > self.lo };
        let below = if self.hi_closed { *x <= self.hi } else { *x < self.hi };
        above && below
    }

    /// Gap between the closures of two intervals.
    pub fn distance(&self, other: &Interval) -> Rational64 {
        let zero = Rational64::zero();
        let a = other.lo - self.hi;
        let b = self.lo - other.hi;
        a.max(b).max(zero)
    }

    fn clipped(mut self) -> Self {
        let (zero, one) = (Rational64::zero(), Rational64::one());
        if self.lo < zero {
            self.lo = zero;
            self.lo_closed = true;
        }
        if self.hi > one {
            self.hi = one;
            self.hi_closed = true;
        }
        self
    }
}

impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        // closed lower endpoints sort first at equal values
        (self.lo, !self.lo_closed, self.hi, self.hi_closed).cmp(&(
            other.lo,
            !other.lo_closed,
            other.hi,
            other.hi_closed,
        ))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.lo_closed { "[" } else { "(" })?;
        write_rational(f, &self.lo)?;
        f.write_str(",")?;
        write_rational(f, &self.hi)?;
        f.write_str(if self.hi_closed { "]" } else { ")" })
    }
}

/// Sorted, pairwise disjoint, non-mergeable intervals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntervalSet {
    parts: Vec<Interval>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { parts: Vec::new() }
    }

    pub fn full() -> Self {
        IntervalSet { parts: vec![Interval::closed(Rational64::zero(), Rational64::one())] }
    }

    pub fn from_intervals(parts: impl IntoIterator<Item = Interval>) -> Self {
        let mut parts: Vec<Interval> =
            parts.into_iter().map(Interval::clipped).filter(|i| !i.is_empty()).collect();
        parts.sort();
        let mut merged: Vec<Interval> = Vec::with_capacity(parts.len());
        for next in parts {
            match merged.last_mut() {
                Some(cur)
                    if next.lo < cur.hi
                        || (next.lo == cur.hi && (cur.hi_closed || next.lo_closed)) =>
                {
                    if (next.hi, next.hi_closed) > (cur.hi, cur.hi_closed) {
                        cur.hi = next.hi;
                        cur.hi_closed = next.hi_closed;
                    }
                }
                _ => merged.push(next),
            }
        }
        IntervalSet { parts: merged }
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, x: &Rational64) -> bool {
        self.parts.iter().any(|i| i.contains(x))
    }

    pub fn complement(&self) -> Self {
        let mut out = Vec::new();
        let (mut start, mut start_closed) = (Rational64::zero(), true);
        for i in &self.parts {
            out.push(Interval::new(start, start_closed, i.lo, !i.lo_closed));
            start = i.hi;
            start_closed = !i.hi_closed;
        }
        out.push(Interval::new(start, start_closed, Rational64::one(), true));
        Self::from_intervals(out)
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_intervals(self.parts.iter().chain(other.parts.iter()).copied())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.complement().union(&other.complement()).complement()
    }

    /// Number of points, when every part is degenerate.
    pub fn point_count(&self) -> Option<usize> {
        self.parts.iter().all(Interval::is_degenerate).then_some(self.parts.len())
    }

    /// Infimum distance between two nonempty sets.
    pub fn distance(&self, other: &Self) -> Option<Rational64> {
        self.parts
            .iter()
            .flat_map(|a| other.parts.iter().map(move |b| a.distance(b)))
            .min()
    }

    pub fn closure(&self) -> Self {
        Self::from_intervals(self.parts.iter().map(|i| Interval::closed(i.lo, i.hi)))
    }

    pub fn is_closed(&self) -> bool {
        self.closure() == *self
    }

    /// Closed `radius`-neighbourhood, clipped to `[0,1]`.
    pub fn neighborhood(&self, radius: Rational64) -> Self {
        Self::from_intervals(self.parts.iter().map(|i| Interval::closed(i.lo - radius, i.hi + radius)))
    }

    /// Sample points: every endpoint plus the midpoint of every part.
    pub fn sample_points(&self) -> Vec<Rational64> {
        let two = Rational64::from_integer(2);
        let mut pts = Vec::new();
        for i in &self.parts {
            pts.push(i.lo);
            pts.push(i.hi);
            pts.push((i.lo + i.hi) / two);
        }
        pts
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("{}");
        }
        for (n, i) in self.parts.iter().enumerate() {
            if n > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn adjacent_half_open_parts_merge() {
        let s = IntervalSet::from_intervals([
            Interval::new(r(0, 1), true, r(1, 2), false),
            Interval::new(r(1, 2), true, r(1, 1), true),
        ]);
        assert_eq!(s, IntervalSet::full());
    }

    #[test]
    fn open_gap_at_a_point_survives() {
        let s = IntervalSet::from_intervals([
            Interval::new(r(0, 1), true, r(1, 2), false),
            Interval::new(r(1, 2), false, r(1, 1), true),
        ]);
        assert_eq!(s.parts().len(), 2);
        assert_eq!(s.complement(), IntervalSet::from_intervals([Interval::point(r(1, 2))]));
    }

    #[test]
    fn distance_examples() {
        let a = IntervalSet::from_intervals([Interval::closed(r(0, 1), r(1, 4))]);
        let b = IntervalSet::from_intervals([Interval::closed(r(1, 2), r(1, 1))]);
        assert_eq!(a.distance(&b), Some(r(1, 4)));
        let c = IntervalSet::from_intervals([Interval::new(r(0, 1), true, r(1, 2), false)]);
        let d = IntervalSet::from_intervals([Interval::new(r(1, 2), false, r(1, 1), true)]);
        assert_eq!(c.distance(&d), Some(r(0, 1)));
        assert_eq!(a.distance(&a), Some(r(0, 1)));
        assert_eq!(a.distance(&IntervalSet::empty()), None);
    }

    #[test]
    fn render() {
        let s = IntervalSet::from_intervals([
            Interval::closed(r(0, 1), r(1, 4)),
            Interval::new(r(1, 2), false, r(1, 1), true),
        ]);
        assert_eq!(s.to_string(), "[0,1/4] ∪ (1/2,1]");
    }
}
