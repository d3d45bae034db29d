//! Canonical symbolic subsets of a [`Universe`].

mod interval;
mod periodic;

use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;

pub use interval::{Interval, IntervalSet};
pub use periodic::Periodic;

use crate::error::{Error, Result};
use crate::universe::{Point, Universe};

/// Size classification of a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Cardinality {
    Finite(u64),
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Bits(u64),
    Periodic(Periodic),
    Intervals(IntervalSet),
}

/// A subset of one universe in canonical form, so `==` is extensional
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymSet {
    universe: Universe,
    repr: Repr,
}

fn full_mask(n: u32) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl SymSet {
    pub fn empty(universe: Universe) -> Self {
        let repr = match universe {
            Universe::Finite(_) => Repr::Bits(0),
            Universe::Integers { .. } => Repr::Periodic(Periodic::empty()),
            Universe::UnitInterval => Repr::Intervals(IntervalSet::empty()),
        };
        SymSet { universe, repr }
    }

    pub fn full(universe: Universe) -> Self {
        let repr = match universe {
            Universe::Finite(n) => Repr::Bits(full_mask(n)),
            Universe::Integers { with_infinity } => Repr::Periodic(Periodic::full(with_infinity)),
            Universe::UnitInterval => Repr::Intervals(IntervalSet::full()),
        };
        SymSet { universe, repr }
    }

    pub fn from_bits(universe: Universe, mask: u64) -> Result<Self> {
        match universe {
            Universe::Finite(n) => Ok(SymSet { universe, repr: Repr::Bits(mask & full_mask(n)) }),
            other => Err(Error::WrongUniverseKind { expected: "finite", got: other }),
        }
    }

    pub fn from_points(universe: Universe, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let points: Vec<Point> = points.into_iter().collect();
        for p in &points {
            universe.check_point(p)?;
        }
        Ok(match universe {
            Universe::Finite(_) => {
                let mask = points.iter().fold(0u64, |m, p| match p {
                    Point::Index(i) => m | (1 << i),
                    _ => m,
                });
                SymSet { universe, repr: Repr::Bits(mask) }
            }
            Universe::Integers { .. } => {
                let ints = points.iter().filter_map(|p| match p {
                    Point::Int(k) => Some(*k),
                    _ => None,
                });
                let inf = points.contains(&Point::Infinity);
                SymSet { universe, repr: Repr::Periodic(Periodic::finite(ints, inf)) }
            }
            Universe::UnitInterval => SymSet::from_intervals(
                points.iter().filter_map(Point::as_rational).map(Interval::point),
            ),
        })
    }

    pub fn singleton(universe: Universe, point: Point) -> Result<Self> {
        Self::from_points(universe, [point])
    }

    /// `(residues mod period) ∪ adds ∖ removes` on an integer universe.
    pub fn periodic(
        universe: Universe,
        period: u32,
        residues: impl IntoIterator<Item = u32>,
        adds: impl IntoIterator<Item = i64>,
        removes: impl IntoIterator<Item = i64>,
        infinity: bool,
    ) -> Result<Self> {
        match universe {
            Universe::Integers { with_infinity } => {
                if infinity && !with_infinity {
                    return Err(Error::PointOutsideUniverse("inf".into(), universe));
                }
                if period == 0 {
                    return Err(Error::InvalidAlgebra("period must be positive".into()));
                }
                Ok(SymSet {
                    universe,
                    repr: Repr::Periodic(Periodic::new(period, residues, adds, removes, infinity)),
                })
            }
            other => Err(Error::WrongUniverseKind { expected: "integers", got: other }),
        }
    }

    /// `{k : k ≡ residue (mod period)}` on an integer universe.
    pub fn residue_class(universe: Universe, period: u32, residue: u32) -> Result<Self> {
        Self::periodic(universe, period, [residue], [], [], false)
    }

    pub fn integers(universe: Universe, ints: impl IntoIterator<Item = i64>) -> Result<Self> {
        Self::periodic(universe, 1, [], ints, [], false)
    }

    pub fn from_intervals(parts: impl IntoIterator<Item = Interval>) -> Self {
        SymSet {
            universe: Universe::UnitInterval,
            repr: Repr::Intervals(IntervalSet::from_intervals(parts)),
        }
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn bits(&self) -> Option<u64> {
        match &self.repr {
            Repr::Bits(m) => Some(*m),
            _ => None,
        }
    }

    pub fn as_periodic(&self) -> Option<&Periodic> {
        match &self.repr {
            Repr::Periodic(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_intervals(&self) -> Option<&IntervalSet> {
        match &self.repr {
            Repr::Intervals(i) => Some(i),
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        match &self.repr {
            Repr::Bits(m) => *m == 0,
            Repr::Periodic(p) => p.pattern_is_empty() && p.flips().is_empty() && !p.contains_infinity(),
            Repr::Intervals(i) => i.is_empty(),
        }
    }

    pub fn is_full(&self) -> bool {
        *self == SymSet::full(self.universe)
    }

    pub fn contains(&self, point: &Point) -> bool {
        match (&self.repr, point) {
            (Repr::Bits(m), Point::Index(i)) => *i < 64 && m & (1 << i) != 0,
            (Repr::Periodic(p), Point::Int(k)) => p.contains(*k),
            (Repr::Periodic(p), Point::Infinity) => p.contains_infinity(),
            (Repr::Intervals(s), Point::Rat(r)) => s.contains(r),
            _ => false,
        }
    }

    pub fn complement(&self) -> SymSet {
        let repr = match (&self.repr, self.universe) {
            (Repr::Bits(m), Universe::Finite(n)) => Repr::Bits(!m & full_mask(n)),
            (Repr::Periodic(p), u) => Repr::Periodic(p.complement(u.has_infinity())),
            (Repr::Intervals(s), _) => Repr::Intervals(s.complement()),
            _ => unreachable!("representation always matches the universe"),
        };
        SymSet { universe: self.universe, repr }
    }

    fn combine(&self, other: &SymSet, op: impl Fn(bool, bool) -> bool + Copy) -> Result<SymSet> {
        self.universe.ensure_same(&other.universe)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => {
                let n = self.universe.finite_size().unwrap_or(64);
                let mut m = 0u64;
                for i in 0..n {
                    if op(a & (1 << i) != 0, b & (1 << i) != 0) {
                        m |= 1 << i;
                    }
                }
                Repr::Bits(m)
            }
            (Repr::Periodic(a), Repr::Periodic(b)) => Repr::Periodic(a.combine(b, op)),
            (Repr::Intervals(a), Repr::Intervals(b)) => {
                // a op b expressed through union and complement
                let (ta, tb) = (op(true, false), op(false, true));
                let both = op(true, true);
                let neither = op(false, false);
                let a_only = a.intersection(&b.complement());
                let b_only = b.intersection(&a.complement());
                let ab = a.intersection(b);
                let none = a.union(b).complement();
                let mut acc = IntervalSet::empty();
                for (keep, piece) in [(ta, a_only), (tb, b_only), (both, ab), (neither, none)] {
                    if keep {
                        acc = acc.union(&piece);
                    }
                }
                Repr::Intervals(acc)
            }
            _ => unreachable!("same universe implies same representation"),
        };
        Ok(SymSet { universe: self.universe, repr })
    }

    pub fn union(&self, other: &SymSet) -> Result<SymSet> {
        if let (Repr::Intervals(a), Repr::Intervals(b)) = (&self.repr, &other.repr) {
            return Ok(SymSet { universe: self.universe, repr: Repr::Intervals(a.union(b)) });
        }
        self.combine(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &SymSet) -> Result<SymSet> {
        if let (Repr::Intervals(a), Repr::Intervals(b)) = (&self.repr, &other.repr) {
            return Ok(SymSet { universe: self.universe, repr: Repr::Intervals(a.intersection(b)) });
        }
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &SymSet) -> Result<SymSet> {
        self.universe.ensure_same(&other.universe)?;
        self.intersect(&other.complement())
    }

    pub fn symmetric_difference(&self, other: &SymSet) -> Result<SymSet> {
        self.combine(other, |a, b| a != b)
    }

    pub fn is_subset(&self, other: &SymSet) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    pub fn is_disjoint(&self, other: &SymSet) -> Result<bool> {
        Ok(self.intersect(other)?.is_empty())
    }

    pub fn meets(&self, other: &SymSet) -> Result<bool> {
        Ok(!self.is_disjoint(other)?)
    }

    pub fn cardinality(&self) -> Cardinality {
        match &self.repr {
            Repr::Bits(m) => Cardinality::Finite(m.count_ones() as u64),
            Repr::Periodic(p) => match p.integer_count() {
                Some(k) => Cardinality::Finite(k as u64 + p.contains_infinity() as u64),
                None => Cardinality::Infinite,
            },
            Repr::Intervals(s) => match s.point_count() {
                Some(k) => Cardinality::Finite(k as u64),
                None => Cardinality::Infinite,
            },
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.cardinality(), Cardinality::Finite(_))
    }

    /// For integer universes: whether the set accumulates at ∞, i.e. is
    /// infinite or contains ∞ itself. Always false elsewhere.
    pub fn clusters_at_infinity(&self) -> bool {
        match &self.repr {
            Repr::Periodic(p) => !p.pattern_is_empty() || p.contains_infinity(),
            _ => false,
        }
    }

    /// Exact infimum distance between two nonempty unit-interval sets.
    pub fn distance(&self, other: &SymSet) -> Result<Rational64> {
        self.universe.ensure_same(&other.universe)?;
        match (&self.repr, &other.repr) {
            (Repr::Intervals(a), Repr::Intervals(b)) => a.distance(b).ok_or(Error::EmptyInput("distance")),
            _ => Err(Error::WrongUniverseKind { expected: "unit_interval", got: self.universe }),
        }
    }

    /// Topological closure in `[0,1]`; identity on other universes.
    pub fn interval_closure(&self) -> SymSet {
        match &self.repr {
            Repr::Intervals(s) => SymSet { universe: self.universe, repr: Repr::Intervals(s.closure()) },
            _ => self.clone(),
        }
    }

    /// Closed neighbourhood of radius `r` in `[0,1]`.
    pub fn neighborhood(&self, radius: Rational64) -> Result<SymSet> {
        match &self.repr {
            Repr::Intervals(s) => {
                Ok(SymSet { universe: self.universe, repr: Repr::Intervals(s.neighborhood(radius)) })
            }
            _ => Err(Error::WrongUniverseKind { expected: "unit_interval", got: self.universe }),
        }
    }

    /// `{k + offset : k ∈ self}` on an integer universe (∞ fixed).
    pub fn shifted(&self, offset: i64) -> Result<SymSet> {
        match &self.repr {
            Repr::Periodic(p) => Ok(SymSet { universe: self.universe, repr: Repr::Periodic(p.shifted(offset)) }),
            _ => Err(Error::WrongUniverseKind { expected: "integers", got: self.universe }),
        }
    }

    /// Members of a finite universe, or members inside `[-radius, radius]`
    /// (plus ∞) for integer universes. Interval sets yield sample points.
    pub fn sample_members(&self, radius: i64) -> Vec<Point> {
        match &self.repr {
            Repr::Bits(m) => (0..64u32).filter(|i| m & (1 << i) != 0).map(Point::Index).collect(),
            Repr::Periodic(p) => {
                let mut v: Vec<Point> = p.members_in(-radius, radius).into_iter().map(Point::Int).collect();
                if p.contains_infinity() {
                    v.push(Point::Infinity);
                }
                v
            }
            Repr::Intervals(s) => s
                .sample_points()
                .into_iter()
                .filter(|r| s.contains(r))
                .map(Point::Rat)
                .collect(),
        }
    }

    /// First `n` members in canonical enumeration order: ascending indices
    /// on finite universes; `∞, 0, 1, −1, 2, −2, …` on integer universes.
    pub fn enumeration_prefix(&self, n: usize) -> Result<SymSet> {
        match &self.repr {
            Repr::Bits(m) => {
                let mut out = 0u64;
                let mut taken = 0;
                for i in 0..64u32 {
                    if taken == n {
                        break;
                    }
                    if m & (1 << i) != 0 {
                        out |= 1 << i;
                        taken += 1;
                    }
                }
                SymSet::from_bits(self.universe, out)
            }
            Repr::Periodic(p) => {
                let mut pts = Vec::new();
                if n > 0 && p.contains_infinity() {
                    pts.push(Point::Infinity);
                }
                let bounded = p.pattern_is_empty();
                let limit = p.exception_radius();
                let mut k: i64 = 0;
                while pts.len() < n {
                    if bounded && k > limit {
                        break;
                    }
                    for cand in if k == 0 { vec![0] } else { vec![k, -k] } {
                        if pts.len() < n && p.contains(cand) {
                            pts.push(Point::Int(cand));
                        }
                    }
                    k += 1;
                }
                SymSet::from_points(self.universe, pts)
            }
            Repr::Intervals(_) => Err(Error::WrongUniverseKind { expected: "finite or integers", got: self.universe }),
        }
    }

    /// Half-width of an integer window that decides equality and inclusion
    /// among the given sets: `3·lcm(periods) + max |exception| + 1`.
    pub fn probe_radius<'a>(sets: impl IntoIterator<Item = &'a SymSet>) -> i64 {
        let mut lcm: i64 = 1;
        let mut radius: i64 = 0;
        for s in sets {
            if let Some(p) = s.as_periodic() {
                lcm = lcm.lcm(&(p.period() as i64));
                radius = radius.max(p.exception_radius());
            }
        }
        3 * lcm + radius + 1
    }
}

impl fmt::Display for SymSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Bits(m) => {
                let items: Vec<String> =
                    (0..64u32).filter(|i| m & (1 << i) != 0).map(|i| i.to_string()).collect();
                write!(f, "{{{}}}", items.join(","))
            }
            Repr::Periodic(p) => {
                let mut adds: Vec<String> = p.additions().iter().map(|k| k.to_string()).collect();
                if p.contains_infinity() {
                    adds.push("inf".into());
                }
                if p.pattern_is_empty() {
                    return write!(f, "{{{}}}", adds.join(","));
                }
                let residues: Vec<String> = p.residues().iter().map(|r| r.to_string()).collect();
                write!(f, "periodic(p={}, residues={{{}}})", p.period(), residues.join(","))?;
                if !adds.is_empty() {
                    write!(f, " + {{{}}}", adds.join(","))?;
                }
                let removes: Vec<String> = p.removals().iter().map(|k| k.to_string()).collect();
                if !removes.is_empty() {
                    write!(f, " - {{{}}}", removes.join(","))?;
                }
                Ok(())
            }
            Repr::Intervals(s) => write!(f, "{s}"),
        }
    }
}
