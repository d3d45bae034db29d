//! Proximity relations, the strongly-below relation `≺`, and the closure
//! and open sets they induce.

use std::fmt;
use std::sync::Arc;

use num_rational::Rational64;
use num_traits::Zero;

use crate::algebra::{AlgebraKind, SetAlgebra};
use crate::error::{Error, Result};
use crate::symset::SymSet;
use crate::universe::{Point, Universe};

/// Explicit nearness relation on `P(X) × P(X)` for a small finite `X`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NearTable {
    n: u32,
    rel: Vec<bool>,
}

/// Largest universe accepted for [`NearTable`].
pub const MAX_TABLE_POINTS: u32 = 4;

impl NearTable {
    pub fn from_fn(n: u32, near: impl Fn(u64, u64) -> bool) -> Result<Self> {
        if n == 0 || n > MAX_TABLE_POINTS {
            return Err(Error::UniverseTooLarge(n, MAX_TABLE_POINTS));
        }
        let size = 1usize << n;
        let mut rel = vec![false; size * size];
        for a in 0..size {
            for b in 0..size {
                rel[a * size + b] = near(a as u64, b as u64);
            }
        }
        Ok(NearTable { n, rel })
    }

    pub fn points(&self) -> u32 {
        self.n
    }

    pub fn get(&self, a: u64, b: u64) -> bool {
        self.rel[(a as usize) * (1 << self.n) + b as usize]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProximityKind {
    /// `A δ B` iff `A ∩ B ≠ ∅`.
    Discrete,
    /// Nearness in the one-point compactification of ℤ: meeting, or both
    /// accumulating at ∞.
    OnePoint,
    /// `δ_M`: not separated by any member of the algebra.
    FromAlgebra(Arc<SetAlgebra>),
    /// Distance zero in `[0,1] ∩ ℚ`.
    Metric,
    /// Arbitrary relation on a finite universe, validated only by the law
    /// checks.
    Table(Arc<NearTable>),
    /// `A δ_Y B` iff `A δ B`, for `A, B ⊆ Y`.
    Subspace { parent: Arc<Proximity>, carrier: SymSet },
}

/// How nearness is decided, for the rule-level arguments that only depend on
/// intersections and accumulation at ∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NearClass {
    /// Near iff the sets meet.
    Intersection,
    /// Near iff the sets meet or both accumulate at ∞.
    Cluster,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proximity {
    universe: Universe,
    kind: ProximityKind,
}

impl Proximity {
    pub fn discrete(universe: Universe) -> Self {
        Proximity { universe, kind: ProximityKind::Discrete }
    }

    pub fn one_point(universe: Universe) -> Result<Self> {
        match universe {
            Universe::Integers { .. } => Ok(Proximity { universe, kind: ProximityKind::OnePoint }),
            other => Err(Error::WrongUniverseKind { expected: "integers", got: other }),
        }
    }

    pub fn metric() -> Self {
        Proximity { universe: Universe::UnitInterval, kind: ProximityKind::Metric }
    }

    /// `δ_M` for an algebra of sets `M`.
    pub fn from_algebra(m: SetAlgebra) -> Self {
        Proximity { universe: m.universe(), kind: ProximityKind::FromAlgebra(Arc::new(m)) }
    }

    pub fn table(table: NearTable) -> Result<Self> {
        let universe = Universe::finite(table.points())?;
        Ok(Proximity { universe, kind: ProximityKind::Table(Arc::new(table)) })
    }

    pub fn subspace(parent: Proximity, carrier: SymSet) -> Result<Self> {
        parent.universe.ensure_same(&carrier.universe())?;
        parent.check_arg(&carrier)?;
        Ok(Proximity {
            universe: parent.universe,
            kind: ProximityKind::Subspace { parent: Arc::new(parent), carrier },
        })
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn kind(&self) -> &ProximityKind {
        &self.kind
    }

    pub fn algebra(&self) -> Option<&SetAlgebra> {
        match &self.kind {
            ProximityKind::FromAlgebra(m) => Some(m),
            _ => None,
        }
    }

    pub fn near_class(&self) -> NearClass {
        match &self.kind {
            ProximityKind::Discrete => NearClass::Intersection,
            ProximityKind::OnePoint => NearClass::Cluster,
            ProximityKind::FromAlgebra(m) => match m.kind() {
                AlgebraKind::PowerSet => NearClass::Intersection,
                AlgebraKind::FiniteCofinite => NearClass::Cluster,
                _ => NearClass::Other,
            },
            _ => NearClass::Other,
        }
    }

    /// The ground set the proximity lives on: the universe, or the carrier
    /// of a subspace.
    pub fn carrier(&self) -> SymSet {
        match &self.kind {
            ProximityKind::Subspace { carrier, .. } => carrier.clone(),
            _ => SymSet::full(self.universe),
        }
    }

    pub fn check_arg(&self, a: &SymSet) -> Result<()> {
        self.universe.ensure_same(&a.universe())?;
        if let ProximityKind::Subspace { carrier, .. } = &self.kind {
            if !a.is_subset(carrier)? {
                return Err(Error::OutsideCarrier);
            }
        }
        Ok(())
    }

    /// Complement relative to the carrier.
    pub fn relative_complement(&self, a: &SymSet) -> Result<SymSet> {
        self.check_arg(a)?;
        match &self.kind {
            ProximityKind::Subspace { carrier, .. } => carrier.difference(a),
            _ => Ok(a.complement()),
        }
    }

    pub fn near(&self, a: &SymSet, b: &SymSet) -> Result<bool> {
        self.check_arg(a)?;
        self.check_arg(b)?;
        if let ProximityKind::Table(t) = &self.kind {
            return Ok(t.get(a.bits().unwrap_or(0), b.bits().unwrap_or(0)));
        }
        if a.is_empty() || b.is_empty() {
            return Ok(false);
        }
        match &self.kind {
            ProximityKind::Discrete => a.meets(b),
            ProximityKind::OnePoint => {
                Ok(a.meets(b)? || (a.clusters_at_infinity() && b.clusters_at_infinity()))
            }
            ProximityKind::Metric => Ok(a.distance(b)?.is_zero()),
            ProximityKind::FromAlgebra(m) => Ok(!m.separates(a, b)?),
            ProximityKind::Subspace { parent, .. } => parent.near(a, b),
            ProximityKind::Table(_) => unreachable!(),
        }
    }

    /// `A ≺ B` iff `A` is not near the complement of `B`.
    pub fn strongly_below(&self, a: &SymSet, b: &SymSet) -> Result<bool> {
        let bc = self.relative_complement(b)?;
        Ok(!self.near(a, &bc)?)
    }

    /// `{x : {x} δ A}`.
    pub fn closure(&self, a: &SymSet) -> Result<SymSet> {
        self.check_arg(a)?;
        if self.universe.is_finite() {
            return self.closure_by_points(a);
        }
        match &self.kind {
            ProximityKind::Discrete => Ok(a.clone()),
            ProximityKind::OnePoint => self.with_infinity_if_clustering(a),
            ProximityKind::Metric => Ok(a.interval_closure()),
            ProximityKind::FromAlgebra(m) => match m.kind() {
                AlgebraKind::Atomic { .. } => Ok(m.saturation(a)?.expect("atomic")),
                AlgebraKind::FiniteCofinite => self.with_infinity_if_clustering(a),
                AlgebraKind::PowerSet => Ok(a.clone()),
                AlgebraKind::Induced(_) => {
                    Err(Error::UnsupportedKind("closure for an induced algebra on an infinite universe".into()))
                }
            },
            ProximityKind::Subspace { parent, carrier } => parent.closure(a)?.intersect(carrier),
            ProximityKind::Table(_) => unreachable!("tables are finite"),
        }
    }

    fn with_infinity_if_clustering(&self, a: &SymSet) -> Result<SymSet> {
        if self.universe.has_infinity() && a.clusters_at_infinity() {
            a.union(&SymSet::singleton(self.universe, Point::Infinity)?)
        } else {
            Ok(a.clone())
        }
    }

    fn closure_by_points(&self, a: &SymSet) -> Result<SymSet> {
        let carrier = self.carrier();
        let mut pts = Vec::new();
        for x in carrier.sample_members(0) {
            if self.near(&SymSet::singleton(self.universe, x.clone())?, a)? {
                pts.push(x);
            }
        }
        SymSet::from_points(self.universe, pts)
    }

    /// `U` is open iff `{x} ≺ U` for every `x ∈ U`.
    pub fn is_open(&self, u: &SymSet) -> Result<bool> {
        self.check_arg(u)?;
        if self.universe.is_finite() {
            for x in u.sample_members(0) {
                if !self.strongly_below(&SymSet::singleton(self.universe, x)?, u)? {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        // x ∈ U has {x} ≺ U iff x ∉ cl(Uᶜ)
        let uc = self.relative_complement(u)?;
        u.is_disjoint(&self.closure(&uc)?)
    }

    /// A witness `C` with `A ≺ C ≺ B`.
    pub fn interpolate(&self, a: &SymSet, b: &SymSet) -> Result<SymSet> {
        if !self.strongly_below(a, b)? {
            return Err(Error::NotStronglyBelow);
        }
        match &self.kind {
            ProximityKind::Discrete => Ok(a.clone()),
            ProximityKind::OnePoint => Ok(if a.clusters_at_infinity() { b.clone() } else { a.clone() }),
            ProximityKind::Metric => {
                if a.is_empty() || b.is_full() {
                    return Ok(if a.is_empty() { a.clone() } else { b.clone() });
                }
                let gap = a.distance(&b.complement())?;
                a.neighborhood(gap / Rational64::from_integer(2))
            }
            ProximityKind::FromAlgebra(m) => {
                let bc = b.complement();
                m.separator(a, &bc)?.ok_or(Error::NotStronglyBelow)
            }
            ProximityKind::Table(_) => self.interpolate_by_search(a, b),
            ProximityKind::Subspace { parent, carrier } => {
                let widened = b.union(&carrier.complement())?;
                parent.interpolate(a, &widened)?.intersect(carrier)
            }
        }
    }

    fn interpolate_by_search(&self, a: &SymSet, b: &SymSet) -> Result<SymSet> {
        let n = self.universe.finite_size().expect("finite universe");
        let carrier = self.carrier().bits().expect("finite universe");
        for mask in 0u64..(1 << n) {
            if mask & !carrier != 0 {
                continue;
            }
            let c = SymSet::from_bits(self.universe, mask)?;
            if self.strongly_below(a, &c)? && self.strongly_below(&c, b)? {
                return Ok(c);
            }
        }
        Err(Error::NoWitnessFound)
    }

    /// `{x}` for every point of a finite carrier.
    pub fn singletons(&self) -> Result<Vec<SymSet>> {
        self.carrier()
            .sample_members(0)
            .into_iter()
            .map(|x| SymSet::singleton(self.universe, x))
            .collect()
    }
}

impl fmt::Display for Proximity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ProximityKind::Discrete => write!(f, "discrete({})", self.universe),
            ProximityKind::OnePoint => write!(f, "one_point({})", self.universe),
            ProximityKind::Metric => f.write_str("metric(unit_interval)"),
            ProximityKind::FromAlgebra(m) => write!(f, "from_algebra({m})"),
            ProximityKind::Table(_) => write!(f, "table({})", self.universe),
            ProximityKind::Subspace { parent, carrier } => write!(f, "subspace({parent}, {carrier})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Universe {
        Universe::integers()
    }

    fn evens() -> SymSet {
        SymSet::residue_class(z(), 2, 0).unwrap()
    }

    fn odds() -> SymSet {
        SymSet::residue_class(z(), 2, 1).unwrap()
    }

    #[test]
    fn discrete_disjoint_points_are_far() {
        let u = Universe::Finite(3);
        let d = Proximity::discrete(u);
        let a = SymSet::from_bits(u, 0b001).unwrap();
        let b = SymSet::from_bits(u, 0b010).unwrap();
        assert!(!d.near(&a, &b).unwrap());
        assert!(d.strongly_below(&a, &SymSet::from_bits(u, 0b011).unwrap()).unwrap());
    }

    #[test]
    fn one_point_evens_near_odds() {
        let d = Proximity::one_point(z()).unwrap();
        assert!(d.near(&evens(), &odds()).unwrap());
        assert!(!d.near(&SymSet::integers(z(), [0, 2]).unwrap(), &odds()).unwrap());
        assert!(!d.strongly_below(&evens(), &evens()).unwrap());
        for n in -6..=6 {
            let single = SymSet::integers(z(), [2 * n]).unwrap();
            assert!(d.strongly_below(&single, &evens()).unwrap());
        }
    }

    #[test]
    fn one_point_closure_adds_infinity() {
        let zi = Universe::integers_with_infinity();
        let d = Proximity::one_point(zi).unwrap();
        let e = SymSet::residue_class(zi, 2, 0).unwrap();
        let expected = SymSet::periodic(zi, 2, [0], [], [], true).unwrap();
        assert_eq!(d.closure(&e).unwrap(), expected);
        assert!(d.is_open(&e).unwrap());
        assert!(!d.is_open(&expected).unwrap());
    }

    #[test]
    fn metric_closure_and_interpolation() {
        let d = Proximity::metric();
        let half = Rational64::new(1, 2);
        let a = SymSet::from_intervals([crate::Interval::new(Rational64::zero(), true, half, false)]);
        assert_eq!(d.closure(&a).unwrap(), SymSet::from_intervals([crate::Interval::closed(Rational64::zero(), half)]));
        let small = SymSet::from_intervals([crate::Interval::closed(Rational64::zero(), Rational64::new(1, 4))]);
        let big = SymSet::from_intervals([crate::Interval::closed(Rational64::zero(), half)]);
        let c = d.interpolate(&small, &big).unwrap();
        assert!(d.strongly_below(&small, &c).unwrap());
        assert!(d.strongly_below(&c, &big).unwrap());
    }

    #[test]
    fn interpolation_precondition() {
        let d = Proximity::one_point(z()).unwrap();
        assert_eq!(d.interpolate(&evens(), &evens()), Err(Error::NotStronglyBelow));
        let zero = SymSet::integers(z(), [0]).unwrap();
        assert_eq!(d.interpolate(&zero, &evens()).unwrap(), zero);
    }

    #[test]
    fn finite_cofinite_interpolant_is_cofinite() {
        let m = SetAlgebra::finite_cofinite(z()).unwrap();
        let d = Proximity::from_algebra(m.clone());
        let target = SymSet::integers(z(), [1]).unwrap().complement();
        let c = d.interpolate(&evens(), &target).unwrap();
        assert!(m.contains(&c).unwrap());
        assert!(!c.complement().clusters_at_infinity());
    }

    #[test]
    fn subspace_defers_to_parent() {
        let d = Proximity::one_point(z()).unwrap();
        let y = evens().union(&SymSet::integers(z(), [1, 3]).unwrap()).unwrap();
        let s = Proximity::subspace(d.clone(), y.clone()).unwrap();
        let a = SymSet::integers(z(), [1]).unwrap();
        let b = evens();
        assert_eq!(s.near(&a, &b).unwrap(), d.near(&a, &b).unwrap());
        assert!(matches!(s.near(&odds(), &b), Err(Error::OutsideCarrier)));
        let c = s.interpolate(&a, &SymSet::integers(z(), [1, 3]).unwrap()).unwrap();
        assert!(c.is_subset(&y).unwrap());
    }
}
