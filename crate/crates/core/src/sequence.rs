//! Countable families in closed form: set sequences with computable unions
//! and intersections, and function sequences with computable pointwise
//! limits.

use std::fmt;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::function::{FunctionKind, FunctionSpec};
use crate::symset::{Interval, SymSet};
use crate::universe::Universe;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceKind {
    /// Every term is the same set.
    Constant(SymSet),
    /// The listed sets, then `tail` forever.
    ListThenConstant { list: Vec<SymSet>, tail: SymSet },
    /// Term `n` is the first `n` members of the set in enumeration order.
    Prefix(SymSet),
    /// Term `n` is `core ∪ (tail ∩ {k : |k| ≥ n})`; ∞ counts as having
    /// every absolute value.
    CoreWithShrinkingTail { core: SymSet, tail: SymSet },
    /// Term `n` is the closed `1/(n+1)`-neighbourhood of the set in `[0,1]`.
    ShrinkingNeighborhood(SymSet),
    /// Term `n` is `[lo, hi − (hi−lo)/(n+2)]`, exhausting `[lo, hi)`.
    ClosedExhaustion { lo: Rational64, hi: Rational64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSequence {
    universe: Universe,
    kind: SequenceKind,
}

impl SetSequence {
    pub fn constant(a: SymSet) -> Self {
        SetSequence { universe: a.universe(), kind: SequenceKind::Constant(a) }
    }

    pub fn list_then_constant(list: Vec<SymSet>, tail: SymSet) -> Result<Self> {
        for s in &list {
            tail.universe().ensure_same(&s.universe())?;
        }
        Ok(SetSequence { universe: tail.universe(), kind: SequenceKind::ListThenConstant { list, tail } })
    }

    pub fn prefixes(s: SymSet) -> Result<Self> {
        match s.universe() {
            Universe::UnitInterval => Err(Error::WrongUniverseKind { expected: "finite or integers", got: s.universe() }),
            u => Ok(SetSequence { universe: u, kind: SequenceKind::Prefix(s) }),
        }
    }

    pub fn shrinking_tail(core: SymSet, tail: SymSet) -> Result<Self> {
        core.universe().ensure_same(&tail.universe())?;
        match core.universe() {
            u @ Universe::Integers { .. } => Ok(SetSequence { universe: u, kind: SequenceKind::CoreWithShrinkingTail { core, tail } }),
            other => Err(Error::WrongUniverseKind { expected: "integers", got: other }),
        }
    }

    pub fn shrinking_neighborhoods(a: SymSet) -> Result<Self> {
        match a.universe() {
            Universe::UnitInterval => Ok(SetSequence { universe: Universe::UnitInterval, kind: SequenceKind::ShrinkingNeighborhood(a) }),
            other => Err(Error::WrongUniverseKind { expected: "unit_interval", got: other }),
        }
    }

    pub fn closed_exhaustion(lo: Rational64, hi: Rational64) -> Result<Self> {
        let zero = Rational64::from_integer(0);
        let one = Rational64::from_integer(1);
        if !(zero <= lo && lo < hi && hi <= one) {
            return Err(Error::InvalidSequence(format!("exhaustion needs 0 ≤ lo < hi ≤ 1, got {lo}, {hi}")));
        }
        Ok(SetSequence { universe: Universe::UnitInterval, kind: SequenceKind::ClosedExhaustion { lo, hi } })
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn kind(&self) -> &SequenceKind {
        &self.kind
    }

    pub fn term(&self, n: usize) -> Result<SymSet> {
        match &self.kind {
            SequenceKind::Constant(a) => Ok(a.clone()),
            SequenceKind::ListThenConstant { list, tail } => Ok(list.get(n).unwrap_or(tail).clone()),
            SequenceKind::Prefix(s) => s.enumeration_prefix(n),
            SequenceKind::CoreWithShrinkingTail { core, tail } => {
                core.union(&tail.intersect(&far_from_origin(self.universe, n)?)?)
            }
            SequenceKind::ShrinkingNeighborhood(a) => {
                a.neighborhood(Rational64::new(1, n as i64 + 1))
            }
            SequenceKind::ClosedExhaustion { lo, hi } => {
                let hi_n = *hi - (*hi - *lo) / Rational64::from_integer(n as i64 + 2);
                Ok(SymSet::from_intervals([Interval::closed(*lo, hi_n)]))
            }
        }
    }

    /// `⋃ₙ term(n)`, in closed form.
    pub fn limit_union(&self) -> Result<SymSet> {
        match &self.kind {
            SequenceKind::Constant(a) => Ok(a.clone()),
            SequenceKind::ListThenConstant { list, tail } => {
                list.iter().try_fold(tail.clone(), |acc, s| acc.union(s))
            }
            SequenceKind::Prefix(s) => Ok(s.clone()),
            SequenceKind::CoreWithShrinkingTail { core, tail } => core.union(tail),
            SequenceKind::ShrinkingNeighborhood(_) => self.term(0),
            SequenceKind::ClosedExhaustion { lo, hi } => {
                Ok(SymSet::from_intervals([Interval::new(*lo, true, *hi, false)]))
            }
        }
    }

    /// `⋂ₙ term(n)`, in closed form.
    pub fn limit_intersection(&self) -> Result<SymSet> {
        match &self.kind {
            SequenceKind::Constant(a) => Ok(a.clone()),
            SequenceKind::ListThenConstant { list, tail } => {
                list.iter().try_fold(tail.clone(), |acc, s| acc.intersect(s))
            }
            SequenceKind::Prefix(s) => s.enumeration_prefix(0),
            SequenceKind::CoreWithShrinkingTail { core, tail } => {
                if self.universe.has_infinity() {
                    let inf = SymSet::singleton(self.universe, crate::Point::Infinity)?;
                    core.union(&tail.intersect(&inf)?)
                } else {
                    Ok(core.clone())
                }
            }
            SequenceKind::ShrinkingNeighborhood(a) => Ok(a.interval_closure()),
            SequenceKind::ClosedExhaustion { .. } => self.term(0),
        }
    }

    /// Index from which every term equals `term(n0)`, when there is one.
    pub fn stable_from(&self) -> Option<usize> {
        match &self.kind {
            SequenceKind::Constant(_) => Some(0),
            SequenceKind::ListThenConstant { list, .. } => Some(list.len()),
            SequenceKind::Prefix(s) => match s.cardinality() {
                crate::Cardinality::Finite(k) => Some(k as usize),
                crate::Cardinality::Infinite => None,
            },
            SequenceKind::CoreWithShrinkingTail { tail, core } => {
                let extra = tail.difference(core).ok()?;
                let p = extra.as_periodic()?;
                if !p.pattern_is_empty() {
                    return None;
                }
                Some(p.exception_radius() as usize + 1)
            }
            SequenceKind::ShrinkingNeighborhood(a) => a.is_empty().then_some(0),
            SequenceKind::ClosedExhaustion { .. } => None,
        }
    }

    /// Computed by rule from the closed form.
    pub fn is_nonincreasing(&self) -> Result<bool> {
        match &self.kind {
            SequenceKind::Constant(_)
            | SequenceKind::CoreWithShrinkingTail { .. }
            | SequenceKind::ShrinkingNeighborhood(_) => Ok(true),
            SequenceKind::ListThenConstant { list, tail } => chain_holds(list, tail, |a, b| b.is_subset(a)),
            SequenceKind::Prefix(s) => Ok(s.cardinality() == crate::Cardinality::Finite(0)),
            SequenceKind::ClosedExhaustion { .. } => Ok(false),
        }
    }

    pub fn is_nondecreasing(&self) -> Result<bool> {
        match &self.kind {
            SequenceKind::Constant(_) | SequenceKind::Prefix(_) | SequenceKind::ClosedExhaustion { .. } => Ok(true),
            SequenceKind::ListThenConstant { list, tail } => chain_holds(list, tail, |a, b| a.is_subset(b)),
            SequenceKind::CoreWithShrinkingTail { core, tail } => tail.is_subset(core),
            SequenceKind::ShrinkingNeighborhood(a) => Ok(a.is_empty() || a.is_full()),
        }
    }
}

fn chain_holds(list: &[SymSet], tail: &SymSet, rel: impl Fn(&SymSet, &SymSet) -> Result<bool>) -> Result<bool> {
    let mut prev: Option<&SymSet> = None;
    for s in list.iter().chain(std::iter::once(tail)) {
        if let Some(p) = prev {
            if !rel(p, s)? {
                return Ok(false);
            }
        }
        prev = Some(s);
    }
    Ok(true)
}

/// `{k : |k| ≥ n}`, with ∞ included when present.
pub fn far_from_origin(universe: Universe, n: usize) -> Result<SymSet> {
    let n = n as i64;
    Ok(SymSet::integers(universe, (1 - n)..n)?.complement())
}

impl fmt::Display for SetSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SequenceKind::Constant(a) => write!(f, "constant({a})"),
            SequenceKind::ListThenConstant { list, tail } => {
                let items: Vec<String> = list.iter().map(|s| s.to_string()).collect();
                write!(f, "list({}; tail={tail})", items.join("; "))
            }
            SequenceKind::Prefix(s) => write!(f, "prefixes({s})"),
            SequenceKind::CoreWithShrinkingTail { core, tail } => write!(f, "shrink_tail(core={core}, tail={tail})"),
            SequenceKind::ShrinkingNeighborhood(a) => write!(f, "neighborhoods({a})"),
            SequenceKind::ClosedExhaustion { lo, hi } => write!(f, "exhaust({lo}, {hi})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctionSequenceKind {
    Constant(FunctionSpec),
    /// The listed maps, then `limit` forever.
    EventuallyConstant { list: Vec<FunctionSpec>, limit: FunctionSpec },
    /// Term `n ≥ 1` is `fⁿ`, pointwise.
    Powers(FunctionSpec),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionSequence {
    kind: FunctionSequenceKind,
}

impl FunctionSequence {
    pub fn constant(f: FunctionSpec) -> Self {
        FunctionSequence { kind: FunctionSequenceKind::Constant(f) }
    }

    pub fn eventually_constant(list: Vec<FunctionSpec>, limit: FunctionSpec) -> Result<Self> {
        for g in &list {
            g.domain().ensure_same(&limit.domain())?;
            g.codomain().ensure_same(&limit.codomain())?;
        }
        Ok(FunctionSequence { kind: FunctionSequenceKind::EventuallyConstant { list, limit } })
    }

    pub fn powers(f: FunctionSpec) -> Result<Self> {
        if f.codomain() != Universe::UnitInterval {
            return Err(Error::WrongUniverseKind { expected: "unit_interval", got: f.codomain() });
        }
        Ok(FunctionSequence { kind: FunctionSequenceKind::Powers(f) })
    }

    pub fn kind(&self) -> &FunctionSequenceKind {
        &self.kind
    }

    pub fn domain(&self) -> Universe {
        self.first().domain()
    }

    pub fn codomain(&self) -> Universe {
        self.first().codomain()
    }

    fn first(&self) -> &FunctionSpec {
        match &self.kind {
            FunctionSequenceKind::Constant(f) | FunctionSequenceKind::Powers(f) => f,
            FunctionSequenceKind::EventuallyConstant { list, limit } => list.first().unwrap_or(limit),
        }
    }

    /// Term `n`, counting from 1.
    pub fn term(&self, n: u32) -> Result<FunctionSpec> {
        let n = n.max(1);
        match &self.kind {
            FunctionSequenceKind::Constant(f) => Ok(f.clone()),
            FunctionSequenceKind::EventuallyConstant { list, limit } => {
                Ok(list.get(n as usize - 1).unwrap_or(limit).clone())
            }
            FunctionSequenceKind::Powers(f) => f.power(n),
        }
    }

    /// Pointwise limit. For powers this is the indicator of `f⁻¹(1)`, since
    /// `rⁿ → 0` for every rational `0 ≤ r < 1`.
    pub fn limit(&self) -> Result<FunctionSpec> {
        match &self.kind {
            FunctionSequenceKind::Constant(f) => Ok(f.clone()),
            FunctionSequenceKind::EventuallyConstant { limit, .. } => Ok(limit.clone()),
            FunctionSequenceKind::Powers(f) => f.ones_indicator(),
        }
    }

    /// Distinct terms that must be checked: later terms repeat the level
    /// structure of an earlier one.
    pub fn representative_terms(&self) -> Result<Vec<FunctionSpec>> {
        match &self.kind {
            FunctionSequenceKind::Constant(f) => Ok(vec![f.clone()]),
            FunctionSequenceKind::EventuallyConstant { list, limit } => {
                let mut v = list.clone();
                v.push(limit.clone());
                Ok(v)
            }
            FunctionSequenceKind::Powers(f) => {
                if matches!(f.kind(), FunctionKind::Decay { .. }) || f.has_finite_image() {
                    Ok(vec![f.clone(), f.power(2)?])
                } else {
                    Err(Error::LimitNotComputable)
                }
            }
        }
    }
}

impl fmt::Display for FunctionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FunctionSequenceKind::Constant(g) => write!(f, "constant({g})"),
            FunctionSequenceKind::EventuallyConstant { list, limit } => {
                let items: Vec<String> = list.iter().map(|g| g.to_string()).collect();
                write!(f, "eventually({}; limit={limit})", items.join("; "))
            }
            FunctionSequenceKind::Powers(g) => write!(f, "powers({g})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::Point;

    fn z() -> Universe {
        Universe::integers()
    }

    #[test]
    fn shrinking_tail_terms() {
        let e = SymSet::residue_class(z(), 2, 0).unwrap();
        let o = e.complement();
        let s = SetSequence::shrinking_tail(e.clone(), o.clone()).unwrap();
        let t3 = s.term(3).unwrap();
        for k in -10..=10i64 {
            let expected = k % 2 == 0 || k.abs() >= 3;
            assert_eq!(t3.contains(&Point::Int(k)), expected);
        }
        assert_eq!(s.limit_intersection().unwrap(), e);
        assert!(s.limit_union().unwrap().is_full());
        assert!(s.is_nonincreasing().unwrap());
    }

    #[test]
    fn shrinking_tail_keeps_infinity() {
        let u = Universe::integers_with_infinity();
        let e = SymSet::residue_class(u, 2, 0).unwrap();
        let s = SetSequence::shrinking_tail(e.clone(), e.complement()).unwrap();
        assert!(s.term(5).unwrap().contains(&Point::Infinity));
        assert!(s.limit_intersection().unwrap().contains(&Point::Infinity));
    }

    #[test]
    fn exhaustion_limits() {
        let s = SetSequence::closed_exhaustion(Rational64::new(0, 1), Rational64::new(1, 2)).unwrap();
        assert_eq!(s.term(0).unwrap().to_string(), "[0,1/4]");
        assert_eq!(s.limit_union().unwrap().to_string(), "[0,1/2)");
    }

    #[test]
    fn powers_limit_is_indicator() {
        let u = Universe::Finite(3);
        let f = FunctionSpec::table(u, Universe::UnitInterval, vec![Point::rat(0, 1), Point::rat(1, 2), Point::rat(1, 1)]).unwrap();
        let fs = FunctionSequence::powers(f).unwrap();
        let lim = fs.limit().unwrap();
        assert_eq!(lim.eval(&Point::Index(2)).unwrap(), Point::rat(1, 1));
        assert_eq!(lim.eval(&Point::Index(1)).unwrap(), Point::rat(0, 1));
        assert_eq!(fs.term(4).unwrap().eval(&Point::Index(1)).unwrap(), Point::rat(1, 16));
    }
}
