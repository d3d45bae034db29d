//! Total maps between universes with computable images and preimages.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::symset::SymSet;
use crate::universe::{Point, Universe};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctionKind {
    /// Explicit value list on a finite domain.
    Table(Vec<Point>),
    /// Value per residue class mod `period`, with finitely many exceptions.
    ResidueMap {
        period: u32,
        values: Vec<Point>,
        exceptions: BTreeMap<i64, Point>,
        at_infinity: Option<Point>,
    },
    /// Indicator of a set, valued in `{0,1}` of the codomain.
    Characteristic(SymSet),
    /// Constant on each piece of a finite partition of the domain.
    Step(Vec<(SymSet, Point)>),
    /// `k ↦ k + offset` on ℤ (∞ fixed).
    Shift(i64),
    Identity,
    /// `k ↦ 1` on `toward` and at ∞, `(1 − 1/(|k|+2))^exponent` elsewhere.
    Decay { toward: SymSet, exponent: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionSpec {
    domain: Universe,
    codomain: Universe,
    kind: FunctionKind,
}

fn unit_value(codomain: Universe, one: bool) -> Result<Point> {
    match codomain {
        Universe::Finite(n) if n >= 2 => Ok(Point::Index(one as u32)),
        Universe::UnitInterval => Ok(Point::Rat(Rational64::from_integer(one as i64))),
        other => Err(Error::WrongUniverseKind { expected: "finite(≥2) or unit_interval", got: other }),
    }
}

impl FunctionSpec {
    pub fn table(domain: Universe, codomain: Universe, values: Vec<Point>) -> Result<Self> {
        let n = domain.finite_size().ok_or(Error::WrongUniverseKind { expected: "finite", got: domain })?;
        if values.len() != n as usize {
            return Err(Error::InvalidFunction(format!("table has {} values for {n} points", values.len())));
        }
        for v in &values {
            codomain.check_point(v)?;
        }
        Ok(FunctionSpec { domain, codomain, kind: FunctionKind::Table(values) })
    }

    pub fn residue_map(
        domain: Universe,
        codomain: Universe,
        period: u32,
        values: Vec<Point>,
        exceptions: BTreeMap<i64, Point>,
        at_infinity: Option<Point>,
    ) -> Result<Self> {
        let Universe::Integers { with_infinity } = domain else {
            return Err(Error::WrongUniverseKind { expected: "integers", got: domain });
        };
        if period == 0 || values.len() != period as usize {
            return Err(Error::InvalidFunction(format!("need {period} residue values, got {}", values.len())));
        }
        if with_infinity != at_infinity.is_some() {
            return Err(Error::InvalidFunction("value at ∞ must be given exactly when the domain has ∞".into()));
        }
        for v in values.iter().chain(exceptions.values()).chain(at_infinity.iter()) {
            codomain.check_point(v)?;
        }
        Ok(FunctionSpec { domain, codomain, kind: FunctionKind::ResidueMap { period, values, exceptions, at_infinity } })
    }

    pub fn characteristic(set: SymSet, codomain: Universe) -> Result<Self> {
        unit_value(codomain, true)?;
        Ok(FunctionSpec { domain: set.universe(), codomain, kind: FunctionKind::Characteristic(set) })
    }

    pub fn step(domain: Universe, codomain: Universe, pieces: Vec<(SymSet, Point)>) -> Result<Self> {
        let mut cover = SymSet::empty(domain);
        let mut merged: BTreeMap<Point, SymSet> = BTreeMap::new();
        for (piece, value) in pieces {
            domain.ensure_same(&piece.universe())?;
            codomain.check_point(&value)?;
            if piece.meets(&cover)? {
                return Err(Error::InvalidFunction(format!("step pieces overlap at {piece}")));
            }
            cover = cover.union(&piece)?;
            if piece.is_empty() {
                continue;
            }
            let slot = merged.entry(value).or_insert_with(|| SymSet::empty(domain));
            *slot = slot.union(&piece)?;
        }
        if !cover.is_full() {
            return Err(Error::InvalidFunction("step pieces do not cover the domain".into()));
        }
        let pieces = merged.into_iter().map(|(v, s)| (s, v)).collect();
        Ok(FunctionSpec { domain, codomain, kind: FunctionKind::Step(pieces) })
    }

    pub fn constant(domain: Universe, codomain: Universe, value: Point) -> Result<Self> {
        Self::step(domain, codomain, vec![(SymSet::full(domain), value)])
    }

    pub fn shift(universe: Universe, offset: i64) -> Result<Self> {
        match universe {
            Universe::Integers { .. } => {
                Ok(FunctionSpec { domain: universe, codomain: universe, kind: FunctionKind::Shift(offset) })
            }
            other => Err(Error::WrongUniverseKind { expected: "integers", got: other }),
        }
    }

    pub fn identity(universe: Universe) -> Self {
        FunctionSpec { domain: universe, codomain: universe, kind: FunctionKind::Identity }
    }

    pub fn decay_toward(toward: SymSet) -> Result<Self> {
        match toward.universe() {
            Universe::Integers { .. } => Ok(FunctionSpec {
                domain: toward.universe(),
                codomain: Universe::UnitInterval,
                kind: FunctionKind::Decay { toward, exponent: 1 },
            }),
            other => Err(Error::WrongUniverseKind { expected: "integers", got: other }),
        }
    }

    pub fn domain(&self) -> Universe {
        self.domain
    }

    pub fn codomain(&self) -> Universe {
        self.codomain
    }

    pub fn kind(&self) -> &FunctionKind {
        &self.kind
    }

    pub fn eval(&self, x: &Point) -> Result<Point> {
        self.domain.check_point(x)?;
        match &self.kind {
            FunctionKind::Table(values) => match x {
                Point::Index(i) => Ok(values[*i as usize].clone()),
                _ => unreachable!("checked against the domain"),
            },
            FunctionKind::ResidueMap { period, values, exceptions, at_infinity } => match x {
                Point::Int(k) => Ok(exceptions
                    .get(k)
                    .cloned()
                    .unwrap_or_else(|| values[k.rem_euclid(*period as i64) as usize].clone())),
                Point::Infinity => Ok(at_infinity.clone().expect("validated")),
                _ => unreachable!("checked against the domain"),
            },
            FunctionKind::Characteristic(s) => unit_value(self.codomain, s.contains(x)),
            FunctionKind::Step(pieces) => pieces
                .iter()
                .find(|(s, _)| s.contains(x))
                .map(|(_, v)| v.clone())
                .ok_or_else(|| Error::InvalidFunction("step pieces do not cover the point".into())),
            FunctionKind::Shift(off) => match x {
                Point::Int(k) => Ok(Point::Int(k + off)),
                other => Ok(other.clone()),
            },
            FunctionKind::Identity => Ok(x.clone()),
            FunctionKind::Decay { toward, exponent } => match x {
                Point::Int(k) if !toward.contains(x) => {
                    let base = Rational64::one() - Rational64::new(1, k.abs() + 2);
                    checked_pow(base, *exponent).map(Point::Rat)
                }
                _ => Ok(Point::Rat(Rational64::one())),
            },
        }
    }

    /// Finite-image decomposition: each value with its (nonempty) preimage,
    /// ordered by value. `None` when the image is infinite.
    pub fn level_sets(&self) -> Result<Option<Vec<(Point, SymSet)>>> {
        let mut out: BTreeMap<Point, SymSet> = BTreeMap::new();
        let mut put = |v: Point, s: SymSet| -> Result<()> {
            if s.is_empty() {
                return Ok(());
            }
            match out.get_mut(&v) {
                Some(acc) => *acc = acc.union(&s)?,
                None => {
                    out.insert(v, s);
                }
            }
            Ok(())
        };
        match &self.kind {
            FunctionKind::Table(values) => {
                for (i, v) in values.iter().enumerate() {
                    put(v.clone(), SymSet::singleton(self.domain, Point::Index(i as u32))?)?;
                }
            }
            FunctionKind::ResidueMap { period, values, exceptions, at_infinity } => {
                let mut distinct: Vec<&Point> = values.iter().chain(exceptions.values()).chain(at_infinity.iter()).collect();
                distinct.sort();
                distinct.dedup();
                for v in distinct {
                    let residues = (0..*period).filter(|&r| &values[r as usize] == v);
                    let adds = exceptions.iter().filter(|(_, w)| *w == v).map(|(k, _)| *k);
                    let removes = exceptions.iter().filter(|(_, w)| *w != v).map(|(k, _)| *k);
                    let inf = at_infinity.as_ref() == Some(v);
                    let s = SymSet::periodic(self.domain, *period, residues, adds.collect::<Vec<_>>(), removes.collect::<Vec<_>>(), inf)?;
                    put(v.clone(), s)?;
                }
            }
            FunctionKind::Characteristic(s) => {
                put(unit_value(self.codomain, false)?, s.complement())?;
                put(unit_value(self.codomain, true)?, s.clone())?;
            }
            FunctionKind::Step(pieces) => {
                for (s, v) in pieces {
                    put(v.clone(), s.clone())?;
                }
            }
            FunctionKind::Identity => {
                let Some(points) = self.domain.points() else { return Ok(None) };
                for p in points {
                    put(p.clone(), SymSet::singleton(self.domain, p)?)?;
                }
            }
            FunctionKind::Shift(_) | FunctionKind::Decay { .. } => return Ok(None),
        }
        Ok(Some(out.into_iter().collect()))
    }

    pub fn has_finite_image(&self) -> bool {
        !matches!(self.kind, FunctionKind::Shift(_) | FunctionKind::Decay { .. })
            && !(matches!(self.kind, FunctionKind::Identity) && !self.domain.is_finite())
    }

    pub fn preimage(&self, s: &SymSet) -> Result<SymSet> {
        self.codomain.ensure_same(&s.universe())?;
        match &self.kind {
            FunctionKind::Shift(off) => return s.shifted(-off),
            FunctionKind::Identity if !self.domain.is_finite() => return Ok(s.clone()),
            FunctionKind::Decay { .. } if s.is_empty() => return Ok(SymSet::empty(self.domain)),
            FunctionKind::Decay { .. } if s.is_full() => return Ok(SymSet::full(self.domain)),
            FunctionKind::Decay { .. } => {
                return Err(Error::UnsupportedKind("preimage under a decaying map".into()));
            }
            _ => {}
        }
        let levels = self.level_sets()?.expect("finite image");
        let mut acc = SymSet::empty(self.domain);
        for (v, level) in levels {
            if s.contains(&v) {
                acc = acc.union(&level)?;
            }
        }
        Ok(acc)
    }

    pub fn image(&self, s: &SymSet) -> Result<SymSet> {
        self.domain.ensure_same(&s.universe())?;
        match &self.kind {
            FunctionKind::Shift(off) => return s.shifted(*off),
            FunctionKind::Identity if !self.domain.is_finite() => return Ok(s.clone()),
            FunctionKind::Decay { .. } if s.is_empty() => return Ok(SymSet::empty(self.codomain)),
            FunctionKind::Decay { .. } => {
                return Err(Error::UnsupportedKind("image under a decaying map".into()));
            }
            _ => {}
        }
        let levels = self.level_sets()?.expect("finite image");
        let mut pts = Vec::new();
        for (v, level) in levels {
            if level.meets(s)? {
                pts.push(v);
            }
        }
        SymSet::from_points(self.codomain, pts)
    }

    /// `outer ∘ self`.
    pub fn then(&self, outer: &FunctionSpec) -> Result<FunctionSpec> {
        self.codomain.ensure_same(&outer.domain)?;
        match (&self.kind, &outer.kind) {
            (FunctionKind::Identity, _) => return Ok(outer.clone()),
            (_, FunctionKind::Identity) => return Ok(self.clone()),
            (FunctionKind::Shift(a), FunctionKind::Shift(b)) => return Self::shift(self.domain, a + b),
            _ => {}
        }
        if let Some(n) = self.domain.finite_size() {
            let values = (0..n)
                .map(|i| outer.eval(&self.eval(&Point::Index(i))?))
                .collect::<Result<Vec<_>>>()?;
            return Self::table(self.domain, outer.codomain, values);
        }
        if let Some(levels) = self.level_sets()? {
            let pieces = levels
                .into_iter()
                .map(|(v, s)| Ok((s, outer.eval(&v)?)))
                .collect::<Result<Vec<_>>>()?;
            return Self::step(self.domain, outer.codomain, pieces);
        }
        if let Some(levels) = outer.level_sets()? {
            let pieces = levels
                .into_iter()
                .map(|(w, s)| Ok((self.preimage(&s)?, w)))
                .collect::<Result<Vec<_>>>()?;
            return Self::step(self.domain, outer.codomain, pieces);
        }
        Err(Error::UnsupportedKind(format!("composition of {self} with {outer}")))
    }

    /// Pointwise `n`-th power of a `[0,1]`-valued map.
    pub fn power(&self, n: u32) -> Result<FunctionSpec> {
        if self.codomain != Universe::UnitInterval {
            return Err(Error::WrongUniverseKind { expected: "unit_interval", got: self.codomain });
        }
        if let FunctionKind::Decay { toward, exponent } = &self.kind {
            return Ok(FunctionSpec {
                domain: self.domain,
                codomain: self.codomain,
                kind: FunctionKind::Decay { toward: toward.clone(), exponent: exponent * n },
            });
        }
        let levels = self.level_sets()?.ok_or(Error::LimitNotComputable)?;
        let pieces = levels
            .into_iter()
            .map(|(v, s)| {
                let r = v.as_rational().expect("unit interval value");
                Ok((s, Point::Rat(checked_pow(r, n)?)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::step(self.domain, self.codomain, pieces)
    }

    /// Indicator (into `[0,1]`) of where the map takes the value 1.
    pub fn ones_indicator(&self) -> Result<FunctionSpec> {
        let one = Point::Rat(Rational64::one());
        let ones = match &self.kind {
            FunctionKind::Decay { toward, .. } => {
                if self.domain.has_infinity() {
                    toward.union(&SymSet::singleton(self.domain, Point::Infinity)?)?
                } else {
                    toward.clone()
                }
            }
            _ => self.preimage(&SymSet::singleton(self.codomain, one)?)?,
        };
        Self::characteristic(ones, Universe::UnitInterval)
    }
}

fn checked_pow(base: Rational64, exp: u32) -> Result<Rational64> {
    let mut acc = Rational64::one();
    for _ in 0..exp {
        let numer = acc.numer().checked_mul(*base.numer()).ok_or(Error::Overflow("power"))?;
        let denom = acc.denom().checked_mul(*base.denom()).ok_or(Error::Overflow("power"))?;
        acc = Rational64::new(numer, denom);
    }
    if base.is_zero() && exp > 0 {
        return Ok(Rational64::zero());
    }
    Ok(acc)
}

impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FunctionKind::Table(values) => {
                let items: Vec<String> = values.iter().enumerate().map(|(i, v)| format!("{i}->{v}")).collect();
                write!(f, "table{{{}}}", items.join(", "))
            }
            FunctionKind::ResidueMap { period, values, exceptions, at_infinity } => {
                let items: Vec<String> = values.iter().enumerate().map(|(i, v)| format!("{i}->{v}")).collect();
                write!(f, "residue_map{{p={period}; {}", items.join(", "))?;
                if !exceptions.is_empty() {
                    let ex: Vec<String> = exceptions.iter().map(|(k, v)| format!("{k}->{v}")).collect();
                    write!(f, "; except {}", ex.join(", "))?;
                }
                if let Some(v) = at_infinity {
                    write!(f, "; inf->{v}")?;
                }
                f.write_str("}")
            }
            FunctionKind::Characteristic(s) => write!(f, "chi({s})"),
            FunctionKind::Step(pieces) => {
                let items: Vec<String> = pieces.iter().map(|(s, v)| format!("{s} -> {v}")).collect();
                write!(f, "step{{{}}}", items.join("; "))
            }
            FunctionKind::Shift(k) => write!(f, "shift({k})"),
            FunctionKind::Identity => f.write_str("identity"),
            FunctionKind::Decay { toward, exponent: 1 } => write!(f, "decay({toward})"),
            FunctionKind::Decay { toward, exponent } => write!(f, "decay({toward}, {exponent})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_map_level_sets_partition_domain() {
        let z = Universe::integers();
        let two = Universe::Finite(2);
        let mut ex = BTreeMap::new();
        ex.insert(4, Point::Index(1));
        let f = FunctionSpec::residue_map(z, two, 2, vec![Point::Index(0), Point::Index(1)], ex, None).unwrap();
        let levels = f.level_sets().unwrap().unwrap();
        assert_eq!(levels.len(), 2);
        let union = levels[0].1.union(&levels[1].1).unwrap();
        assert!(union.is_full());
        assert!(levels[1].1.contains(&Point::Int(4)));
        assert_eq!(f.eval(&Point::Int(4)).unwrap(), Point::Index(1));
        assert_eq!(f.eval(&Point::Int(6)).unwrap(), Point::Index(0));
    }

    #[test]
    fn shift_preimage_and_image_are_inverse() {
        let z = Universe::integers();
        let f = FunctionSpec::shift(z, 2).unwrap();
        let s = SymSet::periodic(z, 3, [1], [0], [], false).unwrap();
        assert_eq!(f.preimage(&f.image(&s).unwrap()).unwrap(), s);
    }

    #[test]
    fn powers_of_step_values() {
        let u = Universe::Finite(3);
        let f = FunctionSpec::table(u, Universe::UnitInterval, vec![Point::rat(0, 1), Point::rat(1, 2), Point::rat(1, 1)]).unwrap();
        let f3 = f.power(3).unwrap();
        assert_eq!(f3.eval(&Point::Index(1)).unwrap(), Point::rat(1, 8));
        assert_eq!(f3.eval(&Point::Index(2)).unwrap(), Point::rat(1, 1));
        let lim = f.ones_indicator().unwrap();
        assert_eq!(lim.eval(&Point::Index(1)).unwrap(), Point::rat(0, 1));
        assert_eq!(lim.eval(&Point::Index(2)).unwrap(), Point::rat(1, 1));
    }

    #[test]
    fn compose_through_level_sets() {
        let z = Universe::integers();
        let evens = SymSet::residue_class(z, 2, 0).unwrap();
        let chi = FunctionSpec::characteristic(evens, Universe::Finite(2)).unwrap();
        let shifted = FunctionSpec::shift(z, 1).unwrap().then(&chi).unwrap();
        assert_eq!(shifted.eval(&Point::Int(1)).unwrap(), Point::Index(1));
        assert_eq!(shifted.eval(&Point::Int(2)).unwrap(), Point::Index(0));
    }

    #[test]
    fn decay_values() {
        let z = Universe::integers();
        let g = FunctionSpec::decay_toward(SymSet::residue_class(z, 2, 0).unwrap()).unwrap();
        assert_eq!(g.eval(&Point::Int(4)).unwrap(), Point::rat(1, 1));
        assert_eq!(g.eval(&Point::Int(-3)).unwrap(), Point::rat(4, 5));
        assert_eq!(g.power(2).unwrap().eval(&Point::Int(1)).unwrap(), Point::rat(4, 9));
    }

    #[test]
    fn bad_tables_rejected() {
        let u = Universe::Finite(2);
        assert!(FunctionSpec::table(u, u, vec![Point::Index(0)]).is_err());
        assert!(FunctionSpec::table(u, u, vec![Point::Index(0), Point::Index(5)]).is_err());
    }
}
