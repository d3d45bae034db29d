//! Canonical probe families and seeded random sets.

use std::collections::BTreeSet;

use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::symset::{Interval, SymSet};
use crate::universe::Universe;

/// Largest finite universe whose subsets are enumerated outright.
pub const MAX_EXHAUSTIVE_POINTS: u32 = 10;

/// Exception sets used to adorn the periodic patterns of the integer pool.
const EXCEPTION_VARIANTS: [&[i64]; 10] =
    [&[], &[-2], &[-1], &[0], &[1], &[2], &[-1, 1], &[0, 2], &[-2, -1], &[-2, 2]];

/// Endpoints of the unit-interval pool.
const ENDPOINTS: [(i64, i64); 7] = [(0, 1), (1, 4), (1, 3), (1, 2), (2, 3), (3, 4), (1, 1)];

/// How a law quantifies over sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    /// Every subset of a finite universe.
    Exhaustive,
    /// The canonical structured pool for the universe.
    StructuredFamily,
    /// `n` seeded random sets.
    Sampled { seed: u64, n: usize },
    /// Exactly these sets (used to re-check reported witnesses).
    Family(Vec<SymSet>),
}

impl Strategy {
    pub fn default_for(universe: Universe) -> Strategy {
        match universe.finite_size() {
            Some(n) if n <= MAX_EXHAUSTIVE_POINTS => Strategy::Exhaustive,
            _ => Strategy::StructuredFamily,
        }
    }

    pub fn is_exhaustive(&self) -> bool {
        matches!(self, Strategy::Exhaustive)
    }

    pub fn seed(&self) -> u64 {
        match self {
            Strategy::Sampled { seed, .. } => *seed,
            _ => 0,
        }
    }

    /// The probe sets, restricted to `carrier` and deduplicated. Integer
    /// sets come simplest first (by period, then exception count, then
    /// residues), so reported witnesses are the most readable ones.
    pub fn sets(&self, universe: Universe, carrier: &SymSet) -> Result<Vec<SymSet>> {
        let raw = match self {
            Strategy::Exhaustive => all_subsets(universe)?,
            Strategy::StructuredFamily => canonical_pool(universe)?,
            Strategy::Sampled { seed, n } => sampled(universe, *seed, *n)?,
            Strategy::Family(sets) => {
                for s in sets {
                    universe.ensure_same(&s.universe())?;
                }
                sets.clone()
            }
        };
        let mut out = BTreeSet::new();
        for s in raw {
            out.insert(s.intersect(carrier)?);
        }
        let mut sets: Vec<SymSet> = out.into_iter().collect();
        sets.sort_by_cached_key(simplicity);
        Ok(sets)
    }
}

fn simplicity(s: &SymSet) -> (u32, usize, Vec<u32>) {
    match s.as_periodic() {
        Some(p) => (p.period(), p.flips().len(), p.residues()),
        None => (0, 0, Vec::new()),
    }
}

pub fn all_subsets(universe: Universe) -> Result<Vec<SymSet>> {
    let n = universe.finite_size().ok_or(Error::WrongUniverseKind { expected: "finite", got: universe })?;
    if n > MAX_EXHAUSTIVE_POINTS {
        return Err(Error::UniverseTooLarge(n, MAX_EXHAUSTIVE_POINTS));
    }
    (0..1u64 << n).map(|m| SymSet::from_bits(universe, m)).collect()
}

/// The structured pool: all subsets of small finite universes; on ℤ every
/// period-≤4 pattern with each exception variant (and with/without ∞ when
/// present); on `[0,1]` intervals over a fixed endpoint grid, their
/// complements, and pairwise unions of closed pieces.
pub fn canonical_pool(universe: Universe) -> Result<Vec<SymSet>> {
    match universe {
        Universe::Finite(_) => all_subsets(universe),
        Universe::Integers { with_infinity } => {
            let mut out = BTreeSet::new();
            for pattern in periodic_patterns(4) {
                let (period, residues) = pattern;
                for ex in EXCEPTION_VARIANTS {
                    let base = SymSet::periodic(universe, period, residues.iter().copied(), [], [], false)?;
                    let flips = SymSet::integers(universe, ex.iter().copied())?;
                    let s = base.symmetric_difference(&flips)?;
                    if with_infinity {
                        let inf = SymSet::singleton(universe, crate::Point::Infinity)?;
                        out.insert(s.union(&inf)?);
                    }
                    out.insert(s);
                }
            }
            Ok(out.into_iter().collect())
        }
        Universe::UnitInterval => Ok(interval_pool()),
    }
}

/// Distinct eventually-periodic patterns of minimal period at most `max`.
fn periodic_patterns(max: u32) -> Vec<(u32, Vec<u32>)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p in 1..=max {
        for mask in 0u32..(1 << p) {
            let residues: Vec<u32> = (0..p).filter(|r| mask & (1 << r) != 0).collect();
            let probe = SymSet::periodic(Universe::integers(), p, residues.iter().copied(), [], [], false)
                .expect("integers");
            if seen.insert(probe) {
                out.push((p, residues));
            }
        }
    }
    out
}

fn interval_pool() -> Vec<SymSet> {
    let pts: Vec<Rational64> = ENDPOINTS.iter().map(|&(n, d)| Rational64::new(n, d)).collect();
    let mut singles = Vec::new();
    for (i, &lo) in pts.iter().enumerate() {
        singles.push(Interval::point(lo));
        for &hi in &pts[i + 1..] {
            for (lc, hc) in [(true, true), (true, false), (false, true), (false, false)] {
                singles.push(Interval::new(lo, lc, hi, hc));
            }
        }
    }
    let mut out = BTreeSet::new();
    out.insert(SymSet::empty(Universe::UnitInterval));
    for iv in &singles {
        let s = SymSet::from_intervals([*iv]);
        out.insert(s.complement());
        out.insert(s);
    }
    let closed: Vec<Interval> = singles.iter().filter(|iv| iv.lo_closed && iv.hi_closed).cloned().collect();
    let coarse = |r: &Rational64| *r.denom() != 3;
    let closed: Vec<Interval> = closed.into_iter().filter(|iv| coarse(&iv.lo) && coarse(&iv.hi)).collect();
    for (i, a) in closed.iter().enumerate() {
        for b in &closed[i + 1..] {
            out.insert(SymSet::from_intervals([*a, *b]));
        }
        for &p in &pts {
            out.insert(SymSet::from_intervals([*a, Interval::point(p)]));
        }
    }
    out.into_iter().collect()
}

/// `n` random sets drawn from a ChaCha8 stream seeded by `seed`.
pub fn sampled(universe: Universe, seed: u64, n: usize) -> Result<Vec<SymSet>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_set(universe, &mut rng)).collect()
}

pub fn random_set(universe: Universe, rng: &mut impl Rng) -> Result<SymSet> {
    match universe {
        Universe::Finite(n) => {
            let mask = if n >= 64 { rng.gen::<u64>() } else { rng.gen::<u64>() & ((1u64 << n) - 1) };
            SymSet::from_bits(universe, mask)
        }
        Universe::Integers { with_infinity } => {
            let period = rng.gen_range(1..=6u32);
            let residues: Vec<u32> = (0..period).filter(|_| rng.gen_bool(0.5)).collect();
            let adds: Vec<i64> = (0..rng.gen_range(0..4)).map(|_| rng.gen_range(-6..=6)).collect();
            let removes: Vec<i64> = (0..rng.gen_range(0..4)).map(|_| rng.gen_range(-6..=6)).collect();
            let inf = with_infinity && rng.gen_bool(0.5);
            SymSet::periodic(universe, period, residues, adds, removes, inf)
        }
        Universe::UnitInterval => {
            let mut parts = Vec::new();
            for _ in 0..rng.gen_range(0..=3) {
                let d = *[2i64, 3, 4, 6, 8, 12].choose(rng).expect("nonempty");
                let a = rng.gen_range(0..=d);
                let b = rng.gen_range(a..=d);
                let lo = Rational64::new(a, d);
                let hi = Rational64::new(b, d);
                let iv = if a == b {
                    Interval::point(lo)
                } else {
                    Interval::new(lo, rng.gen_bool(0.5), hi, rng.gen_bool(0.5))
                };
                parts.push(iv);
            }
            Ok(SymSet::from_intervals(parts))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_pool_size() {
        let pool = canonical_pool(Universe::integers()).unwrap();
        assert_eq!(periodic_patterns(4).len(), 22);
        assert_eq!(pool.len(), 220);
        let with_inf = canonical_pool(Universe::integers_with_infinity()).unwrap();
        assert_eq!(with_inf.len(), 440);
    }

    #[test]
    fn interval_pool_is_large_enough() {
        let pool = canonical_pool(Universe::UnitInterval).unwrap();
        assert!(pool.len() >= 200, "{}", pool.len());
    }

    #[test]
    fn sampling_is_seeded() {
        let a = sampled(Universe::integers(), 7, 20).unwrap();
        let b = sampled(Universe::integers(), 7, 20).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, sampled(Universe::integers(), 8, 20).unwrap());
    }
}
