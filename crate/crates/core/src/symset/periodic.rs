//! Eventually-periodic subsets of ℤ (optionally ℤ ∪ {∞}).
//!
//! A set is a periodic pattern of minimal period `p` plus a finite set of
//! integers where membership disagrees with the pattern ("flips"). Two
//! patterns that agree outside a finite set are identical, so the minimal
//! pattern and the flip set are unique: structural equality is extensional
//! equality.

use std::collections::BTreeSet;

use num_integer::Integer;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Periodic {
    pattern: Vec<bool>,
    flips: BTreeSet<i64>,
    infinity: bool,
}

impl Periodic {
    pub fn empty() -> Self {
        Periodic { pattern: vec![false], flips: BTreeSet::new(), infinity: false }
    }

    pub fn full(with_infinity: bool) -> Self {
        Periodic { pattern: vec![true], flips: BTreeSet::new(), infinity: with_infinity }
    }

    /// Builds the canonical form of `(residues mod period) ∪ adds ∖ removes`.
    pub fn new(
        period: u32,
        residues: impl IntoIterator<Item = u32>,
        adds: impl IntoIterator<Item = i64>,
        removes: impl IntoIterator<Item = i64>,
        infinity: bool,
    ) -> Self {
        let period = period.max(1) as usize;
        let mut pattern = vec![false; period];
        for r in residues {
            pattern[r as usize % period] = true;
        }
        let mut members: BTreeSet<i64> = BTreeSet::new();
        let mut non_members: BTreeSet<i64> = BTreeSet::new();
        for k in adds {
            members.insert(k);
        }
        for k in removes {
            members.remove(&k);
            non_members.insert(k);
        }
        let probe = |k: i64| {
            if members.contains(&k) {
                true
            } else if non_members.contains(&k) {
                false
            } else {
                pattern[k.rem_euclid(period as i64) as usize]
            }
        };
        let candidates: Vec<i64> = members.iter().chain(non_members.iter()).copied().collect();
        Self::from_parts(pattern.clone(), candidates, probe, infinity)
    }

    pub fn finite(points: impl IntoIterator<Item = i64>, infinity: bool) -> Self {
        Self::new(1, [], points, [], infinity)
    }

    /// Canonicalizes a pattern together with a membership oracle that may
    /// disagree with the pattern only at `candidates`.
    fn from_parts(
        pattern: Vec<bool>,
        candidates: impl IntoIterator<Item = i64>,
        member: impl Fn(i64) -> bool,
        infinity: bool,
    ) -> Self {
        let pattern = minimal_pattern(pattern);
        let p = pattern.len() as i64;
        let flips = candidates
            .into_iter()
            .filter(|&k| member(k) != pattern[k.rem_euclid(p) as usize])
            .collect();
        Periodic { pattern, flips, infinity }
    }

    pub fn period(&self) -> u32 {
        self.pattern.len() as u32
    }

    pub fn residues(&self) -> Vec<u32> {
        (0..self.pattern.len() as u32).filter(|&r| self.pattern[r as usize]).collect()
    }

    fn in_pattern(&self, k: i64) -> bool {
        self.pattern[k.rem_euclid(self.pattern.len() as i64) as usize]
    }

    /// Integers present only because of an exception.
    pub fn additions(&self) -> Vec<i64> {
        self.flips.iter().copied().filter(|&k| !self.in_pattern(k)).collect()
    }

    /// Integers absent only because of an exception.
    pub fn removals(&self) -> Vec<i64> {
        self.flips.iter().copied().filter(|&k| self.in_pattern(k)).collect()
    }

    pub fn flips(&self) -> &BTreeSet<i64> {
        &self.flips
    }

    pub fn contains(&self, k: i64) -> bool {
        self.in_pattern(k) != self.flips.contains(&k)
    }

    pub fn contains_infinity(&self) -> bool {
        self.infinity
    }

    pub fn pattern_is_empty(&self) -> bool {
        self.pattern.iter().all(|b| !b)
    }

    pub fn pattern_is_full(&self) -> bool {
        self.pattern.iter().all(|b| *b)
    }

    /// Number of integer members when the pattern is empty.
    pub fn integer_count(&self) -> Option<usize> {
        self.pattern_is_empty().then_some(self.flips.len())
    }

    /// Largest `|k|` over the exceptions, 0 when there are none.
    pub fn exception_radius(&self) -> i64 {
        self.flips.iter().map(|k| k.abs()).max().unwrap_or(0)
    }

    pub fn complement(&self, with_infinity: bool) -> Self {
        Periodic {
            pattern: self.pattern.iter().map(|b| !b).collect(),
            flips: self.flips.clone(),
            infinity: with_infinity && !self.infinity,
        }
    }

    pub fn combine(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Self {
        let p = self.pattern.len().lcm(&other.pattern.len());
        let pattern = (0..p as i64).map(|r| op(self.in_pattern(r), other.in_pattern(r))).collect();
        let candidates: BTreeSet<i64> = self.flips.union(&other.flips).copied().collect();
        Self::from_parts(
            pattern,
            candidates,
            |k| op(self.contains(k), other.contains(k)),
            op(self.infinity, other.infinity),
        )
    }

    /// `{k + offset : k ∈ self}`; ∞ is fixed.
    pub fn shifted(&self, offset: i64) -> Self {
        let p = self.pattern.len() as i64;
        let pattern = (0..p).map(|r| self.in_pattern(r - offset)).collect();
        Periodic {
            pattern,
            flips: self.flips.iter().map(|k| k + offset).collect(),
            infinity: self.infinity,
        }
    }

    /// Members in `[lo, hi]`, ascending.
    pub fn members_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).filter(|&k| self.contains(k)).collect()
    }
}

fn minimal_pattern(pattern: Vec<bool>) -> Vec<bool> {
    let n = pattern.len();
    for d in 1..=n {
        if n.is_multiple_of(d) && (0..n).all(|i| pattern[i] == pattern[i % d]) {
            return pattern[..d].to_vec();
        }
    }
    pattern
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn period_is_minimized() {
        let s = Periodic::new(4, [0, 2], [], [], false);
        assert_eq!(s.period(), 2);
        assert_eq!(s.residues(), vec![0]);
    }

    #[test]
    fn redundant_exceptions_vanish() {
        let s = Periodic::new(2, [0], [4], [3], false);
        assert!(s.flips().is_empty());
        assert_eq!(s, Periodic::new(2, [0], [], [], false));
    }

    #[test]
    fn evens_with_one_intersect_odds() {
        let evens_plus = Periodic::new(2, [0], [1], [], false);
        let odds = Periodic::new(2, [1], [], [], false);
        let meet = evens_plus.combine(&odds, |a, b| a && b);
        assert_eq!(meet, Periodic::finite([1], false));
        for k in -10..=10 {
            assert_eq!(meet.contains(k), k == 1);
        }
    }

    #[test]
    fn shift_moves_pattern_and_exceptions() {
        let s = Periodic::new(3, [0], [1], [3], false).shifted(2);
        for k in -12i64..=12 {
            let before = k - 2;
            let expected = (before.rem_euclid(3) == 0 && before != 3) || before == 1;
            assert_eq!(s.contains(k), expected, "k={k}");
        }
    }
}
