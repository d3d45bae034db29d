//! Deterministic, parallel case scanning shared by every law check.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pool::Strategy;
use crate::report::{LawReport, Status, Witness};
use crate::symset::SymSet;
use crate::universe::Universe;

/// Knobs shared by all checks.
#[derive(Debug, Clone)]
pub struct CheckOptions {
    /// Overrides the per-universe default probe family.
    pub strategy: Option<Strategy>,
    /// Levels probed for chains that no rule decides.
    pub depth: usize,
    /// Stop at the first violation (in case order) instead of counting all.
    pub first_counterexample: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { strategy: None, depth: 16, first_counterexample: false }
    }
}

impl CheckOptions {
    pub fn with_strategy(strategy: Strategy) -> Self {
        CheckOptions { strategy: Some(strategy), ..Self::default() }
    }

    pub fn strategy_for(&self, universe: Universe) -> Strategy {
        self.strategy.clone().unwrap_or_else(|| Strategy::default_for(universe))
    }

    /// Probe sets for `universe` restricted to `carrier`, with the status a
    /// clean pass earns.
    pub fn probe(&self, universe: Universe, carrier: &SymSet) -> Result<Probe> {
        let strategy = self.strategy_for(universe);
        if strategy.is_exhaustive() && !universe.is_finite() {
            return Err(Error::UnsupportedKind(format!("exhaustive strategy on {universe}")));
        }
        let sets = strategy.sets(universe, carrier)?;
        Ok(Probe { sets, pass: pass_status(&strategy), seed: strategy.seed() })
    }
}

pub fn pass_status(strategy: &Strategy) -> Status {
    if strategy.is_exhaustive() {
        Status::HoldsExhaustive
    } else {
        Status::HoldsOnFamily
    }
}

#[derive(Debug, Clone)]
pub struct Probe {
    pub sets: Vec<SymSet>,
    pub pass: Status,
    pub seed: u64,
}

impl Probe {
    /// At most `k` sets spread evenly over the probe, for the third
    /// argument of triple checks.
    pub fn spread(&self, k: usize) -> Vec<SymSet> {
        let m = self.sets.len();
        if m <= k {
            return self.sets.clone();
        }
        (0..k).map(|i| self.sets[i * m / k].clone()).collect()
    }
}

/// Result of scanning `n` cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scan {
    pub cases: u64,
    pub violations: u64,
    pub first: Option<usize>,
}

/// Evaluates `violates(i)` for `i < n` in parallel. The first violation in
/// index order is reported whatever the scheduling; errors surface as the
/// first error in index order.
pub fn scan(n: usize, opts: &CheckOptions, violates: impl Fn(usize) -> Result<bool> + Sync) -> Result<Scan> {
    if opts.first_counterexample {
        let hit = (0..n).into_par_iter().find_map_first(|i| match violates(i) {
            Ok(false) => None,
            Ok(true) => Some(Ok(i)),
            Err(e) => Some(Err(e)),
        });
        return match hit {
            None => Ok(Scan { cases: n as u64, violations: 0, first: None }),
            Some(Ok(i)) => Ok(Scan { cases: i as u64 + 1, violations: 1, first: Some(i) }),
            Some(Err(e)) => Err(e),
        };
    }
    let hits: Vec<Result<usize>> = (0..n)
        .into_par_iter()
        .filter_map(|i| match violates(i) {
            Ok(false) => None,
            Ok(true) => Some(Ok(i)),
            Err(e) => Some(Err(e)),
        })
        .collect();
    let first = match hits.first() {
        Some(Ok(i)) => Some(*i),
        Some(Err(e)) => return Err(e.clone()),
        None => None,
    };
    Ok(Scan { cases: n as u64, violations: hits.len() as u64, first })
}

/// Folds a sequence of named sub-scans into one report. Sub-scans run in
/// order; the first violated one supplies the witnesses.
pub struct ReportBuilder {
    law: String,
    pass: Status,
    seed: u64,
    cases: u64,
    witnesses: Vec<Witness>,
    failed: bool,
    undecided: bool,
}

impl ReportBuilder {
    pub fn new(law: &str, pass: Status, seed: u64) -> Self {
        ReportBuilder { law: law.to_string(), pass, seed, cases: 0, witnesses: Vec::new(), failed: false, undecided: false }
    }

    pub fn failed(&self) -> bool {
        self.failed
    }

    /// Records a scan; on the first violation overall, `explain(i)` renders
    /// the witnesses.
    pub fn add(&mut self, label: &str, scan: Scan, explain: impl FnOnce(usize) -> Vec<Witness>) {
        self.cases += scan.cases;
        if let Some(i) = scan.first {
            if !self.failed {
                self.failed = true;
                self.witnesses.push(Witness::new("clause", label));
                self.witnesses.extend(explain(i));
                if scan.violations > 1 {
                    self.witnesses.push(Witness::note(format!("{} violating cases", scan.violations)));
                }
            }
        }
    }

    pub fn add_cases(&mut self, n: u64) {
        self.cases += n;
    }

    pub fn violation(&mut self, witnesses: Vec<Witness>) {
        if !self.failed {
            self.failed = true;
            self.witnesses.extend(witnesses);
        }
    }

    pub fn undecided(&mut self, note: impl Into<String>) {
        if !self.undecided {
            self.witnesses.push(Witness::note(note.into()));
        }
        self.undecided = true;
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.witnesses.push(Witness::note(note.into()));
    }

    pub fn weaken_to_family(&mut self) {
        self.pass = Status::HoldsOnFamily;
    }

    pub fn finish(self) -> LawReport {
        let status = if self.failed {
            Status::Counterexample
        } else if self.undecided {
            Status::Inconclusive
        } else {
            self.pass
        };
        let mut r = LawReport::new(&self.law, status).with_cases(self.cases).with_witnesses(self.witnesses);
        r.seed = self.seed;
        r
    }
}

/// Index pair decoding for an `m × m` scan.
pub fn pair(i: usize, m: usize) -> (usize, usize) {
    (i / m, i % m)
}

/// Index triple decoding for an `m × m × k` scan.
pub fn triple(i: usize, m: usize, k: usize) -> (usize, usize, usize) {
    (i / (m * k), (i / k) % m, i % k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scan_reports_first_violation_in_order() {
        let opts = CheckOptions::default();
        let s = scan(1000, &opts, |i| Ok(i % 97 == 40)).unwrap();
        assert_eq!(s.first, Some(40));
        assert_eq!(s.violations, 10);
        let first = CheckOptions { first_counterexample: true, ..CheckOptions::default() };
        let s = scan(1000, &first, |i| Ok(i % 97 == 40)).unwrap();
        assert_eq!(s, Scan { cases: 41, violations: 1, first: Some(40) });
    }

    #[test]
    fn scan_surfaces_errors() {
        let opts = CheckOptions::default();
        assert!(scan(10, &opts, |i| if i == 3 { Err(Error::NotAChain) } else { Ok(false) }).is_err());
    }
}
