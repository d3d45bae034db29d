//! Checks of the proximity axioms, the properties of `≺`, separation and
//! the induced closure operator.

use crate::check::{pair, scan, triple, CheckOptions, ReportBuilder};
use crate::error::{Error, Result};
use crate::proximity::Proximity;
use crate::report::{LawReport, Status, Witness};
use crate::symset::SymSet;

/// Size of the third-argument pool for triple checks on large probes.
const TRIPLE_SPREAD: usize = 12;

fn sets(ws: &[&SymSet]) -> Vec<Witness> {
    ws.iter().copied().map(Witness::set).collect()
}

/// Axioms 1–5 on every probed pair (triples for additivity).
pub fn check_axioms(d: &Proximity, opts: &CheckOptions) -> Result<LawReport> {
    let probe = opts.probe(d.universe(), &d.carrier())?;
    let s = &probe.sets;
    let m = s.len();
    let third = if probe.pass == Status::HoldsExhaustive { s.clone() } else { probe.spread(TRIPLE_SPREAD) };
    let k = third.len();
    let near: Vec<Vec<bool>> = s
        .iter()
        .map(|a| s.iter().map(|b| d.near(a, b)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let mut rb = ReportBuilder::new("prox.axioms", probe.pass, probe.seed);

    let sym = scan(m * m, opts, |i| {
        let (a, b) = pair(i, m);
        Ok(near[a][b] != near[b][a])
    })?;
    rb.add("axiom 1: A δ B implies B δ A", sym, |i| {
        let (a, b) = pair(i, m);
        sets(&[&s[a], &s[b]])
    });

    let add = scan(m * m * k, opts, |i| {
        let (a, b, c) = triple(i, m, k);
        let ab = s[a].union(&s[b])?;
        let lhs = d.near(&ab, &third[c])?;
        let rhs = d.near(&s[a], &third[c])? || d.near(&s[b], &third[c])?;
        Ok(lhs != rhs)
    })?;
    rb.add("axiom 2: (A ∪ B) δ C iff A δ C or B δ C", add, |i| {
        let (a, b, c) = triple(i, m, k);
        sets(&[&s[a], &s[b], &third[c]])
    });

    let empty = SymSet::empty(d.universe());
    let ax3 = scan(m, opts, |i| Ok(d.near(&empty, &s[i])? || d.near(&s[i], &empty)?))?;
    rb.add("axiom 3: nothing is near ∅", ax3, |i| sets(&[&empty, &s[i]]));

    let ax4 = scan(m * m, opts, |i| {
        let (a, b) = pair(i, m);
        if near[a][b] {
            return Ok(false);
        }
        axiom4_fails(d, &s[a], &s[b])
    })?;
    rb.add("axiom 4: A δ̄ B gives E with A δ̄ E and Eᶜ δ̄ B", ax4, |i| {
        let (a, b) = pair(i, m);
        sets(&[&s[a], &s[b]])
    });

    let ax5 = scan(m * m, opts, |i| {
        let (a, b) = pair(i, m);
        Ok(s[a].meets(&s[b])? && !near[a][b])
    })?;
    rb.add("axiom 5: meeting sets are near", ax5, |i| {
        let (a, b) = pair(i, m);
        sets(&[&s[a], &s[b]])
    });
    Ok(rb.finish())
}

/// Whether no `E` with `A δ̄ E` and `Eᶜ δ̄ B` exists (`A δ̄ B` assumed).
fn axiom4_fails(d: &Proximity, a: &SymSet, b: &SymSet) -> Result<bool> {
    let bc = d.relative_complement(b)?;
    let c = match d.interpolate(a, &bc) {
        Ok(c) => c,
        Err(Error::NoWitnessFound) => return Ok(true),
        Err(e) => return Err(e),
    };
    let e = d.relative_complement(&c)?;
    Ok(d.near(a, &e)? || d.near(&c, b)?)
}

/// Properties 1–6 of `≺`; property 4 with two-fold intersections.
pub fn check_prec_props(d: &Proximity, opts: &CheckOptions) -> Result<LawReport> {
    let probe = opts.probe(d.universe(), &d.carrier())?;
    let s = &probe.sets;
    let m = s.len();
    let third = if probe.pass == Status::HoldsExhaustive { s.clone() } else { probe.spread(TRIPLE_SPREAD) };
    let k = third.len();
    let below: Vec<Vec<bool>> = s
        .iter()
        .map(|a| s.iter().map(|b| d.strongly_below(a, b)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let x = d.carrier();
    let mut rb = ReportBuilder::new("prec.props", probe.pass, probe.seed);

    let p1 = scan(1, opts, |_| Ok(!d.strongly_below(&x, &x)?))?;
    rb.add("property 1: X ≺ X", p1, |_| sets(&[&x]));

    let p2 = scan(m * m, opts, |i| {
        let (a, b) = pair(i, m);
        Ok(below[a][b] && !s[a].is_subset(&s[b])?)
    })?;
    rb.add("property 2: A ≺ B implies A ⊆ B", p2, |i| {
        let (a, b) = pair(i, m);
        sets(&[&s[a], &s[b]])
    });

    let p3 = scan(m * m * k, opts, |i| {
        let (b, c, t) = triple(i, m, k);
        if !below[b][c] {
            return Ok(false);
        }
        let a = s[b].intersect(&third[t])?;
        let dd = s[c].union(&third[t])?.intersect(&x)?;
        Ok(!d.strongly_below(&a, &dd)?)
    })?;
    rb.add("property 3: A ⊆ B ≺ C ⊆ D implies A ≺ D", p3, |i| {
        let (b, c, t) = triple(i, m, k);
        sets(&[&s[b], &s[c], &third[t]])
    });

    let p4 = scan(m * m * k, opts, |i| {
        let (a, b, c) = triple(i, m, k);
        if !below[a][b] || !d.strongly_below(&s[a], &third[c])? {
            return Ok(false);
        }
        Ok(!d.strongly_below(&s[a], &s[b].intersect(&third[c])?)?)
    })?;
    rb.add("property 4: A ≺ B and A ≺ C imply A ≺ B ∩ C", p4, |i| {
        let (a, b, c) = triple(i, m, k);
        sets(&[&s[a], &s[b], &third[c]])
    });

    let p5 = scan(m * m, opts, |i| {
        let (a, b) = pair(i, m);
        if !below[a][b] {
            return Ok(false);
        }
        let bc = d.relative_complement(&s[b])?;
        let ac = d.relative_complement(&s[a])?;
        Ok(!d.strongly_below(&bc, &ac)?)
    })?;
    rb.add("property 5: A ≺ B implies Bᶜ ≺ Aᶜ", p5, |i| {
        let (a, b) = pair(i, m);
        sets(&[&s[a], &s[b]])
    });

    let p6 = scan(m * m, opts, |i| {
        let (a, b) = pair(i, m);
        if !below[a][b] {
            return Ok(false);
        }
        match d.interpolate(&s[a], &s[b]) {
            Ok(c) => Ok(!(d.strongly_below(&s[a], &c)? && d.strongly_below(&c, &s[b])?)),
            Err(Error::NoWitnessFound) => Ok(true),
            Err(e) => Err(e),
        }
    })?;
    rb.add("property 6: A ≺ B gives C with A ≺ C ≺ B", p6, |i| {
        let (a, b) = pair(i, m);
        sets(&[&s[a], &s[b]])
    });
    Ok(rb.finish())
}

/// Singletons of distinct points are far. Points are all points of a
/// finite carrier, or the members of the probe sets inside the probe window.
pub fn check_separated(d: &Proximity, opts: &CheckOptions) -> Result<LawReport> {
    let probe = opts.probe(d.universe(), &d.carrier())?;
    let radius = SymSet::probe_radius(&probe.sets);
    let mut pts = std::collections::BTreeSet::new();
    if d.universe().is_finite() {
        pts.extend(d.carrier().sample_members(0));
    } else {
        for s in &probe.sets {
            pts.extend(s.sample_members(radius));
        }
    }
    let singles: Vec<SymSet> =
        pts.into_iter().map(|p| SymSet::singleton(d.universe(), p)).collect::<Result<_>>()?;
    let m = singles.len();
    let mut rb = ReportBuilder::new("prox.separated", probe.pass, probe.seed);
    let sc = scan(m * m, opts, |i| {
        let (a, b) = pair(i, m);
        Ok(a != b && d.near(&singles[a], &singles[b])?)
    })?;
    rb.add("{x} δ {y} implies x = y", sc, |i| {
        let (a, b) = pair(i, m);
        sets(&[&singles[a], &singles[b]])
    });
    Ok(rb.finish())
}

/// The induced closure fixes ∅, is extensive and idempotent, and preserves
/// binary unions.
pub fn check_kuratowski(d: &Proximity, opts: &CheckOptions) -> Result<LawReport> {
    let probe = opts.probe(d.universe(), &d.carrier())?;
    let s = &probe.sets;
    let m = s.len();
    let cl: Vec<SymSet> = s.iter().map(|a| d.closure(a)).collect::<Result<_>>()?;
    let mut rb = ReportBuilder::new("closure.kuratowski", probe.pass, probe.seed);
    let empty = SymSet::empty(d.universe());
    let e = scan(1, opts, |_| Ok(!d.closure(&empty)?.is_empty()))?;
    rb.add("cl ∅ = ∅", e, |_| sets(&[&empty]));
    let ext = scan(m, opts, |i| Ok(!s[i].is_subset(&cl[i])?))?;
    rb.add("A ⊆ cl A", ext, |i| sets(&[&s[i]]));
    let idem = scan(m, opts, |i| Ok(d.closure(&cl[i])? != cl[i]))?;
    rb.add("cl cl A = cl A", idem, |i| sets(&[&s[i]]));
    let un = scan(m * m, opts, |i| {
        let (a, b) = pair(i, m);
        Ok(d.closure(&s[a].union(&s[b])?)? != cl[a].union(&cl[b])?)
    })?;
    rb.add("cl (A ∪ B) = cl A ∪ cl B", un, |i| {
        let (a, b) = pair(i, m);
        sets(&[&s[a], &s[b]])
    });
    Ok(rb.finish())
}

/// Asserts `A δ B`.
pub fn check_near(d: &Proximity, a: &SymSet, b: &SymSet) -> Result<LawReport> {
    let near = d.near(a, b)?;
    let status = if near { Status::HoldsExhaustive } else { Status::Counterexample };
    let mut r = LawReport::new("prox.near", status).with_cases(1);
    r.witnesses = vec![Witness::new("near", near), Witness::set(a), Witness::set(b)];
    Ok(r)
}

/// Asserts `A ≺ B`.
pub fn check_prec(d: &Proximity, a: &SymSet, b: &SymSet) -> Result<LawReport> {
    let below = d.strongly_below(a, b)?;
    let status = if below { Status::HoldsExhaustive } else { Status::Counterexample };
    let mut r = LawReport::new("prox.prec", status).with_cases(1);
    r.witnesses = vec![Witness::new("strongly-below", below), Witness::set(a), Witness::set(b)];
    Ok(r)
}

/// Asserts that `U` is open in the induced topology.
pub fn check_open(d: &Proximity, u: &SymSet) -> Result<LawReport> {
    let open = d.is_open(u)?;
    let status = if open { Status::HoldsExhaustive } else { Status::Counterexample };
    let mut r = LawReport::new("prox.open", status).with_cases(1);
    r.witnesses = vec![Witness::new("open", open), Witness::set(u)];
    if !open {
        let uc = d.relative_complement(u)?;
        let boundary = u.intersect(&d.closure(&uc)?)?;
        r.witnesses.push(Witness::new("boundary", boundary));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::SetAlgebra;
    use crate::proximity::NearTable;
    use crate::universe::Universe;

    #[test]
    fn discrete_finite_axioms_exhaustive() {
        let d = Proximity::discrete(Universe::Finite(3));
        let r = check_axioms(&d, &CheckOptions::default()).unwrap();
        assert_eq!(r.status, Status::HoldsExhaustive, "{r}");
        assert_eq!(r.cases_checked, 64 + 512 + 8 + 64 + 64);
    }

    #[test]
    fn one_point_axioms_on_pool() {
        let d = Proximity::one_point(Universe::integers()).unwrap();
        let r = check_axioms(&d, &CheckOptions::default()).unwrap();
        assert_eq!(r.status, Status::HoldsOnFamily, "{r}");
    }

    #[test]
    fn bad_table_fails_symmetry() {
        let t = NearTable::from_fn(2, |a, b| a & b != 0 || (a == 1 && b == 2)).unwrap();
        let d = Proximity::table(t).unwrap();
        let r = check_axioms(&d, &CheckOptions::default()).unwrap();
        assert_eq!(r.status, Status::Counterexample);
        assert!(r.witnesses[0].rendering.starts_with("axiom 1"));
    }

    #[test]
    fn coarse_algebra_is_not_separated() {
        let m = SetAlgebra::from_partition(3, &[0b001, 0b110]).unwrap();
        let d = Proximity::from_algebra(m);
        let r = check_separated(&d, &CheckOptions::default()).unwrap();
        assert_eq!(r.status, Status::Counterexample);
    }

    #[test]
    fn metric_closure_is_kuratowski_on_pool() {
        let r = check_kuratowski(&Proximity::metric(), &CheckOptions::default()).unwrap();
        assert_eq!(r.status, Status::HoldsOnFamily, "{r}");
    }
}
