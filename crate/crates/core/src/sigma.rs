//! Countable structure: ≺-chains and proximally zero sets, the P_ℵ1
//! condition, σ-algebras, proximally Baire sets and the coreflection,
//! pointwise limits of proximity maps.

use num_rational::Rational64;

use crate::algebra::{AlgebraKind, SetAlgebra};
use crate::check::{scan, CheckOptions, ReportBuilder};
use crate::duality::{
    agreement_report, algebra_from_proximity, generated_by, is_zero_dimensional, proximity_map_verdict, Verdict,
};
use crate::error::{Error, Result};
use crate::function::FunctionSpec;
use crate::pool::{all_subsets, MAX_EXHAUSTIVE_POINTS};
use crate::proximity::{NearClass, Proximity, ProximityKind};
use crate::report::{LawReport, Status, Witness};
use crate::sequence::{FunctionSequence, SequenceKind, SetSequence};
use crate::symset::{Interval, SymSet};
use crate::universe::{Point, Universe};

/// Endpoints of the exhaustion sequences tried on `[0,1]`.
const EXHAUSTION_GRID: [(i64, i64); 7] = [(0, 1), (1, 4), (1, 3), (1, 2), (2, 3), (3, 4), (1, 1)];

/// How far a chain condition `Z_{n+1} ≺ Z_n` was established.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainVerdict {
    /// Every level, by the given rule.
    AllLevels(String),
    /// `Z_{n+1} ≺ Z_n` fails at this `n`.
    FailsAt(usize),
    /// The first `n` levels hold; no rule covers the rest.
    Probed(usize),
}

/// Decides `Z_{n+1} ≺ Z_n` for every `n` where a rule applies, otherwise
/// for `n < depth`. Returns the verdict and the number of levels checked.
pub fn chain_verdict(d: &Proximity, z: &SetSequence, depth: usize) -> Result<(ChainVerdict, u64)> {
    d.universe().ensure_same(&z.universe())?;
    let stable = z.stable_from();
    let levels = match stable {
        Some(k) => k + 1,
        None => depth,
    };
    let mut prev = z.term(0)?;
    for n in 0..levels {
        let next = z.term(n + 1)?;
        if !d.strongly_below(&next, &prev)? {
            return Ok((ChainVerdict::FailsAt(n), n as u64 + 1));
        }
        prev = next;
    }
    let cases = levels as u64;
    if let Some(k) = stable {
        return Ok((ChainVerdict::AllLevels(format!("terms are constant from level {k}")), cases));
    }
    if d.near_class() == NearClass::Intersection && z.is_nonincreasing()? {
        return Ok((ChainVerdict::AllLevels("nonincreasing, and ≺ is inclusion here".into()), cases));
    }
    match (z.kind(), d.near_class(), d.kind()) {
        (SequenceKind::CoreWithShrinkingTail { core, tail }, NearClass::Cluster, _) => {
            let reach = core.union(tail)?;
            if !(reach.clusters_at_infinity() && reach.complement().clusters_at_infinity()) {
                let rule = "each Z_n ∖ Z_{n+1} is finite and the union of core and tail or its complement is bounded";
                return Ok((ChainVerdict::AllLevels(rule.into()), cases));
            }
        }
        (SequenceKind::ShrinkingNeighborhood(_), _, ProximityKind::Metric) => {
            let rule = "Z_{n+1} and the complement of Z_n are at distance at least 1/(n+1) − 1/(n+2)";
            return Ok((ChainVerdict::AllLevels(rule.into()), cases));
        }
        _ => {}
    }
    Ok((ChainVerdict::Probed(levels), cases))
}

/// `prec.chain`: the report form of [`chain_verdict`].
pub fn is_prec_chain(d: &Proximity, z: &SetSequence, depth: usize) -> Result<LawReport> {
    let (v, cases) = chain_verdict(d, z, depth)?;
    let r = LawReport::new("prec.chain", Status::HoldsExhaustive).with_cases(cases);
    Ok(match v {
        ChainVerdict::AllLevels(rule) => r.with_witness(Witness::new("rule", rule)),
        ChainVerdict::FailsAt(n) => {
            let mut r = r.with_witnesses([
                Witness::note(format!("Z_{} ≺ Z_{} fails", n + 1, n)),
                Witness::set(z.term(n + 1)?),
                Witness::set(z.term(n)?),
            ]);
            r.status = Status::Counterexample;
            r
        }
        ChainVerdict::Probed(levels) => {
            let mut r = r.with_witness(Witness::note(format!("{levels} levels probed; no rule decides the rest")));
            r.status = Status::Inconclusive;
            r
        }
    })
}

/// `⋂ Z_n` for a chain certified at every level.
pub fn proximally_zero_from_chain(d: &Proximity, z: &SetSequence, depth: usize) -> Result<SymSet> {
    match chain_verdict(d, z, depth)?.0 {
        ChainVerdict::AllLevels(_) => z.limit_intersection(),
        ChainVerdict::FailsAt(_) => Err(Error::NotAChain),
        ChainVerdict::Probed(_) => Err(Error::ChainOnlyProbed),
    }
}

/// The intersection of a certified ≺-chain is proximally zero. Where a
/// separating map is known it is cross-checked: `decay(Z)` is a proximity
/// map into `[0,1]` taking the value 1 exactly on `Z`.
pub fn check_thm_2_7(d: &Proximity, z: &SetSequence, opts: &CheckOptions) -> Result<LawReport> {
    let (v, cases) = chain_verdict(d, z, opts.depth)?;
    let rule = match v {
        ChainVerdict::AllLevels(rule) => rule,
        ChainVerdict::FailsAt(_) => return Err(Error::NotAChain),
        ChainVerdict::Probed(levels) => {
            return Ok(LawReport::new("thm.2.7", Status::Inconclusive)
                .with_cases(cases)
                .with_witness(Witness::note(format!("ChainOnlyProbed: {levels} levels hold, no rule decides the rest"))))
        }
    };
    let zero = z.limit_intersection()?;
    let mut r = LawReport::new("thm.2.7", Status::HoldsExhaustive)
        .with_cases(cases)
        .with_witnesses([Witness::set(&zero), Witness::new("rule", rule)]);
    let u = d.universe();
    let covers_inf = !u.has_infinity() || zero.contains(&Point::Infinity);
    if d.near_class() == NearClass::Cluster && covers_inf {
        let g = FunctionSpec::decay_toward(zero.clone())?;
        let ones = g.ones_indicator()?.preimage(&SymSet::singleton(Universe::UnitInterval, Point::rat(1, 1))?)?;
        let v = proximity_map_verdict(&g, d, &Proximity::metric(), opts)?;
        r.cases_checked += v.cases();
        match v.answer() {
            Some(true) if ones == zero => {
                r.witnesses.push(Witness::note(format!("{g} is a proximity map into [0,1] equal to 1 exactly on Z")))
            }
            Some(true) => {}
            _ => {
                r.status = Status::Counterexample;
                r.witnesses.push(Witness::new("map", format!("{g} is not a proximity map")));
            }
        }
    }
    Ok(r)
}

/// Whether every member of `Prefix(s)` (or of the exhaustion) is `≺ b`,
/// decided by rule. `None` when no rule applies.
fn all_terms_below(d: &Proximity, seq: &SetSequence, b: &SymSet) -> Result<Option<bool>> {
    if let Some(k) = seq.stable_from() {
        for n in 0..=k {
            if !d.strongly_below(&seq.term(n)?, b)? {
                return Ok(Some(false));
            }
        }
        return Ok(Some(true));
    }
    match seq.kind() {
        SequenceKind::Prefix(s) => {
            if let Some(AlgebraKind::Atomic { .. }) = d.algebra().map(|m| m.kind()) {
                let sat = d.algebra().and_then(|m| m.saturation(s).transpose()).transpose()?;
                return sat.map(|t| t.is_subset(b)).transpose();
            }
            match d.near_class() {
                NearClass::Intersection => Ok(Some(s.is_subset(b)?)),
                NearClass::Cluster => {
                    let inf_ok = !s.contains(&Point::Infinity) || !b.complement().clusters_at_infinity();
                    Ok(Some(s.is_subset(b)? && inf_ok))
                }
                NearClass::Other => Ok(None),
            }
        }
        SequenceKind::ClosedExhaustion { lo, hi } if matches!(d.kind(), ProximityKind::Metric) => {
            let window = SymSet::from_intervals([Interval::new(*lo, true, *hi, false)]);
            Ok(Some(!b.complement().interval_closure().meets(&window)?))
        }
        _ => Ok(None),
    }
}

/// Increasing sequences to try as `(A_n)`: prefixes of probe sets on
/// countable universes, closed exhaustions of half-open intervals on
/// `[0,1]`.
fn increasing_sequences(u: Universe, sets: &[SymSet]) -> Result<Vec<SetSequence>> {
    match u {
        Universe::UnitInterval => {
            let pts: Vec<Rational64> = EXHAUSTION_GRID.iter().map(|&(n, d)| Rational64::new(n, d)).collect();
            let mut out = Vec::new();
            for (i, &lo) in pts.iter().enumerate() {
                for &hi in &pts[i + 1..] {
                    out.push(SetSequence::closed_exhaustion(lo, hi)?);
                }
            }
            Ok(out)
        }
        _ => sets.iter().filter(|s| !s.is_finite()).map(|s| SetSequence::prefixes(s.clone())).collect(),
    }
}

/// `p_aleph1`: if `A_n ≺ B` for every `n` then `⋃ A_n ≺ B`.
pub fn is_p_aleph1(d: &Proximity, opts: &CheckOptions) -> Result<LawReport> {
    let u = d.universe();
    let probe = opts.probe(u, &d.carrier())?;
    let s = &probe.sets;
    let mut rb = ReportBuilder::new("p_aleph1", probe.pass, probe.seed);
    if u.is_finite() {
        let sc = scan(s.len(), opts, |bi| {
            let b = &s[bi];
            let mut acc = SymSet::empty(u);
            for a in s {
                if d.strongly_below(a, b)? {
                    acc = acc.union(a)?;
                }
            }
            Ok(!d.strongly_below(&acc, b)?)
        })?;
        rb.add_cases((s.len() * s.len()) as u64);
        rb.add("the union of all A ≺ B is ≺ B", sc, |bi| {
            let b = &s[bi];
            let mut out = vec![Witness::note("the union of the sets strongly below B is not strongly below B")];
            out.push(Witness::set(b));
            out
        });
        rb.note("countable unions of subsets of a finite set are finite unions");
        return Ok(rb.finish());
    }
    let seqs = increasing_sequences(u, s)?;
    let unions: Vec<SymSet> = seqs.iter().map(|q| q.limit_union()).collect::<Result<_>>()?;
    let k = s.len();
    let undecided = std::sync::atomic::AtomicU64::new(0);
    let sc = scan(seqs.len() * k, opts, |i| {
        let (qi, bi) = (i / k, i % k);
        if unions[qi].is_subset(&s[bi]).map(|x| !x)? {
            return Ok(false);
        }
        match all_terms_below(d, &seqs[qi], &s[bi])? {
            Some(true) => Ok(!d.strongly_below(&unions[qi], &s[bi])?),
            Some(false) => Ok(false),
            None => {
                undecided.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                Ok(false)
            }
        }
    })?;
    rb.add("every A_n ≺ B but ⋃ A_n is not ≺ B", sc, |i| {
        let (qi, bi) = (i / k, i % k);
        vec![Witness::new("sequence", &seqs[qi]), Witness::set(&unions[qi]), Witness::set(&s[bi])]
    });
    let undecided = undecided.into_inner();
    if undecided > 0 && !rb.failed() {
        rb.undecided(format!("{undecided} sequence/target pairs have no rule for the terms"));
    }
    Ok(rb.finish())
}

/// Whether every term of `seq` lies in `m`, by rule.
fn all_terms_in(m: &SetAlgebra, seq: &SetSequence) -> Result<Option<bool>> {
    if let Some(k) = seq.stable_from() {
        for n in 0..=k {
            if !m.contains(&seq.term(n)?)? {
                return Ok(Some(false));
            }
        }
        return Ok(Some(true));
    }
    match (seq.kind(), m.kind()) {
        (_, AlgebraKind::PowerSet) => Ok(Some(true)),
        (SequenceKind::Prefix(s), AlgebraKind::Atomic { atoms, .. }) => {
            for a in atoms {
                if a.meets(s)? && !a.is_finite() {
                    return Ok(Some(false));
                }
                if a.meets(s)? && a.cardinality() != crate::Cardinality::Finite(1) {
                    return Ok(Some(false));
                }
            }
            Ok(Some(true))
        }
        (SequenceKind::Prefix(s), AlgebraKind::FiniteCofinite) => Ok(Some(!s.contains(&Point::Infinity))),
        (SequenceKind::ClosedExhaustion { .. }, AlgebraKind::Atomic { atoms, .. }) if atoms.len() == 1 => {
            Ok(Some(false))
        }
        _ => Ok(None),
    }
}

/// Whether `m` is closed under countable unions, searched over increasing
/// sequences of members.
pub fn sigma_verdict(m: &SetAlgebra, opts: &CheckOptions) -> Result<Verdict> {
    let u = m.universe();
    if u.is_finite() {
        return Ok(Verdict::Yes {
            exhaustive: true,
            cases: 1,
            note: Some("rule: a finite algebra has finitely many members".into()),
        });
    }
    let probe = opts.probe(u, &SymSet::full(u))?;
    let seqs = increasing_sequences(u, &probe.sets)?;
    let sc = scan(seqs.len(), opts, |i| match all_terms_in(m, &seqs[i])? {
        Some(true) => Ok(!m.contains(&seqs[i].limit_union()?)?),
        _ => Ok(false),
    })?;
    if let Some(i) = sc.first {
        return Ok(Verdict::No {
            cases: sc.cases,
            witnesses: vec![
                Witness::new("sequence", &seqs[i]),
                Witness::set(seqs[i].limit_union()?),
                Witness::note("every term is a member, the union is not"),
            ],
        });
    }
    if m.is_sigma_closed() {
        let why = match m.kind() {
            AlgebraKind::PowerSet => "every subset is a member",
            _ => "finitely many atoms, so finitely many members",
        };
        return Ok(Verdict::Yes { exhaustive: false, cases: sc.cases, note: Some(format!("rule: {why}")) });
    }
    Ok(Verdict::Unknown { cases: sc.cases, note: "no failing sequence among the probes".into() })
}

/// `M` is a σ-algebra iff `δ_M` is P_ℵ1.
pub fn check_sigma_iff_p_aleph1(m: &SetAlgebra, opts: &CheckOptions) -> Result<LawReport> {
    let left = sigma_verdict(m, opts)?;
    let right = Verdict::from_report(&is_p_aleph1(&Proximity::from_algebra(m.clone()), opts)?);
    Ok(agreement_report("thm.2.4", "σ-algebra", &left, "P_ℵ1", &right))
}

/// A P_ℵ1 proximity is zero-dimensional. Refuses unless P_ℵ1 holds; a
/// failure afterwards contradicts the theorem and is reported as such.
pub fn check_p_aleph1_implies_zerodim(d: &Proximity, opts: &CheckOptions) -> Result<LawReport> {
    let p = is_p_aleph1(d, opts)?;
    if !p.status.holds() {
        return Err(Error::PreconditionNotEstablished(format!("P_ℵ1 is {}", p.status.as_str())));
    }
    let mut z = is_zero_dimensional(d, opts)?;
    z.law = "thm.2.3".into();
    z.cases_checked += p.cases_checked;
    if z.status == Status::Counterexample {
        z.witnesses.push(Witness::note("alarm: a P_ℵ1 proximity that is not zero-dimensional"));
    }
    if z.status == Status::HoldsExhaustive && p.status == Status::HoldsOnFamily {
        z.status = Status::HoldsOnFamily;
    }
    Ok(z)
}

/// Chains whose intersections are the candidate proximally zero sets.
fn zero_set_chains(d: &Proximity, sets: &[SymSet]) -> Result<Vec<SetSequence>> {
    let u = d.universe();
    let mut out = Vec::new();
    match u {
        Universe::Finite(_) => {
            for a in sets {
                for r in sets {
                    if r.is_subset(a)? {
                        out.push(SetSequence::list_then_constant(vec![a.clone()], r.clone())?);
                    }
                }
            }
        }
        Universe::Integers { .. } => {
            for r in sets {
                out.push(SetSequence::shrinking_tail(r.clone(), r.complement())?);
            }
            let step = (sets.len() / 12).max(1);
            let small: Vec<&SymSet> = sets.iter().step_by(step).collect();
            for p in &small {
                for q in &small {
                    out.push(SetSequence::shrinking_tail((*p).clone(), (*q).clone())?);
                }
            }
            out.extend(sets.iter().cloned().map(SetSequence::constant));
        }
        Universe::UnitInterval => {
            for r in sets {
                if !r.is_empty() {
                    out.push(SetSequence::shrinking_neighborhoods(r.clone())?);
                }
            }
            out.extend(sets.iter().cloned().map(SetSequence::constant));
        }
    }
    Ok(out)
}

/// Whether `M_δ` contains every chain-certified proximally zero set.
pub fn zero_sets_in_algebra(d: &Proximity, opts: &CheckOptions) -> Result<Verdict> {
    let m = algebra_from_proximity(d)?;
    let probe = opts.probe(d.universe(), &d.carrier())?;
    let chains = zero_set_chains(d, &probe.sets)?;
    let sc = scan(chains.len(), opts, |i| match chain_verdict(d, &chains[i], opts.depth)?.0 {
        ChainVerdict::AllLevels(_) => Ok(!m.contains(&chains[i].limit_intersection()?)?),
        _ => Ok(false),
    })?;
    Ok(match sc.first {
        Some(i) => Verdict::No {
            cases: sc.cases,
            witnesses: vec![
                Witness::set(chains[i].limit_intersection()?),
                Witness::new("sequence", &chains[i]),
                Witness::note(format!("proximally zero but not in M_δ = {m}")),
            ],
        },
        None => Verdict::Yes { exhaustive: probe.pass == Status::HoldsExhaustive, cases: sc.cases, note: None },
    })
}

/// P_ℵ1 iff `M_δ` contains each proximally zero set.
pub fn check_cor_zero_sets(d: &Proximity, opts: &CheckOptions) -> Result<LawReport> {
    let left = Verdict::from_report(&is_p_aleph1(d, opts)?);
    let right = zero_sets_in_algebra(d, opts)?;
    Ok(agreement_report("cor.2.8", "P_ℵ1", &left, "M_δ contains the proximally zero sets", &right))
}

/// The σ-algebra generated by the proximally zero sets.
pub fn proximally_baire(d: &Proximity) -> Result<SetAlgebra> {
    let u = d.universe();
    if let Some(n) = u.finite_size() {
        if n > MAX_EXHAUSTIVE_POINTS {
            return Err(Error::UniverseTooLarge(n, MAX_EXHAUSTIVE_POINTS));
        }
        // chains in a finite universe stabilize, so the zero sets are the R with R ≺ R
        let carrier = d.carrier();
        let mut zero_sets = Vec::new();
        for r in all_subsets(u)? {
            if r.is_subset(&carrier)? && d.strongly_below(&r, &r)? {
                zero_sets.push(r);
            }
        }
        return generated_by(u, &zero_sets);
    }
    let kind = match d.kind() {
        ProximityKind::FromAlgebra(m) => match m.kind() {
            AlgebraKind::Atomic { .. } => return Ok((**m).clone()),
            AlgebraKind::PowerSet => return Ok(SetAlgebra::power_set(u)),
            AlgebraKind::FiniteCofinite => "finite_cofinite",
            AlgebraKind::Induced(_) => return Err(Error::UnsupportedKind("induced algebra".into())),
        },
        ProximityKind::Discrete => return Ok(SetAlgebra::power_set(u)),
        ProximityKind::OnePoint => "one_point",
        other => return Err(Error::UnsupportedKind(format!("proximally Baire sets of {}", kind_name(other)))),
    };
    if u.has_infinity() {
        return Err(Error::UnsupportedKind(format!("proximally Baire sets of {kind} on {u}")));
    }
    // every R is the intersection of the chain R ∪ (Rᶜ ∩ {|k| ≥ n}); confirm on the pool first
    for r in crate::pool::canonical_pool(u)? {
        let z = SetSequence::shrinking_tail(r.clone(), r.complement())?;
        if proximally_zero_from_chain(d, &z, 16)? != r {
            return Err(Error::UnsupportedKind("universal chain did not certify the pool".into()));
        }
    }
    Ok(SetAlgebra::power_set(u))
}

fn kind_name(k: &ProximityKind) -> &'static str {
    match k {
        ProximityKind::Discrete => "discrete",
        ProximityKind::OnePoint => "one_point",
        ProximityKind::FromAlgebra(_) => "from_algebra",
        ProximityKind::Metric => "metric",
        ProximityKind::Table(_) => "table",
        ProximityKind::Subspace { .. } => "subspace",
    }
}

/// `δ_{B*}`, written as the discrete proximity when `B*` is the power set.
pub fn coreflection(d: &Proximity) -> Result<Proximity> {
    let b = proximally_baire(d)?;
    Ok(match b.kind() {
        AlgebraKind::PowerSet => Proximity::discrete(d.universe()),
        _ => Proximity::from_algebra(b),
    })
}

/// For a σ-algebra source, `f` is a proximity map into `δ` iff it is one
/// into the coreflection of `δ`.
pub fn check_factorization(f: &FunctionSpec, n: &SetAlgebra, target: &Proximity, opts: &CheckOptions) -> Result<LawReport> {
    if sigma_verdict(n, opts)?.answer() != Some(true) {
        return Err(Error::SourceNotSigma);
    }
    let core = coreflection(target).map_err(|e| Error::TargetUnsupported(e.to_string()))?;
    let source = Proximity::from_algebra(n.clone());
    let left = proximity_map_verdict(f, &source, target, opts)?;
    let right = proximity_map_verdict(f, &source, &core, opts)?;
    let mut r = agreement_report("thm.2.12", "into δ", &left, "into the coreflection", &right);
    r.witnesses.push(Witness::note(format!("coreflection = {core}")));
    Ok(r)
}

/// Pointwise limits of proximity maps out of a P_ℵ1 space are proximity
/// maps. When P_ℵ1 fails the limit is still computed and reported, which
/// shows what the hypothesis rules out.
pub fn check_pointwise_closure(d: &Proximity, fs: &FunctionSequence, r: &Proximity, opts: &CheckOptions) -> Result<LawReport> {
    let mut cases = 0;
    for (i, t) in fs.representative_terms()?.iter().enumerate() {
        let v = proximity_map_verdict(t, d, r, opts)?;
        cases += v.cases();
        match v.answer() {
            Some(true) => {}
            Some(false) => return Err(Error::PreconditionFailed(format!("term {} ({t}) is not a proximity map", i + 1))),
            None => {
                return Err(Error::PreconditionNotEstablished(format!("term {} ({t}) is a proximity map", i + 1)))
            }
        }
    }
    let limit = fs.limit()?;
    let lv = proximity_map_verdict(&limit, d, r, opts)?;
    let p = is_p_aleph1(d, opts)?;
    cases += lv.cases() + p.cases_checked;
    let limit_w = Witness::new("limit", &limit);
    let answer = match lv.answer() {
        Some(true) => "the limit is a proximity map",
        Some(false) => "the limit is not a proximity map",
        None => "undecided whether the limit is a proximity map",
    };
    let mut out = LawReport::new("thm.2.15", Status::HoldsExhaustive).with_cases(cases);
    out.witnesses.push(limit_w);
    out.witnesses.push(Witness::note(answer));
    match (p.status, lv.answer()) {
        (Status::HoldsExhaustive | Status::HoldsOnFamily, Some(true)) => {
            if p.status == Status::HoldsOnFamily || !lv.is_exhaustive() {
                out.status = Status::HoldsOnFamily;
            }
        }
        (Status::HoldsExhaustive | Status::HoldsOnFamily, Some(false)) => {
            out.status = Status::Counterexample;
            out.witnesses.push(Witness::note("alarm: a P_ℵ1 source with a non-proximity-map limit"));
            if let Verdict::No { witnesses, .. } = lv {
                out.witnesses.extend(witnesses);
            }
        }
        (Status::Counterexample, _) => {
            out.witnesses.push(Witness::note("the source is not P_ℵ1, so the theorem makes no claim"));
            if let Verdict::No { witnesses, .. } = lv {
                out.witnesses.extend(witnesses);
            }
        }
        _ => out.status = Status::Inconclusive,
    }
    Ok(out)
}

/// Maps `(Y, ρ) → [0,1]` to compose with: all maps into `{0, 1/2, 1}` for
/// small finite `Y`, indicators of probe sets on `ℤ`, the identity on
/// `[0,1]`. Only those that are proximity maps are kept.
fn test_maps(r: &Proximity, opts: &CheckOptions) -> Result<(Vec<FunctionSpec>, bool)> {
    let u = r.universe();
    let unit = Universe::UnitInterval;
    let candidates: Vec<FunctionSpec> = match u {
        Universe::Finite(n) if n <= 5 => {
            let values = [Point::rat(0, 1), Point::rat(1, 2), Point::rat(1, 1)];
            let mut out = Vec::new();
            for mut code in 0..3usize.pow(n) {
                let mut vs = Vec::with_capacity(n as usize);
                for _ in 0..n {
                    vs.push(values[code % 3].clone());
                    code /= 3;
                }
                out.push(FunctionSpec::table(u, unit, vs)?);
            }
            out
        }
        Universe::Finite(n) => return Err(Error::UniverseTooLarge(n, 5)),
        Universe::Integers { .. } => opts
            .probe(u, &SymSet::full(u))?
            .sets
            .into_iter()
            .map(|s| FunctionSpec::characteristic(s, unit))
            .collect::<Result<_>>()?,
        Universe::UnitInterval => vec![FunctionSpec::identity(unit)],
    };
    let metric = Proximity::metric();
    let mut kept = Vec::new();
    let mut exhaustive = u.is_finite();
    for g in candidates {
        let v = proximity_map_verdict(&g, r, &metric, opts)?;
        match v.answer() {
            Some(true) => kept.push(g),
            Some(false) => {}
            None => exhaustive = false,
        }
    }
    Ok((kept, exhaustive))
}

/// `f` is a proximity map iff `g∘f` is one for every proximity map
/// `g : (Y, ρ) → [0,1]`.
pub fn check_lemma_2_14(f: &FunctionSpec, d: &Proximity, r: &Proximity, opts: &CheckOptions) -> Result<LawReport> {
    let left = proximity_map_verdict(f, d, r, opts)?;
    let (maps, exhaustive) = test_maps(r, opts)?;
    let metric = Proximity::metric();
    let mut cases = 0;
    let mut all_exhaustive = exhaustive;
    let mut undecided = None;
    let mut right = None;
    for g in &maps {
        let v = proximity_map_verdict(&f.then(g)?, d, &metric, opts)?;
        cases += v.cases();
        all_exhaustive &= v.is_exhaustive();
        match v.answer() {
            Some(true) => {}
            Some(false) => {
                let mut ws = vec![Witness::new("map", g)];
                if let Verdict::No { witnesses, .. } = v {
                    ws.extend(witnesses);
                }
                right = Some(Verdict::No { cases, witnesses: ws });
                break;
            }
            None => undecided = Some(g.to_string()),
        }
    }
    let right = match (right, undecided) {
        (Some(v), _) => v,
        (None, Some(g)) => Verdict::Unknown { cases, note: format!("undecided for {g}") },
        (None, None) => Verdict::Yes {
            exhaustive: all_exhaustive,
            cases,
            note: Some(format!("{} test maps into [0,1]", maps.len())),
        },
    };
    Ok(agreement_report("lem.2.14", "proximity map", &left, "every g∘f is a proximity map", &right))
}

/// A ≺-chain whose intersection is `Uᶜ`, for an open `U`; this exhibits `U`
/// as proximally cozero.
pub fn lindelof_cozero_chain(d: &Proximity, u: &SymSet) -> Result<SetSequence> {
    if !d.is_open(u)? {
        return Err(Error::NotOpen);
    }
    let uc = d.relative_complement(u)?;
    if d.strongly_below(&uc, &uc)? {
        return Ok(SetSequence::constant(uc));
    }
    match d.universe() {
        Universe::Integers { .. } => SetSequence::shrinking_tail(uc, u.clone()),
        Universe::UnitInterval if matches!(d.kind(), ProximityKind::Metric) => SetSequence::shrinking_neighborhoods(uc),
        other => Err(Error::UnsupportedKind(format!("cozero chains for {} on {other}", kind_name(d.kind())))),
    }
}

/// Every open set of a countable (hence Lindelöf) space, and every open set
/// of `[0,1]`, is proximally cozero: its complement is the intersection of
/// a certified chain.
pub fn check_thm_2_9(d: &Proximity, u: Option<&SymSet>, opts: &CheckOptions) -> Result<LawReport> {
    let opens: Vec<SymSet> = match u {
        Some(u) => {
            if !d.is_open(u)? {
                return Err(Error::NotOpen);
            }
            vec![u.clone()]
        }
        None => {
            let probe = opts.probe(d.universe(), &d.carrier())?;
            let mut out = Vec::new();
            for s in probe.sets {
                if d.is_open(&s)? {
                    out.push(s);
                }
            }
            out
        }
    };
    let pass = match (u, opts.strategy_for(d.universe()).is_exhaustive()) {
        (Some(_), _) | (None, true) => Status::HoldsExhaustive,
        _ => Status::HoldsOnFamily,
    };
    let mut rb = ReportBuilder::new("thm.2.9", pass, opts.strategy_for(d.universe()).seed());
    let sc = scan(opens.len(), opts, |i| {
        let z = lindelof_cozero_chain(d, &opens[i])?;
        match chain_verdict(d, &z, opts.depth)?.0 {
            ChainVerdict::AllLevels(_) => Ok(z.limit_intersection()? != d.relative_complement(&opens[i])?),
            _ => Ok(true),
        }
    })?;
    rb.add("the complement of U is a certified chain intersection", sc, |i| {
        let mut out = vec![Witness::set(&opens[i])];
        if let Ok(z) = lindelof_cozero_chain(d, &opens[i]) {
            out.push(Witness::new("sequence", z));
        }
        out
    });
    if let [only] = opens.as_slice() {
        rb.note(format!("chain {}", lindelof_cozero_chain(d, only)?));
    } else {
        rb.note(format!("{} open sets", opens.len()));
    }
    Ok(rb.finish())
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

    #[test]
    fn even_odd_chains_are_certified() {
        let d = Proximity::one_point(z()).unwrap();
        let e = evens();
        let zs = SetSequence::shrinking_tail(e.clone(), e.complement()).unwrap();
        assert_eq!(proximally_zero_from_chain(&d, &zs, 16).unwrap(), e);
        let constant = SetSequence::constant(e.clone());
        assert_eq!(chain_verdict(&d, &constant, 16).unwrap().0, ChainVerdict::FailsAt(0));
    }

    #[test]
    fn finite_cofinite_is_not_p_aleph1() {
        let d = Proximity::from_algebra(SetAlgebra::finite_cofinite(z()).unwrap());
        let r = is_p_aleph1(&d, &CheckOptions::default()).unwrap();
        assert_eq!(r.status, Status::Counterexample);
        let seq = r.witnesses.iter().find(|w| w.kind == "sequence").unwrap();
        assert_eq!(seq.rendering, format!("prefixes({})", evens()));
        let sets: Vec<&str> = r.witnesses.iter().filter(|w| w.kind == "set").map(|w| w.rendering.as_str()).collect();
        assert_eq!(sets, [evens().to_string(), evens().to_string()]);
    }

    #[test]
    fn metric_is_not_p_aleph1() {
        let r = is_p_aleph1(&Proximity::metric(), &CheckOptions::default()).unwrap();
        assert_eq!(r.status, Status::Counterexample, "{r}");
        assert!(matches!(
            check_p_aleph1_implies_zerodim(&Proximity::metric(), &CheckOptions::default()),
            Err(Error::PreconditionNotEstablished(_))
        ));
    }

    #[test]
    fn discrete_integers_are_p_aleph1() {
        let r = is_p_aleph1(&Proximity::discrete(z()), &CheckOptions::default()).unwrap();
        assert_eq!(r.status, Status::HoldsOnFamily, "{r}");
    }

    #[test]
    fn cor_zero_sets_for_one_point() {
        let r = check_cor_zero_sets(&Proximity::one_point(z()).unwrap(), &CheckOptions::default()).unwrap();
        assert!(r.status.holds(), "{r}");
        assert_eq!(r.witnesses[0].rendering, "P_ℵ1: no");
        assert!(r.witnesses.iter().any(|w| w.kind == "set" && w.rendering == evens().to_string()));
    }

    #[test]
    fn coreflection_of_one_point_is_discrete() {
        let c = coreflection(&Proximity::one_point(z()).unwrap()).unwrap();
        assert_eq!(c, Proximity::discrete(z()));
        assert!(matches!(proximally_baire(&Proximity::metric()), Err(Error::UnsupportedKind(_))));
    }

    #[test]
    fn atom_algebra_is_its_own_baire_algebra() {
        let m = SetAlgebra::from_partition(3, &[0b001, 0b110]).unwrap();
        let b = proximally_baire(&Proximity::from_algebra(m.clone())).unwrap();
        assert!(b.same_members(&m).unwrap());
    }

    #[test]
    fn negative_control_limit_is_not_a_map() {
        let d = Proximity::one_point(z()).unwrap();
        let fs = FunctionSequence::powers(FunctionSpec::decay_toward(evens()).unwrap()).unwrap();
        let r = check_pointwise_closure(&d, &fs, &Proximity::metric(), &CheckOptions::default()).unwrap();
        assert_eq!(r.status, Status::HoldsExhaustive, "{r}");
        assert!(r.witnesses.iter().any(|w| w.rendering == "the limit is not a proximity map"));
    }

    #[test]
    fn lindelof_chains() {
        let d = Proximity::one_point(z()).unwrap();
        let z1 = lindelof_cozero_chain(&d, &evens()).unwrap();
        assert_eq!(z1, SetSequence::shrinking_tail(evens().complement(), evens()).unwrap());
        let co = SymSet::integers(z(), [0]).unwrap().complement();
        assert_eq!(lindelof_cozero_chain(&d, &co).unwrap(), SetSequence::constant(SymSet::integers(z(), [0]).unwrap()));
        let r = check_thm_2_9(&d, None, &CheckOptions::default()).unwrap();
        assert_eq!(r.status, Status::HoldsOnFamily, "{r}");
    }
}
