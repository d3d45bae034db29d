//! The correspondence between zero-dimensional proximities and algebras of
//! sets, and between proximity maps and measurable maps.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{AlgebraKind, SetAlgebra};
use crate::axioms::check_axioms;
use crate::check::{pair, scan, CheckOptions, ReportBuilder};
use crate::error::{Error, Result};
use crate::function::{FunctionKind, FunctionSpec};
use crate::pool::{all_subsets, Strategy, MAX_EXHAUSTIVE_POINTS};
use crate::proximity::{NearClass, Proximity, ProximityKind};
use crate::report::{LawReport, Status, Witness};
use crate::symset::SymSet;
use crate::universe::{Point, Universe};

/// Largest image (number of distinct values) whose subset pairs are
/// enumerated when deciding proximity maps.
const MAX_IMAGE_VALUES: usize = 10;

/// `M_δ = {R : R ≺ R}`. Exact by exhaustion on finite universes and by
/// per-kind rule for the built-in symbolic kinds.
pub fn algebra_from_proximity(d: &Proximity) -> Result<SetAlgebra> {
    let u = d.universe();
    if let Some(n) = u.finite_size() {
        if matches!(d.kind(), ProximityKind::Subspace { .. }) {
            return Ok(SetAlgebra::induced(Arc::new(d.clone())));
        }
        if n > MAX_EXHAUSTIVE_POINTS {
            return Err(Error::UniverseTooLarge(n, MAX_EXHAUSTIVE_POINTS));
        }
        let members: Vec<SymSet> = all_subsets(u)?
            .into_iter()
            .filter_map(|r| match d.strongly_below(&r, &r) {
                Ok(true) => Some(Ok(r)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .collect::<Result<_>>()?;
        return atoms_of_family(u, &members);
    }
    match d.kind() {
        ProximityKind::Discrete => Ok(SetAlgebra::power_set(u)),
        ProximityKind::OnePoint => SetAlgebra::finite_cofinite(u),
        ProximityKind::Metric => Ok(SetAlgebra::trivial(u)),
        ProximityKind::FromAlgebra(m) => Ok((**m).clone()),
        ProximityKind::Table(_) => Err(Error::UnsupportedKind("table proximity on an infinite universe".into())),
        ProximityKind::Subspace { .. } => {
            Err(Error::UnsupportedKind("subspace proximity on an infinite universe".into()))
        }
    }
}

/// The atomic algebra whose members are exactly `members`, if they form an
/// algebra on a finite universe.
fn atoms_of_family(u: Universe, members: &[SymSet]) -> Result<SetAlgebra> {
    let m = generated_by(u, members)?;
    let listed = m.members().ok_or_else(|| Error::InvalidAlgebra("too many atoms".into()))?;
    let mut given = members.to_vec();
    given.sort();
    if listed != given {
        return Err(Error::InvalidAlgebra("{R : R ≺ R} is not closed under the Boolean operations".into()));
    }
    Ok(m)
}

/// The algebra generated by a family of subsets of a finite universe; its
/// atoms are the classes of points with equal membership signatures.
pub(crate) fn generated_by(u: Universe, members: &[SymSet]) -> Result<SetAlgebra> {
    let mut classes: BTreeMap<Vec<bool>, Vec<Point>> = BTreeMap::new();
    for x in SymSet::full(u).sample_members(0) {
        let sig: Vec<bool> = members.iter().map(|r| r.contains(&x)).collect();
        classes.entry(sig).or_default().push(x);
    }
    let atoms: Vec<SymSet> =
        classes.into_values().map(|pts| SymSet::from_points(u, pts)).collect::<Result<_>>()?;
    SetAlgebra::from_atoms(u, atoms)
}

/// `δ_M`.
pub fn proximity_from_algebra(m: SetAlgebra) -> Proximity {
    Proximity::from_algebra(m)
}

/// Outcome of searching for a self-proximal interpolant.
enum Interpolant {
    Found,
    None,
    Unknown,
}

fn zero_dim_witness(d: &Proximity, m: Option<&SetAlgebra>, a: &SymSet, b: &SymSet) -> Result<Interpolant> {
    let bc = d.relative_complement(b)?;
    if let Some(m) = m {
        let exact = !matches!(m.kind(), AlgebraKind::Induced(_)) || d.universe().is_finite();
        if exact {
            return Ok(match m.separator(a, &bc)? {
                Some(r) if d.strongly_below(a, &r)? && d.strongly_below(&r, &r)? && d.strongly_below(&r, b)? => {
                    Interpolant::Found
                }
                _ => Interpolant::None,
            });
        }
    }
    let mut c = d.interpolate(a, b)?;
    for _ in 0..8 {
        if d.strongly_below(&c, &c)? && d.strongly_below(a, &c)? && d.strongly_below(&c, b)? {
            return Ok(Interpolant::Found);
        }
        c = d.interpolate(&c, b)?;
    }
    Ok(Interpolant::Unknown)
}

/// For every probed `A ≺ B`, a `C` with `A ≺ C ≺ C ≺ B`. Candidates come
/// from `M_δ` first, then from iterated interpolation.
pub fn is_zero_dimensional(d: &Proximity, opts: &CheckOptions) -> Result<LawReport> {
    let probe = opts.probe(d.universe(), &d.carrier())?;
    let s = &probe.sets;
    let m_len = s.len();
    let algebra = algebra_from_proximity(d).ok();
    let unknown = std::sync::atomic::AtomicU64::new(0);
    let sc = scan(m_len * m_len, opts, |i| {
        let (a, b) = pair(i, m_len);
        if !d.strongly_below(&s[a], &s[b])? {
            return Ok(false);
        }
        match zero_dim_witness(d, algebra.as_ref(), &s[a], &s[b])? {
            Interpolant::Found => Ok(false),
            Interpolant::None => Ok(true),
            Interpolant::Unknown => {
                unknown.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                Ok(false)
            }
        }
    })?;
    let mut rb = ReportBuilder::new("zero_dim", probe.pass, probe.seed);
    rb.add("A ≺ B gives C with A ≺ C ≺ C ≺ B", sc, |i| {
        let (a, b) = pair(i, m_len);
        vec![Witness::set(&s[a]), Witness::set(&s[b])]
    });
    let unknown = unknown.into_inner();
    if unknown > 0 {
        rb.undecided(format!("{unknown} pairs without a witness after 8 interpolation rounds"));
    }
    Ok(rb.finish())
}

/// Combines sub-reports into one under `law`: the worst status wins and
/// the first failing sub-report supplies witnesses.
pub fn merge_reports(law: &str, parts: Vec<LawReport>) -> LawReport {
    let rank = |s: Status| match s {
        Status::Counterexample => 4,
        Status::Refused => 3,
        Status::Inconclusive => 2,
        Status::HoldsOnFamily => 1,
        Status::HoldsExhaustive => 0,
    };
    let worst = parts.iter().map(|r| r.status).max_by_key(|s| rank(*s)).unwrap_or(Status::HoldsExhaustive);
    let mut out = LawReport::new(law, worst);
    out.cases_checked = parts.iter().map(|r| r.cases_checked).sum();
    out.seed = parts.first().map(|r| r.seed).unwrap_or(0);
    for p in &parts {
        if p.status == worst && !p.status.holds() {
            out.witnesses.push(Witness::new("part", &p.law));
            out.witnesses.extend(p.witnesses.iter().cloned());
            break;
        }
    }
    if worst.holds() {
        for p in &parts {
            out.witnesses.extend(p.witnesses.iter().filter(|w| w.kind == "note").cloned());
        }
    }
    out
}

/// `M_δ` contains ∅ and X and is closed under complement and union.
pub fn check_thm_2_1_1(d: &Proximity, opts: &CheckOptions) -> Result<LawReport> {
    let probe = opts.probe(d.universe(), &d.carrier())?;
    let member = |r: &SymSet| d.strongly_below(r, r);
    let members: Vec<SymSet> = probe
        .sets
        .iter()
        .filter_map(|r| match member(r) {
            Ok(true) => Some(Ok(r.clone())),
            Ok(false) => None,
            Err(e) => Some(Err(e)),
        })
        .collect::<Result<_>>()?;
    let k = members.len();
    let mut rb = ReportBuilder::new("thm.2.1.1", probe.pass, probe.seed);
    let empty = SymSet::empty(d.universe());
    let x = d.carrier();
    let ends = scan(2, opts, |i| Ok(!member(if i == 0 { &empty } else { &x })?))?;
    rb.add("∅ and X are members", ends, |i| vec![Witness::set(if i == 0 { &empty } else { &x })]);
    let comp = scan(k, opts, |i| Ok(!member(&d.relative_complement(&members[i])?)?))?;
    rb.add("complements of members are members", comp, |i| vec![Witness::set(&members[i])]);
    let un = scan(k * k, opts, |i| {
        let (a, b) = pair(i, k);
        Ok(!member(&members[a].union(&members[b])?)?)
    })?;
    rb.add("unions of members are members", un, |i| {
        let (a, b) = pair(i, k);
        vec![Witness::set(&members[a]), Witness::set(&members[b])]
    });
    rb.note(format!("{k} members among the probe sets"));
    Ok(rb.finish())
}

/// `δ_M` is a zero-dimensional proximity.
pub fn check_thm_2_1_2(m: &SetAlgebra, opts: &CheckOptions) -> Result<LawReport> {
    let d = Proximity::from_algebra(m.clone());
    let parts = vec![check_axioms(&d, opts)?, is_zero_dimensional(&d, opts)?];
    Ok(merge_reports("thm.2.1.2", parts))
}

/// `δ_{M_δ} = δ` for zero-dimensional `δ`.
pub fn check_thm_2_1_3(d: &Proximity, opts: &CheckOptions) -> Result<LawReport> {
    let zd = is_zero_dimensional(d, opts)?;
    match zd.status {
        Status::Counterexample => return Err(Error::NotZeroDimensional),
        Status::Inconclusive | Status::Refused => {
            return Err(Error::PreconditionNotEstablished("zero-dimensionality".into()))
        }
        _ => {}
    }
    let m = algebra_from_proximity(d)?;
    let back = Proximity::from_algebra(m.clone());
    let probe = opts.probe(d.universe(), &d.carrier())?;
    let s = &probe.sets;
    let k = s.len();
    let mut rb = ReportBuilder::new("thm.2.1.3", probe.pass, probe.seed);
    let sc = scan(k * k, opts, |i| {
        let (a, b) = pair(i, k);
        Ok(d.near(&s[a], &s[b])? != back.near(&s[a], &s[b])?)
    })?;
    rb.add("δ_{M_δ}(A, B) = δ(A, B)", sc, |i| {
        let (a, b) = pair(i, k);
        vec![Witness::set(&s[a]), Witness::set(&s[b])]
    });
    rb.note(format!("M_δ = {m}"));
    Ok(rb.finish())
}

/// `M = M_{δ_M}`.
pub fn check_thm_2_1_4(m: &SetAlgebra, opts: &CheckOptions) -> Result<LawReport> {
    let d = Proximity::from_algebra(m.clone());
    let probe = opts.probe(m.universe(), &SymSet::full(m.universe()))?;
    let s = &probe.sets;
    let mut rb = ReportBuilder::new("thm.2.1.4", probe.pass, probe.seed);
    let sc = scan(s.len(), opts, |i| Ok(m.contains(&s[i])? != d.strongly_below(&s[i], &s[i])?))?;
    rb.add("R ∈ M iff R ≺_{δ_M} R", sc, |i| vec![Witness::set(&s[i])]);
    Ok(rb.finish())
}

/// Members of `M` form a basis of the topology of `δ_M`: each member is
/// open, and each point of an open set lies in a member inside it.
pub fn check_thm_2_1_5(m: &SetAlgebra, opts: &CheckOptions) -> Result<LawReport> {
    let d = Proximity::from_algebra(m.clone());
    let probe = opts.probe(m.universe(), &SymSet::full(m.universe()))?;
    let radius = SymSet::probe_radius(&probe.sets);
    let mut opens = Vec::new();
    let mut members = Vec::new();
    for u in &probe.sets {
        if d.is_open(u)? {
            opens.push(u.clone());
        }
        if m.contains(u)? {
            members.push(u.clone());
        }
    }
    let mut rb = ReportBuilder::new("thm.2.1.5", probe.pass, probe.seed);
    let mo = scan(members.len(), opts, |i| Ok(!d.is_open(&members[i])?))?;
    rb.add("members are open", mo, |i| vec![Witness::set(&members[i])]);
    let mut cases: Vec<(usize, Point)> = Vec::new();
    for (i, u) in opens.iter().enumerate() {
        for x in u.sample_members(radius) {
            cases.push((i, x));
        }
    }
    let sc = scan(cases.len(), opts, |i| {
        let (ui, x) = &cases[i];
        let sx = SymSet::singleton(m.universe(), x.clone())?;
        let uc = opens[*ui].complement();
        Ok(match m.separator(&sx, &uc)? {
            Some(r) => !(r.contains(x) && r.is_subset(&opens[*ui])?),
            None => true,
        })
    })?;
    rb.add("each x ∈ U open lies in a member R ⊆ U", sc, |i| {
        vec![Witness::set(&opens[cases[i].0]), Witness::new("point", &cases[i].1)]
    });
    rb.note(format!("{} open sets among the probe sets", opens.len()));
    Ok(rb.finish())
}

/// A decided or undecided yes/no answer with supporting detail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Yes { exhaustive: bool, cases: u64, note: Option<String> },
    No { cases: u64, witnesses: Vec<Witness> },
    Unknown { cases: u64, note: String },
}

impl Verdict {
    pub fn answer(&self) -> Option<bool> {
        match self {
            Verdict::Yes { .. } => Some(true),
            Verdict::No { .. } => Some(false),
            Verdict::Unknown { .. } => None,
        }
    }

    pub fn cases(&self) -> u64 {
        match self {
            Verdict::Yes { cases, .. } | Verdict::No { cases, .. } | Verdict::Unknown { cases, .. } => *cases,
        }
    }

    pub fn is_exhaustive(&self) -> bool {
        match self {
            Verdict::Yes { exhaustive, .. } => *exhaustive,
            Verdict::No { .. } => true,
            Verdict::Unknown { .. } => false,
        }
    }

    /// Reads a law report as an answer: holds is yes, a counterexample is
    /// no, anything else is undecided.
    pub fn from_report(r: &LawReport) -> Self {
        let note = r.witnesses.iter().find(|w| w.kind == "note").map(|w| w.rendering.clone());
        match r.status {
            Status::HoldsExhaustive => Verdict::Yes { exhaustive: true, cases: r.cases_checked, note },
            Status::HoldsOnFamily => Verdict::Yes { exhaustive: false, cases: r.cases_checked, note },
            Status::Counterexample => Verdict::No { cases: r.cases_checked, witnesses: r.witnesses.clone() },
            Status::Inconclusive | Status::Refused => Verdict::Unknown {
                cases: r.cases_checked,
                note: r.witnesses.first().map(|w| w.rendering.clone()).unwrap_or_else(|| "undecided".into()),
            },
        }
    }

    pub(crate) fn rule(note: &str) -> Self {
        Verdict::Yes { exhaustive: true, cases: 1, note: Some(format!("rule: {note}")) }
    }

    pub fn into_report(self, law: &str) -> LawReport {
        match self {
            Verdict::Yes { exhaustive, cases, note } => {
                let status = if exhaustive { Status::HoldsExhaustive } else { Status::HoldsOnFamily };
                let mut r = LawReport::new(law, status).with_cases(cases);
                if let Some(n) = note {
                    r.witnesses.push(Witness::note(n));
                }
                r
            }
            Verdict::No { cases, witnesses } => {
                LawReport::new(law, Status::Counterexample).with_cases(cases).with_witnesses(witnesses)
            }
            Verdict::Unknown { cases, note } => {
                LawReport::new(law, Status::Inconclusive).with_cases(cases).with_witness(Witness::note(note))
            }
        }
    }
}

fn subsets_of_points(u: Universe, pts: &[Point]) -> Result<Vec<SymSet>> {
    (0u32..1 << pts.len())
        .map(|mask| {
            let chosen = pts.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, p)| p.clone());
            SymSet::from_points(u, chosen)
        })
        .collect()
}

/// Whether `f : (X, δ) → (Y, ρ)` is a proximity map: `A δ B` implies
/// `f(A) ρ f(B)`.
pub fn proximity_map_verdict(f: &FunctionSpec, d: &Proximity, r: &Proximity, opts: &CheckOptions) -> Result<Verdict> {
    f.domain().ensure_same(&d.universe())?;
    f.codomain().ensure_same(&r.universe())?;
    if let Some(n) = d.universe().finite_size().filter(|&n| n <= MAX_EXHAUSTIVE_POINTS / 2) {
        let _ = n;
        let subsets = Strategy::Exhaustive.sets(d.universe(), &d.carrier())?;
        let images: Vec<SymSet> = subsets.iter().map(|a| f.image(a)).collect::<Result<_>>()?;
        let k = subsets.len();
        let sc = scan(k * k, opts, |i| {
            let (a, b) = pair(i, k);
            Ok(d.near(&subsets[a], &subsets[b])? && !r.near(&images[a], &images[b])?)
        })?;
        return Ok(match sc.first {
            None => Verdict::Yes { exhaustive: true, cases: sc.cases, note: None },
            Some(i) => {
                let (a, b) = pair(i, k);
                Verdict::No {
                    cases: sc.cases,
                    witnesses: vec![
                        Witness::set(&subsets[a]),
                        Witness::set(&subsets[b]),
                        Witness::new("image", &images[a]),
                        Witness::new("image", &images[b]),
                    ],
                }
            }
        });
    }
    if let Some(levels) = f.level_sets()? {
        if levels.len() > MAX_IMAGE_VALUES {
            return Err(Error::UnsupportedKind(format!("image with {} values", levels.len())));
        }
        let values: Vec<Point> = levels.iter().map(|(v, _)| v.clone()).collect();
        let cs = subsets_of_points(r.universe(), &values)?;
        let pre: Vec<SymSet> = cs.iter().map(|c| f.preimage(c)).collect::<Result<_>>()?;
        let k = cs.len();
        let sc = scan(k * k, opts, |i| {
            let (a, b) = pair(i, k);
            Ok(!r.near(&cs[a], &cs[b])? && d.near(&pre[a], &pre[b])?)
        })?;
        return Ok(match sc.first {
            None => Verdict::Yes { exhaustive: true, cases: sc.cases, note: Some("decided on the finite image".into()) },
            Some(i) => {
                let (a, b) = pair(i, k);
                Verdict::No {
                    cases: sc.cases,
                    witnesses: vec![
                        Witness::set(&pre[a]),
                        Witness::set(&pre[b]),
                        Witness::new("image", &cs[a]),
                        Witness::new("image", &cs[b]),
                    ],
                }
            }
        });
    }
    let (dc, rc) = (d.near_class(), r.near_class());
    if dc == NearClass::Intersection {
        return Ok(Verdict::rule("near sets of a discrete source meet, so their images meet"));
    }
    match f.kind() {
        FunctionKind::Identity if d == r => return Ok(Verdict::rule("identity on one proximity")),
        FunctionKind::Shift(_) | FunctionKind::Identity if dc == NearClass::Cluster && rc == NearClass::Cluster => {
            return Ok(Verdict::rule("the map is a bijection preserving finiteness and ∞"));
        }
        FunctionKind::Decay { .. } if dc == NearClass::Cluster && matches!(r.kind(), ProximityKind::Metric) => {
            return Ok(Verdict::rule("images of sets clustering at ∞ both accumulate at 1"));
        }
        FunctionKind::Decay { .. } => {
            return Ok(Verdict::Unknown { cases: 0, note: "no rule for this source".into() });
        }
        _ => {}
    }
    let probe = opts.probe(d.universe(), &d.carrier())?;
    let s = &probe.sets;
    let images: Vec<SymSet> = s.iter().map(|a| f.image(a)).collect::<Result<_>>()?;
    let k = s.len();
    let sc = scan(k * k, opts, |i| {
        let (a, b) = pair(i, k);
        Ok(d.near(&s[a], &s[b])? && !r.near(&images[a], &images[b])?)
    })?;
    Ok(match sc.first {
        None => Verdict::Unknown { cases: sc.cases, note: "no violation on the probe family".into() },
        Some(i) => {
            let (a, b) = pair(i, k);
            Verdict::No {
                cases: sc.cases,
                witnesses: vec![
                    Witness::set(&s[a]),
                    Witness::set(&s[b]),
                    Witness::new("image", &images[a]),
                    Witness::new("image", &images[b]),
                ],
            }
        }
    })
}

pub fn is_proximity_map(f: &FunctionSpec, d: &Proximity, r: &Proximity, opts: &CheckOptions) -> Result<LawReport> {
    Ok(proximity_map_verdict(f, d, r, opts)?.into_report("prox.map"))
}

/// Whether `f⁻¹(R) ∈ M` for every `R ∈ N`.
pub fn measurable_verdict(f: &FunctionSpec, m: &SetAlgebra, n: &SetAlgebra, opts: &CheckOptions) -> Result<Verdict> {
    f.domain().ensure_same(&m.universe())?;
    f.codomain().ensure_same(&n.universe())?;
    let check_family = |family: Vec<SymSet>, exhaustive: bool, note: &str| -> Result<Verdict> {
        let pre: Vec<SymSet> = family.iter().map(|r| f.preimage(r)).collect::<Result<_>>()?;
        let sc = scan(family.len(), opts, |i| Ok(!m.contains(&pre[i])?))?;
        Ok(match sc.first {
            None if exhaustive => Verdict::Yes { exhaustive: true, cases: sc.cases, note: Some(note.into()) },
            None => Verdict::Unknown { cases: sc.cases, note: "no violation on the probe family".into() },
            Some(i) => Verdict::No {
                cases: sc.cases,
                witnesses: vec![Witness::new("member", &family[i]), Witness::new("preimage", &pre[i])],
            },
        })
    };
    if let Some(atoms) = n.atoms() {
        if !matches!(f.kind(), FunctionKind::Decay { .. }) || atoms.len() == 1 {
            return check_family(atoms.to_vec(), true, "preimages of the atoms");
        }
    }
    if let Some(levels) = f.level_sets()? {
        if levels.len() > MAX_IMAGE_VALUES {
            return Err(Error::UnsupportedKind(format!("image with {} values", levels.len())));
        }
        let values: Vec<Point> = levels.iter().map(|(v, _)| v.clone()).collect();
        let traces = match n.kind() {
            AlgebraKind::PowerSet | AlgebraKind::FiniteCofinite => subsets_of_points(n.universe(), &values)?,
            _ => n.members_by_enumeration()?,
        };
        return check_family(traces, true, "preimages of every trace on the image");
    }
    match (f.kind(), m.kind(), n.kind()) {
        (_, AlgebraKind::PowerSet, _) => return Ok(Verdict::rule("every preimage lies in the power set")),
        (FunctionKind::Shift(_) | FunctionKind::Identity, AlgebraKind::FiniteCofinite, AlgebraKind::FiniteCofinite) => {
            return Ok(Verdict::rule("preimages of finite sets are finite"));
        }
        (FunctionKind::Identity, _, _) if m == n => return Ok(Verdict::rule("identity on one algebra")),
        (FunctionKind::Decay { .. }, _, _) => {
            return Ok(Verdict::Unknown { cases: 0, note: "no preimage rule for this map".into() })
        }
        _ => {}
    }
    let probe = opts.probe(n.universe(), &SymSet::full(n.universe()))?;
    let mut family = Vec::new();
    for r in probe.sets {
        if n.contains(&r)? {
            family.push(r);
        }
    }
    check_family(family, false, "")
}

/// Proximity map between `δ_M` and `δ_N` iff measurable: both sides are
/// decided and must agree.
pub fn check_prox_iff_measurable(f: &FunctionSpec, m: &SetAlgebra, n: &SetAlgebra, opts: &CheckOptions) -> Result<LawReport> {
    let dm = Proximity::from_algebra(m.clone());
    let dn = Proximity::from_algebra(n.clone());
    let left = proximity_map_verdict(f, &dm, &dn, opts)?;
    let right = measurable_verdict(f, m, n, opts)?;
    Ok(agreement_report("thm.2.2", "proximity map", &left, "measurable", &right))
}

/// Report that two verdicts agree.
pub fn agreement_report(law: &str, left_name: &str, left: &Verdict, right_name: &str, right: &Verdict) -> LawReport {
    let cases = left.cases() + right.cases();
    let describe = |name: &str, v: &Verdict| {
        Witness::new(
            "side",
            format!("{name}: {}", match v.answer() {
                Some(true) => "yes",
                Some(false) => "no",
                None => "undecided",
            }),
        )
    };
    let mut witnesses = vec![describe(left_name, left), describe(right_name, right)];
    let detail = |v: &Verdict| -> Vec<Witness> {
        match v {
            Verdict::No { witnesses, .. } => witnesses.clone(),
            Verdict::Yes { note: Some(n), .. } => vec![Witness::note(n)],
            Verdict::Unknown { note, .. } => vec![Witness::note(note)],
            _ => Vec::new(),
        }
    };
    witnesses.extend(detail(left));
    witnesses.extend(detail(right));
    let status = match (left.answer(), right.answer()) {
        (Some(a), Some(b)) if a == b => {
            if left.is_exhaustive() && right.is_exhaustive() {
                Status::HoldsExhaustive
            } else {
                Status::HoldsOnFamily
            }
        }
        (Some(_), Some(_)) => Status::Counterexample,
        _ => Status::Inconclusive,
    };
    LawReport::new(law, status).with_cases(cases).with_witnesses(witnesses)
}

/// Functoriality: identities are proximity maps, composites of proximity
/// maps are proximity maps, and for algebra-induced proximities the
/// preimage condition composes the same way.
pub fn check_functoriality(
    f: &FunctionSpec,
    g: &FunctionSpec,
    p: &Proximity,
    q: &Proximity,
    r: &Proximity,
    opts: &CheckOptions,
) -> Result<LawReport> {
    let mut parts = Vec::new();
    for d in [p, q, r] {
        let id = FunctionSpec::identity(d.universe());
        parts.push(proximity_map_verdict(&id, d, d, opts)?.into_report("identity is a proximity map"));
    }
    let gf = f.then(g)?;
    let vf = proximity_map_verdict(f, p, q, opts)?;
    let vg = proximity_map_verdict(g, q, r, opts)?;
    let vgf = proximity_map_verdict(&gf, p, r, opts)?;
    let mut composite = LawReport::new("composite of proximity maps", Status::HoldsExhaustive)
        .with_cases(vf.cases() + vg.cases() + vgf.cases());
    match (vf.answer(), vg.answer(), vgf.answer()) {
        (Some(true), Some(true), Some(false)) => {
            composite.status = Status::Counterexample;
            composite.witnesses.push(Witness::new("map", &gf));
        }
        (Some(true), Some(true), None) | (None, _, _) | (_, None, _) => composite.status = Status::Inconclusive,
        _ => {
            if !(vf.is_exhaustive() && vg.is_exhaustive() && vgf.is_exhaustive()) {
                composite.status = Status::HoldsOnFamily;
            }
        }
    }
    parts.push(composite);
    if let (Some(m1), Some(m2), Some(m3)) = (p.algebra(), q.algebra(), r.algebra()) {
        let mf = measurable_verdict(f, m1, m2, opts)?;
        let mg = measurable_verdict(g, m2, m3, opts)?;
        let mgf = measurable_verdict(&gf, m1, m3, opts)?;
        let mut meas = LawReport::new("composite of measurable maps", Status::HoldsExhaustive)
            .with_cases(mf.cases() + mg.cases() + mgf.cases());
        match (mf.answer(), mg.answer(), mgf.answer()) {
            (Some(true), Some(true), Some(false)) => meas.status = Status::Counterexample,
            (Some(true), Some(true), None) | (None, _, _) | (_, None, _) => meas.status = Status::Inconclusive,
            _ => {}
        }
        parts.push(meas);
        for m in [m1, m2, m3] {
            parts.push(check_thm_2_1_4(m, opts)?);
        }
    }
    Ok(merge_reports("cor.2.5", parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> Universe {
        Universe::integers()
    }

    #[test]
    fn one_point_gives_finite_cofinite() {
        let d = Proximity::one_point(z()).unwrap();
        let m = algebra_from_proximity(&d).unwrap();
        assert_eq!(m.kind(), &AlgebraKind::FiniteCofinite);
    }

    #[test]
    fn finite_discrete_gives_power_set_atoms() {
        let d = Proximity::discrete(Universe::Finite(3));
        let m = algebra_from_proximity(&d).unwrap();
        assert_eq!(m.atoms().unwrap().len(), 3);
    }

    #[test]
    fn metric_is_not_zero_dimensional() {
        let d = Proximity::metric();
        let r = is_zero_dimensional(&d, &CheckOptions::default()).unwrap();
        assert_eq!(r.status, Status::Counterexample);
        assert!(matches!(check_thm_2_1_3(&d, &CheckOptions::default()), Err(Error::NotZeroDimensional)));
    }

    #[test]
    fn chi_evens_is_not_a_proximity_map_from_one_point() {
        let e = SymSet::residue_class(z(), 2, 0).unwrap();
        let f = FunctionSpec::characteristic(e, Universe::UnitInterval).unwrap();
        let d = Proximity::one_point(z()).unwrap();
        let v = proximity_map_verdict(&f, &d, &Proximity::metric(), &CheckOptions::default()).unwrap();
        assert_eq!(v.answer(), Some(false));
    }

    #[test]
    fn shift_is_measurable_for_finite_cofinite() {
        let m = SetAlgebra::finite_cofinite(z()).unwrap();
        let f = FunctionSpec::shift(z(), 2).unwrap();
        let r = check_prox_iff_measurable(&f, &m, &m, &CheckOptions::default()).unwrap();
        assert!(r.status.holds(), "{r}");
    }

    #[test]
    fn chi_evens_neither_side() {
        let m = SetAlgebra::finite_cofinite(z()).unwrap();
        let two = Universe::Finite(2);
        let n = SetAlgebra::power_set(two);
        let f = FunctionSpec::characteristic(SymSet::residue_class(z(), 2, 0).unwrap(), two).unwrap();
        let r = check_prox_iff_measurable(&f, &m, &n, &CheckOptions::default()).unwrap();
        assert_eq!(r.status, Status::HoldsExhaustive, "{r}");
        assert_eq!(r.witnesses[0].rendering, "proximity map: no");
        assert_eq!(r.witnesses[1].rendering, "measurable: no");
    }
}
