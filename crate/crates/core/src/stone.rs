//! Ultrafilter spaces of finitely atomic algebras, the Smirnov identity,
//! quotients by ideals, and induced maps between Stone spaces.

use std::fmt::Write as _;

use crate::algebra::{AlgebraKind, SetAlgebra};
use crate::check::{pair, scan, CheckOptions, ReportBuilder};
use crate::duality::{generated_by, measurable_verdict};
use crate::error::{Error, Result};
use crate::function::FunctionSpec;
use crate::proximity::Proximity;
use crate::report::{LawReport, Witness};
use crate::symset::SymSet;
use crate::universe::{Point, Universe};

/// Atom counts above this are not enumerated as members for closures and
/// DOT annotations.
const MAX_MEMBER_ATOMS: usize = 12;

/// Atoms of `m` when it has finitely many.
pub fn finite_atoms(m: &SetAlgebra) -> Result<Vec<SymSet>> {
    let u = m.universe();
    match m.kind() {
        AlgebraKind::Atomic { atoms, .. } => Ok(atoms.clone()),
        AlgebraKind::PowerSet if u.is_finite() => Ok(u
            .points()
            .unwrap_or_default()
            .into_iter()
            .map(|x| SymSet::singleton(u, x))
            .collect::<Result<_>>()?),
        AlgebraKind::Induced(_) if u.is_finite() => generated_by(u, &m.members_by_enumeration()?)?
            .atoms()
            .map(|a| a.to_vec())
            .ok_or_else(|| Error::NotFinitelyAtomic("induced".into())),
        AlgebraKind::FiniteCofinite => Err(Error::NotFinitelyAtomic(
            "finite_cofinite has one ultrafilter per integer plus the cofinite one, i.e. the points of ℤ∪{∞}; not enumerated".into(),
        )),
        AlgebraKind::PowerSet => Err(Error::NotFinitelyAtomic(format!("power set of {u}"))),
        AlgebraKind::Induced(_) => Err(Error::NotFinitelyAtomic(format!("induced algebra on {u}"))),
    }
}

/// The ultrafilter of members containing a fixed atom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ultrafilter {
    pub index: usize,
    pub atom: SymSet,
}

impl Ultrafilter {
    /// Membership of an algebra member `r`.
    pub fn contains(&self, r: &SymSet) -> Result<bool> {
        self.atom.is_subset(r)
    }
}

pub fn ultrafilters(m: &SetAlgebra) -> Result<Vec<Ultrafilter>> {
    Ok(finite_atoms(m)?.into_iter().enumerate().map(|(index, atom)| Ultrafilter { index, atom }).collect())
}

/// Some point of a nonempty set.
fn some_point(s: &SymSet) -> Option<Point> {
    let mut radius = 4;
    loop {
        if let Some(p) = s.sample_members(radius).into_iter().next() {
            return Some(p);
        }
        if radius > 1 << 20 || s.is_empty() {
            return None;
        }
        radius *= 4;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoneSpace {
    universe: Universe,
    /// Label of each ultrafilter: its atom, or its class in a quotient.
    pub labels: Vec<String>,
    atoms: Vec<SymSet>,
    /// Ground points of a finite universe with the ultrafilter they embed to.
    /// Points of a null set in a quotient have no image.
    pub embedding: Vec<(Point, usize)>,
}

impl StoneSpace {
    pub fn of(m: &SetAlgebra) -> Result<Self> {
        let atoms = finite_atoms(m)?;
        let labels = atoms.iter().map(|a| a.to_string()).collect();
        Self::build(m.universe(), atoms, labels)
    }

    fn build(universe: Universe, atoms: Vec<SymSet>, labels: Vec<String>) -> Result<Self> {
        let mut embedding = Vec::new();
        for x in universe.points().unwrap_or_default() {
            if let Some(i) = atoms.iter().position(|a| a.contains(&x)) {
                embedding.push((x, i));
            }
        }
        Ok(StoneSpace { universe, labels, atoms, embedding })
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    /// The ultrafilter of members containing `x`.
    pub fn embed(&self, x: &Point) -> Result<usize> {
        self.universe.check_point(x)?;
        self.atoms
            .iter()
            .position(|a| a.contains(x))
            .ok_or_else(|| Error::PointOutsideUniverse(x.to_string(), self.universe))
    }

    /// The basic clopen set `{U : R ∈ U}` of a member `r`.
    pub fn basic_open(&self, r: &SymSet) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for (i, a) in self.atoms.iter().enumerate() {
            if a.is_subset(r)? {
                out.push(i);
            }
        }
        Ok(out)
    }

    /// Unions of atoms, in mask order, when there are few atoms.
    fn members(&self) -> Option<Vec<(u32, SymSet)>> {
        if self.atoms.len() > MAX_MEMBER_ATOMS {
            return None;
        }
        let mut out = Vec::new();
        for mask in 0u32..(1 << self.atoms.len()) {
            let mut acc = SymSet::empty(self.universe);
            for (i, a) in self.atoms.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    acc = acc.union(a).ok()?;
                }
            }
            out.push((mask, acc));
        }
        Some(out)
    }
}

/// Ultrafilters whose every member meets `a`: the closure of `a` in the
/// Stone space, found by running through the members.
fn stone_closure(space: &StoneSpace, members: &[(u32, SymSet)], a: &SymSet) -> Result<u32> {
    let mut out = 0u32;
    for i in 0..space.len() {
        let mut all_meet = true;
        for (mask, r) in members {
            if mask & (1 << i) != 0 && !r.meets(a)? {
                all_meet = false;
                break;
            }
        }
        if all_meet {
            out |= 1 << i;
        }
    }
    Ok(out)
}

/// `A δ_M B` iff the Stone closures of `A` and `B` meet.
pub fn check_smirnov_identity(m: &SetAlgebra, opts: &CheckOptions) -> Result<LawReport> {
    let space = StoneSpace::of(m)?;
    let members = space
        .members()
        .ok_or_else(|| Error::NotFinitelyAtomic(format!("{} atoms is too many to enumerate", space.len())))?;
    let d = Proximity::from_algebra(m.clone());
    let probe = opts.probe(m.universe(), &SymSet::full(m.universe()))?;
    let s = &probe.sets;
    let closures: Vec<u32> = s.iter().map(|a| stone_closure(&space, &members, a)).collect::<Result<_>>()?;
    let k = s.len();
    let sc = scan(k * k, opts, |i| {
        let (a, b) = pair(i, k);
        Ok(d.near(&s[a], &s[b])? != (closures[a] & closures[b] != 0))
    })?;
    let mut rb = ReportBuilder::new("smirnov", probe.pass, probe.seed);
    rb.add("A δ_M B iff cl A ∩ cl B ≠ ∅ in the ultrafilter space", sc, |i| {
        let (a, b) = pair(i, k);
        vec![Witness::set(&s[a]), Witness::set(&s[b])]
    });
    rb.note(format!("{} ultrafilters", space.len()));
    Ok(rb.finish())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealKind {
    Principal(SymSet),
    /// The bounded members of the finite/cofinite algebra.
    FiniteSets,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    algebra: SetAlgebra,
    kind: IdealKind,
}

impl Ideal {
    /// Members below `g`; `g` must be a member.
    pub fn principal(m: &SetAlgebra, g: SymSet) -> Result<Self> {
        if !m.contains(&g)? {
            return Err(Error::NotAnIdeal(format!("generator {g} is not a member")));
        }
        Ok(Ideal { algebra: m.clone(), kind: IdealKind::Principal(g) })
    }

    pub fn finite_sets(m: &SetAlgebra) -> Result<Self> {
        if m.kind() != &AlgebraKind::FiniteCofinite {
            return Err(Error::NotAnIdeal("the finite sets form an ideal of finite_cofinite only".into()));
        }
        Ok(Ideal { algebra: m.clone(), kind: IdealKind::FiniteSets })
    }

    pub fn kind(&self) -> &IdealKind {
        &self.kind
    }

    pub fn contains(&self, r: &SymSet) -> Result<bool> {
        if !self.algebra.contains(r)? {
            return Ok(false);
        }
        match &self.kind {
            IdealKind::Principal(g) => r.is_subset(g),
            IdealKind::FiniteSets => Ok(!r.clusters_at_infinity()),
        }
    }

    /// Contains ∅, is downward closed in the algebra and closed under
    /// union, checked over the listed members.
    pub fn verify(&self) -> Result<()> {
        let members = match self.algebra.members() {
            Some(ms) => ms,
            None => return Ok(()),
        };
        if !self.contains(&SymSet::empty(self.algebra.universe()))? {
            return Err(Error::NotAnIdeal("∅ is missing".into()));
        }
        for a in &members {
            if !self.contains(a)? {
                continue;
            }
            for b in &members {
                if b.is_subset(a)? && !self.contains(b)? {
                    return Err(Error::NotAnIdeal(format!("not downward closed at {b} ⊆ {a}")));
                }
                if self.contains(b)? && !self.contains(&a.union(b)?)? {
                    return Err(Error::NotAnIdeal(format!("not closed under {a} ∪ {b}")));
                }
            }
        }
        Ok(())
    }
}

/// `M / I`, with each class represented by a canonical member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientAlgebra {
    ideal: Ideal,
    /// Atoms of the quotient, as representatives.
    atoms: Vec<SymSet>,
}

pub fn quotient_algebra(m: &SetAlgebra, i: &Ideal) -> Result<QuotientAlgebra> {
    if &i.algebra != m {
        return Err(Error::NotAnIdeal("ideal belongs to another algebra".into()));
    }
    i.verify()?;
    let atoms = match &i.kind {
        IdealKind::Principal(g) => {
            let mut out = Vec::new();
            for a in finite_atoms(m)? {
                if !a.is_subset(g)? {
                    out.push(a);
                }
            }
            out
        }
        IdealKind::FiniteSets => vec![SymSet::full(m.universe())],
    };
    Ok(QuotientAlgebra { ideal: i.clone(), atoms })
}

impl QuotientAlgebra {
    pub fn atoms(&self) -> &[SymSet] {
        &self.atoms
    }

    /// Canonical representative of the class of a member.
    pub fn class_of(&self, r: &SymSet) -> Result<SymSet> {
        let m = &self.ideal.algebra;
        if !m.contains(r)? {
            return Err(Error::InvalidAlgebra(format!("{r} is not a member")));
        }
        match &self.ideal.kind {
            IdealKind::Principal(g) => r.difference(g),
            IdealKind::FiniteSets => Ok(if r.clusters_at_infinity() {
                SymSet::full(m.universe())
            } else {
                SymSet::empty(m.universe())
            }),
        }
    }

    /// Number of classes.
    pub fn len(&self) -> u64 {
        1u64 << self.atoms.len().min(63)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn ultrafilters(&self) -> Vec<Ultrafilter> {
        self.atoms.iter().cloned().enumerate().map(|(index, atom)| Ultrafilter { index, atom }).collect()
    }

    pub fn stone_space(&self) -> Result<StoneSpace> {
        let u = self.ideal.algebra.universe();
        let labels = self
            .atoms
            .iter()
            .map(|a| match &self.ideal.kind {
                IdealKind::Principal(g) if !g.is_empty() => format!("[{a}]"),
                IdealKind::Principal(_) => a.to_string(),
                IdealKind::FiniteSets => "[cofinite]".to_string(),
            })
            .collect();
        let space = StoneSpace::build(u, self.atoms.clone(), labels)?;
        Ok(space)
    }
}

/// The map on ultrafilters induced by a measurable map between finitely
/// atomic algebras: atom `a` goes to the atom of `N` whose preimage
/// contains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StoneMap {
    pub table: Vec<usize>,
}

impl StoneMap {
    pub fn then(&self, outer: &StoneMap) -> StoneMap {
        StoneMap { table: self.table.iter().map(|&i| outer.table[i]).collect() }
    }
}

pub fn stone_map(f: &FunctionSpec, m: &SetAlgebra, n: &SetAlgebra, opts: &CheckOptions) -> Result<StoneMap> {
    let source = StoneSpace::of(m)?;
    let target = StoneSpace::of(n)?;
    if measurable_verdict(f, m, n, opts)?.answer() != Some(true) {
        return Err(Error::NotMeasurable);
    }
    let mut table = Vec::with_capacity(source.len());
    for a in &source.atoms {
        let x = some_point(a).ok_or_else(|| Error::InvalidAlgebra("empty atom".into()))?;
        table.push(target.embed(&f.eval(&x)?)?);
    }
    let map = StoneMap { table };
    for (x, i) in &source.embedding {
        if map.table[*i] != target.embed(&f.eval(x)?)? {
            return Err(Error::NotMeasurable);
        }
    }
    Ok(map)
}

/// DOT text: one node per ultrafilter, an edge from each ground point to
/// its ultrafilter, and the basic clopen sets as comments.
pub fn emit_dot(s: &StoneSpace) -> String {
    let width = s.len().saturating_sub(1).to_string().len();
    let node = |i: usize| format!("u{i:0width$}");
    let mut out = String::from("digraph stone {\n  rankdir=LR;\n");
    for (i, label) in s.labels.iter().enumerate() {
        let _ = writeln!(out, "  {} [shape=circle, label=\"{}\"];", node(i), escape(label));
    }
    let pwidth = s.embedding.len().saturating_sub(1).to_string().len();
    for (j, (x, i)) in s.embedding.iter().enumerate() {
        let _ = writeln!(out, "  p{j:0pwidth$} [shape=plaintext, label=\"{}\"];", escape(&x.to_string()));
        let _ = writeln!(out, "  p{j:0pwidth$} -> {};", node(*i));
    }
    if let Some(members) = s.members() {
        for (mask, r) in members {
            let nodes: Vec<String> = (0..s.len()).filter(|i| mask & (1 << i) != 0).map(node).collect();
            let _ = writeln!(out, "  // clopen {} = {{{}}}", r, nodes.join(", "));
        }
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_atoms() -> SetAlgebra {
        SetAlgebra::from_partition(3, &[0b001, 0b110]).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(ultrafilters(&two_atoms()).unwrap().len(), 2);
        let p = SetAlgebra::power_set(Universe::Finite(3));
        assert_eq!(ultrafilters(&p).unwrap().len(), 3);
        let fc = SetAlgebra::finite_cofinite(Universe::integers()).unwrap();
        assert!(matches!(ultrafilters(&fc), Err(Error::NotFinitelyAtomic(_))));
    }

    #[test]
    fn smirnov_on_two_atoms() {
        let r = check_smirnov_identity(&two_atoms(), &CheckOptions::default()).unwrap();
        assert_eq!(r.status, crate::Status::HoldsExhaustive, "{r}");
        assert_eq!(r.cases_checked, 64);
    }

    #[test]
    fn quotients() {
        let u = Universe::Finite(3);
        let p = SetAlgebra::power_set(u);
        let q = quotient_algebra(&p, &Ideal::principal(&p, SymSet::from_bits(u, 0b100).unwrap()).unwrap()).unwrap();
        assert_eq!(q.ultrafilters().len(), 2);
        assert_eq!(q.class_of(&SymSet::from_bits(u, 0b101).unwrap()).unwrap(), SymSet::from_bits(u, 0b001).unwrap());
        let fc = SetAlgebra::finite_cofinite(Universe::integers()).unwrap();
        let q = quotient_algebra(&fc, &Ideal::finite_sets(&fc).unwrap()).unwrap();
        assert_eq!(q.len(), 2);
        let trivial = quotient_algebra(&p, &Ideal::principal(&p, SymSet::empty(u)).unwrap()).unwrap();
        assert_eq!(trivial.atoms(), finite_atoms(&p).unwrap().as_slice());
    }

    #[test]
    fn stone_map_on_two_atoms() {
        let two = Universe::Finite(2);
        let f = FunctionSpec::table(Universe::Finite(3), two, vec![Point::Index(0), Point::Index(1), Point::Index(1)])
            .unwrap();
        let map = stone_map(&f, &two_atoms(), &SetAlgebra::power_set(two), &CheckOptions::default()).unwrap();
        assert_eq!(map.table, vec![0, 1]);
        let g = FunctionSpec::table(Universe::Finite(3), two, vec![Point::Index(0), Point::Index(1), Point::Index(0)])
            .unwrap();
        let err = stone_map(&g, &two_atoms(), &SetAlgebra::power_set(two), &CheckOptions::default());
        assert_eq!(err, Err(Error::NotMeasurable));
    }

    #[test]
    fn dot_is_stable() {
        let s = StoneSpace::of(&two_atoms()).unwrap();
        let dot = emit_dot(&s);
        assert_eq!(dot, emit_dot(&s));
        assert!(dot.starts_with("digraph stone {"));
        assert_eq!(dot.matches("shape=circle").count(), 2);
        assert_eq!(dot.matches(" -> ").count(), 3);
    }
}
