//! Algebras of sets, represented by decidable membership plus atoms or
//! generators where those exist.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::proximity::Proximity;
use crate::symset::SymSet;
use crate::universe::Universe;

/// Atom counts above this are not expanded into member listings.
pub const MAX_LISTED_ATOMS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraKind {
    /// Finitely many atoms partitioning the universe. `generators` is kept
    /// when the algebra was generated rather than listed.
    Atomic { atoms: Vec<SymSet>, generators: Option<Vec<SymSet>> },
    /// Sets that are bounded (finite, and avoiding ∞) or have a bounded
    /// complement. On plain ℤ this is the finite/cofinite algebra.
    FiniteCofinite,
    PowerSet,
    /// `{R : R ≺ R}` for the given proximity.
    Induced(Arc<Proximity>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetAlgebra {
    universe: Universe,
    kind: AlgebraKind,
    sigma_closed: bool,
}

impl SetAlgebra {
    /// Algebra whose atoms are `atoms`; they must partition the universe.
    pub fn from_atoms(universe: Universe, atoms: Vec<SymSet>) -> Result<Self> {
        let atoms = validate_partition(universe, atoms)?;
        Ok(SetAlgebra { universe, kind: AlgebraKind::Atomic { atoms, generators: None }, sigma_closed: true })
    }

    /// Partition of `Finite(n)` given as bitmask blocks.
    pub fn from_partition(n: u32, blocks: &[u64]) -> Result<Self> {
        let u = Universe::finite(n)?;
        let atoms = blocks.iter().map(|&b| SymSet::from_bits(u, b)).collect::<Result<Vec<_>>>()?;
        Self::from_atoms(u, atoms)
    }

    /// The (finite) algebra generated by finitely many sets.
    pub fn generated(universe: Universe, generators: Vec<SymSet>) -> Result<Self> {
        for g in &generators {
            universe.ensure_same(&g.universe())?;
        }
        if generators.len() > MAX_LISTED_ATOMS {
            return Err(Error::InvalidAlgebra(format!("too many generators ({})", generators.len())));
        }
        let mut atoms = vec![SymSet::full(universe)];
        for g in &generators {
            let gc = g.complement();
            let mut next = Vec::with_capacity(atoms.len() * 2);
            for a in &atoms {
                for piece in [a.intersect(g)?, a.intersect(&gc)?] {
                    if !piece.is_empty() {
                        next.push(piece);
                    }
                }
            }
            atoms = next;
        }
        atoms.sort();
        Ok(SetAlgebra {
            universe,
            kind: AlgebraKind::Atomic { atoms, generators: Some(generators) },
            sigma_closed: true,
        })
    }

    pub fn finite_cofinite(universe: Universe) -> Result<Self> {
        match universe {
            Universe::Integers { .. } => {
                Ok(SetAlgebra { universe, kind: AlgebraKind::FiniteCofinite, sigma_closed: false })
            }
            other => Err(Error::WrongUniverseKind { expected: "integers", got: other }),
        }
    }

    pub fn power_set(universe: Universe) -> Self {
        SetAlgebra { universe, kind: AlgebraKind::PowerSet, sigma_closed: true }
    }

    pub fn induced(d: Arc<Proximity>) -> Self {
        let sigma_closed = d.universe().is_finite();
        SetAlgebra { universe: d.universe(), kind: AlgebraKind::Induced(d), sigma_closed }
    }

    /// The trivial algebra `{∅, X}`.
    pub fn trivial(universe: Universe) -> Self {
        SetAlgebra {
            universe,
            kind: AlgebraKind::Atomic { atoms: vec![SymSet::full(universe)], generators: None },
            sigma_closed: true,
        }
    }

    /// Every algebra on `Finite(n)`, one per set partition, in
    /// restricted-growth-string order.
    pub fn all_on_finite(n: u32) -> Result<Vec<SetAlgebra>> {
        let u = Universe::finite(n)?;
        partitions(n)
            .into_iter()
            .map(|blocks| {
                let atoms = blocks.iter().map(|&b| SymSet::from_bits(u, b)).collect::<Result<Vec<_>>>()?;
                Self::from_atoms(u, atoms)
            })
            .collect()
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    /// Known to be closed under countable unions.
    pub fn is_sigma_closed(&self) -> bool {
        self.sigma_closed
    }

    pub fn atoms(&self) -> Option<&[SymSet]> {
        match &self.kind {
            AlgebraKind::Atomic { atoms, .. } => Some(atoms),
            _ => None,
        }
    }

    /// Union of the atoms meeting `u`: the least member containing `u`.
    pub fn saturation(&self, u: &SymSet) -> Result<Option<SymSet>> {
        self.universe.ensure_same(&u.universe())?;
        let Some(atoms) = self.atoms() else { return Ok(None) };
        let mut acc = SymSet::empty(self.universe);
        for a in atoms {
            if a.meets(u)? {
                acc = acc.union(a)?;
            }
        }
        Ok(Some(acc))
    }

    pub fn contains(&self, r: &SymSet) -> Result<bool> {
        self.universe.ensure_same(&r.universe())?;
        match &self.kind {
            AlgebraKind::Atomic { atoms, .. } => {
                for a in atoms {
                    if a.meets(r)? && !a.is_subset(r)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            AlgebraKind::FiniteCofinite => {
                Ok(!r.clusters_at_infinity() || !r.complement().clusters_at_infinity())
            }
            AlgebraKind::PowerSet => Ok(true),
            AlgebraKind::Induced(d) => d.strongly_below(r, r),
        }
    }

    /// Whether some member `R` has `u ⊆ R` and `v ⊆ Rᶜ`.
    pub fn separates(&self, u: &SymSet, v: &SymSet) -> Result<bool> {
        self.universe.ensure_same(&u.universe())?;
        self.universe.ensure_same(&v.universe())?;
        match &self.kind {
            AlgebraKind::Atomic { .. } => {
                let sat = self.saturation(u)?.expect("atomic");
                sat.is_disjoint(v)
            }
            AlgebraKind::FiniteCofinite => {
                Ok(u.is_disjoint(v)? && (!u.clusters_at_infinity() || !v.clusters_at_infinity()))
            }
            AlgebraKind::PowerSet => u.is_disjoint(v),
            AlgebraKind::Induced(_) => Ok(self.separator(u, v)?.is_some()),
        }
    }

    /// A member `R` with `u ⊆ R ⊆ vᶜ`, if one exists.
    pub fn separator(&self, u: &SymSet, v: &SymSet) -> Result<Option<SymSet>> {
        if let AlgebraKind::Induced(d) = &self.kind {
            let vc = d.relative_complement(v)?;
            if !d.strongly_below(u, &vc)? {
                return Ok(None);
            }
            if let Some(n) = self.universe.finite_size() {
                let carrier = d.carrier().bits().unwrap_or(0);
                for mask in 0u64..(1 << n) {
                    if mask & !carrier != 0 {
                        continue;
                    }
                    let r = SymSet::from_bits(self.universe, mask)?;
                    if u.is_subset(&r)? && r.is_subset(&vc)? && d.strongly_below(&r, &r)? {
                        return Ok(Some(r));
                    }
                }
                return Ok(None);
            }
            // a member between u and vᶜ, reached by iterated interpolation
            let mut c = d.interpolate(u, &vc)?;
            for _ in 0..8 {
                if d.strongly_below(&c, &c)? {
                    return Ok(Some(c));
                }
                c = d.interpolate(&c, &vc)?;
            }
            return Err(Error::NotZeroDimensional);
        }
        if !self.separates(u, v)? {
            return Ok(None);
        }
        Ok(Some(match &self.kind {
            AlgebraKind::Atomic { .. } => self.saturation(u)?.expect("atomic"),
            AlgebraKind::FiniteCofinite => {
                if u.clusters_at_infinity() {
                    v.complement()
                } else {
                    u.clone()
                }
            }
            AlgebraKind::PowerSet => u.clone(),
            AlgebraKind::Induced(_) => unreachable!(),
        }))
    }

    /// Distinct points are separated by some member. `None` when this is
    /// not decidable for the representation.
    pub fn is_reduced(&self) -> Option<bool> {
        match &self.kind {
            AlgebraKind::Atomic { atoms, .. } => {
                Some(atoms.iter().all(|a| matches!(a.cardinality(), crate::Cardinality::Finite(k) if k <= 1)))
            }
            AlgebraKind::FiniteCofinite | AlgebraKind::PowerSet => Some(true),
            AlgebraKind::Induced(d) => {
                let pts = d.universe().points()?;
                for (i, x) in pts.iter().enumerate() {
                    for y in &pts[i + 1..] {
                        let sx = SymSet::singleton(self.universe, x.clone()).ok()?;
                        let sy = SymSet::singleton(self.universe, y.clone()).ok()?;
                        if !self.separates(&sx, &sy).ok()? {
                            return Some(false);
                        }
                    }
                }
                Some(true)
            }
        }
    }

    /// All members, when the algebra is atomic with few atoms.
    pub fn members(&self) -> Option<Vec<SymSet>> {
        let atoms = self.atoms()?;
        if atoms.len() > MAX_LISTED_ATOMS {
            return None;
        }
        let mut out = Vec::with_capacity(1 << atoms.len());
        for mask in 0u32..(1 << atoms.len()) {
            let mut acc = SymSet::empty(self.universe);
            for (i, a) in atoms.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    acc = acc.union(a).ok()?;
                }
            }
            out.push(acc);
        }
        out.sort();
        Some(out)
    }

    /// Members of a finite universe's algebra by direct membership test.
    pub fn members_by_enumeration(&self) -> Result<Vec<SymSet>> {
        let n = self.universe.finite_size().ok_or(Error::WrongUniverseKind {
            expected: "finite",
            got: self.universe,
        })?;
        if n > 16 {
            return Err(Error::UniverseTooLarge(n, 16));
        }
        let mut out = Vec::new();
        for mask in 0u64..(1 << n) {
            let r = SymSet::from_bits(self.universe, mask)?;
            if self.contains(&r)? {
                out.push(r);
            }
        }
        Ok(out)
    }

    /// Same family of sets on a finite universe.
    pub fn same_members(&self, other: &SetAlgebra) -> Result<bool> {
        Ok(self.members_by_enumeration()? == other.members_by_enumeration()?)
    }
}

fn validate_partition(universe: Universe, mut atoms: Vec<SymSet>) -> Result<Vec<SymSet>> {
    let mut acc = SymSet::empty(universe);
    for a in &atoms {
        universe.ensure_same(&a.universe())?;
        if a.is_empty() {
            return Err(Error::InvalidAlgebra("empty atom".into()));
        }
        if a.meets(&acc)? {
            return Err(Error::InvalidAlgebra(format!("atom {a} overlaps another atom")));
        }
        acc = acc.union(a)?;
    }
    if !acc.is_full() {
        return Err(Error::InvalidAlgebra(format!("atoms do not cover {universe}")));
    }
    atoms.sort();
    Ok(atoms)
}

/// Set partitions of `{0,…,n−1}` as bitmask blocks, via restricted growth
/// strings. There are Bell(n) of them.
pub fn partitions(n: u32) -> Vec<Vec<u64>> {
    fn go(i: u32, n: u32, labels: &mut Vec<usize>, blocks: usize, out: &mut Vec<Vec<u64>>) {
        if i == n {
            let mut masks = vec![0u64; blocks];
            for (pt, &l) in labels.iter().enumerate() {
                masks[l] |= 1 << pt;
            }
            out.push(masks);
            return;
        }
        for l in 0..=blocks {
            labels.push(l);
            go(i + 1, n, labels, blocks.max(l + 1), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), 0, &mut out);
    out
}

impl fmt::Display for SetAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            AlgebraKind::Atomic { generators: Some(g), .. } => {
                let parts: Vec<String> = g.iter().map(|s| s.to_string()).collect();
                write!(f, "generated({})", parts.join(", "))
            }
            AlgebraKind::Atomic { atoms, generators: None } => {
                let parts: Vec<String> = atoms.iter().map(|s| s.to_string()).collect();
                write!(f, "atoms({})", parts.join(", "))
            }
            AlgebraKind::FiniteCofinite => write!(f, "finite_cofinite({})", self.universe),
            AlgebraKind::PowerSet => write!(f, "powerset({})", self.universe),
            AlgebraKind::Induced(d) => write!(f, "induced({d})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (1..=5).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 15, 52]);
    }

    #[test]
    fn atom_membership_matches_union_of_met_atoms() {
        for n in 1..=4 {
            for m in SetAlgebra::all_on_finite(n).unwrap() {
                let u = m.universe();
                for mask in 0u64..(1 << n) {
                    let r = SymSet::from_bits(u, mask).unwrap();
                    let met = m.saturation(&r).unwrap().unwrap();
                    assert_eq!(m.contains(&r).unwrap(), met == r);
                }
            }
        }
    }

    #[test]
    fn bad_partitions_rejected() {
        assert!(SetAlgebra::from_partition(3, &[0b011, 0b110]).is_err());
        assert!(SetAlgebra::from_partition(3, &[0b001, 0b010]).is_err());
        assert!(SetAlgebra::from_partition(3, &[0b001, 0, 0b110]).is_err());
    }

    #[test]
    fn generated_on_integers_has_computable_atoms() {
        let z = Universe::integers();
        let evens = SymSet::residue_class(z, 2, 0).unwrap();
        let zero = SymSet::integers(z, [0]).unwrap();
        let m = SetAlgebra::generated(z, vec![evens.clone(), zero.clone()]).unwrap();
        assert_eq!(m.atoms().unwrap().len(), 3);
        assert!(m.contains(&evens.difference(&zero).unwrap()).unwrap());
        assert!(!m.contains(&SymSet::integers(z, [2]).unwrap()).unwrap());
    }

    #[test]
    fn finite_cofinite_membership() {
        let z = Universe::integers();
        let m = SetAlgebra::finite_cofinite(z).unwrap();
        assert!(m.contains(&SymSet::integers(z, [1, 2]).unwrap()).unwrap());
        assert!(m.contains(&SymSet::integers(z, [1, 2]).unwrap().complement()).unwrap());
        assert!(!m.contains(&SymSet::residue_class(z, 2, 0).unwrap()).unwrap());
        assert!(SetAlgebra::finite_cofinite(Universe::Finite(3)).is_err());
    }
}
