//! Fixtures shared by the benches.

use proxdual::{Proximity, SetAlgebra, SymSet, Universe};

pub const EVENS_ODDS: &str = "universe Z = integers
set E = periodic(p=2, residues={0})
set O = complement(E)
proximity d = one_point(Z)
seq ZE = shrink_tail(core=E, tail=O)
seq ZO = shrink_tail(core=O, tail=E)
check prox.near d E O
check thm.2.7 d ZE
check thm.2.7 d ZO
";

pub fn partitions_of_four() -> Vec<SetAlgebra> {
    SetAlgebra::all_on_finite(4).expect("Finite(4) is small")
}

pub fn finite_cofinite_proximity() -> Proximity {
    Proximity::from_algebra(SetAlgebra::finite_cofinite(Universe::integers()).expect("integers"))
}

pub fn evens() -> SymSet {
    SymSet::residue_class(Universe::integers(), 2, 0).expect("integers")
}
