//! The law catalog: stable identifiers, argument shapes, and dispatch.

use std::fmt;

use crate::algebra::SetAlgebra;
use crate::axioms;
use crate::check::CheckOptions;
use crate::duality;
use crate::error::{Error, Result};
use crate::function::FunctionSpec;
use crate::proximity::Proximity;
use crate::report::{LawReport, Status, Witness};
use crate::sequence::{FunctionSequence, SetSequence};
use crate::sigma;
use crate::stone;
use crate::symset::SymSet;

/// A value a law can be applied to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    Set(SymSet),
    Proximity(Proximity),
    Algebra(SetAlgebra),
    Function(FunctionSpec),
    Sequence(SetSequence),
    FunctionSequence(FunctionSequence),
}

/// Argument kinds in law signatures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arg {
    Set,
    Proximity,
    Algebra,
    Function,
    Sequence,
    FunctionSequence,
}

impl Arg {
    pub fn name(self) -> &'static str {
        match self {
            Arg::Set => "set",
            Arg::Proximity => "proximity",
            Arg::Algebra => "algebra",
            Arg::Function => "fn",
            Arg::Sequence => "seq",
            Arg::FunctionSequence => "fnseq",
        }
    }
}

impl Subject {
    pub fn arg(&self) -> Arg {
        match self {
            Subject::Set(_) => Arg::Set,
            Subject::Proximity(_) => Arg::Proximity,
            Subject::Algebra(_) => Arg::Algebra,
            Subject::Function(_) => Arg::Function,
            Subject::Sequence(_) => Arg::Sequence,
            Subject::FunctionSequence(_) => Arg::FunctionSequence,
        }
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Set(s) => s.fmt(f),
            Subject::Proximity(d) => d.fmt(f),
            Subject::Algebra(m) => m.fmt(f),
            Subject::Function(g) => g.fmt(f),
            Subject::Sequence(z) => z.fmt(f),
            Subject::FunctionSequence(z) => z.fmt(f),
        }
    }
}

/// One catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Law {
    pub id: &'static str,
    pub args: &'static [Arg],
    /// Trailing arguments that may be omitted.
    pub optional: usize,
    pub summary: &'static str,
}

use Arg::{Algebra as M, Function as F, FunctionSequence as FS, Proximity as P, Sequence as Z, Set as S};

pub const CATALOG: &[Law] = &[
    Law { id: "prox.axioms", args: &[P], optional: 0, summary: "axioms 1-5 of a proximity" },
    Law { id: "prec.props", args: &[P], optional: 0, summary: "properties 1-6 of the strongly-below relation" },
    Law { id: "prox.separated", args: &[P], optional: 0, summary: "distinct points are far" },
    Law { id: "closure.kuratowski", args: &[P], optional: 0, summary: "the induced closure is a Kuratowski closure" },
    Law { id: "prox.near", args: &[P, S, S], optional: 0, summary: "A is near B" },
    Law { id: "prox.prec", args: &[P, S, S], optional: 0, summary: "A is strongly below B" },
    Law { id: "prox.open", args: &[P, S], optional: 0, summary: "U is open in the induced topology" },
    Law { id: "zero_dim", args: &[P], optional: 0, summary: "every A ≺ B has C with A ≺ C ≺ C ≺ B" },
    Law { id: "thm.2.1.1", args: &[P], optional: 0, summary: "{R : R ≺ R} is an algebra of sets" },
    Law { id: "thm.2.1.2", args: &[M], optional: 0, summary: "δ_M is a zero-dimensional proximity" },
    Law { id: "thm.2.1.3", args: &[P], optional: 0, summary: "δ_{M_δ} = δ for zero-dimensional δ" },
    Law { id: "thm.2.1.4", args: &[M], optional: 0, summary: "M_{δ_M} = M" },
    Law { id: "thm.2.1.5", args: &[M], optional: 0, summary: "members of M form a basis of the topology of δ_M" },
    Law { id: "prox.map", args: &[F, P, P], optional: 0, summary: "f is a proximity map" },
    Law { id: "measurable", args: &[F, M, M], optional: 0, summary: "preimages of members are members" },
    Law { id: "thm.2.2", args: &[F, M, M], optional: 0, summary: "proximity map between δ_M and δ_N iff measurable" },
    Law { id: "cor.2.5", args: &[F, F, P, P, P], optional: 0, summary: "identities and composites behave functorially" },
    Law { id: "prec.chain", args: &[P, Z], optional: 0, summary: "Z_{n+1} ≺ Z_n for every n" },
    Law { id: "thm.2.7", args: &[P, Z], optional: 0, summary: "the intersection of a ≺-chain is proximally zero" },
    Law { id: "p_aleph1", args: &[P], optional: 0, summary: "A_n ≺ B for all n implies ⋃ A_n ≺ B" },
    Law { id: "thm.2.3", args: &[P], optional: 0, summary: "P_ℵ1 implies zero-dimensional" },
    Law { id: "thm.2.4", args: &[M], optional: 0, summary: "M is a σ-algebra iff δ_M is P_ℵ1" },
    Law { id: "cor.2.8", args: &[P], optional: 0, summary: "P_ℵ1 iff M_δ contains every proximally zero set" },
    Law { id: "thm.2.9", args: &[P, S], optional: 1, summary: "open sets are proximally cozero" },
    Law { id: "thm.2.12", args: &[F, M, P], optional: 0, summary: "maps out of σ-algebras factor through the coreflection" },
    Law { id: "lem.2.14", args: &[F, P, P], optional: 0, summary: "f is a proximity map iff every g∘f into [0,1] is" },
    Law { id: "thm.2.15", args: &[P, FS, P], optional: 0, summary: "pointwise limits of proximity maps are proximity maps" },
    Law { id: "smirnov", args: &[M], optional: 0, summary: "A δ_M B iff the Stone closures of A and B meet" },
    Law { id: "stone.functor", args: &[F, F, M, M, M], optional: 0, summary: "the Stone map of g∘f is the composite of the Stone maps" },
];

pub fn law(id: &str) -> Result<&'static Law> {
    CATALOG.iter().find(|l| l.id == id).ok_or_else(|| Error::UnknownLaw(id.to_string()))
}

impl Law {
    pub fn signature(&self) -> String {
        let names: Vec<String> = self
            .args
            .iter()
            .enumerate()
            .map(|(i, a)| {
                if i + self.optional >= self.args.len() {
                    format!("[{}]", a.name())
                } else {
                    a.name().to_string()
                }
            })
            .collect();
        names.join(" ")
    }

    /// Checks the argument shapes.
    pub fn check_arity(&self, subjects: &[Subject]) -> Result<()> {
        let ok = subjects.len() <= self.args.len()
            && subjects.len() + self.optional >= self.args.len()
            && subjects.iter().zip(self.args).all(|(s, a)| s.arg() == *a);
        if ok {
            Ok(())
        } else {
            Err(Error::ArityMismatch { law: self.id.to_string(), expected: self.signature() })
        }
    }
}

/// Runs a law. Unknown laws and wrong argument shapes are errors; any
/// other failure becomes a refused report naming the error.
pub fn check_law(id: &str, subjects: &[Subject], opts: &CheckOptions) -> Result<LawReport> {
    let law = law(id)?;
    law.check_arity(subjects)?;
    let mut report = match dispatch(law.id, subjects, opts) {
        Ok(r) => r,
        Err(e) => LawReport::refused(law.id, &e),
    };
    report.law = law.id.to_string();
    Ok(report)
}

fn dispatch(id: &str, s: &[Subject], opts: &CheckOptions) -> Result<LawReport> {
    use Subject as X;
    match (id, s) {
        ("prox.axioms", [X::Proximity(d)]) => axioms::check_axioms(d, opts),
        ("prec.props", [X::Proximity(d)]) => axioms::check_prec_props(d, opts),
        ("prox.separated", [X::Proximity(d)]) => axioms::check_separated(d, opts),
        ("closure.kuratowski", [X::Proximity(d)]) => axioms::check_kuratowski(d, opts),
        ("prox.near", [X::Proximity(d), X::Set(a), X::Set(b)]) => axioms::check_near(d, a, b),
        ("prox.prec", [X::Proximity(d), X::Set(a), X::Set(b)]) => axioms::check_prec(d, a, b),
        ("prox.open", [X::Proximity(d), X::Set(u)]) => axioms::check_open(d, u),
        ("zero_dim", [X::Proximity(d)]) => duality::is_zero_dimensional(d, opts),
        ("thm.2.1.1", [X::Proximity(d)]) => duality::check_thm_2_1_1(d, opts),
        ("thm.2.1.2", [X::Algebra(m)]) => duality::check_thm_2_1_2(m, opts),
        ("thm.2.1.3", [X::Proximity(d)]) => duality::check_thm_2_1_3(d, opts),
        ("thm.2.1.4", [X::Algebra(m)]) => duality::check_thm_2_1_4(m, opts),
        ("thm.2.1.5", [X::Algebra(m)]) => duality::check_thm_2_1_5(m, opts),
        ("prox.map", [X::Function(f), X::Proximity(d), X::Proximity(r)]) => duality::is_proximity_map(f, d, r, opts),
        ("measurable", [X::Function(f), X::Algebra(m), X::Algebra(n)]) => {
            Ok(duality::measurable_verdict(f, m, n, opts)?.into_report("measurable"))
        }
        ("thm.2.2", [X::Function(f), X::Algebra(m), X::Algebra(n)]) => duality::check_prox_iff_measurable(f, m, n, opts),
        ("cor.2.5", [X::Function(f), X::Function(g), X::Proximity(p), X::Proximity(q), X::Proximity(r)]) => {
            duality::check_functoriality(f, g, p, q, r, opts)
        }
        ("prec.chain", [X::Proximity(d), X::Sequence(z)]) => sigma::is_prec_chain(d, z, opts.depth),
        ("thm.2.7", [X::Proximity(d), X::Sequence(z)]) => sigma::check_thm_2_7(d, z, opts),
        ("p_aleph1", [X::Proximity(d)]) => sigma::is_p_aleph1(d, opts),
        ("thm.2.3", [X::Proximity(d)]) => sigma::check_p_aleph1_implies_zerodim(d, opts),
        ("thm.2.4", [X::Algebra(m)]) => sigma::check_sigma_iff_p_aleph1(m, opts),
        ("cor.2.8", [X::Proximity(d)]) => sigma::check_cor_zero_sets(d, opts),
        ("thm.2.9", [X::Proximity(d)]) => sigma::check_thm_2_9(d, None, opts),
        ("thm.2.9", [X::Proximity(d), X::Set(u)]) => sigma::check_thm_2_9(d, Some(u), opts),
        ("thm.2.12", [X::Function(f), X::Algebra(n), X::Proximity(d)]) => sigma::check_factorization(f, n, d, opts),
        ("lem.2.14", [X::Function(f), X::Proximity(d), X::Proximity(r)]) => sigma::check_lemma_2_14(f, d, r, opts),
        ("thm.2.15", [X::Proximity(d), X::FunctionSequence(fs), X::Proximity(r)]) => {
            sigma::check_pointwise_closure(d, fs, r, opts)
        }
        ("smirnov", [X::Algebra(m)]) => stone::check_smirnov_identity(m, opts),
        ("stone.functor", [X::Function(f), X::Function(g), X::Algebra(m), X::Algebra(n), X::Algebra(p)]) => {
            check_stone_functor(f, g, m, n, p, opts)
        }
        _ => Err(Error::ArityMismatch { law: id.to_string(), expected: law(id)?.signature() }),
    }
}

/// `stone(g∘f) = stone(g)∘stone(f)` for measurable `f : M → N`, `g : N → P`.
pub fn check_stone_functor(
    f: &FunctionSpec,
    g: &FunctionSpec,
    m: &SetAlgebra,
    n: &SetAlgebra,
    p: &SetAlgebra,
    opts: &CheckOptions,
) -> Result<LawReport> {
    let sf = stone::stone_map(f, m, n, opts)?;
    let sg = stone::stone_map(g, n, p, opts)?;
    let sgf = stone::stone_map(&f.then(g)?, m, p, opts)?;
    let composed = sf.then(&sg);
    let cases = sgf.table.len() as u64;
    let mut r = LawReport::new("stone.functor", Status::HoldsExhaustive).with_cases(cases);
    if composed != sgf {
        r.status = Status::Counterexample;
        r.witnesses.push(Witness::new("map", format!("stone(g∘f) = {:?}", sgf.table)));
        r.witnesses.push(Witness::new("map", format!("stone(g)∘stone(f) = {:?}", composed.table)));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::Universe;

    #[test]
    fn catalog_ids_are_unique() {
        for (i, a) in CATALOG.iter().enumerate() {
            assert!(CATALOG[i + 1..].iter().all(|b| b.id != a.id), "{}", a.id);
        }
    }

    #[test]
    fn arity_errors() {
        let d = Subject::Proximity(Proximity::discrete(Universe::Finite(2)));
        assert!(matches!(check_law("thm.2.1.4", std::slice::from_ref(&d), &CheckOptions::default()), Err(Error::ArityMismatch { .. })));
        assert!(matches!(check_law("nope", std::slice::from_ref(&d), &CheckOptions::default()), Err(Error::UnknownLaw(_))));
        let r = check_law("thm.2.3", &[Subject::Proximity(Proximity::metric())], &CheckOptions::default()).unwrap();
        assert_eq!(r.status, Status::Refused);
        assert_eq!(r.refusal_error(), Some("PreconditionNotEstablished"));
        assert!(law("thm.2.9").unwrap().check_arity(&[d]).is_ok());
    }
}
