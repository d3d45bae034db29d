//! Elaboration of declarations and execution of commands.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::time::Instant;

use num_rational::Rational64;

use super::ast::*;
use super::{DslError, ErrorKind};
use crate::algebra::SetAlgebra;
use crate::check::CheckOptions;
use crate::error::Error;
use crate::function::FunctionSpec;
use crate::laws::{self, Subject};
use crate::proximity::{NearTable, Proximity};
use crate::report::{exit_code, LawReport, Status, Witness};
use crate::sequence::{FunctionSequence, SetSequence};
use crate::stone::{self, Ideal, StoneSpace};
use crate::symset::{Interval, SymSet};
use crate::universe::{Point, Universe};
use crate::{duality, sigma};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Universe(Universe),
    Set(SymSet),
    Algebra(SetAlgebra),
    Proximity(Proximity),
    Seq(SetSequence),
    Fn(FunctionSpec),
    FnSeq(FunctionSequence),
}

impl Value {
    fn subject(&self) -> Option<Subject> {
        Some(match self {
            Value::Universe(_) => return None,
            Value::Set(s) => Subject::Set(s.clone()),
            Value::Algebra(m) => Subject::Algebra(m.clone()),
            Value::Proximity(d) => Subject::Proximity(d.clone()),
            Value::Seq(z) => Subject::Sequence(z.clone()),
            Value::Fn(f) => Subject::Function(f.clone()),
            Value::FnSeq(z) => Subject::FunctionSequence(z.clone()),
        })
    }
}

/// Evaluated declarations, in source order.
#[derive(Debug, Clone, Default)]
pub struct Env {
    values: HashMap<String, Value>,
    order: Vec<String>,
    /// The most recently declared universe; set literals default to it.
    current: Option<Universe>,
}

type EResult<T> = Result<T, DslError>;

impl Env {
    pub fn get(&self, name: &str) -> Option<&Value> {
        self.values.get(name)
    }

    pub fn names(&self) -> &[String] {
        &self.order
    }

    fn lookup(&self, n: &Name) -> EResult<&Value> {
        self.values
            .get(&n.text)
            .ok_or_else(|| DslError::new(n.span.clone(), ErrorKind::UnknownIdentifier(n.text.clone())))
    }

    fn wrong(&self, n: &Name, expected: &'static str) -> DslError {
        DslError::new(n.span.clone(), ErrorKind::WrongKind { name: n.text.clone(), expected, found: "other kind" })
    }

    fn universe_lit(&self, u: &UniverseLit, span: &Span) -> EResult<Universe> {
        Ok(match *u {
            UniverseLit::Finite(n) => Universe::finite(n).map_err(|e| DslError::eval(span, e))?,
            UniverseLit::Integers { with_infinity } => Universe::Integers { with_infinity },
            UniverseLit::UnitInterval => Universe::UnitInterval,
        })
    }

    fn universe(&self, u: &UniverseRef) -> EResult<Universe> {
        match u {
            UniverseRef::Lit(l, span) => self.universe_lit(l, span),
            UniverseRef::Name(n) => match self.lookup(n)? {
                Value::Universe(u) => Ok(*u),
                _ => Err(self.wrong(n, "universe")),
            },
        }
    }

    /// The universe of the first named set in `e`, if any.
    fn infer(&self, e: &SetExpr) -> Option<Universe> {
        match e {
            SetExpr::Ref(n) => match self.values.get(&n.text) {
                Some(Value::Set(s)) => Some(s.universe()),
                _ => None,
            },
            SetExpr::Complement(inner) => self.infer(inner),
            SetExpr::Binary { lhs, rhs, .. } => self.infer(lhs).or_else(|| self.infer(rhs)),
            _ => None,
        }
    }

    fn context(&self, explicit: Option<Universe>, exprs: &[&SetExpr]) -> Option<Universe> {
        explicit.or_else(|| exprs.iter().find_map(|e| self.infer(e))).or(self.current)
    }

    fn set(&self, e: &SetExpr, ctx: Option<Universe>) -> EResult<SymSet> {
        let ctx = self.context(ctx, &[e]);
        self.set_in(e, ctx)
    }

    fn set_in(&self, e: &SetExpr, ctx: Option<Universe>) -> EResult<SymSet> {
        let span = e.span();
        let need = || ctx.ok_or_else(|| DslError::new(span.clone(), ErrorKind::NoUniverse));
        let ev = |r: crate::Result<SymSet>| r.map_err(|err| DslError::eval(span, err));
        match e {
            SetExpr::Points(ps, _) => {
                let u = need()?;
                if u == Universe::UnitInterval {
                    let mut parts = Vec::new();
                    for p in ps {
                        let x = point_in(u, p).map_err(|err| DslError::eval(span, err))?;
                        parts.push(Interval::point(x.as_rational().expect("unit interval point")));
                    }
                    return Ok(SymSet::from_intervals(parts));
                }
                let points = ps.iter().map(|p| point_in(u, p)).collect::<crate::Result<Vec<_>>>();
                ev(points.and_then(|pts| SymSet::from_points(u, pts)))
            }
            SetExpr::Periodic { period, residues, .. } => {
                ev(SymSet::periodic(need()?, *period, residues.iter().copied(), [], [], false))
            }
            SetExpr::Interval { lo, lo_closed, hi, hi_closed, .. } => {
                let u = need()?;
                if u != Universe::UnitInterval {
                    return Err(DslError::eval(span, Error::WrongUniverseKind { expected: "unit_interval", got: u }));
                }
                Ok(SymSet::from_intervals([Interval::new(rat(lo), *lo_closed, rat(hi), *hi_closed)]))
            }
            SetExpr::Empty(_) => Ok(SymSet::empty(need()?)),
            SetExpr::Full(_) => Ok(SymSet::full(need()?)),
            SetExpr::Ref(n) => match self.lookup(n)? {
                Value::Set(s) => Ok(s.clone()),
                _ => Err(self.wrong(n, "set")),
            },
            SetExpr::Complement(inner) => Ok(self.set_in(inner, ctx)?.complement()),
            SetExpr::Binary { op, lhs, rhs } => {
                let a = self.set_in(lhs, ctx)?;
                let b = self.set_in(rhs, Some(a.universe()))?;
                let r = match op {
                    SetOp::Union => a.union(&b),
                    SetOp::Intersect => a.intersect(&b),
                    SetOp::Difference => a.difference(&b),
                };
                r.map_err(|err| DslError::eval(rhs.span(), err))
            }
        }
    }

    fn sets(&self, es: &[SetExpr], within: Option<Universe>) -> EResult<(Universe, Vec<SymSet>)> {
        let refs: Vec<&SetExpr> = es.iter().collect();
        let ctx = self.context(within, &refs);
        let sets = es.iter().map(|e| self.set_in(e, ctx)).collect::<EResult<Vec<_>>>()?;
        let u = ctx.or_else(|| sets.first().map(SymSet::universe)).expect("nonempty set list");
        Ok((u, sets))
    }

    fn algebra(&self, m: &AlgebraExpr) -> EResult<SetAlgebra> {
        match m {
            AlgebraExpr::Atoms { within, sets, span } | AlgebraExpr::Generated { within, sets, span } => {
                let within = within.as_ref().map(|u| self.universe(u)).transpose()?;
                let (u, sets) = self.sets(sets, within)?;
                let r = if matches!(m, AlgebraExpr::Atoms { .. }) {
                    SetAlgebra::from_atoms(u, sets)
                } else {
                    SetAlgebra::generated(u, sets)
                };
                r.map_err(|e| DslError::eval(span, e))
            }
            AlgebraExpr::FiniteCofinite(u) => {
                SetAlgebra::finite_cofinite(self.universe(u)?).map_err(|e| DslError::eval(uspan(u), e))
            }
            AlgebraExpr::PowerSet(u) => Ok(SetAlgebra::power_set(self.universe(u)?)),
            AlgebraExpr::Trivial(u) => Ok(SetAlgebra::trivial(self.universe(u)?)),
            AlgebraExpr::FromProximity(d) => {
                duality::algebra_from_proximity(&self.proximity(d)?).map_err(|e| DslError::eval(pspan(d), e))
            }
            AlgebraExpr::ProximallyBaire(d) => {
                sigma::proximally_baire(&self.proximity(d)?).map_err(|e| DslError::eval(pspan(d), e))
            }
            AlgebraExpr::Ref(n) => match self.lookup(n)? {
                Value::Algebra(m) => Ok(m.clone()),
                _ => Err(self.wrong(n, "algebra")),
            },
        }
    }

    fn proximity(&self, d: &ProxExpr) -> EResult<Proximity> {
        let span = pspan(d);
        let ev = |r: crate::Result<Proximity>| r.map_err(|e| DslError::eval(span, e));
        match d {
            ProxExpr::Discrete(u) => Ok(Proximity::discrete(self.universe(u)?)),
            ProxExpr::OnePoint(u) => ev(Proximity::one_point(self.universe(u)?)),
            ProxExpr::Metric(u) => match self.universe(u)? {
                Universe::UnitInterval => Ok(Proximity::metric()),
                other => ev(Err(Error::WrongUniverseKind { expected: "unit_interval", got: other })),
            },
            ProxExpr::FromAlgebra(m) => Ok(Proximity::from_algebra(self.algebra(m)?)),
            ProxExpr::Subspace(p, s) => {
                let p = self.proximity(p)?;
                let s = self.set(s, Some(p.universe()))?;
                ev(Proximity::subspace(p, s))
            }
            ProxExpr::Table { within, pairs } => {
                let u = self.universe(within)?;
                let Some(n) = u.finite_size() else {
                    return ev(Err(Error::WrongUniverseKind { expected: "finite", got: u }));
                };
                let mut listed = Vec::new();
                for (a, b) in pairs {
                    let a = self.set(a, Some(u))?;
                    let b = self.set(b, Some(u))?;
                    listed.push((a.bits().unwrap_or(0), b.bits().unwrap_or(0)));
                }
                // Smallest symmetric, upward-closed relation containing the
                // listed pairs and all meeting pairs.
                let table = NearTable::from_fn(n, |a, b| {
                    a & b != 0
                        || listed.iter().any(|&(p, q)| {
                            (p & !a == 0 && q & !b == 0) || (q & !a == 0 && p & !b == 0)
                        })
                });
                ev(table.and_then(Proximity::table))
            }
            ProxExpr::Coreflection(p) => ev(sigma::coreflection(&self.proximity(p)?)),
            ProxExpr::Ref(n) => match self.lookup(n)? {
                Value::Proximity(d) => Ok(d.clone()),
                _ => Err(self.wrong(n, "proximity")),
            },
        }
    }

    fn seq(&self, z: &SeqExpr) -> EResult<SetSequence> {
        let (span, r) = match z {
            SeqExpr::Constant(s) => (s.span(), Ok(SetSequence::constant(self.set(s, None)?))),
            SeqExpr::Prefixes(s) => (s.span(), SetSequence::prefixes(self.set(s, None)?)),
            SeqExpr::Neighborhoods(s) => (s.span(), SetSequence::shrinking_neighborhoods(self.set(s, None)?)),
            SeqExpr::ShrinkTail { core, tail } => {
                let ctx = self.context(None, &[core, tail]);
                let c = self.set_in(core, ctx)?;
                let t = self.set_in(tail, Some(c.universe()))?;
                (core.span(), SetSequence::shrinking_tail(c, t))
            }
            SeqExpr::List { items, tail } => {
                let mut all: Vec<SetExpr> = items.clone();
                all.push(tail.clone());
                let (_, mut sets) = self.sets(&all, None)?;
                let t = sets.pop().expect("tail");
                (tail.span(), SetSequence::list_then_constant(sets, t))
            }
            SeqExpr::Exhaust { lo, hi, span } => (span, SetSequence::closed_exhaustion(rat(lo), rat(hi))),
        };
        r.map_err(|e| DslError::eval(span, e))
    }

    fn function(&self, f: &FnDecl) -> EResult<FunctionSpec> {
        let span = &f.span;
        let ev = |r: crate::Result<FunctionSpec>| r.map_err(|e| DslError::eval(span, e));
        let sig = match &f.signature {
            Some((a, b)) => Some((self.universe(a)?, self.universe(b)?)),
            None => None,
        };
        let dom = sig.map(|s| s.0);
        let pt = |u: Universe, p: &PointLit| point_in(u, p).map_err(|e| DslError::eval(span, e));
        let out = match &f.expr {
            FnExpr::Table(pairs) => {
                let (d, c) = sig.expect("signature checked by the parser");
                let mut values: BTreeMap<u32, Point> = BTreeMap::new();
                for (x, v) in pairs {
                    let Point::Index(i) = pt(d, x)? else { unreachable!("finite point") };
                    if values.insert(i, pt(c, v)?).is_some() {
                        return ev(Err(Error::InvalidFunction(format!("point {i} listed twice"))));
                    }
                }
                ev(FunctionSpec::table(d, c, values.into_values().collect()))?
            }
            FnExpr::ResidueMap { period, values, exceptions, at_infinity } => {
                let (d, c) = sig.expect("signature checked by the parser");
                let mut by_residue: BTreeMap<u32, Point> = BTreeMap::new();
                for (r, v) in values {
                    by_residue.insert(*r, pt(c, v)?);
                }
                if by_residue.keys().copied().ne(0..*period) {
                    return ev(Err(Error::InvalidFunction(format!("residues must be 0..{period}, each once"))));
                }
                let mut ex = BTreeMap::new();
                for (k, v) in exceptions {
                    ex.insert(*k, pt(c, v)?);
                }
                let inf = at_infinity.as_ref().map(|v| pt(c, v)).transpose()?;
                ev(FunctionSpec::residue_map(d, c, *period, by_residue.into_values().collect(), ex, inf))?
            }
            FnExpr::Chi(s) => {
                let s = self.set(s, dom)?;
                let cod = sig.map(|s| s.1).unwrap_or(Universe::Finite(2));
                ev(FunctionSpec::characteristic(s, cod))?
            }
            FnExpr::Step(pieces) => {
                let (d, c) = sig.expect("signature checked by the parser");
                let mut out = Vec::new();
                for (s, v) in pieces {
                    out.push((self.set(s, Some(d))?, pt(c, v)?));
                }
                ev(FunctionSpec::step(d, c, out))?
            }
            FnExpr::Constant(v) => {
                let (d, c) = sig.expect("signature checked by the parser");
                ev(FunctionSpec::constant(d, c, pt(c, v)?))?
            }
            FnExpr::Shift(k) => {
                let u = dom.or(self.current).ok_or_else(|| DslError::new(span.clone(), ErrorKind::NoUniverse))?;
                ev(FunctionSpec::shift(u, *k))?
            }
            FnExpr::Identity => {
                let u = dom.or(self.current).ok_or_else(|| DslError::new(span.clone(), ErrorKind::NoUniverse))?;
                FunctionSpec::identity(u)
            }
            FnExpr::Decay(s, n) => {
                let g = ev(FunctionSpec::decay_toward(self.set(s, dom)?))?;
                match n {
                    Some(n) => ev(g.power(*n))?,
                    None => g,
                }
            }
            FnExpr::Then(a, b) => {
                let fa = self.function_ref(a)?;
                let fb = self.function_ref(b)?;
                ev(fa.then(&fb))?
            }
            FnExpr::Ref(n) => self.function_ref(n)?,
        };
        if let Some((d, c)) = sig {
            ev(d.ensure_same(&out.domain()).and_then(|_| c.ensure_same(&out.codomain())).map(|_| out.clone()))?;
        }
        Ok(out)
    }

    fn function_ref(&self, n: &Name) -> EResult<FunctionSpec> {
        match self.lookup(n)? {
            Value::Fn(f) => Ok(f.clone()),
            _ => Err(self.wrong(n, "fn")),
        }
    }

    fn fnseq(&self, z: &FnSeqExpr) -> EResult<FunctionSequence> {
        let (span, r) = match z {
            FnSeqExpr::Powers(f) => (&f.span, FunctionSequence::powers(self.function_ref(f)?)),
            FnSeqExpr::Constant(f) => (&f.span, Ok(FunctionSequence::constant(self.function_ref(f)?))),
            FnSeqExpr::Eventually { items, limit } => {
                let list = items.iter().map(|f| self.function_ref(f)).collect::<EResult<Vec<_>>>()?;
                (&limit.span, FunctionSequence::eventually_constant(list, self.function_ref(limit)?))
            }
        };
        r.map_err(|e| DslError::eval(span, e))
    }

    fn declare(&mut self, d: &Decl) -> EResult<()> {
        let v = match &d.value {
            DeclValue::Universe(u) => {
                let u = self.universe_lit(u, &d.name.span)?;
                self.current = Some(u);
                Value::Universe(u)
            }
            DeclValue::Set { expr, within } => {
                let within = within.as_ref().map(|u| self.universe(u)).transpose()?;
                let s = self.set(expr, within)?;
                if let Some(u) = within {
                    u.ensure_same(&s.universe()).map_err(|e| DslError::eval(expr.span(), e))?;
                }
                Value::Set(s)
            }
            DeclValue::Algebra(m) => Value::Algebra(self.algebra(m)?),
            DeclValue::Proximity(p) => Value::Proximity(self.proximity(p)?),
            DeclValue::Seq(z) => Value::Seq(self.seq(z)?),
            DeclValue::Fn(f) => Value::Fn(self.function(f)?),
            DeclValue::FnSeq(z) => Value::FnSeq(self.fnseq(z)?),
        };
        self.values.insert(d.name.text.clone(), v);
        self.order.push(d.name.text.clone());
        Ok(())
    }
}

fn uspan(u: &UniverseRef) -> &Span {
    match u {
        UniverseRef::Name(n) => &n.span,
        UniverseRef::Lit(_, s) => s,
    }
}

fn pspan(d: &ProxExpr) -> &Span {
    match d {
        ProxExpr::Discrete(u) | ProxExpr::OnePoint(u) | ProxExpr::Metric(u) => uspan(u),
        ProxExpr::Table { within, .. } => uspan(within),
        ProxExpr::FromAlgebra(m) => aspan(m),
        ProxExpr::Subspace(p, _) | ProxExpr::Coreflection(p) => pspan(p),
        ProxExpr::Ref(n) => &n.span,
    }
}

fn aspan(m: &AlgebraExpr) -> &Span {
    match m {
        AlgebraExpr::Atoms { span, .. } | AlgebraExpr::Generated { span, .. } => span,
        AlgebraExpr::FiniteCofinite(u) | AlgebraExpr::PowerSet(u) | AlgebraExpr::Trivial(u) => uspan(u),
        AlgebraExpr::FromProximity(d) | AlgebraExpr::ProximallyBaire(d) => pspan(d),
        AlgebraExpr::Ref(n) => &n.span,
    }
}

fn rat(n: &Num) -> Rational64 {
    Rational64::new(n.numer, n.denom)
}

fn point_in(u: Universe, p: &PointLit) -> crate::Result<Point> {
    let point = match (u, p) {
        (_, PointLit::Inf) => Point::Infinity,
        (Universe::Finite(_), PointLit::Num(n)) if n.denom == 1 && n.numer >= 0 && n.numer <= u32::MAX as i64 => {
            Point::Index(n.numer as u32)
        }
        (Universe::Integers { .. }, PointLit::Num(n)) if n.denom == 1 => Point::Int(n.numer),
        (Universe::UnitInterval, PointLit::Num(n)) => Point::Rat(rat(n)),
        (_, PointLit::Num(n)) => return Err(Error::PointOutsideUniverse(render_num(n), u)),
    };
    u.check_point(&point)?;
    Ok(point)
}

fn render_num(n: &Num) -> String {
    if n.denom == 1 {
        n.numer.to_string()
    } else {
        format!("{}/{}", n.numer, n.denom)
    }
}

/// Evaluates every declaration. Errors carry the source location.
pub fn elaborate(p: &Program) -> EResult<Env> {
    let mut env = Env::default();
    for d in p.declarations() {
        env.declare(d)?;
    }
    Ok(env)
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub check: CheckOptions,
    /// Record wall-clock time in `elapsed_ms`; off by default so output is
    /// reproducible.
    pub timings: bool,
}

#[derive(Debug, Clone, Default)]
pub struct RunOutput {
    pub reports: Vec<LawReport>,
    /// `(path, contents)` for each `stone ... --dot PATH`.
    pub dots: Vec<(String, String)>,
}

impl RunOutput {
    pub fn exit_code(&self) -> i32 {
        exit_code(&self.reports)
    }
}

/// Runs the commands in order.
pub fn run(p: &Program, opts: &RunOptions) -> EResult<RunOutput> {
    let env = elaborate(p)?;
    let mut out = RunOutput::default();
    for c in p.commands() {
        let started = Instant::now();
        let mut batch = match c {
            Command::Check { law, args, find } => check(&env, law, args, *find, opts)?,
            Command::Stone { algebra, ideal, dot, .. } => {
                let (report, space) = stone_report(&env, algebra, ideal.as_ref())?;
                if let (Some(path), Some(space)) = (dot, space) {
                    out.dots.push((path.clone(), stone::emit_dot(&space)));
                }
                vec![report]
            }
            Command::Report(_) => vec![summary(&out.reports)],
        };
        if opts.timings {
            let ms = started.elapsed().as_millis() as u64;
            for r in &mut batch {
                r.elapsed_ms = ms;
            }
        }
        out.reports.extend(batch);
    }
    Ok(out)
}

fn check(env: &Env, law: &Name, args: &[Arg], find: bool, opts: &RunOptions) -> EResult<Vec<LawReport>> {
    // Each argument position offers one or more (label, subject) choices.
    let mut choices: Vec<Vec<(String, Subject)>> = Vec::new();
    for a in args {
        match a {
            Arg::Name(n) => {
                let s = env.lookup(n)?.subject().ok_or_else(|| env.wrong(n, "law argument"))?;
                choices.push(vec![(n.text.clone(), s)]);
            }
            Arg::AllAlgebras(k, span) => {
                let all = SetAlgebra::all_on_finite(*k).map_err(|e| DslError::eval(span, e))?;
                choices.push(all.into_iter().map(|m| (m.to_string(), Subject::Algebra(m))).collect());
            }
        }
    }
    let mut copts = opts.check.clone();
    copts.first_counterexample |= find;
    let mut reports = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let picked: Vec<&(String, Subject)> = idx.iter().zip(&choices).map(|(&i, c)| &c[i]).collect();
        let subjects: Vec<Subject> = picked.iter().map(|p| p.1.clone()).collect();
        let mut r = laws::check_law(&law.text, &subjects, &copts).map_err(|e| DslError::eval(&law.span, e))?;
        r.subjects = picked.iter().map(|p| p.0.clone()).collect();
        reports.push(r);
        // Odometer over the choices, last position fastest.
        let mut k = choices.len();
        loop {
            if k == 0 {
                return Ok(reports);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

fn stone_report(env: &Env, name: &Name, ideal: Option<&IdealExpr>) -> EResult<(LawReport, Option<StoneSpace>)> {
    let m = match env.lookup(name)? {
        Value::Algebra(m) => m.clone(),
        _ => return Err(env.wrong(name, "algebra")),
    };
    let mut label = name.text.clone();
    let built = match ideal {
        None => StoneSpace::of(&m),
        Some(i) => {
            let ideal = match i {
                IdealExpr::Principal(g) => {
                    let g = env.set(g, Some(m.universe()))?;
                    label = format!("{label} / principal({g})");
                    Ideal::principal(&m, g)
                }
                IdealExpr::FiniteSets => {
                    label = format!("{label} / finite_sets");
                    Ideal::finite_sets(&m)
                }
            };
            ideal.and_then(|i| stone::quotient_algebra(&m, &i)).and_then(|q| q.stone_space())
        }
    };
    Ok(match built {
        Ok(space) => {
            let r = LawReport::new("stone", Status::HoldsExhaustive)
                .with_subjects(vec![label])
                .with_cases(space.len() as u64)
                .with_witnesses(space.labels.iter().map(|l| Witness::new("ultrafilter", l)));
            (r, Some(space))
        }
        Err(e) => (LawReport::refused("stone", &e).with_subjects(vec![label]), None),
    })
}

fn summary(reports: &[LawReport]) -> LawReport {
    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let status = if count(Status::Counterexample) > 0 {
        Status::Counterexample
    } else if count(Status::Inconclusive) + count(Status::Refused) > 0 {
        Status::Inconclusive
    } else if count(Status::HoldsOnFamily) > 0 {
        Status::HoldsOnFamily
    } else {
        Status::HoldsExhaustive
    };
    let tally: Vec<String> = [
        Status::HoldsExhaustive,
        Status::HoldsOnFamily,
        Status::Counterexample,
        Status::Inconclusive,
        Status::Refused,
    ]
    .into_iter()
    .map(|s| format!("{} {s}", count(s)))
    .collect();
    LawReport::new("report", status)
        .with_cases(reports.len() as u64)
        .with_witness(Witness::note(format!("{} reports: {}", reports.len(), tally.join(", "))))
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Universe(u) => u.fmt(f),
            Value::Set(s) => s.fmt(f),
            Value::Algebra(m) => m.fmt(f),
            Value::Proximity(d) => d.fmt(f),
            Value::Seq(z) => z.fmt(f),
            Value::Fn(g) => g.fmt(f),
            Value::FnSeq(z) => z.fmt(f),
        }
    }
}
