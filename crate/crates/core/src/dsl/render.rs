//! Canonical pretty-printer. `parse(render(p)) == p`.

use std::fmt::Write;

use super::ast::*;

pub fn render(p: &Program) -> String {
    let mut out = String::new();
    for item in &p.items {
        match item {
            Item::Decl(d) => render_decl(&mut out, d),
            Item::Command(c) => render_command(&mut out, c),
        }
        out.push('\n');
    }
    out
}

fn render_decl(out: &mut String, d: &Decl) {
    let _ = write!(out, "{} {} = ", d.kind().keyword(), d.name.text);
    match &d.value {
        DeclValue::Universe(u) => out.push_str(&universe_lit(u)),
        DeclValue::Set { expr, within } => {
            out.push_str(&set_expr(expr));
            if let Some(u) = within {
                let _ = write!(out, " in {}", universe_ref(u));
            }
        }
        DeclValue::Algebra(m) => out.push_str(&algebra_expr(m)),
        DeclValue::Proximity(d) => out.push_str(&prox_expr(d)),
        DeclValue::Seq(z) => out.push_str(&seq_expr(z)),
        DeclValue::Fn(f) => {
            out.push_str(&fn_expr(&f.expr));
            if let Some((a, b)) = &f.signature {
                let _ = write!(out, " : {} -> {}", universe_ref(a), universe_ref(b));
            }
        }
        DeclValue::FnSeq(z) => out.push_str(&fnseq_expr(z)),
    }
}

fn render_command(out: &mut String, c: &Command) {
    match c {
        Command::Check { law, args, find } => {
            out.push_str(if *find { "find_counterexample " } else { "check " });
            out.push_str(&law.text);
            for a in args {
                match a {
                    Arg::Name(n) => {
                        let _ = write!(out, " {}", n.text);
                    }
                    Arg::AllAlgebras(n, _) => {
                        let _ = write!(out, " all_algebras({n})");
                    }
                }
            }
        }
        Command::Stone { algebra, ideal, dot, .. } => {
            let _ = write!(out, "stone {}", algebra.text);
            match ideal {
                Some(IdealExpr::Principal(g)) => {
                    let _ = write!(out, " / principal({})", set_expr(g));
                }
                Some(IdealExpr::FiniteSets) => out.push_str(" / finite_sets"),
                None => {}
            }
            if let Some(path) = dot {
                let _ = write!(out, " --dot \"{}\"", path.replace('\\', "\\\\").replace('"', "\\\""));
            }
        }
        Command::Report(_) => out.push_str("report"),
    }
}

pub fn universe_lit(u: &UniverseLit) -> String {
    match u {
        UniverseLit::Finite(n) => format!("finite({n})"),
        UniverseLit::Integers { with_infinity: false } => "integers".into(),
        UniverseLit::Integers { with_infinity: true } => "integers with_infinity".into(),
        UniverseLit::UnitInterval => "unit_interval".into(),
    }
}

fn universe_ref(u: &UniverseRef) -> String {
    match u {
        UniverseRef::Name(n) => n.text.clone(),
        UniverseRef::Lit(l, _) => universe_lit(l),
    }
}

fn num(n: &Num) -> String {
    if n.denom == 1 {
        n.numer.to_string()
    } else {
        format!("{}/{}", n.numer, n.denom)
    }
}

fn point(p: &PointLit) -> String {
    match p {
        PointLit::Num(n) => num(n),
        PointLit::Inf => "inf".into(),
    }
}

fn join<T>(items: &[T], sep: &str, f: impl Fn(&T) -> String) -> String {
    items.iter().map(f).collect::<Vec<_>>().join(sep)
}

pub fn set_expr(e: &SetExpr) -> String {
    match e {
        SetExpr::Points(ps, _) => format!("{{{}}}", join(ps, ",", point)),
        SetExpr::Periodic { period, residues, .. } => {
            format!("periodic(p={period}, residues={{{}}})", join(residues, ",", |r| r.to_string()))
        }
        SetExpr::Interval { lo, lo_closed, hi, hi_closed, .. } => format!(
            "{}{},{}{}",
            if *lo_closed { "[" } else { "(" },
            num(lo),
            num(hi),
            if *hi_closed { "]" } else { ")" }
        ),
        SetExpr::Empty(_) => "empty".into(),
        SetExpr::Full(_) => "full".into(),
        SetExpr::Ref(n) => n.text.clone(),
        SetExpr::Complement(inner) => format!("complement({})", set_expr(inner)),
        SetExpr::Binary { op, lhs, rhs } => {
            let sym = match op {
                SetOp::Union => "∪",
                SetOp::Intersect => "∩",
                SetOp::Difference => "-",
            };
            let right = match **rhs {
                SetExpr::Binary { .. } => format!("({})", set_expr(rhs)),
                _ => set_expr(rhs),
            };
            format!("{} {sym} {right}", set_expr(lhs))
        }
    }
}

fn prefixed_sets(within: &Option<UniverseRef>, sets: &[SetExpr]) -> String {
    let body = join(sets, ", ", set_expr);
    match within {
        Some(u) => format!("{}; {body}", universe_ref(u)),
        None => body,
    }
}

pub fn algebra_expr(m: &AlgebraExpr) -> String {
    match m {
        AlgebraExpr::Atoms { within, sets, .. } => format!("atoms({})", prefixed_sets(within, sets)),
        AlgebraExpr::Generated { within, sets, .. } => format!("generated({})", prefixed_sets(within, sets)),
        AlgebraExpr::FiniteCofinite(u) => format!("finite_cofinite({})", universe_ref(u)),
        AlgebraExpr::PowerSet(u) => format!("powerset({})", universe_ref(u)),
        AlgebraExpr::Trivial(u) => format!("trivial({})", universe_ref(u)),
        AlgebraExpr::FromProximity(d) => format!("from_proximity({})", prox_expr(d)),
        AlgebraExpr::ProximallyBaire(d) => format!("proximally_baire({})", prox_expr(d)),
        AlgebraExpr::Ref(n) => n.text.clone(),
    }
}

pub fn prox_expr(d: &ProxExpr) -> String {
    match d {
        ProxExpr::Discrete(u) => format!("discrete({})", universe_ref(u)),
        ProxExpr::OnePoint(u) => format!("one_point({})", universe_ref(u)),
        ProxExpr::Metric(u) => format!("metric({})", universe_ref(u)),
        ProxExpr::FromAlgebra(m) => format!("from_algebra({})", algebra_expr(m)),
        ProxExpr::Subspace(p, s) => format!("subspace({}, {})", prox_expr(p), set_expr(s)),
        ProxExpr::Table { within, pairs } if pairs.is_empty() => format!("table({})", universe_ref(within)),
        ProxExpr::Table { within, pairs } => format!(
            "table({}; {})",
            universe_ref(within),
            join(pairs, ", ", |(a, b)| format!("{} ~ {}", set_expr(a), set_expr(b)))
        ),
        ProxExpr::Coreflection(p) => format!("coreflection({})", prox_expr(p)),
        ProxExpr::Ref(n) => n.text.clone(),
    }
}

fn seq_expr(z: &SeqExpr) -> String {
    match z {
        SeqExpr::Constant(s) => format!("constant({})", set_expr(s)),
        SeqExpr::Prefixes(s) => format!("prefixes({})", set_expr(s)),
        SeqExpr::Neighborhoods(s) => format!("neighborhoods({})", set_expr(s)),
        SeqExpr::ShrinkTail { core, tail } => format!("shrink_tail(core={}, tail={})", set_expr(core), set_expr(tail)),
        SeqExpr::List { items, tail } => {
            let mut s = String::from("list(");
            for i in items {
                let _ = write!(s, "{}; ", set_expr(i));
            }
            let _ = write!(s, "tail={})", set_expr(tail));
            s
        }
        SeqExpr::Exhaust { lo, hi, .. } => format!("exhaust({}, {})", num(lo), num(hi)),
    }
}

fn fn_expr(f: &FnExpr) -> String {
    match f {
        FnExpr::Table(pairs) => format!("table{{{}}}", join(pairs, ", ", |(x, v)| format!("{}->{}", point(x), point(v)))),
        FnExpr::ResidueMap { period, values, exceptions, at_infinity } => {
            let mut s = format!("residue_map{{p={period}; {}", join(values, ", ", |(r, v)| format!("{r}->{}", point(v))));
            if !exceptions.is_empty() {
                let _ = write!(s, "; except {}", join(exceptions, ", ", |(k, v)| format!("{k}->{}", point(v))));
            }
            if let Some(v) = at_infinity {
                let _ = write!(s, "; inf->{}", point(v));
            }
            s.push('}');
            s
        }
        FnExpr::Chi(s) => format!("chi({})", set_expr(s)),
        FnExpr::Step(pieces) => format!("step{{{}}}", join(pieces, "; ", |(s, v)| format!("{} -> {}", set_expr(s), point(v)))),
        FnExpr::Constant(v) => format!("constant({})", point(v)),
        FnExpr::Shift(k) => format!("shift({k})"),
        FnExpr::Identity => "identity".into(),
        FnExpr::Decay(s, None) => format!("decay({})", set_expr(s)),
        FnExpr::Decay(s, Some(n)) => format!("decay({}, {n})", set_expr(s)),
        FnExpr::Then(a, b) => format!("then({}, {})", a.text, b.text),
        FnExpr::Ref(n) => n.text.clone(),
    }
}

fn fnseq_expr(z: &FnSeqExpr) -> String {
    match z {
        FnSeqExpr::Powers(f) => format!("powers({})", f.text),
        FnSeqExpr::Constant(f) => format!("constant({})", f.text),
        FnSeqExpr::Eventually { items, limit } => {
            let mut s = String::from("eventually(");
            for i in items {
                let _ = write!(s, "{}; ", i.text);
            }
            let _ = write!(s, "limit={})", limit.text);
            s
        }
    }
}
