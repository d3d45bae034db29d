//! One PASS/FAIL line per acceptance criterion. Oracles here are written
//! against bitmasks and point windows, not the engine's own deciders.

use std::path::Path;

use num_rational::Rational64;
use proxdual::dsl::{self, RunOptions};
use proxdual::pool::canonical_pool;
use proxdual::{
    check_law, duality, CheckOptions, FunctionSequence, FunctionSpec, LawReport, Point, Proximity, SetAlgebra, Status,
    Strategy, Subject, SymSet, Universe,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn law(id: &str, subjects: Vec<Subject>) -> LawReport {
    check_law(id, &subjects, &CheckOptions::default()).expect("law id and arity")
}

fn expect_status(r: &LawReport, ok: &[Status]) -> Result<(), String> {
    if ok.contains(&r.status) {
        Ok(())
    } else {
        Err(format!("{r}"))
    }
}

fn side(r: &LawReport, i: usize) -> &str {
    r.witnesses.iter().filter(|w| w.kind == "side").nth(i).map(|w| w.rendering.as_str()).unwrap_or("")
}

/// Atom masks of an algebra on Finite(n), from its members.
fn atom_masks(m: &SetAlgebra) -> Vec<u64> {
    m.atoms().unwrap().iter().map(|a| a.bits().unwrap()).collect()
}

/// `A δ_M B` iff some atom meets both (A, B nonempty).
fn oracle_near(atoms: &[u64], a: u64, b: u64) -> bool {
    atoms.iter().any(|t| t & a != 0 && t & b != 0)
}

fn oracle_members(atoms: &[u64]) -> Vec<u64> {
    (0u64..1 << atoms.len())
        .map(|pick| atoms.iter().enumerate().filter(|(i, _)| pick & (1 << i) != 0).fold(0, |acc, (_, t)| acc | t))
        .collect()
}

fn image(values: &[u32], a: u64) -> u64 {
    values.iter().enumerate().filter(|(x, _)| a & (1 << x) != 0).fold(0, |acc, (_, &v)| acc | (1 << v))
}

fn preimage(values: &[u32], b: u64) -> u64 {
    values.iter().enumerate().filter(|(_, &v)| b & (1 << v) != 0).fold(0, |acc, (x, _)| acc | (1 << x))
}

/// Infinitude of an integer set by counting members in growing windows.
fn window_infinite(s: &SymSet) -> bool {
    let count = |w: i64| (-w..=w).filter(|&k| s.contains(&Point::Int(k))).count();
    count(400) > count(200)
}

fn criterion_1() -> Outcome {
    let mut checked = 0;
    for n in 1..=4u32 {
        let u = Universe::Finite(n);
        let mut subjects = vec![Proximity::discrete(u)];
        subjects.extend(SetAlgebra::all_on_finite(n).unwrap().into_iter().map(Proximity::from_algebra));
        for d in subjects {
            for id in ["prox.axioms", "prec.props"] {
                let r = law(id, vec![Subject::Proximity(d.clone())]);
                expect_status(&r, &[Status::HoldsExhaustive])?;
                checked += 1;
            }
        }
    }
    for (u, d) in [
        (Universe::integers(), Proximity::one_point(Universe::integers()).unwrap()),
        (Universe::UnitInterval, Proximity::metric()),
    ] {
        let pool = canonical_pool(u).unwrap();
        ensure!(pool.len() >= 200, "pool for {u} has only {} sets", pool.len());
        for id in ["prox.axioms", "prec.props"] {
            let r = law(id, vec![Subject::Proximity(d.clone())]);
            expect_status(&r, &[Status::HoldsOnFamily])?;
            checked += 1;
        }
    }
    Ok(format!("{checked} axiom and ≺-property reports clean"))
}

fn criterion_2() -> Outcome {
    let all = SetAlgebra::all_on_finite(4).unwrap();
    ensure!(all.len() == 15, "expected 15 algebras, got {}", all.len());
    for m in &all {
        let r = law("thm.2.1.4", vec![Subject::Algebra(m.clone())]);
        expect_status(&r, &[Status::HoldsExhaustive])?;
        // Oracle: the sets R with R ≺ R under δ_M are exactly the unions of atoms.
        let atoms = atom_masks(m);
        let d = Proximity::from_algebra(m.clone());
        let back = duality::algebra_from_proximity(&d).unwrap();
        let mut got: Vec<u64> = back.members().unwrap().iter().map(|s| s.bits().unwrap()).collect();
        let mut want = oracle_members(&atoms);
        got.sort_unstable();
        want.sort_unstable();
        ensure!(got == want, "M_δ differs from {m}");
    }
    // δ_{M_δ} = δ on zero-dimensional probed proximities.
    let mut zero_dim = vec![Proximity::discrete(Universe::Finite(4)), Proximity::discrete(Universe::integers())];
    zero_dim.push(Proximity::one_point(Universe::integers()).unwrap());
    zero_dim.extend(all.iter().cloned().map(Proximity::from_algebra));
    for d in &zero_dim {
        let r = law("thm.2.1.3", vec![Subject::Proximity(d.clone())]);
        expect_status(&r, &[Status::HoldsExhaustive, Status::HoldsOnFamily])?;
    }
    // OnePoint(ℤ): M_δ = FiniteCofinite and δ_FC = OnePoint on the pool.
    let z = Universe::integers();
    let one = Proximity::one_point(z).unwrap();
    let fc = SetAlgebra::finite_cofinite(z).unwrap();
    ensure!(duality::algebra_from_proximity(&one).unwrap() == fc, "M_δ of one_point is not finite_cofinite");
    let d_fc = Proximity::from_algebra(fc);
    let pool = canonical_pool(z).unwrap();
    let mut pairs = 0;
    for a in &pool {
        for b in &pool {
            let oracle = a.meets(b).unwrap() || (window_infinite(a) && window_infinite(b));
            ensure!(one.near(a, b).unwrap() == oracle, "one_point disagrees with oracle on {a}, {b}");
            ensure!(d_fc.near(a, b).unwrap() == oracle, "δ_FC disagrees with oracle on {a}, {b}");
            pairs += 1;
        }
    }
    Ok(format!("15 partitions round-trip, {} zero-dimensional proximities, {pairs} one-point pairs", zero_dim.len()))
}

fn criterion_3() -> Outcome {
    let mut instances = 0;
    for (n, k) in [(3u32, 2u32), (3, 3)] {
        let (dom, cod) = (Universe::Finite(n), Universe::Finite(k));
        let sources = SetAlgebra::all_on_finite(n).unwrap();
        let targets = SetAlgebra::all_on_finite(k).unwrap();
        for code in 0..k.pow(n) {
            let values: Vec<u32> = (0..n).map(|i| code / k.pow(i) % k).collect();
            let f = FunctionSpec::table(dom, cod, values.iter().map(|&v| Point::Index(v)).collect()).unwrap();
            for m in &sources {
                for t in &targets {
                    let (ma, ta) = (atom_masks(m), atom_masks(t));
                    let oracle_measurable = oracle_members(&ta).iter().all(|&b| oracle_members(&ma).contains(&preimage(&values, b)));
                    let oracle_prox = (1u64..1 << n).all(|a| {
                        (1u64..1 << n).all(|b| !oracle_near(&ma, a, b) || oracle_near(&ta, image(&values, a), image(&values, b)))
                    });
                    ensure!(oracle_measurable == oracle_prox, "oracles disagree for {f} on {m} → {t}");
                    let subjects = vec![Subject::Function(f.clone()), Subject::Algebra(m.clone()), Subject::Algebra(t.clone())];
                    let r = law("thm.2.2", subjects.clone());
                    expect_status(&r, &[Status::HoldsExhaustive])?;
                    let want = if oracle_prox { "yes" } else { "no" };
                    ensure!(side(&r, 0).ends_with(want), "prox-map side wrong for {f}: {r}");
                    let mr = law("measurable", subjects);
                    let got = mr.status == Status::HoldsExhaustive;
                    ensure!(got == oracle_measurable, "measurable wrong for {f} on {m} → {t}");
                    instances += 1;
                }
            }
        }
    }
    Ok(format!("{instances} map × algebra-pair instances agree"))
}

fn criterion_4() -> Outcome {
    let z = Universe::integers();
    let fc = Proximity::from_algebra(SetAlgebra::finite_cofinite(z).unwrap());
    let r = check_law(
        "p_aleph1",
        &[Subject::Proximity(fc)],
        &CheckOptions { first_counterexample: true, ..CheckOptions::default() },
    )
    .unwrap();
    ensure!(r.status == Status::Counterexample, "{r}");
    let evens = SymSet::residue_class(z, 2, 0).unwrap();
    let seq = r.witnesses.iter().find(|w| w.kind == "sequence").map(|w| w.rendering.clone());
    ensure!(seq == Some(format!("prefixes({evens})")), "sequence witness {seq:?}");
    let b = r.witnesses.iter().rfind(|w| w.kind == "set").map(|w| w.rendering.clone());
    ensure!(b == Some(evens.to_string()), "B witness {b:?}");
    // The witness re-verifies: every prefix of the evens is ≺ evens, the union is not.
    let d = Proximity::from_algebra(SetAlgebra::finite_cofinite(z).unwrap());
    for n in 1..=12 {
        let a = evens.enumeration_prefix(n).unwrap();
        ensure!(d.strongly_below(&a, &evens).unwrap(), "prefix {n} not ≺ evens");
    }
    ensure!(!d.strongly_below(&evens, &evens).unwrap(), "evens ≺ evens under FC");

    let one = law("cor.2.8", vec![Subject::Proximity(Proximity::one_point(z).unwrap())]);
    expect_status(&one, &[Status::HoldsExhaustive, Status::HoldsOnFamily])?;
    ensure!(side(&one, 0).ends_with("no") && side(&one, 1).ends_with("no"), "{one}");
    ensure!(one.witnesses.iter().any(|w| w.kind == "set" && w.rendering == evens.to_string()), "{one}");
    let disc = law("cor.2.8", vec![Subject::Proximity(Proximity::discrete(z))]);
    expect_status(&disc, &[Status::HoldsExhaustive, Status::HoldsOnFamily])?;
    ensure!(side(&disc, 0).ends_with("yes") && side(&disc, 1).ends_with("yes"), "{disc}");
    Ok("FC fails P_ℵ1 at prefixes(evens) ≺ evens; cor.2.8 no/no on one_point, yes/yes on discrete".into())
}

fn cli_data(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../cli/tests/data").join(name)
}

fn criterion_5() -> Outcome {
    let src = std::fs::read_to_string(cli_data("evens_odds.prox")).unwrap();
    let program = dsl::parse(&src).map_err(|e| e.to_string())?;
    ensure!(program.declarations().count() == 7 && program.commands().count() == 3, "script shape");
    let out = dsl::run(&program, &RunOptions::default()).map_err(|e| e.to_string())?;
    ensure!(out.exit_code() == 0, "exit code {}", out.exit_code());
    let near = &out.reports[0];
    ensure!(near.law == "prox.near" && near.witnesses[0].rendering == "true", "{near}");
    for r in &out.reports[1..] {
        ensure!(r.law == "thm.2.7" && r.status == Status::HoldsExhaustive, "{r}");
        ensure!(r.witnesses.iter().any(|w| w.kind == "rule"), "chain not rule-decided: {r}");
    }
    let json = serde_json::to_string_pretty(&out.reports).unwrap() + "\n";
    let golden = std::fs::read_to_string(cli_data("evens_odds.json")).unwrap();
    ensure!(json == golden, "JSON differs from the golden file");
    Ok("evens and odds proximally zero by rule, evens δ odds, golden JSON matches".into())
}

fn criterion_6() -> Outcome {
    let levels = [Rational64::new(0, 1), Rational64::new(1, 3), Rational64::new(1, 2), Rational64::new(1, 1)];
    let metric = Proximity::metric();
    let mut maps = 0;
    for n in 1..=4u32 {
        let dom = Universe::Finite(n);
        for m in SetAlgebra::all_on_finite(n).unwrap() {
            let atoms = atom_masks(&m);
            let d = Proximity::from_algebra(m.clone());
            for code in 0..4u32.pow(n) {
                let idx: Vec<usize> = (0..n).map(|i| (code / 4u32.pow(i) % 4) as usize).collect();
                let values: Vec<Point> = idx.iter().map(|&i| Point::Rat(levels[i])).collect();
                let f = FunctionSpec::table(dom, Universe::UnitInterval, values).unwrap();
                // Oracle: a proximity map from δ_M into [0,1] is constant on atoms.
                let constant_on_atoms = atoms.iter().all(|&t| {
                    let vals: Vec<usize> = (0..n as usize).filter(|x| t & (1 << x) != 0).map(|x| idx[x]).collect();
                    vals.windows(2).all(|w| w[0] == w[1])
                });
                if !constant_on_atoms {
                    continue;
                }
                let fs = FunctionSequence::powers(f).unwrap();
                let r = law(
                    "thm.2.15",
                    vec![Subject::Proximity(d.clone()), Subject::FunctionSequence(fs), Subject::Proximity(metric.clone())],
                );
                expect_status(&r, &[Status::HoldsExhaustive])?;
                ensure!(r.witnesses.iter().any(|w| w.rendering == "the limit is a proximity map"), "{r}");
                maps += 1;
            }
        }
    }
    let z = Universe::integers();
    let evens = SymSet::residue_class(z, 2, 0).unwrap();
    let fs = FunctionSequence::powers(FunctionSpec::decay_toward(evens.clone()).unwrap()).unwrap();
    let r = law(
        "thm.2.15",
        vec![Subject::Proximity(Proximity::one_point(z).unwrap()), Subject::FunctionSequence(fs), Subject::Proximity(metric)],
    );
    ensure!(r.witnesses.iter().any(|w| w.rendering == "the limit is not a proximity map"), "{r}");
    ensure!(r.witnesses.iter().any(|w| w.kind == "limit" && w.rendering == format!("chi({evens})")), "{r}");
    Ok(format!("{maps} power sequences converge to proximity maps; one_point control limit chi(evens) is not one"))
}

/// Ultrafilters by enumerating every family of members.
fn brute_force_ultrafilters(n: u32, members: &[u64]) -> usize {
    let full = (1u64 << n) - 1;
    let k = members.len();
    let mut count = 0;
    for pick in 0u64..1 << k {
        let fam: Vec<u64> = (0..k).filter(|i| pick & (1 << i) != 0).map(|i| members[i]).collect();
        let has = |s: u64| fam.contains(&s);
        let proper = has(full) && !has(0);
        let upward = fam.iter().all(|&a| members.iter().all(|&b| b & a != a || has(b)));
        let meets = fam.iter().all(|&a| fam.iter().all(|&b| has(a & b)));
        let ultra = members.iter().all(|&r| has(r) || has(full & !r));
        if proper && upward && meets && ultra {
            count += 1;
        }
    }
    count
}

fn criterion_7() -> Outcome {
    let mut algebras = 0;
    for n in 1..=3u32 {
        for m in SetAlgebra::all_on_finite(n).unwrap() {
            let atoms = atom_masks(&m);
            let members = oracle_members(&atoms);
            let uf = proxdual::stone::ultrafilters(&m).unwrap().len();
            let oracle = brute_force_ultrafilters(n, &members);
            ensure!(uf == atoms.len() && oracle == uf, "{m}: {uf} ultrafilters, oracle {oracle}");
            algebras += 1;
        }
    }
    for m in SetAlgebra::all_on_finite(4).unwrap() {
        let r = law("smirnov", vec![Subject::Algebra(m)]);
        expect_status(&r, &[Status::HoldsExhaustive])?;
    }
    let mut triples = 0;
    let funcs = |a: u32, b: u32| -> Vec<(Vec<u32>, FunctionSpec)> {
        (0..b.pow(a))
            .map(|code| {
                let v: Vec<u32> = (0..a).map(|i| code / b.pow(i) % b).collect();
                let f = FunctionSpec::table(
                    Universe::Finite(a),
                    Universe::Finite(b),
                    v.iter().map(|&x| Point::Index(x)).collect(),
                )
                .unwrap();
                (v, f)
            })
            .collect()
    };
    let measurable = |v: &[u32], m: &[u64], t: &[u64]| {
        let ms = oracle_members(m);
        oracle_members(t).iter().all(|&b| ms.contains(&preimage(v, b)))
    };
    for a in 1..=3u32 {
        for b in 1..=3u32 {
            for c in 1..=3u32 {
                let (ma, mb, mc) = (
                    SetAlgebra::all_on_finite(a).unwrap(),
                    SetAlgebra::all_on_finite(b).unwrap(),
                    SetAlgebra::all_on_finite(c).unwrap(),
                );
                let (fs, gs) = (funcs(a, b), funcs(b, c));
                for m in &ma {
                    for nn in &mb {
                        let good_f: Vec<&FunctionSpec> = fs
                            .iter()
                            .filter(|(v, _)| measurable(v, &atom_masks(m), &atom_masks(nn)))
                            .map(|(_, f)| f)
                            .collect();
                        for p in &mc {
                            for (gv, g) in &gs {
                                if !measurable(gv, &atom_masks(nn), &atom_masks(p)) {
                                    continue;
                                }
                                for f in &good_f {
                                    let r = law(
                                        "stone.functor",
                                        vec![
                                            Subject::Function((*f).clone()),
                                            Subject::Function(g.clone()),
                                            Subject::Algebra(m.clone()),
                                            Subject::Algebra(nn.clone()),
                                            Subject::Algebra(p.clone()),
                                        ],
                                    );
                                    expect_status(&r, &[Status::HoldsExhaustive])?;
                                    triples += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{algebras} algebras match the filter oracle, smirnov on 15, {triples} composable triples"))
}

const SUITE: &[&str] = &["evens_odds.prox", "finite_cofinite.prox", "partitions.prox"];

fn suite_json(jobs: usize) -> String {
    let opts = RunOptions {
        check: CheckOptions { strategy: Some(Strategy::Sampled { seed: 20240, n: 48 }), ..CheckOptions::default() },
        timings: false,
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().unwrap();
    let mut reports = Vec::new();
    for name in SUITE {
        let src = std::fs::read_to_string(cli_data(name)).unwrap();
        let program = dsl::parse(&src).unwrap();
        reports.extend(pool.install(|| dsl::run(&program, &opts)).unwrap().reports);
    }
    serde_json::to_string_pretty(&reports).unwrap()
}

fn criterion_8() -> Outcome {
    let a = suite_json(4);
    let b = suite_json(4);
    ensure!(a == b, "two seeded runs differ");
    let c = suite_json(1);
    ensure!(a == c, "runs with 1 and 4 workers differ");
    Ok(format!("{} bytes of seeded JSON identical across runs and worker counts", a.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("axiom suite", criterion_1),
        ("duality round trips", criterion_2),
        ("proximity maps = measurable maps", criterion_3),
        ("P_ℵ1 counterexample and zero-set corollary", criterion_4),
        ("evens/odds script", criterion_5),
        ("pointwise limits of powers", criterion_6),
        ("Stone suite", criterion_7),
        ("determinism", criterion_8),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                println!("FAIL {} {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
