use proptest::prelude::*;
use proxdual::dsl::{self, elaborate, parse, render, run, ErrorKind, RunOptions, Value};
use proxdual::{Proximity, SetAlgebra, Status, Universe};

#[test]
fn two_declarations() {
    let p = parse("universe Z = integers\nset E = periodic(p=2, residues={0})\n").unwrap();
    assert_eq!(p.declarations().count(), 2);
    assert_eq!(p.commands().count(), 0);
}

#[test]
fn algebra_literals() {
    let src = "universe X = finite(3)
universe Z = integers
algebra M = atoms(X; {0}, {1,2})
algebra F = finite_cofinite(Z)
algebra P = powerset(X)
set S1 = {0} in X
set S2 = {0,1} in X
algebra G = generated(S1, S2)
";
    let env = elaborate(&parse(src).unwrap()).unwrap();
    let x = Universe::Finite(3);
    let m = SetAlgebra::from_partition(3, &[0b001, 0b110]).unwrap();
    assert_eq!(env.get("M"), Some(&Value::Algebra(m)));
    let Some(Value::Algebra(g)) = env.get("G") else { panic!() };
    assert_eq!(g.atoms().unwrap().len(), 3);
    assert_eq!(env.get("P"), Some(&Value::Algebra(SetAlgebra::power_set(x))));
}

#[test]
fn literals_follow_the_latest_universe_or_a_named_set() {
    let src = "universe Z = integers
universe X = finite(4)
set A = {1,2}
set E = periodic(p=2, residues={0}) in Z
set B = E - {4}
";
    let env = elaborate(&parse(src).unwrap()).unwrap();
    let Some(Value::Set(a)) = env.get("A") else { panic!() };
    assert_eq!(a.universe(), Universe::Finite(4));
    let Some(Value::Set(b)) = env.get("B") else { panic!() };
    assert_eq!(b.to_string(), "periodic(p=2, residues={0}) - {4}");
}

#[test]
fn proximity_and_sequence_literals() {
    let src = "universe I = unit_interval
proximity m = metric(I)
set A = [0,1/4] ∪ (1/2,1]
seq N = neighborhoods({1/2})
seq X = exhaust(1/4, 3/4)
universe Z = integers
proximity d = one_point(Z)
proximity c = coreflection(d)
fn f = decay(periodic(p=2, residues={0}))
fn g = shift(3)
fn h = then(g, g)
fnseq P = powers(f)
fn t = table{0->1, 1->0} : finite(2) -> finite(2)
fn r = residue_map{p=2; 0->0, 1->1; except 4->1} : Z -> finite(2)
";
    let env = elaborate(&parse(src).unwrap()).unwrap();
    assert_eq!(env.get("c"), Some(&Value::Proximity(Proximity::discrete(Universe::integers()))));
    let Some(Value::Set(a)) = env.get("A") else { panic!() };
    assert_eq!(a.to_string(), "[0,1/4] ∪ (1/2,1]");
    let Some(Value::Fn(h)) = env.get("h") else { panic!() };
    assert_eq!(h.to_string(), "shift(6)");
}

fn err(src: &str) -> dsl::DslError {
    match parse(src) {
        Err(e) => e,
        Ok(p) => elaborate(&p).unwrap_err(),
    }
}

#[test]
fn errors_carry_locations() {
    let e = err("check thm.2.1.4 M");
    assert_eq!((e.line, e.col), (1, 17));
    assert_eq!(e.to_string(), "1:17: unknown identifier M");

    let e = err("universe X = finite(2)\nuniverse X = finite(3)\n");
    assert_eq!((e.line, e.kind), (2, ErrorKind::Duplicate("X".into())));

    let e = err("universe X = finite(2)\nset A = {0}\nalgebra M = from_proximity(A)\n");
    assert!(matches!(e.kind, ErrorKind::WrongKind { .. }), "{e}");
    assert_eq!((e.line, e.col), (3, 28));

    let e = err("universe X = finite(2)\nset A = {0,\n");
    assert!(matches!(e.kind, ErrorKind::Syntax(_)));
    assert_eq!(e.line, 2);

    let e = err("universe X = finite(2)\nuniverse Y = finite(3)\nset A = {0} in X\nset B = {0} in Y\nset C = A ∪ B\n");
    assert_eq!((e.line, e.col), (5, 13));
    assert!(e.to_string().contains("UniverseMismatch"), "{e}");

    let e = err("universe X = finite(2)\nset A = {5}\n");
    assert!(e.to_string().contains("PointOutsideUniverse"), "{e}");

    let e = err("universe X = finite(2)\nproximity d = discrete(X)\ncheck nope d\n");
    assert_eq!(e.kind, ErrorKind::UnknownLaw("nope".into()));

    let e = err("universe X = finite(2)\nalgebra M = powerset(X)\ncheck prox.axioms M\n");
    assert!(matches!(e.kind, ErrorKind::Arity { .. }));
}

#[test]
fn implicit_proximity_argument() {
    let p = parse("universe Z = integers\nset E = periodic(p=2, residues={0})\nset O = complement(E)\nproximity d = one_point(Z)\ncheck prox.near E O\n").unwrap();
    assert!(render(&p).contains("check prox.near d E O"));
    let out = run(&p, &RunOptions::default()).unwrap();
    assert_eq!(out.reports[0].status, Status::HoldsExhaustive);
    assert_eq!(out.exit_code(), 0);
}

#[test]
fn table_proximities_on_two_points() {
    // Listing {0}~{1} makes the two points near; an empty list is discrete.
    let src = "universe X = finite(2)
proximity near = table(X; {0} ~ {1})
proximity far = table(X)
check prox.near near {0} {1}
";
    assert!(parse(src).is_err(), "set arguments must be names");
    let src = "universe X = finite(2)
set A = {0}
set B = {1}
proximity near = table(X; A ~ B)
proximity far = table(X)
check prox.near near A B
check prox.near far A B
check prox.axioms near
check prox.separated near
";
    let out = run(&parse(src).unwrap(), &RunOptions::default()).unwrap();
    let near: Vec<&str> = out.reports[..2].iter().map(|r| r.witnesses[0].rendering.as_str()).collect();
    assert_eq!(near, ["true", "false"]);
    assert_eq!(out.reports[2].status, Status::HoldsExhaustive);
    assert_eq!(out.reports[3].status, Status::Counterexample);
}

#[test]
fn stone_over_a_quotient() {
    let src = "universe Z = integers\nalgebra F = finite_cofinite(Z)\nstone F\nstone F / finite_sets\n";
    let out = run(&parse(src).unwrap(), &RunOptions::default()).unwrap();
    assert_eq!(out.reports[0].status, Status::Refused);
    assert_eq!(out.reports[0].refusal_error(), Some("NotFinitelyAtomic"));
    assert_eq!(out.reports[1].status, Status::HoldsExhaustive);
    assert_eq!(out.reports[1].witnesses[0].rendering, "[cofinite]");
    assert_eq!(out.exit_code(), 3);
}

#[test]
fn comments_and_blank_lines() {
    let p = parse("# header\n\nuniverse X = finite(1) # trailing\n\n").unwrap();
    assert_eq!(p.items.len(), 1);
}

fn set_source(depth: u32) -> BoxedStrategy<String> {
    let leaf = prop_oneof![
        prop::collection::vec(-9i64..9, 0..4)
            .prop_map(|v| format!("{{{}}}", v.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(","))),
        (1u32..5, prop::collection::vec(0u32..5, 0..3)).prop_map(|(p, r)| format!(
            "periodic(p={p}, residues={{{}}})",
            r.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",")
        )),
        Just("E".to_string()),
        Just("empty".to_string()),
        Just("full".to_string()),
    ];
    if depth == 0 {
        return leaf.boxed();
    }
    let sub = set_source(depth - 1);
    prop_oneof![
        leaf,
        sub.clone().prop_map(|s| format!("complement({s})")),
        (sub.clone(), prop::sample::select(vec!["+", "-", "∪", "∩", "&", "|", "\\"]), sub)
            .prop_map(|(a, op, b)| format!("({a}) {op} ({b})")),
    ]
    .boxed()
}

fn program_source() -> impl Strategy<Value = String> {
    prop::collection::vec(set_source(3), 1..5).prop_map(|sets| {
        let mut src = String::from("universe Z = integers\nset E = periodic(p=2, residues={0})\n");
        for (i, s) in sets.iter().enumerate() {
            src.push_str(&format!("set S{i} = {s}\n"));
        }
        src.push_str("proximity d = one_point(Z)\nseq Q = shrink_tail(core=S0, tail=complement(S0))\n");
        src.push_str("check prox.near d E S0\nstone F / finite_sets --dot \"f.dot\"\nreport\n");
        src.replace("stone F", "algebra F = finite_cofinite(Z)\nstone F")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn render_then_parse_is_identity(src in program_source()) {
        let p = parse(&src).unwrap();
        let text = render(&p);
        let q = parse(&text).unwrap();
        prop_assert_eq!(&q, &p);
        prop_assert_eq!(render(&q), text);
        // Evaluation agrees too.
        let (a, b) = (elaborate(&p).unwrap(), elaborate(&q).unwrap());
        for name in a.names() {
            prop_assert_eq!(a.get(name), b.get(name));
        }
    }

    #[test]
    fn set_sources_evaluate_like_their_renderings(src in set_source(3)) {
        let full = format!("universe Z = integers\nset E = periodic(p=2, residues={{0}})\nset S = {src}\n");
        let env = elaborate(&parse(&full).unwrap()).unwrap();
        let Some(Value::Set(s)) = env.get("S") else { panic!() };
        let again = format!("universe Z = integers\nset S = {s}\n");
        let env2 = elaborate(&parse(&again).unwrap()).unwrap();
        prop_assert_eq!(env2.get("S"), Some(&Value::Set(s.clone())));
        prop_assert_eq!(s.universe(), Universe::integers());
    }
}
