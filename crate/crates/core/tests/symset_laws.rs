use num_rational::Rational64;
use proptest::prelude::*;
use proxdual::dsl::{self, Value};
use proxdual::{Interval, Point, SymSet, Universe};

fn finite_set() -> impl Strategy<Value = SymSet> {
    (1u32..=8).prop_flat_map(|n| (0u64..(1 << n)).prop_map(move |m| SymSet::from_bits(Universe::Finite(n), m).unwrap()))
}

fn int_universe(inf: bool) -> Universe {
    Universe::Integers { with_infinity: inf }
}

fn periodic_set(inf: bool) -> impl Strategy<Value = SymSet> {
    (
        1u32..=6,
        prop::collection::vec(0u32..6, 0..4),
        prop::collection::vec(-20i64..20, 0..4),
        prop::collection::vec(-20i64..20, 0..4),
        any::<bool>(),
    )
        .prop_map(move |(p, rs, adds, removes, at_inf)| {
            SymSet::periodic(int_universe(inf), p, rs, adds, removes, inf && at_inf).unwrap()
        })
}

fn interval_set() -> impl Strategy<Value = SymSet> {
    let part = (0i64..=12, 0i64..=12, any::<bool>(), any::<bool>()).prop_map(|(a, b, lc, hc)| {
        let (lo, hi) = (a.min(b), a.max(b));
        Interval::new(Rational64::new(lo, 12), lc, Rational64::new(hi, 12), hc)
    });
    prop::collection::vec(part, 0..4).prop_map(SymSet::from_intervals)
}

/// Three sets over one universe.
fn triple() -> impl Strategy<Value = (SymSet, SymSet, SymSet)> {
    prop_oneof![
        (1u32..=8).prop_flat_map(|n| {
            let s = move || (0u64..(1 << n)).prop_map(move |m| SymSet::from_bits(Universe::Finite(n), m).unwrap());
            (s(), s(), s())
        }),
        (periodic_set(false), periodic_set(false), periodic_set(false)),
        (periodic_set(true), periodic_set(true), periodic_set(true)),
        (interval_set(), interval_set(), interval_set()),
    ]
}

fn any_set() -> impl Strategy<Value = SymSet> {
    prop_oneof![finite_set(), periodic_set(false), periodic_set(true), interval_set()]
}

fn probe_points(u: Universe) -> Vec<Point> {
    match u {
        Universe::Finite(n) => (0..n).map(Point::Index).collect(),
        Universe::Integers { with_infinity } => {
            let mut v: Vec<Point> = (-30..30).map(Point::Int).collect();
            if with_infinity {
                v.push(Point::Infinity);
            }
            v
        }
        Universe::UnitInterval => (0..=48).map(|k| Point::rat(k, 48)).collect(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn boolean_algebra_laws((a, b, c) in triple()) {
        let u = a.universe();
        let full = SymSet::full(u);
        let empty = SymSet::empty(u);
        prop_assert_eq!(a.complement().complement(), a.clone());
        prop_assert_eq!(a.union(&a.complement()).unwrap(), full);
        prop_assert_eq!(a.intersect(&a.complement()).unwrap(), empty);
        prop_assert_eq!(a.union(&b).unwrap().complement(), a.complement().intersect(&b.complement()).unwrap());
        prop_assert_eq!(a.intersect(&b).unwrap().complement(), a.complement().union(&b.complement()).unwrap());
        prop_assert_eq!(
            a.intersect(&b.union(&c).unwrap()).unwrap(),
            a.intersect(&b).unwrap().union(&a.intersect(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.union(&b.intersect(&c).unwrap()).unwrap(),
            a.union(&b).unwrap().intersect(&a.union(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.union(&a.intersect(&b).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(a.union(&b).unwrap(), b.union(&a).unwrap());
        prop_assert_eq!(a.difference(&b).unwrap(), a.intersect(&b.complement()).unwrap());
        prop_assert_eq!(a.is_subset(&b).unwrap(), a.union(&b).unwrap() == b);
        prop_assert_eq!(a.is_disjoint(&b).unwrap(), a.intersect(&b).unwrap().is_empty());
    }

    #[test]
    fn operations_agree_with_pointwise_membership((a, b, _c) in triple()) {
        let ab_union = a.union(&b).unwrap();
        let ab_inter = a.intersect(&b).unwrap();
        let ab_diff = a.difference(&b).unwrap();
        let a_comp = a.complement();
        for x in probe_points(a.universe()) {
            let (ia, ib) = (a.contains(&x), b.contains(&x));
            prop_assert_eq!(ab_union.contains(&x), ia || ib);
            prop_assert_eq!(ab_inter.contains(&x), ia && ib);
            prop_assert_eq!(ab_diff.contains(&x), ia && !ib);
            prop_assert_eq!(a_comp.contains(&x), !ia);
        }
    }

    #[test]
    fn canonical_form_is_idempotent(a in any_set()) {
        // Rebuilding through the operations lands on the same structure.
        let u = a.universe();
        prop_assert_eq!(a.union(&SymSet::empty(u)).unwrap(), a.clone());
        prop_assert_eq!(a.intersect(&SymSet::full(u)).unwrap(), a.clone());
        prop_assert_eq!(a.union(&a).unwrap(), a.clone());
        prop_assert_eq!(a.difference(&SymSet::empty(u)).unwrap(), a);
    }

    #[test]
    fn rendered_sets_parse_back(a in any_set()) {
        let u = a.universe();
        let src = format!("universe U = {u}\nset S = {a}\n");
        let program = dsl::parse(&src).unwrap();
        let env = dsl::elaborate(&program).unwrap();
        prop_assert_eq!(env.get("S"), Some(&Value::Set(a)));
    }
}
