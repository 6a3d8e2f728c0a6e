use genotop::invariants::{identify, identify_diagram, jones_of_diagram, KnotTable};
use genotop::tangle::{
    numerator_closure, processive_products, solve_processive, two_bridge_classify, RationalTangle, SearchBound,
    TangleSum,
};
use genotop::{diagram::Closure, Error, Fraction, GenWord};
use proptest::prelude::*;

fn t(v: &[i64]) -> RationalTangle {
    RationalTangle::new(v.to_vec()).unwrap()
}

fn frac(text: &str) -> Fraction {
    text.parse().unwrap()
}

fn closed(ts: &[&[i64]]) -> genotop::diagram::PlanarDiagram {
    let sum = TangleSum::new(ts.iter().map(|v| t(v)).collect()).unwrap();
    numerator_closure(&sum).unwrap()
}

fn name_of(ts: &[&[i64]]) -> String {
    identify_diagram(KnotTable::bundled(), &closed(ts)).unwrap().label().to_string()
}

/// `a_k + 1/(a_(k-1) + 1/(... + 1/a_1))` as an unreduced projective pair,
/// evaluated innermost first.
fn oracle_fraction(v: &[i64]) -> (i128, i128) {
    let (mut p, mut q) = (v[0] as i128, 1i128);
    for &a in &v[1..] {
        (p, q) = (a as i128 * p + q, p);
    }
    (p, q)
}

fn same_ratio(f: &Fraction, (p, q): (i128, i128)) -> bool {
    f.numer() as i128 * q == f.denom() as i128 * p && (q == 0) == f.is_infinite()
}

#[test]
fn fraction_examples() {
    assert_eq!(t(&[3]).fraction(), Fraction::integer(3));
    assert_eq!(t(&[2, 3, 2]).fraction(), frac("16/7"));
    assert_eq!(t(&[0]).fraction(), Fraction::integer(0));
    assert_eq!(t(&[-3, 0]).fraction(), frac("-1/3"));
    assert!(t(&[0, 0]).fraction().is_infinite());
    assert_eq!(RationalTangle::infinity().fraction(), Fraction::infinity());
    assert_eq!(frac("4/-6"), frac("-2/3"));
    assert_eq!(frac("16/7").to_string(), "16/7");
    assert_eq!(Fraction::infinity().to_string(), "inf");
    assert!(matches!("0/0".parse::<Fraction>(), Err(Error::Parse(_))));
    assert!(matches!(RationalTangle::new(vec![]), Err(Error::InvalidTangle(_))));
}

#[test]
fn tangle_text_round_trip() {
    let x: RationalTangle = "2,3,2".parse().unwrap();
    assert_eq!(x, t(&[2, 3, 2]));
    assert_eq!(x.to_string(), "2,3,2");
    assert_eq!("(-3, 0)".parse::<RationalTangle>().unwrap(), t(&[-3, 0]));
}

#[test]
fn closure_examples() {
    assert_eq!(name_of(&[&[2]]), "hopf");
    assert_eq!(identify_diagram(KnotTable::bundled(), &closed(&[&[3]])).unwrap().base_name(), Some("3_1"));
    assert_eq!(name_of(&[&[0]]), "unlink2");
    assert_eq!(name_of(&[&[1]]), "unknot");
    assert_eq!(name_of(&[&[0], &[1], &[1], &[1]]), name_of(&[&[3]]));
    assert_eq!(closed(&[&[2, 3, 2]]).crossing_count(), 7);
}

#[test]
fn twist_directions_agree() {
    // a vertical twist followed by a horizontal one is the integer tangle 2
    let a = jones_of_diagram::<i64>(&closed(&[&[1, 1]])).unwrap();
    let b = jones_of_diagram::<i64>(&closed(&[&[2]])).unwrap();
    assert_eq!(a, b);
    assert_eq!(t(&[2, 2]).fraction(), frac("5/2"));
    assert_eq!(name_of(&[&[2, 2]]), "4_1");
}

#[test]
fn infinity_summand_rejected() {
    let s = TangleSum::new(vec![t(&[1]), t(&[0, 0])]).unwrap();
    assert!(matches!(numerator_closure(&s), Err(Error::InfinitySummand { index: 1 })));
    assert!(matches!(TangleSum::new(vec![]), Err(Error::InvalidTangle(_))));
    // a lone infinity tangle closes to a single loop
    let lone = TangleSum::new(vec![RationalTangle::infinity()]).unwrap();
    assert_eq!(numerator_closure(&lone).unwrap().component_count(), 1);
}

#[test]
fn two_bridge_examples() {
    assert_eq!(two_bridge_classify(1, 0).unwrap(), two_bridge_classify(1, 5).unwrap());
    assert_eq!(two_bridge_classify(5, 2).unwrap(), two_bridge_classify(5, 3).unwrap());
    assert_ne!(two_bridge_classify(5, 1).unwrap(), two_bridge_classify(5, 2).unwrap());
    assert!(matches!(two_bridge_classify(6, 4), Err(Error::NotCoprime { p: 6, q: 4 })));
    // the pipeline agrees with the classification
    let five_two = RationalTangle::from_fraction(&frac("5/2"));
    let five_three = RationalTangle::from_fraction(&frac("5/3"));
    let k1 = jones_of_diagram::<i64>(&closed(&[five_two.twists()])).unwrap();
    let k2 = jones_of_diagram::<i64>(&closed(&[five_three.twists()])).unwrap();
    assert_eq!(k1, k2);
    let tref = RationalTangle::from_fraction(&frac("3"));
    let id = identify_diagram(KnotTable::bundled(), &closed(&[tref.twists()])).unwrap();
    assert_eq!(id.base_name(), Some("3_1"));
}

#[test]
fn processive_examples() {
    let p = processive_products(&t(&[0]), &t(&[1]), 3).unwrap();
    let labels: Vec<&str> = p.iter().map(|i| i.label()).collect();
    assert_eq!(labels[0], "unknot");
    assert_eq!(labels[1], "hopf");
    assert_eq!(p[2].base_name(), Some("3_1"));
    assert!(processive_products(&t(&[0]), &t(&[1]), 0).is_err());
}

#[test]
fn solver_finds_unique_tn3_substrate() {
    let observed = ["hopf", "fig8", "whitehead", "knot6"];
    let bound = SearchBound { max_len: 3, max_entry: 5 };
    let found = solve_processive(&observed, &t(&[1]), bound).unwrap();
    assert_eq!(found.len(), 1, "{found:?}");
    // frozen from the search itself
    assert_eq!(found[0].fraction(), frac("-1/3"));
    let tangle_route = processive_products(&found[0], &t(&[1]), 4).unwrap();
    let tn3 = GenWord::braid("s1 s3 s2^-1", 4).unwrap();
    for (i, id) in tangle_route.iter().enumerate() {
        let w = tn3.prefixed_power(genotop::Generator::sigma(2), i + 1).unwrap();
        assert_eq!(identify(&w, Closure::Plat).unwrap().label(), id.label(), "round {}", i + 1);
    }
}

#[test]
fn solver_small_cases() {
    let found = solve_processive(&["unknot"], &t(&[1]), SearchBound { max_len: 2, max_entry: 2 }).unwrap();
    assert!(found.iter().any(|o| o.fraction() == Fraction::integer(0)));
    // N(-3) then N(-2): twisting back toward the unknot
    let down = solve_processive(&["trefoil", "hopf"], &t(&[1]), SearchBound { max_len: 2, max_entry: 3 }).unwrap();
    assert_eq!(down.iter().map(|o| o.fraction()).collect::<Vec<_>>(), vec![Fraction::integer(-4)]);
    // consecutive numerators 2 and 2 would need an even denominator
    let none = solve_processive(&["hopf", "hopf"], &t(&[1]), SearchBound { max_len: 3, max_entry: 4 }).unwrap();
    assert!(none.is_empty());
    assert!(solve_processive::<&str>(&[], &t(&[1]), SearchBound::default()).is_err());
    assert_eq!(SearchBound::default(), SearchBound { max_len: 4, max_entry: 6 });
}

fn small_tangle() -> impl Strategy<Value = RationalTangle> {
    prop::collection::vec(-3i64..=3, 1..=3).prop_map(|v| RationalTangle::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fraction_matches_oracle(v in prop::collection::vec(-6i64..=6, 1..=5)) {
        let f = t(&v).fraction();
        prop_assert!(same_ratio(&f, oracle_fraction(&v)), "{v:?} -> {f}");
    }

    #[test]
    fn from_fraction_round_trips(v in prop::collection::vec(-6i64..=6, 1..=5)) {
        let f = t(&v).fraction();
        prop_assert_eq!(RationalTangle::from_fraction(&f).fraction(), f);
    }

    #[test]
    fn two_bridge_normal_form(p in 2i64..60, q in 1i64..60) {
        prop_assume!(num_integer::gcd(p, q) == 1);
        let c = two_bridge_classify(p, q).unwrap();
        prop_assert_eq!(c, two_bridge_classify(p, q % p).unwrap());
        let inv = (1..p).find(|x| (x * q) % p == 1).unwrap();
        prop_assert_eq!(c, two_bridge_classify(p, inv).unwrap());
    }

    #[test]
    fn conway_criterion_sampled(a in small_tangle(), b in small_tangle()) {
        let (fa, fb) = (a.fraction(), b.fraction());
        prop_assume!(!fa.is_infinite() && !fb.is_infinite());
        let shifts = [1i64, 2, 3];
        let keys = |x: &RationalTangle| -> Vec<_> {
            shifts.iter().map(|&k| jones_of_diagram::<i64>(&closed(&[x.twists(), &[k]])).unwrap()).collect()
        };
        prop_assert_eq!(fa == fb, keys(&a) == keys(&b), "{} vs {}", fa, fb);
    }

    #[test]
    fn products_stable_under_equal_fraction(v in prop::collection::vec(-3i64..=3, 1..=3)) {
        let o = t(&v);
        prop_assume!(!o.fraction().is_infinite());
        let o2 = RationalTangle::from_fraction(&o.fraction());
        let a = processive_products(&o, &t(&[1]), 2).unwrap();
        let b = processive_products(&o2, &t(&[1]), 2).unwrap();
        prop_assert_eq!(a, b);
    }
}
