use genotop::diagram::{plat_closure, Closure};
use genotop::invariants::identify;
use genotop::recombination::{
    bmw_plat_equivalence, bmw_random_trials, case_library, cre_search, parity_report, processive_series, product,
    system, Family, MarkStatus, RecombinationSystem,
};
use genotop::{Error, GenWord, Generator};

fn w(text: &str, n: usize) -> GenWord {
    GenWord::braid(text, n).unwrap()
}

fn labels(sys: &RecombinationSystem, rounds: usize) -> Vec<String> {
    processive_series(sys, rounds).unwrap().into_iter().map(|r| r.name).collect()
}

#[test]
fn tn3_series() {
    let tn3 = system("tn3").unwrap();
    let series = processive_series(&tn3, 4).unwrap();
    let names: Vec<&str> = series.iter().map(|r| r.name.as_str()).collect();
    assert_eq!(&names[..3], &["hopf", "4_1", "whitehead"]);
    assert_eq!(series[3].crossings, Some(6));
    assert_eq!(series[3].components, 1);
    // table name within crossing number 6, frozen from the lookup
    assert_eq!(names[3], "6_2");
    assert_eq!(series.iter().map(|r| r.components).collect::<Vec<_>>(), vec![2, 1, 2, 1]);
    assert!(series.iter().enumerate().all(|(i, r)| r.round == i + 1));
}

#[test]
fn tn3_alt_substrate_gives_same_series() {
    assert_eq!(labels(&system("tn3").unwrap(), 4), labels(&system("tn3-alt").unwrap(), 4));
}

#[test]
fn gin_early_rounds() {
    let gin = system("gin").unwrap();
    assert_eq!(product(&gin, 0).unwrap().name, "unknot");
    assert_eq!(product(&gin, 1).unwrap().name, "unknot");
    assert_eq!(product(&gin, 1).unwrap().status, MarkStatus::Inverted);
    let third = product(&gin, 2).unwrap();
    assert_eq!(third.name.trim_end_matches('*'), "3_1");
    assert_eq!(third.status, MarkStatus::Restored);
}

#[test]
fn gin_later_rounds_have_five_and_six_crossings() {
    let gin = system("gin").unwrap();
    let c3 = product(&gin, 3).unwrap();
    let c4 = product(&gin, 4).unwrap();
    assert_eq!((c3.crossings, c4.crossings), (Some(5), Some(6)), "identified as {} and {}", c3.name, c4.name);
}

#[test]
fn processivity_is_prefix_iteration() {
    for sys in case_library() {
        let mut prev = sys.substrate.clone();
        for i in 1..=3 {
            let next = sys.round_word(i).unwrap();
            assert_eq!(next, prev.prefixed(sys.prefix).unwrap(), "{} round {i}", sys.name);
            prev = next;
        }
    }
}

#[test]
fn series_invariant_under_free_reduction() {
    let x = system("xercd").unwrap();
    let reduced = RecombinationSystem::new("xercd-reduced", x.substrate.free_reduce(), x.prefix, false).unwrap();
    assert_eq!(labels(&x, 2), labels(&reduced, 2));
}

#[test]
fn xercd_examples() {
    let x = system("xercd").unwrap();
    assert_eq!(x.substrate.free_reduce().to_string(), "s2^2 s3 s2 s4^-1");
    assert_eq!(x.prefix, Generator::e(4));
    let v = bmw_plat_equivalence(&x.substrate, 4).unwrap();
    assert!(v.agree, "{:?}", v.disagreements);
    let braid_form = x.substrate.prefixed(Generator::sigma_inv(5)).unwrap().prefixed(Generator::sigma_inv(4)).unwrap();
    assert_eq!(braid_form.to_string(), "s4^-1 s5^-1 s2^3 s2^-1 s4^-1 s4 s3 s2 s4^-1");
    let a = identify(&x.round_word(1).unwrap(), Closure::Plat).unwrap();
    let b = identify(&braid_form, Closure::Plat).unwrap();
    assert_eq!((a.components, &a.keys), (b.components, &b.keys));
}

#[test]
fn bmw_examples() {
    let v = bmw_plat_equivalence(&GenWord::empty(4), 2).unwrap();
    assert!(v.agree);
    // the top arcs and the turn-back join into a single loop
    assert_eq!(v.components, [1, 1, 1]);
    assert!(matches!(bmw_plat_equivalence(&GenWord::empty(4), 1), Err(Error::InvalidArgument(_))));
    assert!(matches!(bmw_plat_equivalence(&GenWord::empty(4), 4), Err(Error::IndexOutOfRange { .. })));
    let trials = bmw_random_trials(2024, 40, 6).unwrap();
    assert_eq!(trials.len(), 80);
    assert!(trials.iter().all(|v| v.agree), "{:?}", trials.iter().find(|v| !v.agree));
}

#[test]
fn parity_examples() {
    let rows = parity_report(1, 2).unwrap();
    let even = rows.iter().find(|r| r.family == Family::EvenCrossings && r.i == 1).unwrap();
    assert_eq!(even.components, 2);
    let odd = rows.iter().find(|r| r.family == Family::OddCrossings && r.i == 2).unwrap();
    assert_eq!(odd.status, MarkStatus::Restored);
    for k in 1..=3 {
        let rows = parity_report(k, 6).unwrap();
        assert_eq!(rows.len(), 12);
        assert!(rows.iter().all(|r| r.holds), "k = {k}");
    }
}

#[test]
fn cre_fixture_matches_search() {
    let cre = system("cre").unwrap();
    assert_eq!(Some(cre.substrate.clone()), cre_search());
    assert_eq!(identify(&cre.substrate, Closure::Plat).unwrap().name.as_deref(), Some("unknot"));
    let p = product(&cre, 1).unwrap();
    assert_eq!(p.name.trim_end_matches('*'), "3_1");
    assert_eq!(p.status, MarkStatus::Inverted);
}

#[test]
fn system_validation() {
    assert!(matches!(
        RecombinationSystem::new("odd", w("s1", 3), Generator::sigma(1), false),
        Err(Error::OddStrandCount(3))
    ));
    assert!(matches!(
        RecombinationSystem::new("far", w("s1", 4), Generator::sigma(4), false),
        Err(Error::IndexOutOfRange { .. })
    ));
    assert!(system("nope").is_none());
    assert!(processive_series(&system("gin").unwrap(), 0).is_err());
    let names: Vec<String> = case_library().into_iter().map(|s| s.name).collect();
    for n in ["tn3", "tn3-alt", "gin", "xercd", "cre", "odd-1", "even-1", "odd-3", "even-3"] {
        assert!(names.iter().any(|x| x == n), "{n}");
    }
}

#[test]
fn report_json_shape() {
    let r = product(&system("tn3").unwrap(), 1).unwrap();
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    assert_eq!(v["round"], 1);
    assert_eq!(v["name"], "hopf");
    assert_eq!(v["components"], 2);
    assert_eq!(v["status"], "separated");
    assert_eq!(v["word"], "s2 s1 s3 s2^-1");
    assert_eq!(v["keys"].as_array().unwrap().len(), 2);
    assert!(plat_closure(&system("tn3").unwrap().round_word(1).unwrap()).is_ok());
}
