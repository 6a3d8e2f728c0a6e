use genotop::{CrossingEdit, Error, GenWord, Generator, Permutation, SignedPermutation};
use proptest::prelude::*;

fn w(text: &str, n: usize) -> GenWord {
    GenWord::braid(text, n).unwrap()
}

/// Follows each strand down the braid and records where it lands.
fn traced_permutation(word: &GenWord) -> Permutation {
    let n = word.strands();
    let mut position_of: Vec<usize> = (1..=n).collect();
    for g in word.letters() {
        for p in position_of.iter_mut() {
            if *p == g.index {
                *p = g.index + 1;
            } else if *p == g.index + 1 {
                *p = g.index;
            }
        }
    }
    let mut images = vec![0; n];
    for (top, &bottom) in position_of.iter().enumerate() {
        images[bottom - 1] = top + 1;
    }
    Permutation::new(images).unwrap()
}

#[test]
fn compose_examples() {
    let gin = w("s1", 3).compose(&w("s2^-1", 3)).unwrap();
    assert_eq!(gin.to_string(), "s1 s2^-1");
    let x = w("s1 s2", 3);
    assert_eq!(x.compose(&GenWord::empty(3)).unwrap(), x);
    assert_eq!(w("s2", 3).compose(&w("s2^-1", 3)).unwrap().len(), 2);
    assert_eq!(w("s1", 3).compose(&w("s1", 4)), Err(Error::StrandMismatch { left: 3, right: 4 }));
    let aff = GenWord::parse("x1", 3, true).unwrap();
    assert_eq!(w("s1", 3).compose(&aff), Err(Error::AffineMismatch));
}

#[test]
fn free_reduce_examples() {
    let x = w("s2^3 s2^-1 s4^-1 s4 s3 s2 s4^-1", 6);
    assert_eq!(x.free_reduce().to_string(), "s2^2 s3 s2 s4^-1");
    assert!(GenWord::empty(3).free_reduce().is_empty());
    assert_eq!(w("s1 s1^-1 s1", 2).free_reduce().to_string(), "s1");
    assert_eq!(w("e1 e1", 2).free_reduce().len(), 2);
    let aff = GenWord::parse("x1 s1 s1^-1 x1^-1", 2, true).unwrap();
    assert!(aff.free_reduce().is_empty());
}

#[test]
fn invert_examples() {
    assert_eq!(w("s1 s2^-1", 3).invert().unwrap().to_string(), "s2 s1^-1");
    assert!(GenWord::empty(3).invert().unwrap().is_empty());
    assert_eq!(w("s1 e2", 3).invert(), Err(Error::NonInvertible(2)));
}

#[test]
fn mirror_examples() {
    assert_eq!(w("s1^3", 2).mirror().to_string(), "s1^-3");
    assert_eq!(w("e2", 3).mirror().to_string(), "e2");
}

#[test]
fn permutation_examples() {
    assert_eq!(GenWord::empty(3).underlying_permutation().unwrap(), Permutation::identity(3));
    assert_eq!(w("s1", 2).underlying_permutation().unwrap().images(), &[2, 1]);
    let p = w("s1 s2", 3).underlying_permutation().unwrap();
    assert_eq!(p.images(), &[2, 3, 1]);
    assert_eq!(p.cycles(), vec![vec![1, 2, 3]]);
    assert_eq!(p, traced_permutation(&w("s1 s2", 3)));
    assert!(w("e1", 3).underlying_permutation().is_err());
}

#[test]
fn type_b_examples() {
    let x = GenWord::parse("x1", 3, true).unwrap().quotient_to_type_b().unwrap();
    assert_eq!(x.images(), &[-1, 2, 3]);
    let ss = GenWord::parse("s1 s1", 3, true).unwrap().quotient_to_type_b().unwrap();
    assert!(ss.is_identity());
    let sxs = GenWord::parse("s1 x1 s1", 3, true).unwrap().quotient_to_type_b().unwrap();
    assert_eq!(sxs, SignedPermutation::new(vec![1, -2, 3]).unwrap());
    assert!(GenWord::parse("e1 x1", 3, true).unwrap().quotient_to_type_b().is_err());
}

#[test]
fn edit_examples() {
    let x = w("s1 s2", 3);
    assert_eq!(x.edit_crossing(1, CrossingEdit::Swap).unwrap().to_string(), "s1^-1 s2");
    assert_eq!(w("s2", 3).edit_crossing(1, CrossingEdit::Smooth).unwrap().to_string(), "e2");
    let twice = x.edit_crossing(2, CrossingEdit::Swap).unwrap().edit_crossing(2, CrossingEdit::Swap).unwrap();
    assert_eq!(twice, x);
}

#[test]
fn affine_sigma_n_rejected() {
    assert!(GenWord::parse("s3", 3, true).is_err());
    assert!(GenWord::new(3, false, vec![Generator::x1()]).is_err());
}

fn arb_word(turnbacks: bool) -> impl Strategy<Value = GenWord> {
    (2usize..7).prop_flat_map(move |n| {
        let kinds = if turnbacks { 0u8..3 } else { 0u8..2 };
        prop::collection::vec((kinds, 1..n), 0..14).prop_map(move |ls| {
            let letters = ls
                .into_iter()
                .map(|(k, i)| match k {
                    0 => Generator::sigma(i),
                    1 => Generator::sigma_inv(i),
                    _ => Generator::e(i),
                })
                .collect();
            GenWord::new(n, false, letters).unwrap()
        })
    })
}

fn arb_pair() -> impl Strategy<Value = (GenWord, GenWord)> {
    (2usize..6).prop_flat_map(|n| {
        let letters = move || {
            prop::collection::vec((any::<bool>(), 1..n), 0..10).prop_map(move |ls| {
                let letters = ls
                    .into_iter()
                    .map(|(pos, i)| if pos { Generator::sigma(i) } else { Generator::sigma_inv(i) })
                    .collect();
                GenWord::new(n, false, letters).unwrap()
            })
        };
        (letters(), letters())
    })
}

proptest! {
    #[test]
    fn free_reduce_idempotent(x in arb_word(true)) {
        let r = x.free_reduce();
        prop_assert_eq!(r.free_reduce(), r);
    }

    #[test]
    fn text_and_json_round_trip(x in arb_word(true)) {
        prop_assert_eq!(GenWord::braid(&x.to_string(), x.strands()).unwrap(), x.clone());
        let j = x.to_json();
        let back = GenWord::from_json(&j).unwrap();
        prop_assert_eq!(back.to_json(), j);
        prop_assert_eq!(back, x);
    }

    #[test]
    fn mirror_is_involution(x in arb_word(true)) {
        prop_assert_eq!(x.mirror().mirror(), x);
    }

    #[test]
    fn inverse_cancels(x in arb_word(false)) {
        let inv = x.invert().unwrap();
        prop_assert!(x.compose(&inv).unwrap().free_reduce().is_empty());
        prop_assert_eq!(inv.underlying_permutation().unwrap(), x.underlying_permutation().unwrap().inverse());
    }

    #[test]
    fn permutation_homomorphism((a, b) in arb_pair()) {
        let ab = a.compose(&b).unwrap();
        let pa = a.underlying_permutation().unwrap();
        let pb = b.underlying_permutation().unwrap();
        prop_assert_eq!(ab.underlying_permutation().unwrap(), pa.compose(&pb));
        prop_assert_eq!(ab.underlying_permutation().unwrap(), traced_permutation(&ab));
    }

    #[test]
    fn invert_anti_homomorphism((a, b) in arb_pair()) {
        let lhs = a.compose(&b).unwrap().invert().unwrap();
        let rhs = b.invert().unwrap().compose(&a.invert().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn type_b_letters_square_to_identity(n in 2usize..7, i in 1usize..6, affine_letter in any::<bool>()) {
        prop_assume!(i < n);
        let text = if affine_letter { "x1 x1".to_string() } else { format!("s{i} s{i}") };
        let sq = GenWord::parse(&text, n, true).unwrap().quotient_to_type_b().unwrap();
        prop_assert!(sq.is_identity());
    }
}
