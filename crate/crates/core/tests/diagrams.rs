use genotop::diagram::{
    plat_closure, read_marked_sequence, render_diagram, render_word, trace_closure, ArcDirection, ClosureArc,
    MarkedDiagram, PlanarDiagram,
};
use genotop::{Error, GenKind, GenWord, Generator};
use proptest::prelude::*;

fn w(text: &str, n: usize) -> GenWord {
    GenWord::braid(text, n).unwrap()
}

/// Plat component count from the Brauer pairing alone: strands are tracked
/// as segment ids, crossings swap them and turn-backs join them.
fn brauer_plat_components(word: &GenWord) -> usize {
    let n = word.strands();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    fn join(p: &mut [usize], a: usize, b: usize) {
        let (ra, rb) = (find(p, a), find(p, b));
        if ra != rb {
            p[ra] = rb;
        }
    }
    let mut seg: Vec<usize> = (0..n).collect();
    for j in 0..n / 2 {
        join(&mut parent, 2 * j, 2 * j + 1);
    }
    for g in word.letters() {
        let p = g.index - 1;
        match g.kind {
            GenKind::E => {
                join(&mut parent, seg[p], seg[p + 1]);
                let a = parent.len();
                parent.push(a);
                parent.push(a);
                seg[p] = a;
                seg[p + 1] = a + 1;
            }
            _ => seg.swap(p, p + 1),
        }
    }
    for j in 0..n / 2 {
        join(&mut parent, seg[2 * j], seg[2 * j + 1]);
    }
    let roots: std::collections::BTreeSet<usize> = (0..parent.len()).map(|x| find(&mut parent, x)).collect();
    roots.len()
}

#[test]
fn plat_examples() {
    let d = plat_closure(&GenWord::empty(4)).unwrap();
    assert_eq!(d.component_count(), 2);
    assert_eq!(d.free_loop_count(), 2);

    let tn3 = plat_closure(&w("s2 s1 s3 s2^-1", 4)).unwrap();
    assert_eq!(tn3.crossing_count(), 4);
    assert_eq!(tn3.component_count(), 2);

    let e2 = plat_closure(&w("e2", 4)).unwrap();
    assert_eq!(e2.component_count(), 1);
    assert_eq!(e2.smoother_count(), 1);
    assert_eq!(brauer_plat_components(&w("e2", 4)), 1);
}

#[test]
fn plat_errors() {
    assert_eq!(plat_closure(&w("s1", 3)), Err(Error::OddStrandCount(3)));
    let aff = GenWord::parse("x1", 2, true).unwrap();
    assert_eq!(plat_closure(&aff), Err(Error::AffineClosure));
    assert_eq!(trace_closure(&aff), Err(Error::AffineClosure));
}

#[test]
fn trace_examples() {
    assert_eq!(trace_closure(&GenWord::empty(3)).unwrap().component_count(), 3);
    let kink = trace_closure(&w("s1", 2)).unwrap();
    assert_eq!((kink.component_count(), kink.crossing_count()), (1, 1));
    assert_eq!(kink.writhe(), 1);
    let tref = trace_closure(&w("s1^3", 2)).unwrap();
    assert_eq!((tref.component_count(), tref.crossing_count()), (1, 3));
    assert_eq!(tref.writhe(), 3);
    assert_eq!(trace_closure(&w("s1^-3", 2)).unwrap().writhe(), -3);
}

#[test]
fn hopf_orientation_classes() {
    let hopf = trace_closure(&w("s1^2", 2)).unwrap();
    let mut writhes = hopf.orientation_writhes();
    writhes.sort();
    assert_eq!(writhes, vec![-2, 2]);
}

#[test]
fn component_parity_families() {
    assert_eq!(plat_closure(&w("s2 s1^2 s2^-1", 4)).unwrap().component_count(), 2);
    assert_eq!(plat_closure(&w("s2^2 s1^2 s2^-1", 4)).unwrap().component_count(), 1);
    for k in 1..=3 {
        for i in 0..=6usize {
            let text = format!("s2^{i} s1^{} s2^-1", 2 * k);
            let c = plat_closure(&w(&text, 4)).unwrap().component_count();
            assert_eq!(c, if i % 2 == 1 { 2 } else { 1 }, "{text}");
        }
    }
}

#[test]
fn marked_identity_plat_reads_equal_signs() {
    let mut m = MarkedDiagram::new(plat_closure(&GenWord::empty(4)).unwrap());
    m.mark_arc(ClosureArc::Bottom(1), ArcDirection::RightToLeft, "L").unwrap();
    m.mark_arc(ClosureArc::Top(1), ArcDirection::LeftToRight, "U").unwrap();
    let seqs = read_marked_sequence(&m);
    assert_eq!(seqs.len(), 2);
    let marked: Vec<_> = seqs.iter().filter(|s| !s.is_empty()).collect();
    assert_eq!(marked.len(), 1);
    let s = marked[0];
    assert_eq!(s.len(), 2);
    assert_eq!(s[0].1, s[1].1);
    let labels: Vec<&str> = s.iter().map(|(l, _)| l.as_str()).collect();
    assert_eq!(labels, vec!["L", "U"]);
}

#[test]
fn marks_reject_duplicates() {
    let mut m = MarkedDiagram::new(plat_closure(&GenWord::empty(4)).unwrap());
    m.mark_arc(ClosureArc::Bottom(1), ArcDirection::LeftToRight, "L").unwrap();
    assert!(m.mark_arc(ClosureArc::Bottom(2), ArcDirection::LeftToRight, "L").is_err());
    assert!(m.mark_arc(ClosureArc::Bottom(1), ArcDirection::LeftToRight, "M").is_err());
    assert!(m.mark_arc(ClosureArc::Trace(1), ArcDirection::LeftToRight, "M").is_err());
}

/// Relative sign of the two bottom-cup labels after `prefix^i`, with the
/// marks oriented along the substrate's own traversal.
fn gin_relative_sign(substrate: &GenWord, i: usize) -> Option<i8> {
    let base = MarkedDiagram::new(plat_closure(substrate).unwrap());
    let d1 = base.traversal_direction(ClosureArc::Bottom(1)).unwrap();
    let d2 = base.traversal_direction(ClosureArc::Bottom(2)).unwrap();
    let product = substrate.prefixed_power(Generator::sigma(2), i).unwrap();
    let mut m = MarkedDiagram::new(plat_closure(&product).unwrap());
    m.mark_arc(ClosureArc::Bottom(1), d1, "L").unwrap();
    m.mark_arc(ClosureArc::Bottom(2), d2, "U").unwrap();
    let seqs = m.read_sequences();
    let both = seqs.iter().find(|s| s.len() == 2)?;
    Some(both[0].1 * both[1].1)
}

#[test]
fn gin_marked_segments_flip_with_odd_twists() {
    let gin = w("s1 s2^-1", 4);
    assert_eq!(gin_relative_sign(&gin, 0), Some(1));
    assert_eq!(gin_relative_sign(&gin, 1), Some(-1));
    assert_eq!(gin_relative_sign(&gin, 2), Some(1));
    for k in 1..=3 {
        let sub = w(&format!("s1^{} s2^-1", 2 * k - 1), 4);
        for i in 1..=6 {
            let expect = if i % 2 == 1 { -1 } else { 1 };
            assert_eq!(gin_relative_sign(&sub, i), Some(expect), "k={k} i={i}");
        }
    }
}

#[test]
fn pd_export_shape() {
    let d = trace_closure(&w("s1", 2)).unwrap();
    let pd = d.to_pd_json();
    assert_eq!(pd, r#"{"crossings":[[1,2,2,1,"over_first"]],"smoothers":[],"loops":0}"#);
    let back = PlanarDiagram::from_pd_json(&pd).unwrap();
    assert_eq!(back.component_count(), 1);
    assert_eq!(back.writhe().abs(), 1);
}

#[test]
fn svg_examples() {
    let two = render_word(&GenWord::empty(2));
    assert_eq!(two.matches("<line").count(), 2);
    let one = render_word(&w("s1", 2));
    // two stubs above, over strand plus two under stubs, two stubs below
    assert_eq!(one.matches("<line").count(), 7);
    let fig = plat_closure(&w("s2 s1 s3 s2^-1", 4)).unwrap();
    let svg = render_diagram(&fig, None);
    assert_eq!(svg.matches("<line").count(), 3 * 4);
    assert_eq!(svg, render_diagram(&fig, None));
    assert!(svg.starts_with("<svg"));
}

#[test]
fn svg_labels_marks() {
    let mut m = MarkedDiagram::new(plat_closure(&w("s1 s2^-1", 4)).unwrap());
    m.mark_arc(ClosureArc::Bottom(1), ArcDirection::LeftToRight, "gixL").unwrap();
    let svg = render_diagram(&m.diagram, Some(&m.marks));
    assert!(svg.contains(">gixL+</text>"));
    let imported = PlanarDiagram::from_pd_json(&m.diagram.to_pd_json()).unwrap();
    let schematic = render_diagram(&imported, None);
    assert_eq!(schematic, render_diagram(&imported, None));
    assert_eq!(schematic.matches("<line").count(), 3 * 2);
}

fn arb_word(max_n: usize) -> impl Strategy<Value = GenWord> {
    (1usize..=max_n / 2).prop_flat_map(|half| {
        let n = 2 * half;
        prop::collection::vec((0u8..3, 1..n.max(2)), 0..12).prop_map(move |ls| {
            let letters = ls
                .into_iter()
                .filter(|(_, i)| *i < n)
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

proptest! {
    #[test]
    fn plat_components_follow_brauer_pairing(x in arb_word(6), flips in prop::collection::vec(any::<bool>(), 12)) {
        let expected = brauer_plat_components(&x);
        prop_assert_eq!(plat_closure(&x).unwrap().component_count(), expected);
        let mut y = x.clone();
        for (pos, flip) in flips.iter().enumerate().take(x.len()) {
            if *flip && x.letters()[pos].is_crossing() {
                y = y.edit_crossing(pos + 1, genotop::CrossingEdit::Swap).unwrap();
            }
        }
        prop_assert_eq!(plat_closure(&y).unwrap().component_count(), expected);
    }

    #[test]
    fn trace_components_are_permutation_cycles(x in arb_word(6)) {
        let braid = GenWord::new(
            x.strands(),
            false,
            x.letters().iter().copied().filter(Generator::is_crossing).collect(),
        ).unwrap();
        let cycles = braid.underlying_permutation().unwrap().cycles().len();
        prop_assert_eq!(trace_closure(&braid).unwrap().component_count(), cycles);
    }

    #[test]
    fn traversal_visits_each_edge_once(x in arb_word(6)) {
        let d = plat_closure(&x).unwrap();
        let mut seen = vec![0; d.edge_count()];
        for comp in d.components() {
            for (e, _) in comp {
                seen[e] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
    }

    #[test]
    fn pd_round_trip(x in arb_word(6)) {
        let d = plat_closure(&x).unwrap();
        let pd = d.to_pd_json();
        let back = PlanarDiagram::from_pd_json(&pd).unwrap();
        prop_assert_eq!(back.to_pd_json(), pd);
        prop_assert_eq!(back.component_count(), d.component_count());
    }
}
