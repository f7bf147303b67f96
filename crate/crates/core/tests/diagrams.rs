use proptest::prelude::*;
use skein_core::diagrams::{
    braid_closure, braid_jones, partial_closure, wrap_braid, wrap_closure, BraidWord,
    OrientedLinkWord,
};
use skein_core::tl::{bracket_reduced, eval_word};
use skein_core::LaurentPoly;

fn braid() -> impl Strategy<Value = BraidWord> {
    (2usize..5).prop_flat_map(|n| {
        let k = n as i32 - 1;
        prop::collection::vec((1..=k, any::<bool>()), 0..10).prop_map(move |v| {
            BraidWord::new(
                n,
                v.into_iter().map(|(l, s)| if s { l } else { -l }).collect(),
            )
            .unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jones_is_a_markov_invariant(b in braid(), k in 0usize..10, sign in any::<bool>()) {
        let j = braid_jones(&b).unwrap();
        prop_assert_eq!(braid_jones(&b.rotate(k)).unwrap(), j.clone());
        prop_assert_eq!(braid_jones(&b.stabilize(sign)).unwrap(), j);
    }

    #[test]
    fn first_move_scales_by_a_cubed(b in braid(), sign in any::<bool>()) {
        let before = eval_word(&braid_closure(&b)).unwrap();
        let after = eval_word(&braid_closure(&b.stabilize(sign))).unwrap();
        let kink = LaurentPoly::monomial(-1, if sign { 3 } else { -3 });
        prop_assert_eq!(after, &before * &kink);
    }

    #[test]
    fn mirror_inverts_a(b in braid()) {
        prop_assert_eq!(braid_jones(&b.mirror()).unwrap(), braid_jones(&b).unwrap().mirror());
    }

    #[test]
    fn wraps_close_to_the_wrap_braid(b in braid(), k in 0usize..3, sign in any::<bool>()) {
        let g = partial_closure(&b).unwrap();
        let direct = bracket_reduced(&wrap_closure(&g, k, sign)).unwrap();
        let via = bracket_reduced(&braid_closure(&wrap_braid(&g, k, sign))).unwrap();
        prop_assert_eq!(direct, via);
    }
}

#[test]
fn wrap_links_the_open_strand_with_every_closing_arc() {
    for n in 2..6 {
        let g = partial_closure(&BraidWord::identity(n)).unwrap();
        for (k, positive) in [(1, true), (2, true), (1, false), (3, false)] {
            let l = OrientedLinkWord::new(wrap_closure(&g, k, positive)).unwrap();
            assert_eq!(l.components(), n);
            let arc = l.component_at(1, 0);
            let want = if positive { k as i64 } else { -(k as i64) };
            for other in (0..n).filter(|&c| c != arc) {
                assert_eq!(l.linking_number(arc, other), want, "n = {n}, k = {k}");
            }
        }
    }
}

#[test]
fn trefoil_jones_in_t() {
    // Positive crossings give the right-handed trefoil, V = t + t^3 - t^4
    // with t = A^-4.
    let j = braid_jones(&"2: 1,1,1".parse().unwrap()).unwrap();
    assert_eq!(j, "-1*A^-16 + 1*A^-12 + 1*A^-4".parse().unwrap());
}
