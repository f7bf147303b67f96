use proptest::prelude::*;
use skein_core::ideal::{
    ideal_equal, laurent_trivial, modp_kill_search, normal_form, rescale_all, strong_gb, IntPoly,
    LaurentIdeal,
};
use skein_core::LaurentPoly;

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..5, -6i64..7), 1..5)
        .prop_map(LaurentPoly::from_terms)
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn ints(gens: &[LaurentPoly]) -> Vec<IntPoly> {
    rescale_all(gens)
        .iter()
        .map(|p| IntPoly::from_laurent(p, 1).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn basis_is_stable_and_reduces_its_inputs(gens in prop::collection::vec(poly(), 1..4)) {
        let f = ints(&gens);
        let gb = strong_gb(&f);
        prop_assert_eq!(strong_gb(gb.basis()), gb.clone());
        for g in &f {
            prop_assert!(normal_form(g, &gb).is_zero());
        }
    }

    #[test]
    fn combinations_are_members(gens in prop::collection::vec(poly(), 1..3), hs in prop::collection::vec(poly(), 3)) {
        let ideal = LaurentIdeal::new(&gens).unwrap();
        let combo = gens.iter().zip(&hs).fold(LaurentPoly::zero(), |acc, (g, h)| &acc + &(g * h));
        prop_assert!(ideal.contains(&combo));
    }

    #[test]
    fn units_do_not_change_the_ideal(gens in prop::collection::vec(poly(), 1..3), k in -9i64..9) {
        let shifted: Vec<_> = gens.iter().map(|g| g.shift(k).scale(&(-1).into())).collect();
        prop_assert!(ideal_equal(&gens, &shifted).unwrap());
    }

    #[test]
    fn a_common_root_mod_p_certifies_nontriviality(gens in prop::collection::vec(poly(), 1..3)) {
        let cert = laurent_trivial(&gens).unwrap();
        if !modp_kill_search(&gens, 31).is_empty() {
            prop_assert!(!cert.is_trivial());
        }
        if cert.is_trivial() {
            prop_assert!(LaurentIdeal::new(&gens).unwrap().contains(&LaurentPoly::one()));
        }
    }
}

#[test]
fn eleven_and_a_quartic() {
    let gens = ["11*A^0", "4*A^0 + -1*A^4"].map(|s| s.parse::<LaurentPoly>().unwrap());
    let cert = laurent_trivial(&gens).unwrap();
    assert!(!cert.is_trivial());
    assert_eq!(cert.witness(), Some((11, 3)));
    // A^4 = 4 mod 11 has exactly the roots 3 and 8.
    let roots: Vec<u64> = modp_kill_search(&gens, 11)
        .into_iter()
        .map(|(_, a)| a)
        .collect();
    assert_eq!(roots, [3, 8]);
}

#[test]
fn no_generators_is_an_error() {
    assert!(LaurentIdeal::new(&[LaurentPoly::zero()]).is_err());
}
