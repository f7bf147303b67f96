use proptest::prelude::*;
use skein_core::{LaurentFraction, LaurentPoly};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-12i64..12, -20i64..20), 0..8).prop_map(LaurentPoly::from_terms)
}

fn nonzero() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
    }

    #[test]
    fn reduction_mod_p_is_a_homomorphism(a in poly(), b in poly(), x in 1i64..13) {
        let p = 13;
        let (ea, eb) = (a.eval_mod(x, p).unwrap(), b.eval_mod(x, p).unwrap());
        prop_assert_eq!((&a * &b).eval_mod(x, p).unwrap(), ea * eb % p);
        prop_assert_eq!((&a + &b).eval_mod(x, p).unwrap(), (ea + eb) % p);
    }

    #[test]
    fn exact_division_round_trips(a in poly(), b in nonzero()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn text_round_trips(a in poly()) {
        prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
    }

    #[test]
    fn bar_involution(a in poly(), b in poly()) {
        prop_assert_eq!(a.mirror().mirror(), a.clone());
        prop_assert_eq!((&a * &b).mirror(), &a.mirror() * &b.mirror());
    }

    #[test]
    fn fractions_form_a_field(a in nonzero(), b in nonzero(), c in poly()) {
        let x = LaurentFraction::new(c.clone(), a.clone()).unwrap();
        let y = LaurentFraction::new(a.clone(), b.clone()).unwrap();
        prop_assert_eq!(&(&x * &y) * &y.inv().unwrap(), x.clone());
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        let same = LaurentFraction::new(&c * &b, &a * &b).unwrap();
        prop_assert_eq!(same, x);
    }
}

#[test]
fn non_multiple_is_rejected() {
    let a: LaurentPoly = "1*A^0 + 1*A^1".parse().unwrap();
    let b: LaurentPoly = "1*A^0 + 1*A^2".parse().unwrap();
    assert!(a.div_exact(&b).is_err());
    assert!(LaurentFraction::new(a, LaurentPoly::zero()).is_err());
}
