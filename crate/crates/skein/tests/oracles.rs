//! Colored-network closed forms against Temperley-Lieb expansion, and the
//! solid-torus pairings against link brackets.

use proptest::prelude::*;
use skein::checks;
use skein::oracles;
use skein_core::recoupling::{self, admissible};
use skein_core::tl::jw;
use skein_core::LaurentFraction;

#[test]
fn jones_wenzl_through_four() {
    checks::jw_suite(4).unwrap();
}

#[test]
fn loop_removal_through_three() {
    checks::ring_suite(3).unwrap();
}

#[test]
fn basis_pairings_through_two() {
    checks::pairing_suite(&recoupling::lambda_coeff(1, 1, 0).unwrap(), 2).unwrap();
}

#[test]
fn catalan_counts() {
    checks::catalan_suite().unwrap();
}

#[test]
fn partial_closure_ideals_on_random_tangles() {
    checks::partial_closure_suite(25, 3).unwrap();
}

#[test]
fn groebner_round_trips() {
    checks::gb_suite(1).unwrap();
}

#[test]
fn recoupling_through_two() {
    checks::recoupling_suite(2).unwrap();
}

#[test]
fn theta_is_symmetric_in_the_oracle() {
    for (a, b, c) in [(1, 1, 2), (2, 1, 1), (3, 2, 1)] {
        assert_eq!(
            oracles::theta(a, b, c).unwrap(),
            oracles::theta(b, c, a).unwrap()
        );
    }
}

#[test]
fn inadmissible_vertex_rejected() {
    assert!(oracles::vertex(1, 1, 1).is_err());
    assert!(oracles::vertex(1, 0, 2).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bubble_matches_closed_form(a in 0u32..4, b in 0u32..4, c in 0u32..4) {
        prop_assume!(admissible(a, b, c));
        let x = oracles::bubble(a, b, c, c).unwrap();
        let s = recoupling::theta(a, b, c).unwrap().div(&oracles::loop_value(c)).unwrap();
        prop_assert_eq!(x, jw(c as usize).scale(&s));
    }

    #[test]
    fn twist_matches_lambda(a in 0u32..4, b in 0u32..4, c in 0u32..4) {
        prop_assume!(admissible(a, b, c));
        let l = LaurentFraction::from(recoupling::lambda_coeff(a, b, c).unwrap());
        prop_assert_eq!(oracles::twist_ratio(a, b, c).unwrap(), Some(l));
    }
}
