//! Perturbed inputs must turn the matching criterion red.

use skein::checks::{self, run_criterion, Inputs};
use skein::expected::{parse_expected, BUNDLED};
use skein_core::LaurentPoly;

#[test]
fn mirrored_kink_breaks_the_pairing_oracle() {
    let good = Inputs::bundled().kink;
    assert!(checks::pairing_suite(&good, 2).is_ok());
    let mirrored = LaurentPoly::monomial(-1, -3);
    assert_ne!(mirrored, good);
    let err = checks::pairing_suite(&mirrored, 2).unwrap_err();
    assert!(err.contains("Y"), "{err}");
}

#[test]
fn corrupted_y0_breaks_generator_values() {
    let text = BUNDLED.replacen("y0 -21 2*A^-21", "y0 -21 3*A^-21", 1);
    assert_ne!(text, BUNDLED);
    let mut inp = Inputs::bundled();
    inp.expected = parse_expected(&text).unwrap();
    let o = run_criterion(3, &inp);
    assert!(!o.passed);
    assert!(o.detail.contains("y0"), "{}", o.detail);
    assert!(run_criterion(3, &Inputs::bundled()).passed);
}

#[test]
fn corrupted_coefficient_breaks_graph_coeffs() {
    let text = BUNDLED.replacen("c 3 4 1*A^3", "c 3 4 1*A^-3", 1);
    let mut inp = Inputs::bundled();
    inp.expected = parse_expected(&text).unwrap();
    assert!(!run_criterion(4, &inp).passed);
}

#[test]
fn different_tangle_breaks_the_headline() {
    let mut inp = Inputs::bundled();
    inp.f_braid = "4: 1,2,-3,2".parse().unwrap();
    assert!(!run_criterion(2, &inp).passed);
}
