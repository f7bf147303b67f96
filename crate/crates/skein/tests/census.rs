use skein::census::{bundled_census, bundled_entry, parse_census, run_search, CensusError};
use skein_core::diagrams::{braid_jones, partial_closure, BraidWord};
use skein_core::genus1::generators;
use skein_core::ideal::LaurentIdeal;
use skein_core::search::{closure_braids, search};

#[test]
fn bundled_census_validates_against_jones_column() {
    let c = bundled_census();
    assert_eq!(c.len(), 175);
    assert!(c.iter().all(|e| e.expected_jones.is_some()));
    assert_eq!(c.iter().filter(|e| e.strands() == 3).count(), 58);
    assert_eq!(c.iter().filter(|e| e.strands() == 4).count(), 117);
}

#[test]
fn corrupted_jones_column_is_rejected() {
    let line = skein::census::BUNDLED
        .lines()
        .find(|l| l.starts_with("10_57,"))
        .unwrap();
    let bad = line.replacen("-1*A^-32", "-2*A^-32", 1);
    assert!(matches!(
        parse_census(&bad),
        Err(CensusError::JonesMismatch { line: 1, .. })
    ));
}

#[test]
fn ten_57_is_flagged_with_witness() {
    let r = search(&bundled_entry("10_57").unwrap()).unwrap();
    assert!(r.nontrivial);
    assert_eq!(r.polys.len(), 11);
    assert!(r.witness.is_some());
    for p in &r.polys {
        assert!(p.min_exp().unwrap() >= 0);
    }
}

#[test]
fn search_is_deterministic_across_thread_counts() {
    let some: Vec<_> = bundled_census()
        .into_iter()
        .filter(|e| e.name.starts_with("10_1"))
        .collect();
    let a = run_search(&some);
    std::env::set_var("SKEIN_THREADS", "1");
    let b = run_search(&some);
    std::env::remove_var("SKEIN_THREADS");
    let view = |v: &[(String, skein_core::Result<skein_core::search::SearchReport>)]| {
        v.iter()
            .map(|(n, r)| (n.clone(), r.clone().unwrap()))
            .collect::<Vec<_>>()
    };
    assert_eq!(view(&a), view(&b));
    let names: Vec<_> = a.iter().map(|(n, _)| n.as_str()).collect();
    let mut sorted = names.clone();
    sorted.sort_by_key(|n| {
        n.split('_')
            .map(|x| x.parse::<u32>().unwrap())
            .collect::<Vec<_>>()
    });
    assert_eq!(names, sorted);
}

/// Conjugating by a braid on strands 2..n slides it around the closing arcs,
/// so the genus-1 tangle and all eleven closures are unchanged.
#[test]
fn screen_survives_conjugation_away_from_the_open_strand() {
    for name in ["10_57", "10_117", "9_40", "8_18", "7_7"] {
        let e = bundled_entry(name).unwrap();
        let base = search(&e).unwrap();
        let n = e.strands() as i32;
        for c in [vec![2], vec![-2, n - 1], vec![n - 1, n - 1, 2]] {
            let c = BraidWord::new(e.strands(), c).unwrap();
            let mut conj = e.clone();
            conj.braid = c.then(&e.braid).unwrap().then(&c.inverse()).unwrap();
            let r = search(&conj).unwrap();
            assert_eq!(r.polys, base.polys, "{name} conjugated by {c}");
            assert_eq!(r.nontrivial, base.nontrivial);
        }
    }
}

#[test]
fn screen_ideal_lies_in_full_ideal() {
    for name in ["8_19", "9_42", "10_57", "10_162"] {
        let e = bundled_entry(name).unwrap();
        let full = LaurentIdeal::new(
            &generators(&partial_closure(&e.braid).unwrap())
                .unwrap()
                .nonzero(),
        )
        .unwrap();
        for b in closure_braids(&e.braid).unwrap() {
            assert!(full.contains(&braid_jones(&b).unwrap()), "{name}");
        }
    }
}
