//! The acceptance criteria, each a function returning a one-line detail on
//! success or the reason it failed.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use skein_core::diagrams::{braid_closure, braid_jones, partial_closure, BraidWord};
use skein_core::genus1::{self, generators, recover_graph_coeffs, GeneratorSet, Kind};
use skein_core::ideal::{
    ideal_equal, laurent_trivial, normal_form, rescale_all, strong_gb, IntPoly, LaurentIdeal,
};
use skein_core::recoupling::{self, admissible, phi};
use skein_core::search::{closure_braids, CensusEntry};
use skein_core::tangleops::{
    catalan_tangles, partial_closure_ideals_agree, partial_closure_is_connected, BallTangle,
};
use skein_core::tl::{bracket_reduced, eval_word, jw, MorphismWord, Slice, TLElement};
use skein_core::{LaurentFraction, LaurentPoly};

use crate::census::{bundled_census, run_search};
use crate::expected::{bundled_expected, ExpectedF, F_BRAID};
use crate::oracles;

pub type Check = Result<String, String>;

/// Everything the criteria read; swap a field to run a negative control.
#[derive(Clone, Debug)]
pub struct Inputs {
    pub expected: ExpectedF,
    /// Single-strand kink value used to frame arcs in the pairing oracle.
    pub kink: LaurentPoly,
    pub census: Vec<CensusEntry>,
    pub f_braid: BraidWord,
}

impl Inputs {
    pub fn bundled() -> Self {
        Self {
            expected: bundled_expected(),
            kink: recoupling::lambda_coeff(1, 1, 0).expect("admissible"),
            census: bundled_census(),
            f_braid: F_BRAID.parse().expect("valid braid"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn poly(s: &str) -> LaurentPoly {
    s.parse().expect("literal polynomial")
}

fn f_generators(inp: &Inputs) -> Result<GeneratorSet, String> {
    generators(&partial_closure(&inp.f_braid).map_err(err)?).map_err(err)
}

/// Figure-eight and framed trefoil closures of Krebes's tangle.
pub fn krebes() -> Check {
    let f_want = poly("1*A^-8 + -1*A^-4 + 1*A^0 + -1*A^4 + 1*A^8");
    let g_want = poly("1*A^-8 + 1*A^0 + -1*A^4");
    let eight: BraidWord = "3: -1,2,-1,2".parse().map_err(err)?;
    let trefoil: BraidWord = "3: -1,-1,-1,-2".parse().map_err(err)?;
    let f = bracket_reduced(&braid_closure(&eight)).map_err(err)?;
    let g = bracket_reduced(&braid_closure(&trefoil)).map_err(err)?;
    ensure(f == f_want, || format!("figure-eight bracket {f}"))?;
    ensure(g == g_want, || format!("trefoil bracket {g}"))?;
    let cert = laurent_trivial(&[f.clone(), g.clone()]).map_err(err)?;
    ensure(cert.is_trivial(), || "ideal reported nontrivial".into())?;
    let combo = &(&LaurentPoly::monomial(1, -4) * &f) + &(&poly("1*A^0 + -1*A^-4") * &g);
    ensure(combo.is_one(), || {
        format!("A^-4 f + (1 - A^-4) g = {combo}")
    })?;
    Ok("f, g match; ideal trivial; A^-4 f + (1 - A^-4) g = 1".into())
}

/// The full ideal of the 10_57 tangle is (11, 4 - A^4) and dies at A = 3 mod 11.
pub fn headline(inp: &Inputs) -> Check {
    let gens = rescale_all(&f_generators(inp)?.nonzero());
    let target = [LaurentPoly::constant(11), poly("4*A^0 + -1*A^4")];
    ensure(ideal_equal(&gens, &target).map_err(err)?, || {
        "ideal differs from (11, 4 - A^4)".into()
    })?;
    let cert = laurent_trivial(&gens).map_err(err)?;
    ensure(!cert.is_trivial(), || "ideal reported trivial".into())?;
    ensure(cert.witness() == Some((11, 3)), || {
        format!("witness {:?}", cert.witness())
    })?;
    Ok(format!(
        "{} generators; ideal (11, 4 - A^4); witness (11, 3)",
        gens.len()
    ))
}

/// Generators of the 10_57 tangle against the reference values.
pub fn generator_values(inp: &Inputs) -> Check {
    let g = f_generators(inp)?;
    ensure(g.m == 3, || format!("meridian width {}", g.m))?;
    let gap = &phi(3) - &phi(2);
    ensure(g.gen_x[3] == &gap * &g.gen_x[2], || {
        "x3 is not (phi3 - phi2) x2".into()
    })?;
    ensure(g.gen_y[3] == &gap * &g.gen_y[2], || {
        "y3 is not (phi3 - phi2) y2".into()
    })?;
    for (j, kind) in (0..4).flat_map(|j| [(j, 'x'), (j, 'y')]) {
        let label = format!("{kind}{j}");
        let want = inp
            .expected
            .generator(&label)
            .ok_or_else(|| format!("no reference for {label}"))?;
        let got = if kind == 'x' {
            &g.gen_x[j]
        } else {
            &g.gen_y[j]
        };
        ensure(*got == want.value, || format!("{label} = {got}"))?;
        ensure(got.min_exp() == Some(want.power), || {
            format!("{label} lowest power {:?}", got.min_exp())
        })?;
    }
    Ok("x0..x3, y0..y3 match, with both (phi3 - phi2) relations".into())
}

/// Graph-basis coefficients recovered from the generators.
pub fn graph_coeffs(inp: &Inputs) -> Check {
    let c = recover_graph_coeffs(&f_generators(inp)?).map_err(err)?;
    for (&(i, eps), want) in &inp.expected.coeffs {
        let got = c.get(i, eps);
        ensure(&got == want, || format!("c({i},{eps}) = {got}"))?;
    }
    let extra: Vec<_> = c
        .coeffs
        .keys()
        .filter(|k| !inp.expected.coeffs.contains_key(k))
        .collect();
    ensure(extra.is_empty(), || {
        format!("unexpected nonzero coefficients {extra:?}")
    })?;
    Ok(format!("{} coefficients match", inp.expected.coeffs.len()))
}

/// `A^-3w ⟨D⟩'` of a braid closure evaluated at `A = a mod p`.
fn jones_mod(b: &BraidWord, a: i64, p: u64) -> Result<u64, String> {
    let r = bracket_reduced(&braid_closure(b)).map_err(err)?;
    r.shift(-3 * b.writhe()).eval_mod(a, p).map_err(err)
}

/// Jones polynomials of the plain closure and the wraps vanish at `A = 3 mod 11`.
pub fn mod11_obstruction(inp: &Inputs) -> Check {
    let braids = closure_braids(&inp.f_braid).map_err(err)?;
    let vals = braids
        .iter()
        .map(|b| jones_mod(b, 3, 11))
        .collect::<Result<Vec<_>, _>>()?;
    ensure(vals[0] == 0, || {
        format!("plain closure gives {} mod 11", vals[0])
    })?;
    let wraps = vals[1..].iter().filter(|&&v| v == 0).count();
    ensure(wraps >= 2, || format!("only {wraps} wrap closures vanish"))?;
    Ok(format!(
        "plain closure and {wraps} of 10 wrap closures vanish mod 11"
    ))
}

/// The eleven-closure screen over the census.
pub fn search_reproduction(inp: &Inputs) -> Check {
    let reports = run_search(&inp.census);
    let mut flagged = BTreeSet::new();
    let mut trivial3 = 0;
    for ((name, r), e) in reports.iter().zip(sorted_strands(&inp.census, &reports)) {
        let r = r.as_ref().map_err(|x| format!("{name}: {x}"))?;
        match (e, r.nontrivial) {
            (3, true) => return Err(format!("3-strand {name} flagged")),
            (3, false) => trivial3 += 1,
            (_, true) => {
                flagged.insert(name.as_str());
            }
            _ => {}
        }
    }
    let want: BTreeSet<&str> = ["10_57", "10_117", "10_162"].into();
    ensure(flagged == want, || format!("flagged {flagged:?}"))?;
    Ok(format!(
        "{} entries; {trivial3} 3-strand trivial; flagged {flagged:?}",
        reports.len()
    ))
}

fn sorted_strands(census: &[CensusEntry], reports: &[(String, impl Sized)]) -> Vec<usize> {
    reports
        .iter()
        .map(|(n, _)| {
            census
                .iter()
                .find(|e| &e.name == n)
                .map_or(0, CensusEntry::strands)
        })
        .collect()
}

/// Idempotency and cup-cap annihilation of `f_n`.
pub fn jw_suite(max: usize) -> Result<(), String> {
    for n in 0..=max {
        let f = jw(n);
        ensure(f.compose(&f).map_err(err)? == f, || {
            format!("f_{n} not idempotent")
        })?;
        for i in 0..n.saturating_sub(1) {
            let e = TLElement::generator(n, i);
            ensure(f.compose(&e).map_err(err)?.is_zero(), || {
                format!("e_{i} f_{n} != 0")
            })?;
            ensure(e.compose(&f).map_err(err)?.is_zero(), || {
                format!("f_{n} e_{i} != 0")
            })?;
        }
        ensure(
            f.trace().map_err(err)? == oracles::loop_value(n as u32),
            || format!("tr f_{n}"),
        )?;
    }
    Ok(())
}

/// Closed forms of the colored network calculus against TL expansion.
pub fn recoupling_suite(max: u32) -> Result<(), String> {
    let colors = || 0..=max;
    for (a, b, c) in
        colors().flat_map(|a| colors().flat_map(move |b| colors().map(move |c| (a, b, c))))
    {
        if !admissible(a, b, c) {
            continue;
        }
        let th = recoupling::theta(a, b, c).map_err(err)?;
        ensure(oracles::theta(a, b, c).map_err(err)? == th, || {
            format!("theta({a},{b},{c})")
        })?;
        let l = LaurentFraction::from(recoupling::lambda_coeff(a, b, c).map_err(err)?);
        ensure(
            oracles::twist_ratio(a, b, c).map_err(err)? == Some(l),
            || format!("lambda({a},{b},{c})"),
        )?;
        for d in colors().filter(|&d| admissible(a, b, d)) {
            let x = oracles::bubble(a, b, c, d).map_err(err)?;
            let ok = if c == d {
                x == jw(c as usize).scale(&th.div(&oracles::loop_value(c)).map_err(err)?)
            } else {
                x.is_zero()
            };
            ensure(ok, || format!("bubble({a},{b};{c},{d})"))?;
        }
    }
    for (a, b) in colors().flat_map(|a| colors().map(move |b| (a, b))) {
        let (l, r) = oracles::fusion_sides(a, b, &recoupling::fusion_coeffs(a, b)).map_err(err)?;
        ensure(l == r, || format!("fusion({a},{b})"))?;
    }
    let six =
        |f: &dyn Fn(u32, u32, u32, u32, u32, u32) -> Result<(), String>| -> Result<(), String> {
            for a in colors() {
                for b in colors() {
                    for e in colors() {
                        for c in colors() {
                            for d in colors() {
                                for g in colors() {
                                    f(a, b, e, c, d, g)?;
                                }
                            }
                        }
                    }
                }
            }
            Ok(())
        };
    six(&|a, b, e, c, d, f| {
        if !(admissible(a, d, e)
            && admissible(b, c, e)
            && admissible(a, b, f)
            && admissible(c, d, f))
        {
            return Ok(());
        }
        let t = recoupling::tet(a, b, e, c, d, f).map_err(err)?;
        ensure(oracles::tet(a, b, e, c, d, f).map_err(err)? == t, || {
            format!("tet[{a} {b} {e}; {c} {d} {f}]")
        })?;
        let s = t
            .div(&recoupling::theta(a, d, e).map_err(err)?)
            .map_err(err)?;
        let want = oracles::vertex(a, d, e).map_err(err)?.scale(&s);
        ensure(
            oracles::triangle(a, b, c, d, e, f).map_err(err)? == want,
            || format!("triangle({a},{b},{c},{d},{e},{f})"),
        )
    })?;
    six(&|a, b, c, d, j, z| {
        if z > 0 || !(admissible(a, b, j) && admissible(c, d, j)) {
            return Ok(());
        }
        let (lhs, channels) = oracles::recoupling_channels(a, b, c, d, j).map_err(err)?;
        let mut rhs = TLElement::zero(lhs.bottom(), lhs.top());
        for (i, ch) in channels {
            rhs = &rhs + &ch.scale(&recoupling::sixj(a, b, i, c, d, j).map_err(err)?);
        }
        ensure(lhs == rhs, || format!("6j({a},{b},{c},{d};{j})"))
    })?;
    // Two and three strands through a sphere: only matching colors survive.
    for (a, b) in colors()
        .flat_map(|a| colors().map(move |b| (a, b)))
        .filter(|(a, b)| a != b)
    {
        for m in crossingless(a as usize, b as usize) {
            ensure(
                jw(a as usize)
                    .compose(&m)
                    .and_then(|x| x.compose(&jw(b as usize)))
                    .map_err(err)?
                    .is_zero(),
                || format!("f_{a} . f_{b} through a sphere"),
            )?;
        }
    }
    Ok(())
}

/// Every crossingless matching from `bottom` to `top` strands.
fn crossingless(bottom: usize, top: usize) -> Vec<TLElement> {
    if (bottom + top) % 2 == 1 {
        return Vec::new();
    }
    // Boundary order runs up the bottom row and back down the top.
    catalan_tangles((bottom + top) / 2)
        .into_iter()
        .map(|c| {
            let n = bottom + top;
            let to_slot = |p: usize| if p < bottom { p } else { bottom + (n - 1 - p) };
            let mut partner = vec![0; n];
            for p in 0..n {
                partner[to_slot(p)] = to_slot(c.partner(p));
            }
            TLElement::from_matching(
                skein_core::tl::Matching::new(bottom, top, partner).expect("planar"),
            )
        })
        .collect()
}

/// Relative Hopf pairing closed forms against link brackets.
pub fn pairing_suite(kink: &LaurentPoly, max: usize) -> Result<(), String> {
    for k1 in [Kind::X, Kind::Y] {
        for k2 in [Kind::X, Kind::Y] {
            for m in 0..=max {
                for n in 0..=max {
                    let got = oracles::pair_basis_by_links(k1, m, k2, n, kink).map_err(err)?;
                    let want = LaurentFraction::from(genus1::pair_basis(k1, m, k2, n));
                    ensure(got == want, || format!("<{k1:?}_{m}, {k2:?}_{n}>"))?;
                }
            }
        }
    }
    Ok(())
}

/// Loop removal around an idempotent.
pub fn ring_suite(max: usize) -> Result<(), String> {
    for i in 0..=max {
        for j in 0..=max {
            let got = oracles::q_ring_on_idempotent(i, j).map_err(err)?;
            let want = jw(i).scale(&LaurentFraction::from(genus1::removingq_factor(i, j)));
            ensure(got == want, || format!("Q_{j} around f_{i}"))?;
        }
    }
    Ok(())
}

/// The generator sequence of every census tangle stops at `j = m + 1`.
pub fn truncation_suite(census: &[CensusEntry]) -> Result<(), String> {
    census.par_iter().try_for_each(|e| {
        let g = partial_closure(&e.braid).map_err(err)?;
        generators(&g)
            .map(|_| ())
            .map_err(|x| format!("{}: {x}", e.name))
    })
}

pub fn catalan_suite() -> Result<(), String> {
    let counts: Vec<usize> = (1..=6).map(|n| catalan_tangles(n).len()).collect();
    ensure(counts == [1, 2, 5, 14, 42, 132], || {
        format!("counts {counts:?}")
    })
}

/// Bases are fixed by recomputation and contain combinations of their inputs.
pub fn gb_suite(seed: u64) -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut rand_poly = |lo: i64, hi: i64| {
        LaurentPoly::from_terms((lo..=hi).map(|e| (e, rng.gen_range(-3i64..=3))))
    };
    let families = [
        vec![poly("11*A^0"), poly("4*A^0 + -1*A^4")],
        vec![
            poly("1*A^-8 + -1*A^-4 + 1*A^0 + -1*A^4 + 1*A^8"),
            poly("1*A^-8 + 1*A^0 + -1*A^4"),
        ],
        vec![
            poly("6*A^0 + 2*A^3"),
            poly("9*A^0 + -3*A^1 + 1*A^2"),
            poly("15*A^0"),
        ],
        vec![
            poly("2*A^0 + 1*A^2 + 1*A^5"),
            poly("4*A^0 + 2*A^1 + -2*A^3"),
        ],
    ];
    for gens in families {
        let ints = rescale_all(&gens)
            .iter()
            .map(|p| IntPoly::from_laurent(p, 1))
            .collect::<Result<Vec<_>, _>>()
            .map_err(err)?;
        let gb = strong_gb(&ints);
        ensure(strong_gb(gb.basis()) == gb, || {
            format!("basis of {gens:?} not fixed")
        })?;
        ensure(ints.iter().all(|f| normal_form(f, &gb).is_zero()), || {
            "input not reduced to 0".into()
        })?;
        let ideal = LaurentIdeal::new(&gens).map_err(err)?;
        for _ in 0..5 {
            let combo = gens.iter().fold(LaurentPoly::zero(), |acc, g| {
                &acc + &(&rand_poly(-3, 3) * g)
            });
            ensure(ideal.contains(&combo), || {
                format!("combination {combo} not a member")
            })?;
        }
        if !ideal.is_trivial() {
            ensure(!ideal.contains(&LaurentPoly::one()), || {
                "1 is a member".into()
            })?;
        }
    }
    Ok(())
}

/// A random word from two strands to two strands, never wider than six.
fn random_tangle(rng: &mut StdRng, len: usize) -> MorphismWord {
    let mut w = MorphismWord::new(2);
    let mut width = 2;
    for _ in 0..len {
        let pick = rng.gen_range(0..10);
        let s = if pick < 6 {
            Slice::Cross {
                pos: rng.gen_range(0..width - 1),
                positive: rng.gen_bool(0.5),
            }
        } else if pick < 8 && width < 6 {
            width += 2;
            Slice::Cap(rng.gen_range(0..=width - 2))
        } else if width > 2 {
            width -= 2;
            Slice::Cup(rng.gen_range(0..=width))
        } else {
            Slice::Cross {
                pos: 0,
                positive: rng.gen_bool(0.5),
            }
        };
        w.push(s);
    }
    while width > 2 {
        width -= 2;
        w.push(Slice::Cup(rng.gen_range(0..=width)));
    }
    w
}

/// The partial-closure ideal equals the Catalan-closure ideal on random
/// single-component 4-tangles.
pub fn partial_closure_suite(count: usize, seed: u64) -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut done = 0;
    for _ in 0..count * 200 {
        if done == count {
            break;
        }
        let len = rng.gen_range(4..14);
        let t = BallTangle::new(random_tangle(&mut rng, len)).map_err(err)?;
        if t.body().crossing_count() < 2 || !partial_closure_is_connected(&t).map_err(err)? {
            continue;
        }
        ensure(partial_closure_ideals_agree(&t).map_err(err)?, || {
            format!("ideals differ for {:?}", t.body())
        })?;
        done += 1;
    }
    ensure(done == count, || format!("only {done} tangles generated"))
}

type Suite<'a> = Box<dyn Fn() -> Result<(), String> + Sync + 'a>;

/// All property suites; names every failing one.
pub fn property_suites(inp: &Inputs) -> Check {
    let suites: Vec<(&str, Suite<'_>)> = vec![
        ("jones-wenzl", Box::new(|| jw_suite(4))),
        ("recoupling", Box::new(|| recoupling_suite(3))),
        ("basis pairing", Box::new(|| pairing_suite(&inp.kink, 2))),
        ("loop removal", Box::new(|| ring_suite(3))),
        ("truncation", Box::new(|| truncation_suite(&inp.census))),
        ("catalan", Box::new(catalan_suite)),
        ("groebner", Box::new(|| gb_suite(7))),
        (
            "partial closure",
            Box::new(|| partial_closure_suite(25, 11)),
        ),
    ];
    let results: Vec<(&str, Result<(), String>)> =
        suites.par_iter().map(|(n, f)| (*n, f())).collect();
    let failed: Vec<String> = results
        .iter()
        .filter_map(|(n, r)| r.as_ref().err().map(|e| format!("{n}: {e}")))
        .collect();
    ensure(failed.is_empty(), || failed.join("; "))?;
    Ok(format!("{} suites pass", results.len()))
}

/// The screen's ideal sits inside the full ideal, and `x0` is the plain closure.
pub fn cross_consistency(inp: &Inputs) -> Check {
    let g = f_generators(inp)?;
    let full = LaurentIdeal::new(&g.nonzero()).map_err(err)?;
    let braids = closure_braids(&inp.f_braid).map_err(err)?;
    for (k, b) in braids.iter().enumerate() {
        let j = braid_jones(b).map_err(err)?;
        ensure(full.contains(&j), || {
            format!("closure {k} not in the full ideal")
        })?;
    }
    let plain = eval_word(&braid_closure(&inp.f_braid)).map_err(err)?;
    ensure(&g.gen_x[0] * &LaurentPoly::delta() == plain, || {
        "x0 * delta differs from the plain bracket".into()
    })?;
    Ok(format!(
        "{} closures contained; x0 * delta = plain bracket",
        braids.len()
    ))
}

pub const CRITERIA: [&str; 8] = [
    "krebes example",
    "10_57 ideal",
    "generator values",
    "graph coefficients",
    "mod 11 obstruction",
    "census search",
    "property suites",
    "cross consistency",
];

/// Runs criterion `id` (1-based).
pub fn run_criterion(id: usize, inp: &Inputs) -> Outcome {
    let start = Instant::now();
    let r = match id {
        1 => krebes(),
        2 => headline(inp),
        3 => generator_values(inp),
        4 => graph_coeffs(inp),
        5 => mod11_obstruction(inp),
        6 => search_reproduction(inp),
        7 => property_suites(inp),
        8 => cross_consistency(inp),
        _ => Err(format!("no criterion {id}")),
    };
    let (passed, detail) = match r {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome {
        id,
        name: CRITERIA.get(id.wrapping_sub(1)).copied().unwrap_or("?"),
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

pub fn verify_all(inp: &Inputs) -> Vec<Outcome> {
    (1..=CRITERIA.len())
        .map(|id| run_criterion(id, inp))
        .collect()
}
