//! Independent evaluations used to check the closed forms: colored networks
//! expanded in the Temperley-Lieb algebra, and solid-torus pairings built as
//! explicit link diagrams.

use skein_core::diagrams::{partial_closure, ring_closure, BraidWord, Genus1Presentation};
use skein_core::genus1::{q_expand, Kind};
use skein_core::recoupling::{admissible, delta_n};
use skein_core::tl::{eval_word, jw, word_element, Matching, MorphismWord, Slice, TLElement};
use skein_core::{Error, LaurentFraction, LaurentPoly, Result};

fn check(a: u32, b: u32, c: u32) -> Result<()> {
    if admissible(a, b, c) {
        Ok(())
    } else {
        Err(Error::Inadmissible { a, b, c })
    }
}

fn element(m: Vec<usize>, bottom: usize, top: usize) -> TLElement {
    TLElement::from_matching(Matching::new(bottom, top, m).expect("planar routing"))
}

/// Strand routing of a trivalent vertex, `c` strands below and `a + b` above.
fn routing(a: usize, b: usize, c: usize) -> TLElement {
    let i = (a + c - b) / 2;
    let k = (a + b - c) / 2;
    let mut p = vec![0; c + a + b];
    let mut join = |x: usize, y: usize| {
        p[x] = y;
        p[y] = x;
    };
    for s in 0..c {
        let t = if s < i { s } else { a + k + (s - i) };
        join(s, c + t);
    }
    for r in 0..k {
        join(c + a - 1 - r, c + a + r);
    }
    element(p, c, a + b)
}

/// Vertex with the `c` edge below and the `a`, `b` edges above, each edge
/// carrying its idempotent.
pub fn vertex(a: u32, b: u32, c: u32) -> Result<TLElement> {
    check(a, b, c)?;
    let (a, b, c) = (a as usize, b as usize, c as usize);
    jw(c)
        .compose(&routing(a, b, c))?
        .compose(&jw(a).tensor(&jw(b)))
}

/// Vertex with the `a`, `b` edges below and `c` above.
pub fn vertex_down(a: u32, b: u32, c: u32) -> Result<TLElement> {
    Ok(vertex(a, b, c)?.flip())
}

/// Joins the bundle of `e` strands after position `left` to the next `e`
/// strands, nested, leaving `right` strands beyond.
pub fn bundle_cup(left: usize, e: usize, right: usize) -> TLElement {
    let (bottom, top) = (left + 2 * e + right, left + right);
    let mut p = vec![0; bottom + top];
    let mut join = |x: usize, y: usize| {
        p[x] = y;
        p[y] = x;
    };
    for s in 0..left {
        join(s, bottom + s);
    }
    for r in 0..e {
        join(left + e - 1 - r, left + e + r);
    }
    for s in 0..right {
        join(left + 2 * e + s, bottom + left + s);
    }
    element(p, bottom, top)
}

/// The `a` strands on the left pass the `b` strands on the right, every
/// crossing of sign `positive`.
pub fn bundle_crossing(a: usize, b: usize, positive: bool) -> Result<TLElement> {
    let mut w = MorphismWord::new(a + b);
    for s in (0..a).rev() {
        w.extend((s..s + b).map(|pos| Slice::Cross { pos, positive }));
    }
    word_element(&w)
}

fn frac(p: LaurentPoly) -> LaurentFraction {
    LaurentFraction::from(p)
}

/// Theta net closed from two vertices.
pub fn theta(a: u32, b: u32, c: u32) -> Result<LaurentFraction> {
    vertex(a, b, c)?.compose(&vertex_down(a, b, c)?)?.trace()
}

/// Tetrahedral net with faces `(a,d,e)`, `(b,c,e)`, `(a,b,f)`, `(c,d,f)`.
pub fn tet(a: u32, b: u32, e: u32, c: u32, d: u32, f: u32) -> Result<LaurentFraction> {
    check(a, d, e)?;
    check(b, c, e)?;
    check(c, d, f)?;
    let top = vertex(a, b, f)?;
    let split = vertex(d, e, a)?.tensor(&vertex(e, c, b)?);
    let joined = top
        .compose(&split)?
        .compose(&bundle_cup(d as usize, e as usize, c as usize))?;
    joined.compose(&vertex_down(d, c, f)?)?.trace()
}

/// Twist of the legs above a vertex by a negative bundle crossing, returned
/// as the scalar relating it to the vertex with swapped legs.
pub fn twist_ratio(a: u32, b: u32, c: u32) -> Result<Option<LaurentFraction>> {
    let twisted = vertex(a, b, c)?.compose(&bundle_crossing(a as usize, b as usize, false)?)?;
    Ok(proportional(&twisted, &vertex(b, a, c)?))
}

/// `Some(s)` if `x = s·y`.
pub fn proportional(x: &TLElement, y: &TLElement) -> Option<LaurentFraction> {
    let (m, c) = y.terms().iter().next()?;
    let s = x.coeff(m).div(c).ok()?;
    (y.scale(&s) == *x).then_some(s)
}

/// Two legs `a`, `b` fused through `j` and split into `d`, `c`, expanded in
/// the channel basis where `(a,d,i)` and `(b,c,i)` meet. Returns the
/// left-hand side and the list of `(i, channel element)`.
pub fn recoupling_channels(
    a: u32,
    b: u32,
    c: u32,
    d: u32,
    j: u32,
) -> Result<(TLElement, Vec<(u32, TLElement)>)> {
    let lhs = vertex_down(a, b, j)?.compose(&vertex(d, c, j)?)?;
    let mut channels = Vec::new();
    for i in 0..=(a + d).min(b + c) {
        if admissible(a, d, i) && admissible(b, c, i) {
            let pair = vertex(d, i, a)?.tensor(&vertex(i, c, b)?);
            let ch = pair.compose(&bundle_cup(d as usize, i as usize, c as usize))?;
            channels.push((i, ch));
        }
    }
    Ok((lhs, channels))
}

/// `f_a ⊗ f_b` and the fused sum `Σ w_i V†V` with the supplied weights.
pub fn fusion_sides(
    a: u32,
    b: u32,
    weights: &[(u32, LaurentFraction)],
) -> Result<(TLElement, TLElement)> {
    let lhs = jw(a as usize).tensor(&jw(b as usize));
    let (n, _) = (a + b, 0);
    let mut rhs = TLElement::zero(n as usize, n as usize);
    for (i, w) in weights {
        let t = vertex_down(a, b, *i)?.compose(&vertex(a, b, *i)?)?;
        rhs = &rhs + &t.scale(w);
    }
    Ok((lhs, rhs))
}

/// A vertex followed by its mirror through `d`: returns the element and the
/// bare idempotent it should be proportional to.
pub fn bubble(a: u32, b: u32, c: u32, d: u32) -> Result<TLElement> {
    vertex(a, b, c)?.compose(&vertex_down(a, b, d)?)
}

/// A triangle with corners on `e`, `a`, `d` and inner edges `b`, `c`, `f`.
pub fn triangle(a: u32, b: u32, c: u32, d: u32, e: u32, f: u32) -> Result<TLElement> {
    let top = vertex(b, c, e)?;
    let split = vertex(a, f, b)?.tensor(&vertex(f, d, c)?);
    top.compose(&split)?
        .compose(&bundle_cup(a as usize, f as usize, d as usize))
}

/// One circle around `i` parallel strands.
pub fn ring(i: usize) -> Result<TLElement> {
    let mut w = MorphismWord::new(i);
    w.push(Slice::Cap(0));
    w.extend((1..=i).map(|pos| Slice::Cross {
        pos,
        positive: true,
    }));
    w.extend((0..i).map(|pos| Slice::Cross {
        pos,
        positive: false,
    }));
    w.push(Slice::Cup(i));
    word_element(&w)
}

/// `f_i` encircled by `Q_j`.
pub fn q_ring_on_idempotent(i: usize, j: usize) -> Result<TLElement> {
    let r = ring(i)?;
    let mut power = jw(i);
    let mut acc = TLElement::zero(i, i);
    for c in q_expand(j).coeffs {
        acc = &acc + &power.scale(&frac(c));
        power = power.compose(&r)?;
    }
    Ok(acc)
}

/// Genus-1 tangles whose Q-weighted sums give `x_k`- and `y_k`-type
/// elements: `k` parallel cores with the arc beside them, or with the arc
/// also running once around the hole.
fn basis_piece(kind: Kind, k: usize) -> Genus1Presentation {
    let b = match kind {
        Kind::X => BraidWord::identity(k + 1),
        Kind::Y => BraidWord::new(k + 2, vec![-1]).expect("valid"),
    };
    partial_closure(&b).expect("at least one strand")
}

/// The arc, a loop clasping every core, and `k` cores.
fn clasp_piece(k: usize) -> Genus1Presentation {
    let n = k + 2;
    let letters: Vec<i32> = (2..n as i32).rev().chain(2..n as i32).map(|x| -x).collect();
    partial_closure(&BraidWord::new(n, letters).expect("valid")).expect("at least one strand")
}

fn q_weighted(
    m: usize,
    n: usize,
    bracket: impl Fn(usize, usize) -> Result<LaurentPoly>,
) -> Result<LaurentPoly> {
    let (qm, qn) = (q_expand(m), q_expand(n));
    let mut acc = LaurentPoly::zero();
    for (k, x) in qm.coeffs.iter().enumerate() {
        for (l, y) in qn.coeffs.iter().enumerate() {
            acc = &acc + &(&(x * y) * &bracket(k, l)?);
        }
    }
    Ok(acc)
}

/// Relative Hopf pairing of basis elements evaluated as link brackets. The
/// `λ¹¹₀` argument supplies the single-strand kink value used to frame the
/// arcs that run around the hole.
pub fn pair_basis_by_links(
    k1: Kind,
    m: usize,
    k2: Kind,
    n: usize,
    kink: &LaurentPoly,
) -> Result<LaurentFraction> {
    let delta = LaurentPoly::delta();
    match (k1, k2) {
        (Kind::Y, Kind::Y) => {
            // The two arcs join into one loop clasping both families of
            // cores; blackboard framing carries two extra kinks.
            let v = q_weighted(m, n, |k, l| {
                eval_word(&ring_closure(&clasp_piece(k), l, false))?.div_exact(&delta)
            })?;
            frac(v).div(&frac(kink * kink))
        }
        (Kind::Y, Kind::X) => {
            let v = q_weighted(m, n, |k, l| {
                eval_word(&ring_closure(&basis_piece(Kind::Y, k), l, false))
            })?;
            Ok(&frac(v) * &frac(kink.clone()))
        }
        (_, k2) => {
            let v = q_weighted(m, n, |k, l| {
                eval_word(&ring_closure(&basis_piece(Kind::X, k), l, k2 == Kind::Y))
            })?;
            Ok(frac(v))
        }
    }
}

/// `Δ_n` as a fraction, for comparisons with traces.
pub fn loop_value(n: u32) -> LaurentFraction {
    frac(delta_n(n))
}
