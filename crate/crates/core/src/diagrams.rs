//! Braid words, partial closures and the closure diagrams built from them.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::laurent::{sign, LaurentPoly};
use crate::tl::{bracket_reduced, MorphismWord, Slice};
use crate::{Error, Result};

/// A braid on `strands` strands; letter `k` is `σ_|k|` with the sign of `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidBraid(
                "a braid needs at least one strand".into(),
            ));
        }
        if let Some(&k) = letters
            .iter()
            .find(|&&k| k == 0 || k.unsigned_abs() as usize >= strands)
        {
            return Err(Error::InvalidBraid(format!(
                "letter {k} on {strands} strands"
            )));
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        Self {
            strands: strands.max(1),
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Signed letter count, the writhe of the closure.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&k| k.signum() as i64).sum()
    }

    /// `perm[i]` is the top position of the strand starting at bottom `i`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = alloc::vec![0; self.strands];
        for (pos, &start) in at.iter().enumerate() {
            perm[start] = pos;
        }
        perm
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|k| -k).collect(),
        }
    }

    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().map(|k| -k).collect(),
        }
    }

    /// `self` followed by `other` (read bottom to top).
    pub fn then(&self, other: &BraidWord) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::WidthMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    /// Markov stabilization `b σₙ^±1` in the next braid group.
    pub fn stabilize(&self, positive: bool) -> Self {
        let mut letters = self.letters.clone();
        let k = self.strands as i32;
        letters.push(if positive { k } else { -k });
        Self {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Conjugation by moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        Self {
            strands: self.strands,
            letters,
        }
    }

    fn slices(&self) -> impl Iterator<Item = Slice> + '_ {
        self.letters.iter().map(|&k| Slice::Cross {
            pos: k.unsigned_abs() as usize - 1,
            positive: k > 0,
        })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for (i, k) in self.letters.iter().enumerate() {
            write!(f, "{}{k}", if i == 0 { " " } else { "," })?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Parses `n: k1,k2,...`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad braid word `{s}`"));
        let (n, rest) = s.split_once(':').ok_or_else(bad)?;
        let strands = n.trim().parse().map_err(|_| bad())?;
        let rest = rest.trim();
        let letters = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split(',')
                .map(|t| t.trim().parse::<i32>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        };
        Self::new(strands, letters)
    }
}

/// A genus-1 tangle: the braid with strands `2..n` closed around the hole of
/// the solid torus, leaving strand 1 as the open arc.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Genus1Presentation {
    braid: BraidWord,
    meridian_width: usize,
}

impl Genus1Presentation {
    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    /// Number of closing arcs meeting a meridional disk.
    pub fn meridian_width(&self) -> usize {
        self.meridian_width
    }
}

/// A single strand gives the bare arc with nothing around the hole.
pub fn partial_closure(b: &BraidWord) -> Result<Genus1Presentation> {
    if b.strands < 1 {
        return Err(Error::InvalidBraid("partial closure needs a strand".into()));
    }
    Ok(Genus1Presentation {
        braid: b.clone(),
        meridian_width: b.strands - 1,
    })
}

/// Components of the genus-1 tangle: the open arc plus one closed loop per
/// remaining cycle of the braid permutation.
pub fn component_count(g: &Genus1Presentation) -> usize {
    let perm = g.braid.permutation();
    let mut seen = alloc::vec![false; perm.len()];
    let mut p = 0;
    seen[0] = true;
    while perm[p] != 0 {
        p = perm[p];
        seen[p] = true;
    }
    let mut count = 1;
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut q = s;
        while !seen[q] {
            seen[q] = true;
            q = perm[q];
        }
    }
    count
}

fn open_closure(b: &BraidWord) -> MorphismWord {
    let n = b.strands;
    let mut w = MorphismWord::new(0);
    w.extend((0..n).map(Slice::Cap));
    w.extend(b.slices());
    w
}

fn close_top(w: &mut MorphismWord, n: usize) {
    w.extend((0..n).rev().map(Slice::Cup));
}

/// Trace closure: top endpoint `i` joined to bottom endpoint `i` on the right.
pub fn braid_closure(b: &BraidWord) -> MorphismWord {
    let mut w = open_closure(b);
    close_top(&mut w, b.strands);
    w
}

/// The braid that carries strand 1 once around the other strands:
/// `σ₁σ₂…σₙ₋₁σₙ₋₁…σ₁`, or its inverse.
pub fn wrap_word(strands: usize, positive: bool) -> BraidWord {
    let n = strands as i32;
    let s = if positive { 1 } else { -1 };
    let letters = (1..n).chain((1..n).rev()).map(|k| s * k).collect();
    BraidWord { strands, letters }
}

/// The braid `b P^k` (positive) or `b N^k` (negative).
pub fn wrap_braid(g: &Genus1Presentation, k: usize, positive: bool) -> BraidWord {
    let p = wrap_word(g.braid.strands, positive);
    let mut letters = g.braid.letters.clone();
    for _ in 0..k {
        letters.extend_from_slice(&p.letters);
    }
    BraidWord {
        strands: g.braid.strands,
        letters,
    }
}

/// Closure of the tangle with the open arc wrapped `k` times around the hole.
pub fn wrap_closure(g: &Genus1Presentation, k: usize, positive: bool) -> MorphismWord {
    braid_closure(&wrap_braid(g, k, positive))
}

/// Closure by a trivial arc with `k` parallel circles around the closing
/// arcs. With `through`, the closing arc of strand 1 also wraps once around
/// those arcs beside the circles (the second basis type).
pub fn ring_closure(g: &Genus1Presentation, k: usize, through: bool) -> MorphismWord {
    let n = g.braid.strands;
    let (lo, hi) = (n, 2 * n - 2);
    let mut w = open_closure(&g.braid);
    for _ in 0..k {
        w.push(Slice::Cap(lo));
        w.extend((lo + 1..=hi + 1).map(|pos| Slice::Cross {
            pos,
            positive: true,
        }));
        w.extend((lo..=hi).map(|pos| Slice::Cross {
            pos,
            positive: false,
        }));
        w.push(Slice::Cup(hi + 1));
    }
    if through {
        w.extend((lo..=hi).rev().map(|pos| Slice::Cross {
            pos,
            positive: true,
        }));
        w.extend((lo..=hi).map(|pos| Slice::Cross {
            pos,
            positive: true,
        }));
    }
    close_top(&mut w, n);
    w
}

/// A closed word with an orientation on every component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedLinkWord {
    word: MorphismWord,
    /// `reversed[c]` flips component `c` from its default orientation.
    reversed: Vec<bool>,
    writhe: i64,
    crossings: Vec<CrossingInfo>,
    components: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct CrossingInfo {
    sign: i64,
    a: usize,
    b: usize,
}

/// Per segment (level, position): component id and whether the default
/// traversal runs upward.
struct Tracing {
    comp: Vec<Vec<usize>>,
    up: Vec<Vec<bool>>,
    components: usize,
}

fn trace_components(w: &MorphismWord) -> Tracing {
    // Segment (t, p) lives between slice t-1 and slice t at position p.
    let mut widths = alloc::vec![w.start_strands()];
    for s in w.slices() {
        let last = *widths.last().unwrap();
        widths.push(match s {
            Slice::Cap(_) => last + 2,
            Slice::Cup(_) => last - 2,
            Slice::Cross { .. } => last,
        });
    }
    // End of a segment: (level, pos, top_end).
    type End = (usize, usize, bool);
    let across = |e: End| -> End {
        let (t, p, top) = e;
        if top {
            match w.slices()[t] {
                Slice::Cross { pos, .. } => {
                    let q = if p == pos {
                        pos + 1
                    } else if p == pos + 1 {
                        pos
                    } else {
                        p
                    };
                    (t + 1, q, false)
                }
                Slice::Cap(i) => (t + 1, if p < i { p } else { p + 2 }, false),
                Slice::Cup(i) => {
                    if p == i {
                        (t, i + 1, true)
                    } else if p == i + 1 {
                        (t, i, true)
                    } else {
                        (t + 1, if p < i { p } else { p - 2 }, false)
                    }
                }
            }
        } else {
            let s = w.slices()[t - 1];
            match s {
                Slice::Cross { pos, .. } => {
                    let q = if p == pos {
                        pos + 1
                    } else if p == pos + 1 {
                        pos
                    } else {
                        p
                    };
                    (t - 1, q, true)
                }
                Slice::Cap(i) => {
                    if p == i {
                        (t, i + 1, false)
                    } else if p == i + 1 {
                        (t, i, false)
                    } else {
                        (t - 1, if p < i { p } else { p - 2 }, true)
                    }
                }
                Slice::Cup(i) => (t - 1, if p < i { p } else { p + 2 }, true),
            }
        }
    };
    let mut comp: Vec<Vec<usize>> = widths.iter().map(|&k| alloc::vec![usize::MAX; k]).collect();
    let mut up: Vec<Vec<bool>> = widths.iter().map(|&k| alloc::vec![true; k]).collect();
    let mut components = 0;
    for t in 0..widths.len() {
        for p in 0..widths[t] {
            if comp[t][p] != usize::MAX {
                continue;
            }
            let id = components;
            components += 1;
            // Enter at the bottom end, leave through the top end.
            let (mut ct, mut cp, mut going_up) = (t, p, true);
            loop {
                if comp[ct][cp] != usize::MAX {
                    break;
                }
                comp[ct][cp] = id;
                up[ct][cp] = going_up;
                let (nt, np, ntop) = across((ct, cp, going_up));
                ct = nt;
                cp = np;
                // Arriving at a bottom end means we now travel upward.
                going_up = !ntop;
            }
        }
    }
    Tracing {
        comp,
        up,
        components,
    }
}

impl OrientedLinkWord {
    /// Orients each component so that its first segment (lowest level,
    /// leftmost position) runs upward; braid strands of a closure run upward.
    pub fn new(word: MorphismWord) -> Result<Self> {
        let tr = trace_components(&word);
        Self::with_reversals(word, alloc::vec![false; tr.components])
    }

    pub fn with_reversals(word: MorphismWord, reversed: Vec<bool>) -> Result<Self> {
        if !word.is_closed() {
            return Err(Error::NotClosed);
        }
        let tr = trace_components(&word);
        if reversed.len() != tr.components {
            return Err(Error::Parse(format!(
                "expected {} orientations",
                tr.components
            )));
        }
        let mut crossings = Vec::new();
        for (t, s) in word.slices().iter().enumerate() {
            if let Slice::Cross { pos, positive } = *s {
                let (ca, cb) = (tr.comp[t][pos], tr.comp[t][pos + 1]);
                let ra = tr.up[t][pos] != reversed[ca];
                let rb = tr.up[t][pos + 1] != reversed[cb];
                // Strand leaving `pos` heads up-right, the other up-left.
                let right: (i64, i64) = if ra { (1, 1) } else { (-1, -1) };
                let left = if rb { (-1, 1) } else { (1, -1) };
                let (over, under) = if positive {
                    (right, left)
                } else {
                    (left, right)
                };
                let cross = over.0 * under.1 - over.1 * under.0;
                crossings.push(CrossingInfo {
                    sign: cross.signum(),
                    a: ca,
                    b: cb,
                });
            }
        }
        let writhe = crossings.iter().map(|c| c.sign).sum();
        Ok(Self {
            word,
            reversed,
            writhe,
            crossings,
            components: tr.components,
        })
    }

    pub fn word(&self) -> &MorphismWord {
        &self.word
    }

    pub fn writhe(&self) -> i64 {
        self.writhe
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn orientations(&self) -> &[bool] {
        &self.reversed
    }

    /// Linking number of components `i` and `j`.
    pub fn linking_number(&self, i: usize, j: usize) -> i64 {
        let twice: i64 = self
            .crossings
            .iter()
            .filter(|c| (c.a == i && c.b == j) || (c.a == j && c.b == i))
            .map(|c| c.sign)
            .sum();
        twice / 2
    }

    /// Component containing the segment at `position` just above slice `level`.
    pub fn component_at(&self, level: usize, position: usize) -> usize {
        trace_components(&self.word).comp[level][position]
    }
}

/// Jones polynomial in the `A` variable: `(−A³)^(−w) ⟨D⟩′`; substitute
/// `t = A^-4` to read it in `t`.
pub fn jones(l: &OrientedLinkWord) -> Result<LaurentPoly> {
    let r = bracket_reduced(&l.word)?;
    let w = l.writhe;
    Ok(r.shift(-3 * w).scale(&sign(w).into()))
}

/// Jones polynomial of a braid closure with strands oriented upward.
pub fn braid_jones(b: &BraidWord) -> Result<LaurentPoly> {
    let l = OrientedLinkWord::new(braid_closure(b))?;
    debug_assert_eq!(l.writhe(), b.writhe());
    jones(&l)
}

/// Converts a polynomial in `A` with even exponents to `q = A^-2`.
pub fn to_q_variable(p: &LaurentPoly) -> Result<LaurentPoly> {
    if p.terms().iter().any(|(e, _)| e % 2 != 0) {
        return Err(Error::Parse(format!("odd power of A in {}", p)));
    }
    Ok(LaurentPoly::from_terms(
        p.terms().iter().map(|(e, c)| (-e / 2, c.clone())),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tl::eval_word;
    use alloc::string::ToString;

    fn b(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        let w = b("4: 1,1,-2,3");
        assert_eq!(w.to_string(), "4: 1,1,-2,3");
        assert_eq!(b("3:"), BraidWord::identity(3));
        assert!("3: 1,3".parse::<BraidWord>().is_err());
        assert!("2,2:1,1,1".parse::<BraidWord>().is_err());
    }

    #[test]
    fn simple_closures() {
        let d = LaurentPoly::delta();
        assert_eq!(
            eval_word(&braid_closure(&BraidWord::identity(1))).unwrap(),
            d
        );
        assert_eq!(eval_word(&braid_closure(&b("2: 1,-1"))).unwrap(), &d * &d);
    }

    #[test]
    fn trefoil_jones() {
        // t + t^3 - t^4 with t = A^-4.
        let j = braid_jones(&b("2: 1,1,1")).unwrap();
        assert_eq!(j, LaurentPoly::from_terms([(-4, 1), (-12, 1), (-16, -1)]));
    }

    #[test]
    fn components_of_partial_closures() {
        assert_eq!(component_count(&partial_closure(&b("2: 1,1")).unwrap()), 2);
        assert_eq!(
            component_count(&partial_closure(&BraidWord::identity(2)).unwrap()),
            2
        );
        assert_eq!(component_count(&partial_closure(&b("2: 1")).unwrap()), 1);
        assert_eq!(component_count(&partial_closure(&b("3: 1,2")).unwrap()), 1);
        assert_eq!(
            partial_closure(&BraidWord::identity(1))
                .unwrap()
                .meridian_width(),
            0
        );
    }

    #[test]
    fn wrap_links_once() {
        for n in 2..5 {
            let g = partial_closure(&BraidWord::identity(n)).unwrap();
            for positive in [true, false] {
                let l = OrientedLinkWord::new(wrap_closure(&g, 1, positive)).unwrap();
                assert_eq!(l.components(), n);
                let arc = l.component_at(1, 0);
                for other in 0..n {
                    if other != arc {
                        assert_eq!(l.linking_number(arc, other), if positive { 1 } else { -1 });
                    }
                }
            }
        }
    }

    #[test]
    fn ring_around_identity() {
        let d = LaurentPoly::delta();
        let g = partial_closure(&BraidWord::identity(2)).unwrap();
        let hopf = &d * &crate::recoupling::phi(1);
        assert_eq!(eval_word(&ring_closure(&g, 1, false)).unwrap(), &hopf * &d);
        assert_eq!(ring_closure(&g, 0, false), wrap_closure(&g, 0, true));
    }
}
