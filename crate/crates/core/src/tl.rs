//! Temperley-Lieb engine: slice words, the transfer-matrix bracket evaluator,
//! planar matchings with fraction coefficients and Jones-Wenzl idempotents.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::laurent::{LaurentFraction, LaurentPoly};
use crate::recoupling::delta_n;
use crate::{Error, Result};

/// One elementary piece of a diagram read bottom to top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slice {
    /// Crossing of strands `pos` and `pos + 1`. For a positive crossing the
    /// strand travelling from `pos` to `pos + 1` passes over.
    Cross { pos: usize, positive: bool },
    /// Creates two new adjacent strands at `pos`, `pos + 1`.
    Cap(usize),
    /// Joins strands `pos` and `pos + 1`.
    Cup(usize),
}

impl Slice {
    pub fn shifted(self, k: usize) -> Slice {
        match self {
            Slice::Cross { pos, positive } => Slice::Cross {
                pos: pos + k,
                positive,
            },
            Slice::Cap(p) => Slice::Cap(p + k),
            Slice::Cup(p) => Slice::Cup(p + k),
        }
    }

    /// Strand count after the slice, or `None` if the slice does not fit.
    fn apply(self, width: usize) -> Option<usize> {
        match self {
            Slice::Cross { pos, .. } => (pos + 1 < width).then_some(width),
            Slice::Cap(p) => (p <= width).then_some(width + 2),
            Slice::Cup(p) => (p + 2 <= width).then(|| width - 2),
        }
    }
}

/// A diagram as a bottom-to-top sequence of slices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MorphismWord {
    start: usize,
    slices: Vec<Slice>,
}

impl MorphismWord {
    /// Empty word on `start` strands.
    pub fn new(start: usize) -> Self {
        Self {
            start,
            slices: Vec::new(),
        }
    }

    pub fn from_slices(start: usize, slices: Vec<Slice>) -> Result<Self> {
        let w = Self { start, slices };
        w.end_strands()?;
        Ok(w)
    }

    pub fn start_strands(&self) -> usize {
        self.start
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    /// Strand count after the last slice.
    pub fn end_strands(&self) -> Result<usize> {
        let mut w = self.start;
        for (index, s) in self.slices.iter().enumerate() {
            w = s.apply(w).ok_or(Error::InvalidSlice { index })?;
        }
        Ok(w)
    }

    /// Largest strand count reached anywhere in the word.
    pub fn max_width(&self) -> usize {
        let mut w = self.start;
        let mut m = w;
        for s in &self.slices {
            w = s.apply(w).unwrap_or(w);
            m = m.max(w);
        }
        m
    }

    pub fn is_closed(&self) -> bool {
        self.start == 0 && self.end_strands() == Ok(0)
    }

    pub fn push(&mut self, s: Slice) {
        self.slices.push(s);
    }

    pub fn extend(&mut self, it: impl IntoIterator<Item = Slice>) {
        self.slices.extend(it);
    }

    pub fn crossing_count(&self) -> usize {
        self.slices
            .iter()
            .filter(|s| matches!(s, Slice::Cross { .. }))
            .count()
    }

    /// Mirror image: every crossing changes sign.
    pub fn mirror(&self) -> Self {
        let slices = self
            .slices
            .iter()
            .map(|s| match *s {
                Slice::Cross { pos, positive } => Slice::Cross {
                    pos,
                    positive: !positive,
                },
                other => other,
            })
            .collect();
        Self {
            start: self.start,
            slices,
        }
    }
}

impl fmt::Display for MorphismWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "STRANDS {}", self.start)?;
        for s in &self.slices {
            match s {
                Slice::Cross {
                    pos,
                    positive: true,
                } => writeln!(f, "X+ {pos}")?,
                Slice::Cross {
                    pos,
                    positive: false,
                } => writeln!(f, "X- {pos}")?,
                Slice::Cap(p) => writeln!(f, "CAP {p}")?,
                Slice::Cup(p) => writeln!(f, "CUP {p}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for MorphismWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let bad = |n: usize, l: &str| Error::Parse(format!("line {n}: `{l}`"));
        let (n, header) = lines
            .next()
            .ok_or_else(|| Error::Parse(String::from("missing STRANDS header")))?;
        let start = header
            .strip_prefix("STRANDS")
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| bad(n, header))?;
        let mut slices = Vec::new();
        for (n, l) in lines {
            let (op, arg) = l.split_once(char::is_whitespace).ok_or_else(|| bad(n, l))?;
            let pos: usize = arg.trim().parse().map_err(|_| bad(n, l))?;
            slices.push(match op {
                "X+" => Slice::Cross {
                    pos,
                    positive: true,
                },
                "X-" => Slice::Cross {
                    pos,
                    positive: false,
                },
                "CAP" => Slice::Cap(pos),
                "CUP" => Slice::Cup(pos),
                _ => return Err(bad(n, l)),
            });
        }
        Self::from_slices(start, slices)
    }
}

/// Partner list of a crossingless state whose strands all end on top.
type State = Vec<u8>;

fn insert_cap(st: &[u8], i: usize) -> State {
    let mut out = Vec::with_capacity(st.len() + 2);
    let bump = |p: u8| if (p as usize) < i { p } else { p + 2 };
    out.extend(st[..i].iter().map(|&p| bump(p)));
    out.push(i as u8 + 1);
    out.push(i as u8);
    out.extend(st[i..].iter().map(|&p| bump(p)));
    out
}

/// Joins strands `i`, `i + 1`; returns the new state and whether a loop closed.
fn join(st: &[u8], i: usize) -> (State, bool) {
    let mut st = st.to_vec();
    let closed = st[i] as usize == i + 1;
    if !closed {
        let (a, b) = (st[i] as usize, st[i + 1] as usize);
        st[a] = b as u8;
        st[b] = a as u8;
    }
    let out = st
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != i && *k != i + 1)
        .map(|(_, &p)| if (p as usize) < i { p } else { p - 2 })
        .collect();
    (out, closed)
}

fn accumulate(map: &mut BTreeMap<State, LaurentPoly>, st: State, c: LaurentPoly) {
    match map.get_mut(&st) {
        Some(v) => {
            *v = &*v + &c;
        }
        None => {
            map.insert(st, c);
        }
    }
}

/// Runs the transfer matrix over a word starting at zero strands and returns
/// the coefficient of every crossingless state on the final strands, each
/// state given as a partner list.
pub fn eval_states(w: &MorphismWord) -> Result<BTreeMap<Vec<u8>, LaurentPoly>> {
    if w.start != 0 {
        return Err(Error::NotClosed);
    }
    w.end_strands()?;
    let delta = LaurentPoly::delta();
    let mut states: BTreeMap<State, LaurentPoly> = BTreeMap::new();
    states.insert(Vec::new(), LaurentPoly::one());
    for s in &w.slices {
        let mut next = BTreeMap::new();
        for (st, c) in states {
            match *s {
                Slice::Cap(i) => accumulate(&mut next, insert_cap(&st, i), c),
                Slice::Cup(i) => {
                    let (ns, closed) = join(&st, i);
                    accumulate(&mut next, ns, if closed { &c * &delta } else { c });
                }
                Slice::Cross { pos, positive } => {
                    let (e_id, e_hook) = if positive { (1, -1) } else { (-1, 1) };
                    let (ns, closed) = join(&st, pos);
                    let hooked = insert_cap(&ns, pos);
                    let hc = c.shift(e_hook);
                    accumulate(&mut next, hooked, if closed { &hc * &delta } else { hc });
                    accumulate(&mut next, st, c.shift(e_id));
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        states = next;
    }
    Ok(states)
}

/// Kauffman bracket of a closed word, with the empty diagram equal to 1.
pub fn eval_word(w: &MorphismWord) -> Result<LaurentPoly> {
    if !w.is_closed() {
        return Err(Error::NotClosed);
    }
    Ok(eval_states(w)?.remove(&Vec::new()).unwrap_or_default())
}

/// The bracket divided by the loop value.
pub fn bracket_reduced(w: &MorphismWord) -> Result<LaurentPoly> {
    if !w.is_closed() {
        return Err(Error::NotClosed);
    }
    if w.slices.is_empty() {
        return Err(Error::EmptyLink);
    }
    eval_word(w)?.div_exact(&LaurentPoly::delta())
}

/// A non-crossing perfect matching between `bottom` and `top` boundary points.
///
/// Points `0..bottom` are the bottom row left to right, `bottom..bottom+top`
/// the top row left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    bottom: usize,
    top: usize,
    partner: Vec<usize>,
}

impl Matching {
    pub fn new(bottom: usize, top: usize, partner: Vec<usize>) -> Result<Self> {
        let m = Self {
            bottom,
            top,
            partner,
        };
        let n = bottom + top;
        let ok = m.partner.len() == n
            && m.partner
                .iter()
                .enumerate()
                .all(|(i, &p)| p < n && p != i && m.partner[p] == i)
            && m.is_planar();
        if ok {
            Ok(m)
        } else {
            Err(Error::Parse(String::from("not a planar perfect matching")))
        }
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n)
            .map(|i| if i < n { i + n } else { i - n })
            .collect();
        Self {
            bottom: n,
            top: n,
            partner,
        }
    }

    /// Cup-cap generator joining strands `i`, `i + 1` below and above.
    pub fn generator(n: usize, i: usize) -> Self {
        let mut m = Self::identity(n);
        m.partner[i] = i + 1;
        m.partner[i + 1] = i;
        m.partner[n + i] = n + i + 1;
        m.partner[n + i + 1] = n + i;
        m
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p]
    }

    /// Position of a point when walking the boundary: bottom row left to
    /// right, then top row right to left.
    fn cyclic(&self, p: usize) -> usize {
        if p < self.bottom {
            p
        } else {
            self.bottom + (self.top - 1 - (p - self.bottom))
        }
    }

    fn is_planar(&self) -> bool {
        let chords: Vec<(usize, usize)> = (0..self.partner.len())
            .filter(|&i| i < self.partner[i])
            .map(|i| {
                let (a, b) = (self.cyclic(i), self.cyclic(self.partner[i]));
                (a.min(b), a.max(b))
            })
            .collect();
        chords.iter().all(|&(a, b)| {
            chords
                .iter()
                .all(|&(c, d)| !((a < c && c < b && b < d) || (c < a && a < d && d < b)))
        })
    }

    /// Reflection through a horizontal line.
    pub fn flip(&self) -> Self {
        let (b, t) = (self.bottom, self.top);
        let map = |p: usize| if p < b { t + p } else { p - b };
        let mut partner = alloc::vec![0; b + t];
        for p in 0..b + t {
            partner[map(p)] = map(self.partner[p]);
        }
        Self {
            bottom: t,
            top: b,
            partner,
        }
    }

    /// Side-by-side juxtaposition, `self` on the left.
    pub fn tensor(&self, other: &Matching) -> Self {
        let (b1, t1, b2, t2) = (self.bottom, self.top, other.bottom, other.top);
        let m1 = |p: usize| if p < b1 { p } else { b1 + b2 + (p - b1) };
        let m2 = |p: usize| {
            if p < b2 {
                b1 + p
            } else {
                b1 + b2 + t1 + (p - b2)
            }
        };
        let mut partner = alloc::vec![0; b1 + b2 + t1 + t2];
        for p in 0..b1 + t1 {
            partner[m1(p)] = m1(self.partner[p]);
        }
        for p in 0..b2 + t2 {
            partner[m2(p)] = m2(other.partner[p]);
        }
        Self {
            bottom: b1 + b2,
            top: t1 + t2,
            partner,
        }
    }

    /// Stacks `upper` on top of `self`; returns the matching and the number
    /// of closed loops.
    pub fn compose(&self, upper: &Matching) -> Result<(Matching, usize)> {
        if self.top != upper.bottom {
            return Err(Error::WidthMismatch {
                left: self.top,
                right: upper.bottom,
            });
        }
        let (b1, k, t2) = (self.bottom, self.top, upper.top);
        let mut seen = alloc::vec![false; k];
        let mut partner = alloc::vec![0; b1 + t2];
        // Result point index: bottom p -> p, top j -> b1 + j.
        let walk = |mut in_lower: bool, mut p: usize, seen: &mut Vec<bool>| -> usize {
            loop {
                if in_lower {
                    let q = self.partner[p];
                    if q < b1 {
                        return q;
                    }
                    seen[q - b1] = true;
                    in_lower = false;
                    p = q - b1;
                } else {
                    let r = upper.partner[p];
                    if r >= k {
                        return b1 + (r - k);
                    }
                    seen[r] = true;
                    in_lower = true;
                    p = b1 + r;
                }
            }
        };
        for (p, slot) in partner.iter_mut().enumerate().take(b1) {
            *slot = walk(true, p, &mut seen);
        }
        for j in 0..t2 {
            partner[b1 + j] = walk(false, k + j, &mut seen);
        }
        let mut loops = 0;
        for m in 0..k {
            if seen[m] {
                continue;
            }
            loops += 1;
            let mut cur = m;
            loop {
                seen[cur] = true;
                let a = upper.partner[cur];
                seen[a] = true;
                let b = self.partner[b1 + a] - b1;
                if b == m {
                    break;
                }
                cur = b;
            }
        }
        Ok((
            Matching {
                bottom: b1,
                top: t2,
                partner,
            },
            loops,
        ))
    }
}

/// A formal combination of matchings with fraction coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TLElement {
    bottom: usize,
    top: usize,
    terms: BTreeMap<Matching, LaurentFraction>,
}

impl TLElement {
    pub fn zero(bottom: usize, top: usize) -> Self {
        Self {
            bottom,
            top,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_matching(m: Matching) -> Self {
        Self::from_matching_coeff(m, LaurentFraction::one())
    }

    pub fn from_matching_coeff(m: Matching, c: LaurentFraction) -> Self {
        let mut e = Self::zero(m.bottom, m.top);
        if !c.is_zero() {
            e.terms.insert(m, c);
        }
        e
    }

    pub fn identity(n: usize) -> Self {
        Self::from_matching(Matching::identity(n))
    }

    pub fn generator(n: usize, i: usize) -> Self {
        Self::from_matching(Matching::generator(n, i))
    }

    /// `A id + A^-1 e_i` for a positive crossing, mirrored for a negative one.
    pub fn crossing(n: usize, i: usize, positive: bool) -> Self {
        let (a, b) = if positive { (1, -1) } else { (-1, 1) };
        let id = Self::identity(n).scale(&LaurentPoly::monomial(1, a).into());
        let e = Self::generator(n, i).scale(&LaurentPoly::monomial(1, b).into());
        &id + &e
    }

    /// Inserts a cap at `i`: `n` strands to `n + 2`.
    pub fn cap(n: usize, i: usize) -> Self {
        let top = n + 2;
        let mut partner = alloc::vec![0; n + top];
        for p in 0..n {
            let t = n + if p < i { p } else { p + 2 };
            partner[p] = t;
            partner[t] = p;
        }
        partner[n + i] = n + i + 1;
        partner[n + i + 1] = n + i;
        Self::from_matching(Matching {
            bottom: n,
            top,
            partner,
        })
    }

    /// Joins strands `i`, `i + 1`: `n` strands to `n - 2`.
    pub fn cup(n: usize, i: usize) -> Self {
        let cap = Self::cap(n - 2, i);
        cap.flip()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn terms(&self) -> &BTreeMap<Matching, LaurentFraction> {
        &self.terms
    }

    pub fn coeff(&self, m: &Matching) -> LaurentFraction {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(LaurentFraction::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Matching, c: LaurentFraction) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = &*v + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &LaurentFraction) -> Self {
        let mut out = Self::zero(self.bottom, self.top);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v * c);
        }
        out
    }

    /// `upper` stacked on top of `self`; each closed loop contributes the loop value.
    pub fn compose(&self, upper: &TLElement) -> Result<TLElement> {
        if self.top != upper.bottom {
            return Err(Error::WidthMismatch {
                left: self.top,
                right: upper.bottom,
            });
        }
        let delta = LaurentFraction::from(LaurentPoly::delta());
        let mut powers = alloc::vec![LaurentFraction::one()];
        let mut out = Self::zero(self.bottom, upper.top);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &upper.terms {
                let (m, loops) = m1.compose(m2)?;
                while powers.len() <= loops {
                    let next = powers.last().unwrap() * &delta;
                    powers.push(next);
                }
                out.add_term(m, &(c1 * c2) * &powers[loops]);
            }
        }
        Ok(out)
    }

    pub fn tensor(&self, other: &TLElement) -> TLElement {
        let mut out = Self::zero(self.bottom + other.bottom, self.top + other.top);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.tensor(m2), c1 * c2);
            }
        }
        out
    }

    /// Reflection through a horizontal line.
    pub fn flip(&self) -> TLElement {
        let mut out = Self::zero(self.top, self.bottom);
        for (m, c) in &self.terms {
            out.terms.insert(m.flip(), c.clone());
        }
        out
    }

    /// Markov trace: closes top point `i` to bottom point `i` on the right.
    pub fn trace(&self) -> Result<LaurentFraction> {
        if self.bottom != self.top {
            return Err(Error::WidthMismatch {
                left: self.bottom,
                right: self.top,
            });
        }
        let n = self.bottom;
        // Closing arcs form the matching on 2n points that pairs top i with bottom i.
        let closer = Matching::identity(n);
        let delta = LaurentPoly::delta();
        let mut acc = LaurentFraction::zero();
        for (m, c) in &self.terms {
            let mut seen = alloc::vec![false; 2 * n];
            let mut loops = 0u32;
            for s in 0..2 * n {
                if seen[s] {
                    continue;
                }
                loops += 1;
                let mut p = s;
                loop {
                    seen[p] = true;
                    let q = m.partner[p];
                    seen[q] = true;
                    p = closer.partner[q];
                    if p == s {
                        break;
                    }
                }
            }
            acc = &acc + &(c * &LaurentFraction::from(delta.pow(loops)));
        }
        Ok(acc)
    }

    /// Value of an element with no boundary points.
    pub fn closed_value(&self) -> Result<LaurentFraction> {
        if self.bottom != 0 || self.top != 0 {
            return Err(Error::NotClosed);
        }
        Ok(self
            .terms
            .values()
            .fold(LaurentFraction::zero(), |a, c| &a + c))
    }
}

impl core::ops::Add for &TLElement {
    type Output = TLElement;
    fn add(self, rhs: &TLElement) -> TLElement {
        assert_eq!(
            (self.bottom, self.top),
            (rhs.bottom, rhs.top),
            "width mismatch"
        );
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl core::ops::Sub for &TLElement {
    type Output = TLElement;
    fn sub(self, rhs: &TLElement) -> TLElement {
        self + &rhs.scale(&(-LaurentFraction::one()))
    }
}

/// Evaluates an arbitrary word (any start and end width) as a TL element.
pub fn word_element(w: &MorphismWord) -> Result<TLElement> {
    let mut width = w.start;
    let mut acc = TLElement::identity(width);
    for (index, s) in w.slices.iter().enumerate() {
        let next = s.apply(width).ok_or(Error::InvalidSlice { index })?;
        let step = match *s {
            Slice::Cross { pos, positive } => TLElement::crossing(width, pos, positive),
            Slice::Cap(p) => TLElement::cap(width, p),
            Slice::Cup(p) => TLElement::cup(width, p),
        };
        acc = acc.compose(&step)?;
        width = next;
    }
    Ok(acc)
}

fn build_jw(n: usize, prev: &TLElement) -> TLElement {
    let ext = prev.tensor(&TLElement::identity(1));
    let hook = ext
        .compose(&TLElement::generator(n, n - 2))
        .and_then(|x| x.compose(&ext))
        .expect("widths agree");
    let ratio =
        LaurentFraction::new(delta_n(n as u32 - 2), delta_n(n as u32 - 1)).expect("nonzero");
    &ext - &hook.scale(&ratio)
}

#[cfg(feature = "std")]
static JW_CACHE: std::sync::Mutex<Vec<TLElement>> = std::sync::Mutex::new(Vec::new());

/// The Jones-Wenzl idempotent on `n` strands.
pub fn jw(n: usize) -> TLElement {
    #[cfg(feature = "std")]
    {
        let mut cache = JW_CACHE.lock().unwrap_or_else(|e| e.into_inner());
        if cache.is_empty() {
            cache.push(TLElement::identity(0));
            cache.push(TLElement::identity(1));
        }
        while cache.len() <= n {
            let k = cache.len();
            let next = build_jw(k, &cache[k - 1]);
            cache.push(next);
        }
        cache[n].clone()
    }
    #[cfg(not(feature = "std"))]
    {
        let mut f = TLElement::identity(n.min(1));
        for k in 2..=n {
            f = build_jw(k, &f);
        }
        f
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(start: usize, s: &[Slice]) -> MorphismWord {
        MorphismWord::from_slices(start, s.to_vec()).unwrap()
    }

    #[test]
    fn empty_and_unknot() {
        assert_eq!(
            eval_word(&MorphismWord::new(0)).unwrap(),
            LaurentPoly::one()
        );
        let u = word(0, &[Slice::Cap(0), Slice::Cup(0)]);
        assert_eq!(eval_word(&u).unwrap(), LaurentPoly::delta());
        assert_eq!(bracket_reduced(&u).unwrap(), LaurentPoly::one());
        assert_eq!(
            bracket_reduced(&MorphismWord::new(0)),
            Err(Error::EmptyLink)
        );
        assert_eq!(eval_word(&word(0, &[Slice::Cap(0)])), Err(Error::NotClosed));
    }

    #[test]
    fn kink_factor() {
        let w = word(
            0,
            &[
                Slice::Cap(0),
                Slice::Cap(2),
                Slice::Cross {
                    pos: 1,
                    positive: true,
                },
                Slice::Cup(0),
                Slice::Cup(0),
            ],
        );
        let r = bracket_reduced(&w).unwrap();
        assert!(r == LaurentPoly::monomial(-1, 3) || r == LaurentPoly::monomial(-1, -3));
    }

    #[test]
    fn word_text_round_trip() {
        let w = word(
            0,
            &[
                Slice::Cap(0),
                Slice::Cross {
                    pos: 0,
                    positive: false,
                },
                Slice::Cup(0),
            ],
        );
        let s = w.to_string();
        assert_eq!(s, "STRANDS 0\nCAP 0\nX- 0\nCUP 0\n");
        assert_eq!(s.parse::<MorphismWord>().unwrap(), w);
        assert!("STRANDS 0\nCUP 0\n".parse::<MorphismWord>().is_err());
        assert!("CAP 0\n".parse::<MorphismWord>().is_err());
    }

    #[test]
    fn cup_cap_squared() {
        let e = TLElement::generator(2, 0);
        let d = LaurentFraction::from(LaurentPoly::delta());
        assert_eq!(e.compose(&e).unwrap(), e.scale(&d));
        let id = TLElement::identity(3);
        assert_eq!(id.compose(&id).unwrap(), id);
    }

    #[test]
    fn jw2_shape() {
        let d = LaurentFraction::from(LaurentPoly::delta());
        let expect = &TLElement::identity(2) - &TLElement::generator(2, 0).scale(&d.inv().unwrap());
        assert_eq!(jw(2), expect);
        assert_eq!(jw(1), TLElement::identity(1));
    }

    #[test]
    fn word_element_matches_evaluator() {
        let w = word(
            0,
            &[
                Slice::Cap(0),
                Slice::Cap(0),
                Slice::Cross {
                    pos: 1,
                    positive: true,
                },
                Slice::Cross {
                    pos: 0,
                    positive: false,
                },
                Slice::Cross {
                    pos: 1,
                    positive: true,
                },
                Slice::Cup(0),
                Slice::Cup(0),
            ],
        );
        let e = word_element(&w).unwrap().closed_value().unwrap();
        assert_eq!(e, LaurentFraction::from(eval_word(&w).unwrap()));
    }

    #[test]
    fn cap_then_cup_is_loop() {
        let c = TLElement::cap(1, 1).compose(&TLElement::cup(3, 1)).unwrap();
        assert_eq!(
            c,
            TLElement::identity(1).scale(&LaurentPoly::delta().into())
        );
    }
}
