//! Strong Groebner bases over Z[A] and Z[A, u], Laurent-ideal triviality and
//! equality, and mod-p certificates of nontriviality.
//!
//! Ideals of Z[A, A^-1] are decided inside Z[A, u] / (uA - 1): a Laurent
//! ideal contains 1 exactly when the saturated ideal does.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::laurent::LaurentPoly;
use crate::{Error, Result};

/// Exponents of `A` and `u`.
pub type Mono = (u32, u32);

/// Degree-lex with `A > u`.
fn mono_cmp(x: &Mono, y: &Mono) -> Ordering {
    (x.0 + x.1, x.0).cmp(&(y.0 + y.1, y.0))
}

fn divides(x: &Mono, y: &Mono) -> bool {
    x.0 <= y.0 && x.1 <= y.1
}

fn lcm(x: &Mono, y: &Mono) -> Mono {
    (x.0.max(y.0), x.1.max(y.1))
}

fn sub(x: &Mono, y: &Mono) -> Mono {
    (x.0 - y.0, x.1 - y.1)
}

/// A polynomial over Z in `A` (and optionally `u`), leading term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    vars: u8,
    terms: Vec<(Mono, BigInt)>,
}

impl IntPoly {
    pub fn zero(vars: u8) -> Self {
        Self {
            vars,
            terms: Vec::new(),
        }
    }

    pub fn constant(vars: u8, c: impl Into<BigInt>) -> Self {
        Self::from_terms(vars, [((0, 0), c.into())])
    }

    pub fn from_terms(vars: u8, terms: impl IntoIterator<Item = (Mono, BigInt)>) -> Self {
        assert!(vars == 1 || vars == 2, "one or two variables");
        let mut v: Vec<(Mono, BigInt)> = terms.into_iter().collect();
        assert!(
            vars == 2 || v.iter().all(|t| t.0 .1 == 0),
            "u used in a one-variable ring"
        );
        v.sort_by(|a, b| mono_cmp(&b.0, &a.0));
        let mut out: Vec<(Mono, BigInt)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Self { vars, terms: out }
    }

    /// Embeds a Laurent polynomial with no negative powers.
    pub fn from_laurent(p: &LaurentPoly, vars: u8) -> Result<Self> {
        if p.min_exp().is_some_and(|e| e < 0) {
            return Err(Error::Parse(String::from("negative power of A")));
        }
        Ok(Self::from_terms(
            vars,
            p.terms().iter().map(|(e, c)| ((*e as u32, 0), c.clone())),
        ))
    }

    /// The polynomial as a Laurent polynomial, if it does not involve `u`.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if self.terms.iter().any(|t| t.0 .1 != 0) {
            return None;
        }
        Some(LaurentPoly::from_terms(
            self.terms.iter().map(|(m, c)| (m.0 as i64, c.clone())),
        ))
    }

    pub fn vars(&self) -> u8 {
        self.vars
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn lm(&self) -> Mono {
        self.terms[0].0
    }

    pub fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn with_vars(&self, vars: u8) -> Self {
        Self {
            vars,
            terms: self.terms.clone(),
        }
    }

    fn neg(&self) -> Self {
        Self {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    /// `self - c * x^m * g`.
    fn sub_term_mul(&self, c: &BigInt, m: &Mono, g: &IntPoly) -> IntPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        let shifted = |t: &(Mono, BigInt)| ((t.0 .0 + m.0, t.0 .1 + m.1), -(c * &t.1));
        while i < self.terms.len() && j < g.terms.len() {
            let gm = (g.terms[j].0 .0 + m.0, g.terms[j].0 .1 + m.1);
            match mono_cmp(&self.terms[i].0, &gm) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(shifted(&g.terms[j]));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = &self.terms[i].1 - c * &g.terms[j].1;
                    if !v.is_zero() {
                        out.push((gm, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(g.terms[j..].iter().map(shifted));
        IntPoly {
            vars: self.vars,
            terms: out,
        }
    }

    fn mul_term(&self, c: &BigInt, m: &Mono) -> IntPoly {
        IntPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(x, d)| ((x.0 + m.0, x.1 + m.1), d * c))
                .collect(),
        }
    }

    fn add(&self, other: &IntPoly) -> IntPoly {
        self.sub_term_mul(&-BigInt::one(), &(0, 0), other)
    }

    fn normalize_sign(self) -> IntPoly {
        if !self.is_zero() && self.lc().is_negative() {
            self.neg()
        } else {
            self
        }
    }

    /// Formats with custom variable names (`A`, `u` by default).
    pub fn display_with<'a>(&'a self, a: &'a str, u: &'a str) -> impl fmt::Display + 'a {
        struct D<'a>(&'a IntPoly, &'a str, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_zero() {
                    return f.write_str("0");
                }
                for (k, (m, c)) in self.0.terms.iter().rev().enumerate() {
                    if k > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{c}*{}^{}", self.1, m.0)?;
                    if self.0.vars == 2 {
                        write!(f, "*{}^{}", self.2, m.1)?;
                    }
                }
                Ok(())
            }
        }
        D(self, a, u)
    }
}

impl fmt::Display for IntPoly {
    /// Terms in ascending order, `c*A^e` or `c*A^e*u^f`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("A", "u"))
    }
}

/// Remainder of `c` by `b > 0` in `(-b/2, b/2]`.
fn sym_rem(c: &BigInt, b: &BigInt) -> BigInt {
    let r = c.mod_floor(b);
    if &(&r * 2) > b {
        r - b
    } else {
        r
    }
}

/// A strong Groebner basis under degree-lex order with `A > u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongGB {
    basis: Vec<IntPoly>,
    vars: u8,
}

impl StrongGB {
    /// Basis sorted by leading monomial, smallest first.
    pub fn basis(&self) -> &[IntPoly] {
        &self.basis
    }

    pub fn vars(&self) -> u8 {
        self.vars
    }

    /// True when the basis is `{1}`.
    pub fn is_unit_ideal(&self) -> bool {
        self.basis.iter().any(IntPoly::is_one)
    }

    pub fn contains(&self, f: &IntPoly) -> bool {
        normal_form(f, self).is_zero()
    }
}

/// Strong reduction of every term; zero exactly for ideal members.
pub fn normal_form(f: &IntPoly, gb: &StrongGB) -> IntPoly {
    reduce(&f.with_vars(gb.vars), &gb.basis, None)
}

/// Fully reduces `f` by `basis`, skipping index `skip`.
fn reduce(f: &IntPoly, basis: &[IntPoly], skip: Option<usize>) -> IntPoly {
    let mut f = f.clone();
    let mut rest: Vec<(Mono, BigInt)> = Vec::new();
    'outer: while !f.is_zero() {
        let (m, c) = f.terms[0].clone();
        for (k, g) in basis.iter().enumerate() {
            if Some(k) == skip || !divides(&g.lm(), &m) {
                continue;
            }
            let (q, r) = c.div_rem(g.lc());
            if r.is_zero() {
                f = f.sub_term_mul(&q, &sub(&m, &g.lm()), g);
                continue 'outer;
            }
        }
        // Not strongly reducible: shrink the coefficient as far as possible.
        let mut c = c;
        loop {
            let mut changed = false;
            for (k, g) in basis.iter().enumerate() {
                if Some(k) == skip || !divides(&g.lm(), &m) {
                    continue;
                }
                let b = g.lc().abs();
                let r = sym_rem(&c, &b);
                if r != c {
                    let q = (&c - &r) / g.lc();
                    f = f.sub_term_mul(&q, &sub(&m, &g.lm()), g);
                    c = r;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        if c.is_zero() {
            continue;
        }
        debug_assert_eq!(f.terms[0].0, m);
        rest.push(f.terms.remove(0));
    }
    IntPoly {
        vars: f.vars,
        terms: rest,
    }
}

/// Critical pair between basis elements `i < j`.
struct Pair {
    lcm: Mono,
    i: usize,
    j: usize,
}

fn strongly_divides(h: &IntPoly, g: &IntPoly) -> bool {
    divides(&h.lm(), &g.lm()) && g.lc().is_multiple_of(h.lc())
}

/// Working basis for Buchberger's algorithm. Elements made redundant by a
/// newer one are retired (their slot emptied) and re-reduced.
struct Work {
    slots: Vec<Option<IntPoly>>,
    pairs: Vec<Pair>,
}

impl Work {
    fn active(&self) -> Vec<IntPoly> {
        self.slots.iter().flatten().cloned().collect()
    }

    fn add(&mut self, g: IntPoly) {
        let mut queue = alloc::vec![g];
        while let Some(g) = queue.pop() {
            let g = reduce(&g, &self.active(), None).normalize_sign();
            if g.is_zero() {
                continue;
            }
            for slot in self.slots.iter_mut() {
                if slot.as_ref().is_some_and(|f| strongly_divides(&g, f)) {
                    queue.push(slot.take().unwrap());
                }
            }
            let j = self.slots.len();
            for (i, f) in self.slots.iter().enumerate() {
                if let Some(f) = f {
                    self.pairs.push(Pair {
                        lcm: lcm(&f.lm(), &g.lm()),
                        i,
                        j,
                    });
                }
            }
            self.slots.push(Some(g));
        }
    }
}

/// Buchberger's algorithm with S- and GCD-polynomials over Z.
pub fn strong_gb(gens: &[IntPoly]) -> StrongGB {
    let vars = gens.iter().map(IntPoly::vars).max().unwrap_or(1);
    let mut work = Work {
        slots: Vec::new(),
        pairs: Vec::new(),
    };
    let mut sorted: Vec<IntPoly> = gens
        .iter()
        .map(|g| g.with_vars(vars))
        .filter(|g| !g.is_zero())
        .collect();
    sorted.sort_by(|a, b| mono_cmp(&a.lm(), &b.lm()));
    for g in sorted {
        work.add(g);
    }
    loop {
        work.pairs
            .retain(|p| work.slots[p.i].is_some() && work.slots[p.j].is_some());
        let Some(idx) = work
            .pairs
            .iter()
            .enumerate()
            .min_by(|a, b| mono_cmp(&a.1.lcm, &b.1.lcm))
            .map(|(k, _)| k)
        else {
            break;
        };
        let Pair { i, j, lcm: l } = work.pairs.swap_remove(idx);
        let (f, g) = (
            work.slots[i].as_ref().unwrap(),
            work.slots[j].as_ref().unwrap(),
        );
        let (a, b) = (f.lc().clone(), g.lc().clone());
        let (mf, mg) = (sub(&l, &f.lm()), sub(&l, &g.lm()));
        let mut cands = Vec::new();
        let coprime_mono = f.lm().0.min(g.lm().0) == 0 && f.lm().1.min(g.lm().1) == 0;
        let gcd = a.extended_gcd(&b);
        if !(coprime_mono && gcd.gcd.abs().is_one()) {
            let lc = a.lcm(&b);
            let s = f
                .mul_term(&(&lc / &a), &mf)
                .sub_term_mul(&(&lc / &b), &mg, g);
            cands.push(s);
        }
        if !(b.is_multiple_of(&a) || a.is_multiple_of(&b)) {
            let gp = f.mul_term(&gcd.x, &mf).add(&g.mul_term(&gcd.y, &mg));
            cands.push(gp);
        }
        for h in cands {
            work.add(h);
        }
        if work.slots.iter().flatten().any(IntPoly::is_one) {
            return StrongGB {
                basis: alloc::vec![IntPoly::constant(vars, 1)],
                vars,
            };
        }
    }
    finalize(work.active(), vars)
}

/// Minimizes, normalizes signs and reduces tails.
fn finalize(basis: Vec<IntPoly>, vars: u8) -> StrongGB {
    let mut keep: Vec<IntPoly> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(l, h)| l != k && strongly_divides(h, g) && (!strongly_divides(g, h) || l < k));
        if !redundant {
            keep.push(g.clone());
        }
    }
    keep.sort_by(|a, b| mono_cmp(&a.lm(), &b.lm()).then_with(|| a.lc().cmp(b.lc())));
    for k in 0..keep.len() {
        let g = keep[k].clone();
        let head = IntPoly {
            vars,
            terms: alloc::vec![g.terms[0].clone()],
        };
        let tail = IntPoly {
            vars,
            terms: g.terms[1..].to_vec(),
        };
        let t = reduce(&tail, &keep, Some(k));
        keep[k] = head.add(&t);
    }
    StrongGB { basis: keep, vars }
}

/// Outcome of a Laurent triviality decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrivialityCertificate {
    /// The saturated basis contains 1.
    Trivial { gb: StrongGB },
    /// The saturated basis does not contain 1. `witness` is the first
    /// `(p, a)` sending every generator to 0 under `A -> a mod p`, if one
    /// exists with `p <= 101`.
    Nontrivial {
        gb: StrongGB,
        witness: Option<(u64, u64)>,
    },
}

impl TrivialityCertificate {
    pub fn is_trivial(&self) -> bool {
        matches!(self, TrivialityCertificate::Trivial { .. })
    }

    pub fn gb(&self) -> &StrongGB {
        match self {
            TrivialityCertificate::Trivial { gb }
            | TrivialityCertificate::Nontrivial { gb, .. } => gb,
        }
    }

    pub fn witness(&self) -> Option<(u64, u64)> {
        match self {
            TrivialityCertificate::Nontrivial { witness, .. } => *witness,
            TrivialityCertificate::Trivial { .. } => None,
        }
    }
}

/// Shifts every nonzero generator to lowest power `A^0`.
pub fn rescale_all(gens: &[LaurentPoly]) -> Vec<LaurentPoly> {
    gens.iter()
        .filter_map(|g| g.rescale_min_const().ok().map(|(_, q)| q))
        .collect()
}

/// An ideal of Z[A, A^-1] with its saturated strong Groebner basis.
#[derive(Clone, Debug)]
pub struct LaurentIdeal {
    gens: Vec<LaurentPoly>,
    /// Basis of the rescaled generators in Z[A].
    univariate: StrongGB,
    /// Basis of the same ideal plus `uA - 1` in Z[A, u].
    saturated: StrongGB,
}

fn u_a_minus_one() -> IntPoly {
    IntPoly::from_terms(2, [((1, 1), BigInt::one()), ((0, 0), -BigInt::one())])
}

impl LaurentIdeal {
    pub fn new(gens: &[LaurentPoly]) -> Result<Self> {
        let scaled = rescale_all(gens);
        if scaled.is_empty() {
            return Err(Error::AllZero);
        }
        let polys: Vec<IntPoly> = scaled
            .iter()
            .map(|p| IntPoly::from_laurent(p, 1))
            .collect::<Result<_>>()?;
        let univariate = strong_gb(&polys);
        let saturated = if univariate.is_unit_ideal() {
            StrongGB {
                basis: alloc::vec![IntPoly::constant(2, 1)],
                vars: 2,
            }
        } else {
            let mut with_u: Vec<IntPoly> =
                univariate.basis.iter().map(|g| g.with_vars(2)).collect();
            with_u.push(u_a_minus_one());
            strong_gb(&with_u)
        };
        Ok(Self {
            gens: gens.to_vec(),
            univariate,
            saturated,
        })
    }

    pub fn generators(&self) -> &[LaurentPoly] {
        &self.gens
    }

    pub fn univariate_gb(&self) -> &StrongGB {
        &self.univariate
    }

    pub fn saturated_gb(&self) -> &StrongGB {
        &self.saturated
    }

    pub fn is_trivial(&self) -> bool {
        self.saturated.is_unit_ideal()
    }

    /// Membership of a Laurent polynomial.
    pub fn contains(&self, p: &LaurentPoly) -> bool {
        match p.rescale_min_const() {
            Err(_) => true,
            Ok((_, q)) => {
                let f = IntPoly::from_laurent(&q, 2).expect("rescaled");
                self.saturated.contains(&f)
            }
        }
    }

    pub fn contains_ideal(&self, other: &LaurentIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }
}

/// Decides whether the generators span Z[A, A^-1].
pub fn laurent_trivial(gens: &[LaurentPoly]) -> Result<TrivialityCertificate> {
    let ideal = LaurentIdeal::new(gens)?;
    if ideal.is_trivial() {
        return Ok(TrivialityCertificate::Trivial {
            gb: ideal.saturated,
        });
    }
    let witness = modp_kill_search(gens, 101).into_iter().next();
    Ok(TrivialityCertificate::Nontrivial {
        gb: ideal.saturated,
        witness,
    })
}

/// Mutual membership of two Laurent ideals.
pub fn ideal_equal(a: &[LaurentPoly], b: &[LaurentPoly]) -> Result<bool> {
    let (ia, ib) = (LaurentIdeal::new(a)?, LaurentIdeal::new(b)?);
    Ok(ia.contains_ideal(&ib) && ib.contains_ideal(&ia))
}

fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n)
        .filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
        .collect()
}

/// Every `(p, a)` with `p <= pmax` prime and `a` a unit mod `p` at which all
/// generators vanish.
pub fn modp_kill_search(gens: &[LaurentPoly], pmax: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for p in primes_up_to(pmax) {
        for a in 1..p {
            if gens.iter().all(|g| g.eval_mod(a as i64, p) == Ok(0)) {
                out.push((p, a));
            }
        }
    }
    out
}

/// Distinct leading monomials of a basis; used by diagnostics and tests.
pub fn leading_monomials(gb: &StrongGB) -> BTreeSet<Mono> {
    gb.basis.iter().map(IntPoly::lm).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni(s: &str) -> IntPoly {
        IntPoly::from_laurent(&s.parse().unwrap(), 1).unwrap()
    }

    #[test]
    fn coprime_constants() {
        let gb = strong_gb(&[IntPoly::constant(1, 2), IntPoly::constant(1, 3)]);
        assert_eq!(gb.basis(), [IntPoly::constant(1, 1)]);
    }

    #[test]
    fn eleven_and_quartic() {
        let gb = strong_gb(&[uni("11*A^0"), uni("4*A^0 + -1*A^4"), uni("15*A^0 + -1*A^4")]);
        assert_eq!(gb.basis(), [uni("11*A^0"), uni("-4*A^0 + 1*A^4")]);
        assert!(gb.contains(&uni("33*A^0 + 11*A^3")));
        assert!(!gb.contains(&uni("1*A^0")));
        assert_eq!(normal_form(&uni("12*A^0"), &gb), uni("1*A^0"));
    }

    #[test]
    fn idempotent_on_small_example() {
        let gb = strong_gb(&[uni("2*A^0 + 1*A^1"), uni("6*A^0 + 3*A^2"), uni("4*A^0")]);
        let again = strong_gb(gb.basis());
        assert_eq!(gb, again);
    }

    #[test]
    fn saturation_decides_laurent_units() {
        // A^2 + A is A(A + 1): trivial only if A + 1 is.
        let c =
            laurent_trivial(&["1*A^1 + 1*A^2".parse().unwrap(), "2*A^0".parse().unwrap()]).unwrap();
        assert!(!c.is_trivial());
        assert_eq!(c.witness(), Some((2, 1)));
        let t = laurent_trivial(&[LaurentPoly::one()]).unwrap();
        assert!(t.is_trivial());
        assert_eq!(laurent_trivial(&[LaurentPoly::zero()]), Err(Error::AllZero));
    }

    #[test]
    fn constant_ideal_equality() {
        assert!(!ideal_equal(&[LaurentPoly::constant(2)], &[LaurentPoly::constant(3)]).unwrap());
        let x = [LaurentPoly::constant(6), "1*A^0 + 1*A^3".parse().unwrap()];
        assert!(ideal_equal(&x, &x).unwrap());
    }

    #[test]
    fn kill_search() {
        assert!(modp_kill_search(&[LaurentPoly::one()], 100).is_empty());
        let all: Vec<_> = modp_kill_search(&[LaurentPoly::constant(11)], 20);
        assert_eq!(all, (1..11).map(|a| (11, a)).collect::<Vec<_>>());
    }
}
