//! Exact arithmetic in Z[A, A^-1] and its fraction field.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{upoly, Error, Result};

/// A Laurent polynomial in `A` with big-integer coefficients.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients, so
/// structural equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * A^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: alloc::vec![(e, c)],
            }
        }
    }

    /// The variable `A`.
    pub fn a() -> Self {
        Self::monomial(1, 1)
    }

    /// The loop value `-A^2 - A^-2`.
    pub fn delta() -> Self {
        Self::from_terms([(-2, -1), (2, -1)])
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// summing repeats.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut v: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        v.sort_by_key(|t| t.0);
        let mut out: Vec<(i64, BigInt)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Self { terms: out }
    }

    /// Builds from dense coefficients `coeffs[i]` of `A^(shift + i)`.
    pub(crate) fn from_dense(shift: i64, coeffs: Vec<BigInt>) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (shift + i as i64, c))
            .collect();
        Self { terms }
    }

    /// Dense coefficients starting at the minimum exponent.
    pub(crate) fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut v = alloc::vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    pub fn terms(&self) -> &[(i64, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// True for `±A^k`, the units of the ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.abs().is_one()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        match self.terms.binary_search_by_key(&e, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Coefficient of the highest power.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.last().map(|t| &t.1)
    }

    /// Multiplication by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |g, t| g.gcd(&t.1))
    }

    /// Exact quotient in Z[A, A^-1].
    pub fn div_exact(&self, q: &LaurentPoly) -> Result<LaurentPoly> {
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (ps, pd) = self.to_dense();
        let (qs, qd) = q.to_dense();
        let quot = upoly::div_exact(&pd, &qd).ok_or(Error::NotDivisible)?;
        Ok(Self::from_dense(ps - qs, quot))
    }

    /// Image under `A -> a` in Z/m.
    pub fn eval_mod(&self, a: i64, m: u64) -> Result<u64> {
        if m == 0 {
            return Err(Error::NotInvertible { a, m });
        }
        let mm = m as i128;
        let ar = (a as i128).rem_euclid(mm) as u64;
        let inv = mod_inverse(ar, m).ok_or(Error::NotInvertible { a, m })?;
        let big_m = BigInt::from(m);
        let mut acc: u128 = 0;
        for (e, c) in &self.terms {
            let base = if *e >= 0 { ar } else { inv };
            let pw = mod_pow(base, e.unsigned_abs(), m);
            let cr = c.mod_floor(&big_m).to_u64().unwrap();
            acc = (acc + cr as u128 * pw as u128) % m as u128;
        }
        Ok(acc as u64)
    }

    /// Returns `(shift, A^shift * self)` with the result's minimum exponent 0.
    pub fn rescale_min_const(&self) -> Result<(i64, LaurentPoly)> {
        let lo = self.min_exp().ok_or(Error::ZeroPolynomial)?;
        Ok((-lo, self.shift(-lo)))
    }

    /// Substitutes `A -> A^k`.
    pub fn subst_power(&self, k: i64) -> LaurentPoly {
        assert!(k != 0, "substitution power must be nonzero");
        Self::from_terms(self.terms.iter().map(|(e, c)| (e * k, c.clone())))
    }

    /// The bar involution `A -> A^-1`.
    pub fn mirror(&self) -> LaurentPoly {
        self.subst_power(-1)
    }
}

pub(crate) fn mod_pow(b: u64, mut e: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut r: u128 = 1 % m128;
    let mut b128 = b as u128 % m128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b128 % m128;
        }
        b128 = b128 * b128 % m128;
        e >>= 1;
    }
    r as u64
}

pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let e = (a as i128).extended_gcd(&(m as i128));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i128) as u64)
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

fn merge(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    let nb = |c: &BigInt| if negate_b { -c } else { c.clone() };
    while i < a.terms.len() && j < b.terms.len() {
        let (ea, ca) = &a.terms[i];
        let (eb, cb) = &b.terms[j];
        match ea.cmp(eb) {
            Ordering::Less => {
                out.push((*ea, ca.clone()));
                i += 1;
            }
            Ordering::Greater => {
                out.push((*eb, nb(cb)));
                j += 1;
            }
            Ordering::Equal => {
                let s = if negate_b { ca - cb } else { ca + cb };
                if !s.is_zero() {
                    out.push((*ea, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(b.terms[j..].iter().map(|(e, c)| (*e, nb(c))));
    LaurentPoly { terms: out }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        merge(self, rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return LaurentPoly {
                terms: self.terms.iter().map(|(x, d)| (x + e, d * c)).collect(),
            };
        }
        let lo = self.min_exp().unwrap() + rhs.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + rhs.max_exp().unwrap();
        let mut acc = alloc::vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                acc[(e1 + e2 - lo) as usize] += c1 * c2;
            }
        }
        LaurentPoly::from_dense(lo, acc)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                (&self).$m(rhs)
            }
        }
    };
}

forward_binop!(LaurentPoly, Add, add);
forward_binop!(LaurentPoly, Sub, sub);
forward_binop!(LaurentPoly, Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*A^{e}")?;
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the `c*A^e + c*A^e` format; `0` is the zero polynomial.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut terms = Vec::new();
        for tok in s.split(" + ") {
            let tok = tok.trim();
            let bad = || Error::Parse(alloc::format!("bad term `{tok}`"));
            let (c, e) = tok.split_once("*A^").ok_or_else(bad)?;
            let c: BigInt = c.trim().parse().map_err(|_| bad())?;
            let e: i64 = e.trim().parse().map_err(|_| bad())?;
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms))
    }
}

/// An element of the fraction field of Z[A, A^-1] in canonical form.
///
/// Numerator and denominator are coprime, the denominator has minimum
/// exponent 0 and a positive leading coefficient, and the integer contents
/// share no factor. Structural equality is therefore value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentFraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LaurentFraction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value, when the denominator is 1.
    pub fn to_poly(&self) -> Option<LaurentPoly> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (ds, dd) = den.to_dense();
        let (ns, nd) = num.to_dense();
        let g = upoly::gcd(&nd, &dd);
        let mut nd = upoly::div_exact(&nd, &g).expect("gcd divides numerator");
        let mut dd = upoly::div_exact(&dd, &g).expect("gcd divides denominator");
        let c = upoly::content(&nd).gcd(&upoly::content(&dd));
        let c = if dd.last().unwrap().is_negative() {
            -c
        } else {
            c
        };
        if !c.is_one() {
            nd.iter_mut().for_each(|x| *x /= &c);
            dd.iter_mut().for_each(|x| *x /= &c);
        }
        Self {
            num: LaurentPoly::from_dense(ns - ds, nd),
            den: LaurentPoly::from_dense(0, dd),
        }
    }
}

impl From<LaurentPoly> for LaurentFraction {
    fn from(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl Add for &LaurentFraction {
    type Output = LaurentFraction;
    fn add(self, rhs: &LaurentFraction) -> LaurentFraction {
        if self.den == rhs.den {
            return LaurentFraction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        LaurentFraction::reduce(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &LaurentFraction {
    type Output = LaurentFraction;
    fn sub(self, rhs: &LaurentFraction) -> LaurentFraction {
        self + &(-rhs)
    }
}

impl Mul for &LaurentFraction {
    type Output = LaurentFraction;
    fn mul(self, rhs: &LaurentFraction) -> LaurentFraction {
        if self.is_zero() || rhs.is_zero() {
            return LaurentFraction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return LaurentFraction::from(&self.num * &rhs.num);
        }
        LaurentFraction::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &LaurentFraction {
    type Output = LaurentFraction;
    fn neg(self) -> LaurentFraction {
        LaurentFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

forward_binop!(LaurentFraction, Add, add);
forward_binop!(LaurentFraction, Sub, sub);
forward_binop!(LaurentFraction, Mul, mul);

impl Neg for LaurentFraction {
    type Output = LaurentFraction;
    fn neg(self) -> LaurentFraction {
        -&self
    }
}

impl fmt::Display for LaurentFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl FromStr for LaurentFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once(") / (") {
            Some((n, d)) => {
                let n = n
                    .strip_prefix('(')
                    .ok_or_else(|| Error::Parse(s.to_string()))?;
                let d = d
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(s.to_string()))?;
                Self::new(n.parse()?, d.parse()?)
            }
            None => Ok(Self::from(s.parse::<LaurentPoly>()?)),
        }
    }
}

/// `(-1)^k`.
pub(crate) fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
