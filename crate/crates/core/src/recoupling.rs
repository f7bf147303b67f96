//! Closed forms for colored trivalent graph evaluations: loop values,
//! theta and tetrahedral nets, twist eigenvalues, recoupling and fusion.

use alloc::vec::Vec;

use crate::laurent::{sign, LaurentFraction, LaurentPoly};
use crate::{Error, Result};

/// Triangle inequality plus even perimeter.
pub fn admissible(a: u32, b: u32, c: u32) -> bool {
    (a + b + c).is_multiple_of(2) && c <= a + b && a <= b + c && b <= a + c
}

fn check(a: u32, b: u32, c: u32) -> Result<()> {
    if admissible(a, b, c) {
        Ok(())
    } else {
        Err(Error::Inadmissible { a, b, c })
    }
}

/// Loop value of the `n`-th idempotent: Δ₀ = 1, Δ₁ = δ, Δₙ₊₁ = δΔₙ − Δₙ₋₁.
pub fn delta_n(n: u32) -> LaurentPoly {
    let d = LaurentPoly::delta();
    let (mut prev, mut cur) = (LaurentPoly::zero(), LaurentPoly::one());
    for _ in 0..n {
        let next = &(&d * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Quantum integer `[k] = (A^2k - A^-2k) / (A^2 - A^-2)`.
pub fn qint(k: u32) -> LaurentPoly {
    let k = k as i64;
    LaurentPoly::from_terms((0..k).map(|j| (2 * (k - 1) - 4 * j, 1)))
}

pub fn qfact(k: u32) -> LaurentPoly {
    (1..=k).fold(LaurentPoly::one(), |acc, j| &acc * &qint(j))
}

/// Theta net with edges colored `a`, `b`, `c`. It lies in the ring with
/// quantum integers inverted, so in general it is a fraction.
pub fn theta(a: u32, b: u32, c: u32) -> Result<LaurentFraction> {
    check(a, b, c)?;
    let m = (a + b - c) / 2;
    let n = (b + c - a) / 2;
    let p = (a + c - b) / 2;
    let num = &(&qfact(m + n + p + 1) * &qfact(m)) * &(&qfact(n) * &qfact(p));
    let den = &(&qfact(m + n) * &qfact(n + p)) * &qfact(m + p);
    LaurentFraction::new(num.scale(&sign((m + n + p) as i64).into()), den)
}

/// Tetrahedral net `Tet[a b e; c d f]`, whose faces are the triples
/// `(a,d,e)`, `(b,c,e)`, `(a,b,f)` and `(c,d,f)`.
pub fn tet(a: u32, b: u32, e: u32, c: u32, d: u32, f: u32) -> Result<LaurentFraction> {
    check(a, d, e)?;
    check(b, c, e)?;
    check(a, b, f)?;
    check(c, d, f)?;
    #[cfg(feature = "std")]
    {
        use std::collections::BTreeMap;
        use std::sync::Mutex;
        static MEMO: Mutex<BTreeMap<[u32; 6], LaurentFraction>> = Mutex::new(BTreeMap::new());
        let key = [a, b, e, c, d, f];
        if let Some(v) = MEMO.lock().unwrap_or_else(|p| p.into_inner()).get(&key) {
            return Ok(v.clone());
        }
        let v = tet_closed_form(a, b, e, c, d, f);
        MEMO.lock()
            .unwrap_or_else(|p| p.into_inner())
            .insert(key, v.clone());
        Ok(v)
    }
    #[cfg(not(feature = "std"))]
    Ok(tet_closed_form(a, b, e, c, d, f))
}

fn tet_closed_form(a: u32, b: u32, e: u32, c: u32, d: u32, f: u32) -> LaurentFraction {
    let ai = [
        (a + d + e) / 2,
        (b + c + e) / 2,
        (a + b + f) / 2,
        (c + d + f) / 2,
    ];
    let bj = [
        (b + d + e + f) / 2,
        (a + c + e + f) / 2,
        (a + b + c + d) / 2,
    ];
    let mut inner = LaurentPoly::one();
    for &bv in &bj {
        for &av in &ai {
            inner = &inner * &qfact(bv - av);
        }
    }
    let edges = [a, b, c, d, e, f]
        .iter()
        .fold(LaurentPoly::one(), |acc, &x| &acc * &qfact(x));
    let lo = *ai.iter().max().unwrap();
    let hi = *bj.iter().min().unwrap();
    let mut sum = LaurentFraction::zero();
    for s in lo..=hi {
        let num = qfact(s + 1).scale(&sign(s as i64).into());
        let mut den = LaurentPoly::one();
        for &av in &ai {
            den = &den * &qfact(s - av);
        }
        for &bv in &bj {
            den = &den * &qfact(bv - s);
        }
        sum = &sum + &LaurentFraction::new(num, den).expect("nonzero factorials");
    }
    &sum * &LaurentFraction::new(inner, edges).expect("nonzero factorials")
}

/// Eigenvalue of a half twist of the `a` and `b` legs at a vertex with third
/// edge `c`, for the twist whose single-strand crossings are negative.
pub fn lambda_coeff(a: u32, b: u32, c: u32) -> Result<LaurentPoly> {
    check(a, b, c)?;
    let twice = (a * (a + 2) + b * (b + 2)) as i64 - (c * (c + 2)) as i64;
    assert!(twice % 2 == 0, "twist exponent must be integral");
    Ok(LaurentPoly::monomial(
        sign(((a + b - c) / 2) as i64),
        twice / 2,
    ))
}

/// Recoupling coefficient `{a b i; c d j}`: the weight of the channel where
/// `(a,d,i)` and `(b,c,i)` meet when expanding the channel where `(a,b,j)` and
/// `(c,d,j)` meet.
pub fn sixj(a: u32, b: u32, i: u32, c: u32, d: u32, j: u32) -> Result<LaurentFraction> {
    let t = &tet(a, b, i, c, d, j)? * &LaurentFraction::from(delta_n(i));
    t.div(&(&theta(a, d, i)? * &theta(b, c, i)?))
}

/// `φᵢ = −A^(2i+2) − A^(−2i−2)`.
pub fn phi(i: u32) -> LaurentPoly {
    let e = 2 * i as i64 + 2;
    LaurentPoly::from_terms([(e, -1), (-e, -1)])
}

/// `σₙ = φ₀ + … + φₙ`.
pub fn sigma(n: u32) -> LaurentPoly {
    (0..=n).fold(LaurentPoly::zero(), |acc, i| &acc + &phi(i))
}

/// Fusion weights `Δᵢ / θ(a,b,i)` over all admissible `i`.
pub fn fusion_coeffs(a: u32, b: u32) -> Vec<(u32, LaurentFraction)> {
    let lo = a.abs_diff(b);
    (lo..=a + b)
        .step_by(2)
        .map(|i| {
            let th = theta(a, b, i).expect("admissible by construction");
            (
                i,
                LaurentFraction::from(delta_n(i))
                    .div(&th)
                    .expect("theta is nonzero"),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility() {
        assert!(admissible(1, 1, 2));
        assert!(!admissible(1, 1, 1));
        for i in 0..6 {
            for eps in 0..8 {
                let expect = eps + 1 == i || eps == i + 1;
                assert_eq!(admissible(1, i, eps), expect);
            }
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(delta_n(0), LaurentPoly::one());
        assert_eq!(
            delta_n(2),
            LaurentPoly::from_terms([(4, 1), (0, 1), (-4, 1)])
        );
        assert_eq!(theta(1, 1, 0).unwrap(), LaurentPoly::delta().into());
        assert_eq!(theta(1, 1, 2).unwrap(), delta_n(2).into());
        // [3](A⁴ + A⁻⁴)/[2] up to sign: not a Laurent polynomial.
        assert_eq!(theta(2, 2, 2).unwrap().to_poly(), None);
        assert_eq!(lambda_coeff(1, 1, 0).unwrap(), LaurentPoly::monomial(-1, 3));
        assert_eq!(lambda_coeff(1, 1, 2).unwrap(), LaurentPoly::monomial(1, -1));
        assert_eq!(phi(0), LaurentPoly::delta());
        assert_eq!(phi(3), LaurentPoly::from_terms([(8, -1), (-8, -1)]));
        assert_eq!(sigma(1), &phi(0) + &phi(1));
        assert!(theta(1, 1, 1).is_err());
    }

    #[test]
    fn fusion_of_two_strands() {
        let d = LaurentPoly::delta();
        assert_eq!(
            fusion_coeffs(1, 1),
            [
                (0, LaurentFraction::new(LaurentPoly::one(), d).unwrap()),
                (2, LaurentFraction::one())
            ]
        );
        assert_eq!(fusion_coeffs(1, 0), [(1, LaurentFraction::one())]);
    }

    #[test]
    fn tet_with_zero_edge_is_theta() {
        // Tet[a b e; c d 0] forces a = b, c = d and collapses to θ(a, d, e).
        for a in 0..4 {
            for d in 0..4 {
                for e in 0..7 {
                    if admissible(a, d, e) {
                        assert_eq!(tet(a, a, e, d, d, 0).unwrap(), theta(a, d, e).unwrap());
                    }
                }
            }
        }
    }
}
