//! Dense univariate helpers over Z, coefficients stored low degree first.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with a positive leading coefficient.
pub(crate) fn primitive(p: &[BigInt]) -> Vec<BigInt> {
    let c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    let c = if p.last().unwrap().is_negative() {
        -c
    } else {
        c
    };
    p.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (deg a >= deg b).
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        let off = dr - db;
        for (i, bc) in b.iter().enumerate() {
            r[off + i] -= &lr * bc;
        }
        trim(&mut r);
        if !r.is_empty() {
            let c = content(&r);
            if !c.is_one() {
                for x in r.iter_mut() {
                    *x /= &c;
                }
            }
        }
    }
    r
}

/// Primitive gcd with a positive leading coefficient; `a`, `b` nonzero.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = (primitive(a), primitive(b));
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return alloc::vec![BigInt::one()];
        }
        let r = prem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    a
}

/// Exact quotient `a / b` in Z[x], or `None` when `b` does not divide `a`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut q = alloc::vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let c = &r[k + db];
        if c.is_zero() {
            continue;
        }
        let (qc, rem) = c.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &qc * bc;
        }
        q[k] = qc;
    }
    if r.iter().all(Zero::is_zero) {
        trim(&mut q);
        Some(q)
    } else {
        None
    }
}
