//! Generators of the bracket ideal of a genus-1 tangle, the pairing closed
//! forms they rest on, and recovery of graph-basis coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::diagrams::{ring_closure, Genus1Presentation};
use crate::laurent::{LaurentFraction, LaurentPoly};
use crate::recoupling::{admissible, delta_n, lambda_coeff, phi, sigma, theta};
use crate::tl::eval_word;
use crate::{Error, Result};

/// `Qₙ = (z − φ₀)…(z − φₙ₋₁)` as coefficients of powers of `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QExpansion {
    pub coeffs: Vec<LaurentPoly>,
}

impl QExpansion {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

pub fn q_expand(n: usize) -> QExpansion {
    let mut c = alloc::vec![LaurentPoly::one()];
    for i in 0..n {
        let f = phi(i as u32);
        let mut next = alloc::vec![LaurentPoly::zero(); c.len() + 1];
        for (k, ck) in c.iter().enumerate() {
            next[k + 1] = &next[k + 1] + ck;
            next[k] = &next[k] - &(ck * &f);
        }
        c = next;
    }
    QExpansion { coeffs: c }
}

/// `⟨Qₙ, Qₙ⟩ = Δₙ ∏_{i<n} (φₙ − φᵢ)`.
pub fn qq_pair(n: usize) -> LaurentPoly {
    let pn = phi(n as u32);
    (0..n).fold(delta_n(n as u32), |acc, i| &acc * &(&pn - &phi(i as u32)))
}

/// The two families of the almost orthogonal basis: the arc beside the
/// decorated core (`X`) or wrapping around it (`Y`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    X,
    Y,
}

/// Relative Hopf pairing of basis elements.
pub fn pair_basis(k1: Kind, m: usize, k2: Kind, n: usize) -> LaurentPoly {
    match (k1, k2) {
        (Kind::X, Kind::X) => {
            if m == n {
                &LaurentPoly::delta() * &qq_pair(m)
            } else {
                LaurentPoly::zero()
            }
        }
        (Kind::X, Kind::Y) => {
            if m == n + 1 {
                qq_pair(m)
            } else if m == n {
                &phi(m as u32) * &qq_pair(m)
            } else {
                LaurentPoly::zero()
            }
        }
        (Kind::Y, Kind::X) => pair_basis(Kind::X, n, Kind::Y, m),
        (Kind::Y, Kind::Y) => {
            if m.abs_diff(n) == 1 {
                let k = m.max(n);
                qq_pair(k).shift(-2 * k as i64 - 4)
            } else if m == n {
                let e = -2 * m as i64;
                let mut t = sigma(m as u32).shift(e);
                if m > 0 {
                    t = &t - &sigma(m as u32 - 1).shift(e + 2);
                }
                (&t * &qq_pair(m)).shift(-6)
            } else {
                LaurentPoly::zero()
            }
        }
    }
}

/// `∏_{k<j} (φᵢ − φₖ)`, the scalar left after removing a `Q_j` ring from an
/// `i`-colored strand.
pub fn removingq_factor(i: usize, j: usize) -> LaurentPoly {
    let pi = phi(i as u32);
    (0..j).fold(LaurentPoly::one(), |acc, k| &acc * &(&pi - &phi(k as u32)))
}

fn check_edge(i: usize, eps: usize) -> Result<()> {
    if admissible(1, i as u32, eps as u32) {
        Ok(())
    } else {
        Err(Error::Inadmissible {
            a: 1,
            b: i as u32,
            c: eps as u32,
        })
    }
}

/// `⟨g_{i,ε}, x_j⟩ = θ(1,ε,i) ∏_{k<j} (φᵢ − φₖ)`.
pub fn basespairing_x(i: usize, eps: usize, j: usize) -> Result<LaurentPoly> {
    check_edge(i, eps)?;
    let th = theta(1, eps as u32, i as u32)?
        .to_poly()
        .expect("a theta net with a 1-colored edge is a loop value");
    Ok(&th * &removingq_factor(i, j))
}

/// `⟨g_{i,ε}, y_j⟩`, the x-pairing divided by both twist eigenvalues. The
/// eigenvalues are signed monomials, so the result stays a Laurent polynomial.
pub fn basespairing_y(i: usize, eps: usize, j: usize) -> Result<LaurentPoly> {
    basespairing_y_with(i, eps, j, lambda_coeff)
}

/// Same as [`basespairing_y`] with a caller-supplied twist eigenvalue.
pub fn basespairing_y_with(
    i: usize,
    eps: usize,
    j: usize,
    lambda: impl Fn(u32, u32, u32) -> Result<LaurentPoly>,
) -> Result<LaurentPoly> {
    let x = basespairing_x(i, eps, j)?;
    let (iu, eu) = (i as u32, eps as u32);
    let twist = &lambda(1, iu, eu)? * &lambda(iu, 1, eu)?;
    x.div_exact(&twist)
}

/// Reduced brackets of the closures against the `x_j` and `y_j`, `j ≤ m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub m: usize,
    pub gen_x: Vec<LaurentPoly>,
    pub gen_y: Vec<LaurentPoly>,
}

impl GeneratorSet {
    /// All nonzero generators, x family first.
    pub fn nonzero(&self) -> Vec<LaurentPoly> {
        self.gen_x
            .iter()
            .chain(&self.gen_y)
            .filter(|p| !p.is_zero())
            .cloned()
            .collect()
    }
}

/// Runs the ring-closure algorithm up to `j = m + 1` and checks the vanishing
/// of the last level.
pub fn generators(g: &Genus1Presentation) -> Result<GeneratorSet> {
    let m = g.meridian_width();
    let delta = LaurentPoly::delta();
    let bx: Vec<LaurentPoly> = (0..=m + 1)
        .map(|k| eval_word(&ring_closure(g, k, false)))
        .collect::<Result<_>>()?;
    let by: Vec<LaurentPoly> = (0..=m + 1)
        .map(|k| eval_word(&ring_closure(g, k, true)))
        .collect::<Result<_>>()?;
    let pair = |b: &[LaurentPoly], j: usize| -> Result<LaurentPoly> {
        let q = q_expand(j);
        let s = q
            .coeffs
            .iter()
            .zip(b)
            .fold(LaurentPoly::zero(), |acc, (c, v)| &acc + &(c * v));
        s.div_exact(&delta)
    };
    let mut gen_x = Vec::with_capacity(m + 1);
    let mut gen_y = Vec::with_capacity(m + 1);
    for j in 0..=m + 1 {
        let (x, y) = (pair(&bx, j)?, pair(&by, j)?);
        if j == m + 1 {
            if !x.is_zero() || !y.is_zero() {
                return Err(Error::TruncationViolation { j });
            }
        } else {
            gen_x.push(x);
            gen_y.push(y);
        }
    }
    Ok(GeneratorSet { m, gen_x, gen_y })
}

/// Coefficients `c_{i,ε}` of a tangle in the graph basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphCoeffs {
    pub coeffs: BTreeMap<(usize, usize), LaurentFraction>,
}

impl GraphCoeffs {
    pub fn get(&self, i: usize, eps: usize) -> LaurentFraction {
        self.coeffs
            .get(&(i, eps))
            .cloned()
            .unwrap_or_else(LaurentFraction::zero)
    }

    /// `Σ c_{i,ε} ⟨g_{i,ε}, x_j⟩` (or the `y_j` pairing).
    pub fn pairing(&self, kind: Kind, j: usize) -> Result<LaurentFraction> {
        let mut acc = LaurentFraction::zero();
        for (&(i, eps), c) in &self.coeffs {
            let b = match kind {
                Kind::X => basespairing_x(i, eps, j)?,
                Kind::Y => basespairing_y(i, eps, j)?,
            };
            acc = &acc + &(c * &LaurentFraction::from(b));
        }
        Ok(acc)
    }
}

fn unknowns(m: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 0..=m {
        if i > 0 {
            v.push((i, i - 1));
        }
        v.push((i, i + 1));
    }
    v
}

/// Solves `Σ c_{i,ε} ⟨g_{i,ε}, x_j/y_j⟩ = δ · gen_{x/y}[j]` for all `j ≤ m`
/// exactly over the fraction field; the one surplus equation must also hold.
pub fn recover_graph_coeffs(gens: &GeneratorSet) -> Result<GraphCoeffs> {
    let m = gens.m;
    let cols = unknowns(m);
    let delta = LaurentPoly::delta();
    let mut rows: Vec<Vec<LaurentFraction>> = Vec::new();
    for (kind, values) in [(Kind::X, &gens.gen_x), (Kind::Y, &gens.gen_y)] {
        for (j, v) in values.iter().enumerate() {
            let mut row = Vec::with_capacity(cols.len() + 1);
            for &(i, eps) in &cols {
                let b = match kind {
                    Kind::X => basespairing_x(i, eps, j)?,
                    Kind::Y => basespairing_y(i, eps, j)?,
                };
                row.push(LaurentFraction::from(b));
            }
            row.push(LaurentFraction::from(&delta * v));
            rows.push(row);
        }
    }
    let sol = solve(rows, cols.len())?;
    Ok(GraphCoeffs {
        coeffs: cols
            .into_iter()
            .zip(sol)
            .filter(|(_, c)| !c.is_zero())
            .collect(),
    })
}

/// Gauss-Jordan elimination on an augmented system with more rows than
/// unknowns; every unknown needs a pivot and leftover rows must vanish.
fn solve(mut rows: Vec<Vec<LaurentFraction>>, n: usize) -> Result<Vec<LaurentFraction>> {
    let mut r = 0;
    for c in 0..n {
        let p = (r..rows.len())
            .find(|&k| !rows[k][c].is_zero())
            .ok_or(Error::SingularSystem)?;
        rows.swap(r, p);
        let inv = rows[r][c].inv()?;
        let pivot: Vec<LaurentFraction> = rows[r].iter().map(|x| x * &inv).collect();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot) {
                *x = &*x - &(&f * y);
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return Err(Error::InconsistentSystem);
    }
    Ok(rows[..n].iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_expansions() {
        assert_eq!(q_expand(0).coeffs, [LaurentPoly::one()]);
        assert_eq!(q_expand(1).coeffs, [-phi(0), LaurentPoly::one()]);
        let q2 = q_expand(2);
        assert_eq!(q2.coeffs[0], &phi(0) * &phi(1));
        assert_eq!(q2.coeffs[1], -(&phi(0) + &phi(1)));
    }

    #[test]
    fn pairing_closed_forms() {
        assert_eq!(qq_pair(0), LaurentPoly::one());
        assert_eq!(qq_pair(1), &LaurentPoly::delta() * &(&phi(1) - &phi(0)));
        assert_eq!(pair_basis(Kind::X, 0, Kind::X, 0), LaurentPoly::delta());
        assert_eq!(pair_basis(Kind::X, 1, Kind::Y, 0), qq_pair(1));
        assert!(pair_basis(Kind::X, 0, Kind::X, 2).is_zero());
    }

    #[test]
    fn removing_rings() {
        assert_eq!(removingq_factor(3, 0), LaurentPoly::one());
        assert_eq!(removingq_factor(1, 1), &phi(1) - &phi(0));
        assert!(removingq_factor(1, 2).is_zero());
    }

    #[test]
    fn graph_pairings() {
        assert_eq!(basespairing_x(1, 2, 0).unwrap(), delta_n(2));
        for i in 0..4usize {
            for eps in [i + 1, i.saturating_sub(1)] {
                if admissible(1, i as u32, eps as u32) {
                    assert!(basespairing_x(i, eps, i + 1).unwrap().is_zero());
                }
            }
        }
        assert_eq!(
            basespairing_y(1, 0, 0).unwrap(),
            LaurentPoly::delta().shift(-6)
        );
        assert!(basespairing_x(1, 1, 0).is_err());
    }
}
