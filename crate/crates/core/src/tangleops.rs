//! Ball tangles: Catalan closures, numerator and denominator, and the ideal
//! of the partial closure.

use alloc::vec::Vec;

use crate::diagrams::BraidWord;
use crate::ideal::ideal_equal;
use crate::laurent::LaurentPoly;
use crate::tl::{bracket_reduced, MorphismWord, Slice};
use crate::{Error, Result};

/// A crossingless matching of `2n` points on a circle, given by partners.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalanTangle {
    partner: Vec<usize>,
}

impl CatalanTangle {
    pub fn new(partner: Vec<usize>) -> Result<Self> {
        let n = partner.len();
        let ok = n.is_multiple_of(2)
            && partner
                .iter()
                .enumerate()
                .all(|(i, &p)| p < n && p != i && partner[p] == i)
            && (0..n).all(|i| {
                let j = partner[i];
                let (a, b) = (i.min(j), i.max(j));
                (a + 1..b).all(|k| (a + 1..b).contains(&partner[k]))
            });
        if ok {
            Ok(Self { partner })
        } else {
            Err(Error::Parse("not a crossingless matching".into()))
        }
    }

    pub fn points(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i]
    }

    /// Slices that join the `2n` top strands of a word according to `self`.
    pub fn cup_slices(&self) -> Vec<Slice> {
        let mut alive: Vec<usize> = (0..self.partner.len()).collect();
        let mut out = Vec::new();
        while !alive.is_empty() {
            let k = (0..alive.len() - 1)
                .find(|&k| self.partner[alive[k]] == alive[k + 1])
                .expect("a crossingless matching has an innermost arc");
            out.push(Slice::Cup(k));
            alive.drain(k..k + 2);
        }
        out
    }

    /// Slices that create `2n` strands from nothing, paired according to `self`.
    pub fn cap_slices(&self) -> Vec<Slice> {
        let mut cups = self.cup_slices();
        cups.reverse();
        cups.into_iter()
            .map(|s| match s {
                Slice::Cup(k) => Slice::Cap(k),
                other => other,
            })
            .collect()
    }
}

/// All crossingless matchings of `2n` points.
pub fn catalan_tangles(n: usize) -> Vec<CatalanTangle> {
    fn rec(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo >= hi {
            return alloc::vec![Vec::new()];
        }
        let mut out = Vec::new();
        for j in (lo + 1..hi).step_by(2) {
            for inner in rec(lo + 1, j) {
                for outer in rec(j + 1, hi) {
                    let mut v = alloc::vec![(lo, j)];
                    v.extend(inner.iter().copied());
                    v.extend(outer.iter().copied());
                    out.push(v);
                }
            }
        }
        out
    }
    rec(0, 2 * n)
        .into_iter()
        .map(|pairs| {
            let mut partner = alloc::vec![0; 2 * n];
            for (a, b) in pairs {
                partner[a] = b;
                partner[b] = a;
            }
            CatalanTangle { partner }
        })
        .collect()
}

/// A tangle in a ball drawn as a box with `n` endpoints below and `n` above.
///
/// Around the boundary the endpoints are numbered `0..n` for the bottom row
/// read right to left, then `n..2n` for the top row read left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallTangle {
    n: usize,
    body: MorphismWord,
}

impl BallTangle {
    pub fn new(body: MorphismWord) -> Result<Self> {
        let n = body.start_strands();
        let end = body.end_strands()?;
        if end != n {
            return Err(Error::WidthMismatch {
                left: n,
                right: end,
            });
        }
        Ok(Self { n, body })
    }

    pub fn from_braid(b: &BraidWord) -> Self {
        let slices = b
            .letters()
            .iter()
            .map(|&k| Slice::Cross {
                pos: k.unsigned_abs() as usize - 1,
                positive: k > 0,
            })
            .collect();
        Self {
            n: b.strands(),
            body: MorphismWord::from_slices(b.strands(), slices).expect("valid braid"),
        }
    }

    pub fn endpoints(&self) -> usize {
        2 * self.n
    }

    pub fn body(&self) -> &MorphismWord {
        &self.body
    }

    /// The body with its bottom row bent up to the left, as a word from
    /// zero strands to `2n` strands in boundary order.
    fn opened(&self) -> MorphismWord {
        let mut w = MorphismWord::new(0);
        w.extend((0..self.n).map(Slice::Cap));
        w.extend(self.body.slices().iter().map(|s| s.shifted(self.n)));
        w
    }

    /// Closure by the crossingless tangle `c` outside the ball.
    pub fn closure(&self, c: &CatalanTangle) -> Result<MorphismWord> {
        if c.points() != self.endpoints() {
            return Err(Error::WidthMismatch {
                left: self.endpoints(),
                right: c.points(),
            });
        }
        let mut w = self.opened();
        w.extend(c.cup_slices());
        Ok(w)
    }

    /// Which endpoints the body joins, in boundary numbering, and the number
    /// of closed loops inside the ball.
    pub fn internal_pairing(&self) -> (Vec<usize>, usize) {
        let w = self.opened();
        let ends = self.endpoints();
        // Nodes: boundary endpoints then one node per cap end.
        let mut adj: Vec<Vec<usize>> = alloc::vec![Vec::new(); ends];
        let mut at: Vec<usize> = Vec::new();
        let link = |adj: &mut Vec<Vec<usize>>, a: usize, b: usize| {
            adj[a].push(b);
            adj[b].push(a);
        };
        for s in w.slices() {
            match *s {
                Slice::Cap(i) => {
                    let a = adj.len();
                    adj.push(Vec::new());
                    adj.push(Vec::new());
                    link(&mut adj, a, a + 1);
                    at.splice(i..i, [a, a + 1]);
                }
                Slice::Cup(i) => {
                    link(&mut adj, at[i], at[i + 1]);
                    at.drain(i..i + 2);
                }
                Slice::Cross { pos, .. } => at.swap(pos, pos + 1),
            }
        }
        for (k, &node) in at.iter().enumerate() {
            link(&mut adj, k, node);
        }
        let mut seen = alloc::vec![false; adj.len()];
        let mut partner = alloc::vec![0; ends];
        for s in 0..ends {
            if seen[s] {
                continue;
            }
            let (mut prev, mut cur) = (usize::MAX, s);
            loop {
                seen[cur] = true;
                let next = if adj[cur][0] != prev || adj[cur].len() == 1 {
                    adj[cur][0]
                } else {
                    adj[cur][1]
                };
                prev = cur;
                cur = next;
                if cur < ends {
                    seen[cur] = true;
                    break;
                }
            }
            partner[s] = cur;
            partner[cur] = s;
        }
        let mut loops = 0;
        for s in ends..adj.len() {
            if seen[s] {
                continue;
            }
            loops += 1;
            let mut stack = alloc::vec![s];
            while let Some(v) = stack.pop() {
                if !seen[v] {
                    seen[v] = true;
                    stack.extend(adj[v].iter().copied());
                }
            }
        }
        (partner, loops)
    }

    fn require_four(&self) -> Result<()> {
        if self.endpoints() == 4 {
            Ok(())
        } else {
            Err(Error::WrongArity {
                endpoints: self.endpoints(),
            })
        }
    }
}

/// Joins the two bottom endpoints and the two top endpoints.
pub fn numerator(t: &BallTangle) -> Result<MorphismWord> {
    t.require_four()?;
    t.closure(&CatalanTangle {
        partner: alloc::vec![1, 0, 3, 2],
    })
}

/// Joins each top endpoint to the bottom endpoint below it.
pub fn denominator(t: &BallTangle) -> Result<MorphismWord> {
    t.require_four()?;
    t.closure(&CatalanTangle {
        partner: alloc::vec![3, 2, 1, 0],
    })
}

/// Reduced brackets of every Catalan closure.
pub fn ball_ideal(t: &BallTangle) -> Result<Vec<LaurentPoly>> {
    catalan_tangles(t.n)
        .iter()
        .map(|c| bracket_reduced(&t.closure(c)?))
        .collect()
}

/// `{⟨d(T)⟩′, (1 − A⁻⁴)⟨n(T)⟩′}`, generating the ideal of the partial closure
/// that closes the right-hand strand around the hole of a solid torus.
pub fn partial_closure_ideal(t: &BallTangle) -> Result<Vec<LaurentPoly>> {
    let d = bracket_reduced(&denominator(t)?)?;
    let n = bracket_reduced(&numerator(t)?)?;
    let factor = LaurentPoly::from_terms([(0, 1), (-4, -1)]);
    Ok(alloc::vec![d, &factor * &n])
}

/// Whether the partial closure of a 4-endpoint tangle is a single arc.
pub fn partial_closure_is_connected(t: &BallTangle) -> Result<bool> {
    t.require_four()?;
    let (partner, loops) = t.internal_pairing();
    // The closing arc joins bottom-right (boundary 0) to top-right (boundary 3).
    Ok(loops == 0 && partner[0] != 3)
}

/// Compares the partial-closure ideal with the ideal of all Catalan closures.
pub fn partial_closure_ideals_agree(t: &BallTangle) -> Result<bool> {
    if !partial_closure_is_connected(t)? {
        return Err(Error::MultiComponent);
    }
    ideal_equal(&partial_closure_ideal(t)?, &ball_ideal(t)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| catalan_tangles(n).len()).collect();
        assert_eq!(counts, [1, 2, 5, 14, 42, 132]);
        for c in catalan_tangles(4) {
            assert!(CatalanTangle::new(c.partner.clone()).is_ok());
        }
        assert!(CatalanTangle::new(alloc::vec![2, 3, 0, 1]).is_err());
    }

    #[test]
    fn trivial_tangle_closures() {
        let t = BallTangle::from_braid(&BraidWord::identity(2));
        let d = LaurentPoly::delta();
        assert_eq!(
            bracket_reduced(&numerator(&t).unwrap()).unwrap(),
            LaurentPoly::one()
        );
        assert_eq!(bracket_reduced(&denominator(&t).unwrap()).unwrap(), d);
        let mut ideal = ball_ideal(&t).unwrap();
        ideal.sort();
        let mut expect = alloc::vec![LaurentPoly::one(), d.clone()];
        expect.sort();
        assert_eq!(ideal, expect);
        assert_eq!(
            partial_closure_ideal(&t).unwrap(),
            [d, LaurentPoly::from_terms([(0, 1), (-4, -1)])]
        );
        assert_eq!(partial_closure_ideals_agree(&t), Err(Error::MultiComponent));
    }

    #[test]
    fn single_crossing() {
        let t = BallTangle::from_braid(&"2: 1".parse().unwrap());
        assert!(bracket_reduced(&denominator(&t).unwrap())
            .unwrap()
            .is_unit());
        assert!(partial_closure_ideals_agree(&t).unwrap());
    }

    #[test]
    fn arity_is_checked() {
        let t = BallTangle::from_braid(&BraidWord::identity(3));
        assert_eq!(numerator(&t), Err(Error::WrongArity { endpoints: 6 }));
        assert_eq!(ball_ideal(&t).unwrap().len(), 5);
    }
}
