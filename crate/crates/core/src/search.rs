//! The eleven-closure screen: Jones polynomials of a tangle's closure and of
//! its wraps around the hole, checked for a common obstruction.

use alloc::string::String;
use alloc::vec::Vec;

use crate::diagrams::{braid_jones, to_q_variable};
use crate::diagrams::{partial_closure, wrap_braid, BraidWord};
use crate::ideal::{modp_kill_search, strong_gb, IntPoly, StrongGB};
use crate::laurent::LaurentPoly;
use crate::{Error, Result};

/// Most wraps used in either direction.
pub const MAX_WRAPS: usize = 5;

/// A knot given by a braid representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub name: String,
    pub braid: BraidWord,
    /// Jones polynomial of the closure in the `A` variable, if known.
    pub expected_jones: Option<LaurentPoly>,
}

impl CensusEntry {
    pub fn new(name: impl Into<String>, braid: BraidWord) -> Self {
        Self {
            name: name.into(),
            braid,
            expected_jones: None,
        }
    }

    pub fn strands(&self) -> usize {
        self.braid.strands()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub name: String,
    /// Rescaled Jones polynomials in `q = A^-2`: the plain closure, then the
    /// closures of `bP`, `bN`, `bP²`, `bN²`, … up to five wraps.
    pub polys: Vec<LaurentPoly>,
    pub gb: StrongGB,
    pub nontrivial: bool,
    /// First `(p, q)` at which every polynomial vanishes mod `p`.
    pub witness: Option<(u64, u64)>,
}

/// Shifts up to constant term only when the lowest exponent is negative.
pub fn rescale_nonnegative(p: &LaurentPoly) -> LaurentPoly {
    match p.min_exp() {
        Some(e) if e < 0 => p.shift(-e),
        _ => p.clone(),
    }
}

/// The braids whose closures are screened, in report order.
pub fn closure_braids(b: &BraidWord) -> Result<Vec<BraidWord>> {
    let g = partial_closure(b)?;
    let mut out = alloc::vec![b.clone()];
    for k in 1..=MAX_WRAPS {
        out.push(wrap_braid(&g, k, true));
        out.push(wrap_braid(&g, k, false));
    }
    Ok(out)
}

pub fn search(entry: &CensusEntry) -> Result<SearchReport> {
    if entry.strands() < 3 {
        return Err(Error::TooFewStrands {
            strands: entry.strands(),
        });
    }
    let polys = closure_braids(&entry.braid)?
        .iter()
        .map(|b| Ok(rescale_nonnegative(&to_q_variable(&braid_jones(b)?)?)))
        .collect::<Result<Vec<_>>>()?;
    let ints = polys
        .iter()
        .map(|p| IntPoly::from_laurent(p, 1))
        .collect::<Result<Vec<_>>>()?;
    let gb = strong_gb(&ints);
    let nontrivial = !gb.is_unit_ideal();
    let witness = if nontrivial {
        modp_kill_search(&polys, 101).into_iter().next()
    } else {
        None
    };
    Ok(SearchReport {
        name: entry.name.clone(),
        polys,
        gb,
        nontrivial,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rescale_rule_is_one_sided() {
        let p: LaurentPoly = "1*A^-2 + 3*A^1".parse().unwrap();
        assert_eq!(rescale_nonnegative(&p), "1*A^0 + 3*A^3".parse().unwrap());
        let p: LaurentPoly = "2*A^2 + 1*A^5".parse().unwrap();
        assert_eq!(rescale_nonnegative(&p), p);
    }

    #[test]
    fn unknot_braid_is_trivial() {
        let r = search(&CensusEntry::new("unknot", "3: 1,2".parse().unwrap())).unwrap();
        assert_eq!(r.polys.len(), 11);
        assert!(!r.nontrivial);
        assert_eq!(r.witness, None);
    }

    #[test]
    fn two_strands_rejected() {
        let e = CensusEntry::new("trefoil", "2: 1,1,1".parse().unwrap());
        assert_eq!(search(&e), Err(Error::TooFewStrands { strands: 2 }));
    }
}
