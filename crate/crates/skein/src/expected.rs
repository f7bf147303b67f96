//! Reference values for the 10_57 genus-1 tangle.

use std::collections::BTreeMap;

use skein_core::recoupling::phi;
use skein_core::{LaurentFraction, LaurentPoly};

pub const BUNDLED: &str = include_str!("../data/expected_f.txt");

/// The braid whose partial closure is the 10_57 genus-1 tangle.
pub const F_BRAID: &str = "4: 1,1,1,2,-1,2,-3,2,2,-3,-3";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    /// `x0`..`x3`, `y0`..`y3`.
    pub label: String,
    /// The printed power of `A` pulled out of the value.
    pub power: i64,
    pub value: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedF {
    pub generators: Vec<Generator>,
    pub coeffs: BTreeMap<(usize, usize), LaurentFraction>,
}

impl ExpectedF {
    pub fn generator(&self, label: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.label == label)
    }
}

fn bad(line: usize, msg: impl std::fmt::Display) -> String {
    format!("line {line}: {msg}")
}

pub fn parse_expected(text: &str) -> Result<ExpectedF, String> {
    let mut generators: Vec<Generator> = Vec::new();
    let mut coeffs = BTreeMap::new();
    let gap = &phi(3) - &phi(2);
    for (i, raw) in text.lines().enumerate() {
        let (n, line) = (i + 1, raw.trim());
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.splitn(3, ' ');
        let (head, a, rest) = (
            it.next().unwrap_or(""),
            it.next().unwrap_or(""),
            it.next().unwrap_or(""),
        );
        if head == "c" {
            let mut it = rest.splitn(2, ' ');
            let (eps, frac) = (it.next().unwrap_or(""), it.next().unwrap_or(""));
            let i: usize = a.parse().map_err(|_| bad(n, "bad color"))?;
            let eps: usize = eps.parse().map_err(|_| bad(n, "bad color"))?;
            let (num, den) = frac
                .split_once(" / ")
                .ok_or_else(|| bad(n, "expected `num / den`"))?;
            let num: LaurentPoly = num.parse().map_err(|e| bad(n, e))?;
            let den: LaurentPoly = den.parse().map_err(|e| bad(n, e))?;
            coeffs.insert(
                (i, eps),
                LaurentFraction::new(num, den).map_err(|e| bad(n, e))?,
            );
            continue;
        }
        let power: i64 = a.parse().map_err(|_| bad(n, "bad power"))?;
        let value = match rest.strip_prefix("from ") {
            Some(src) => {
                let g = generators
                    .iter()
                    .find(|g| g.label == src)
                    .ok_or_else(|| bad(n, "unknown label"))?;
                &gap * &g.value
            }
            None => rest.parse().map_err(|e| bad(n, e))?,
        };
        generators.push(Generator {
            label: head.to_string(),
            power,
            value,
        });
    }
    Ok(ExpectedF { generators, coeffs })
}

pub fn bundled_expected() -> ExpectedF {
    parse_expected(BUNDLED).expect("bundled reference values are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_values_have_printed_powers() {
        let e = bundled_expected();
        assert_eq!(e.generators.len(), 8);
        for g in &e.generators {
            assert_eq!(g.value.min_exp(), Some(g.power), "{}", g.label);
        }
        assert_eq!(e.coeffs.len(), 4);
        assert!(e.coeffs[&(1, 0)].is_zero());
    }
}
