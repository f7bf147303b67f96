//! Census files and the parallel search over them.
//!
//! One knot per line: `name,strands,{w1;w2;...}[,jones]`, where the Jones
//! column is a polynomial in `A` (for example `1*A^-8 + -1*A^-4`). Blank
//! lines and lines starting with `#` are skipped.

use std::path::Path;

use rayon::prelude::*;
use skein_core::diagrams::{braid_jones, BraidWord};
use skein_core::search::{search, CensusEntry, SearchReport};
use skein_core::LaurentPoly;

/// The 3- and 4-strand knots up to ten crossings.
pub const BUNDLED: &str = include_str!("../data/census.csv");

#[derive(Debug, thiserror::Error)]
pub enum CensusError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: Jones polynomial of {name} is {computed}, expected {expected}")]
    JonesMismatch {
        line: usize,
        name: String,
        computed: LaurentPoly,
        expected: LaurentPoly,
    },
    #[error("line {line}: {source}")]
    Core {
        line: usize,
        source: skein_core::Error,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn parse_line(line: usize, text: &str) -> Result<CensusEntry, CensusError> {
    let bad = |msg: String| CensusError::Parse { line, msg };
    let fields: Vec<&str> = text.split(',').map(str::trim).collect();
    if !(3..=4).contains(&fields.len()) {
        return Err(bad(format!(
            "expected 3 or 4 fields, found {}",
            fields.len()
        )));
    }
    let name = fields[0];
    if name.is_empty() {
        return Err(bad("empty name".into()));
    }
    let strands: usize = fields[1]
        .parse()
        .map_err(|_| bad(format!("bad strand count `{}`", fields[1])))?;
    let word = fields[2]
        .strip_prefix('{')
        .and_then(|w| w.strip_suffix('}'))
        .ok_or_else(|| bad(format!("braid word `{}` is not in braces", fields[2])))?;
    let letters = word
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<i32>()
                .map_err(|_| bad(format!("bad letter `{s}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let braid = BraidWord::new(strands, letters).map_err(|e| bad(e.to_string()))?;
    let mut entry = CensusEntry::new(name, braid);
    if let Some(j) = fields.get(3) {
        entry.expected_jones = Some(
            j.parse()
                .map_err(|e: skein_core::Error| bad(e.to_string()))?,
        );
    }
    Ok(entry)
}

/// Parses census text and checks every Jones column against the closure.
pub fn parse_census(text: &str) -> Result<Vec<CensusEntry>, CensusError> {
    let parsed: Vec<(usize, CensusEntry)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| parse_line(i, l).map(|e| (i, e)))
        .collect::<Result<_, _>>()?;
    parsed
        .into_par_iter()
        .map(|(line, e)| {
            if let Some(expected) = &e.expected_jones {
                let computed =
                    braid_jones(&e.braid).map_err(|source| CensusError::Core { line, source })?;
                if &computed != expected {
                    return Err(CensusError::JonesMismatch {
                        line,
                        name: e.name.clone(),
                        computed,
                        expected: expected.clone(),
                    });
                }
            }
            Ok(e)
        })
        .collect()
}

pub fn load_census(path: impl AsRef<Path>) -> Result<Vec<CensusEntry>, CensusError> {
    parse_census(&std::fs::read_to_string(path)?)
}

pub fn bundled_census() -> Vec<CensusEntry> {
    parse_census(BUNDLED).expect("bundled census is valid")
}

/// The bundled entry with this name.
pub fn bundled_entry(name: &str) -> Option<CensusEntry> {
    let line = BUNDLED
        .lines()
        .position(|l| l.split(',').next() == Some(name))?;
    parse_line(line + 1, BUNDLED.lines().nth(line)?).ok()
}

/// Runs `f` on a pool capped by `SKEIN_THREADS` when it is set.
pub fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var("SKEIN_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok());
    match threads {
        Some(n) if n > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f),
        _ => f(),
    }
}

/// Searches every entry in parallel; reports come back sorted by name.
pub fn run_search(entries: &[CensusEntry]) -> Vec<(String, skein_core::Result<SearchReport>)> {
    let mut out: Vec<_> = with_pool(|| {
        entries
            .par_iter()
            .map(|e| (e.name.clone(), search(e)))
            .collect()
    });
    out.sort_by(|a, b| {
        knot_order(&a.0)
            .cmp(&knot_order(&b.0))
            .then_with(|| a.0.cmp(&b.0))
    });
    out
}

/// Orders `10_57` after `9_3` and `10_117` after `10_57`.
fn knot_order(name: &str) -> (Vec<u64>, String) {
    let nums = name
        .split(|c: char| !c.is_ascii_digit())
        .filter_map(|s| s.parse().ok())
        .collect();
    (nums, name.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_entries_and_comments() {
        let text = "# comment\n\n3_1,3,{1;1;1;2}\n";
        let v = parse_census(text).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].braid.letters(), [1, 1, 1, 2]);
        assert_eq!(v[0].expected_jones, None);
    }

    #[test]
    fn malformed_lines_report_their_number() {
        match parse_census("# x\n2,2:1,1,1") {
            Err(CensusError::Parse { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_census("k,3,{1;5}"),
            Err(CensusError::Parse { line: 1, .. })
        ));
        assert!(parse_census("").unwrap().is_empty());
    }

    #[test]
    fn jones_column_is_checked() {
        assert!(
            parse_census("4_1,3,{-1;2;-1;2},1*A^-8 + -1*A^-4 + 1*A^0 + -1*A^4 + 1*A^8").is_ok()
        );
        match parse_census("4_1,3,{-1;2;-1;2},1*A^0") {
            Err(CensusError::JonesMismatch { line: 1, name, .. }) => assert_eq!(name, "4_1"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn natural_name_order() {
        let mut v = vec!["10_57", "9_3", "10_117", "3_1"];
        v.sort_by_key(|n| knot_order(n));
        assert_eq!(v, ["3_1", "9_3", "10_57", "10_117"]);
    }
}
