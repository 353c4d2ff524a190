//! Transitive-group databases.
//!
//! One group per line: `n i : (c1)(c2)... ; (...)...` with 1-based points and
//! `;` between generators. `#` starts a comment; a trailing `# order=N`
//! comment is checked against the computed order.

use std::collections::HashMap;
use std::path::Path;

use permstar_core::{PermGroup, Permutation};
use rayon::prelude::*;

use crate::error::{CliError, Result};

#[derive(Debug, Clone)]
pub struct TransitiveDbEntry {
    pub degree: usize,
    pub index: usize,
    pub generators: Vec<String>,
    pub group: PermGroup,
    pub line: usize,
}

impl TransitiveDbEntry {
    pub fn label(&self) -> String {
        format!("{}_{}", self.degree, self.index)
    }
}

struct RawLine<'a> {
    line: usize,
    degree: usize,
    index: usize,
    gens: Vec<&'a str>,
    order: Option<u128>,
}

fn split_line<'a>(origin: &str, line: usize, raw: &'a str) -> Result<Option<RawLine<'a>>> {
    let err = |msg: String| CliError::Parse { origin: origin.into(), line, msg };
    let (body, comment) = match raw.find('#') {
        Some(k) => (&raw[..k], &raw[k + 1..]),
        None => (raw, ""),
    };
    let body = body.trim();
    if body.is_empty() {
        return Ok(None);
    }
    let (head, tail) = body.split_once(':').ok_or_else(|| err("expected `n i : generators`".into()))?;
    let mut nums = head.split_whitespace();
    let mut num = |what: &str| -> Result<usize> {
        let tok = nums.next().ok_or_else(|| err(format!("missing {what}")))?;
        tok.parse().map_err(|_| err(format!("bad {what} {tok:?}")))
    };
    let degree = num("degree")?;
    let index = num("index")?;
    if nums.next().is_some() {
        return Err(err("extra tokens before `:`".into()));
    }
    if degree == 0 || index == 0 {
        return Err(err("degree and index start at 1".into()));
    }
    let gens: Vec<&str> = tail.split(';').map(str::trim).filter(|s| !s.is_empty()).collect();
    let order = match comment.trim().strip_prefix("order=") {
        Some(v) => Some(v.trim().parse().map_err(|_| err(format!("bad order annotation {:?}", v.trim())))?),
        None => None,
    };
    Ok(Some(RawLine { line, degree, index, gens, order }))
}

fn build(origin: &str, r: &RawLine<'_>) -> Result<TransitiveDbEntry> {
    let err = |msg: String| CliError::Parse { origin: origin.into(), line: r.line, msg };
    let perms = r
        .gens
        .iter()
        .map(|s| Permutation::parse_cycles(r.degree, s).map_err(|e| err(e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    let group = PermGroup::new(r.degree, perms).map_err(|e| err(e.to_string()))?;
    if !group.is_transitive() {
        return Err(CliError::Intransitive { origin: origin.into(), line: r.line, degree: r.degree, index: r.index });
    }
    if let Some(expected) = r.order {
        let found = group.order()?;
        if found != expected {
            return Err(CliError::OrderMismatch {
                origin: origin.into(),
                line: r.line,
                degree: r.degree,
                index: r.index,
                found,
                expected,
            });
        }
    }
    Ok(TransitiveDbEntry {
        degree: r.degree,
        index: r.index,
        generators: r.gens.iter().map(|s| s.to_string()).collect(),
        group,
        line: r.line,
    })
}

/// Parses database text. Entries are returned sorted by `(degree, index)`.
pub fn parse_db_str(text: &str, origin: &str) -> Result<Vec<TransitiveDbEntry>> {
    let mut raw = Vec::new();
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, l) in text.lines().enumerate() {
        if let Some(r) = split_line(origin, i + 1, l)? {
            if let Some(&first) = seen.get(&(r.degree, r.index)) {
                return Err(CliError::Duplicate {
                    origin: origin.into(),
                    line: r.line,
                    degree: r.degree,
                    index: r.index,
                    first,
                });
            }
            seen.insert((r.degree, r.index), r.line);
            raw.push(r);
        }
    }
    let mut entries = raw.par_iter().map(|r| build(origin, r)).collect::<Vec<_>>();
    // report the earliest failing line
    if let Some(pos) = entries.iter().position(|e| e.is_err()) {
        return Err(entries.swap_remove(pos).unwrap_err());
    }
    let mut entries: Vec<TransitiveDbEntry> = entries.into_iter().map(|e| e.unwrap()).collect();
    entries.sort_by_key(|e| (e.degree, e.index));
    Ok(entries)
}

pub fn parse_db(path: &Path) -> Result<Vec<TransitiveDbEntry>> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    parse_db_str(&text, &path.display().to_string())
}

/// Parses several files and rejects `(n, i)` pairs repeated across them.
pub fn parse_dbs(paths: &[impl AsRef<Path>]) -> Result<Vec<TransitiveDbEntry>> {
    let mut all: Vec<TransitiveDbEntry> = Vec::new();
    let mut seen: HashMap<(usize, usize), (String, usize)> = HashMap::new();
    for p in paths {
        let origin = p.as_ref().display().to_string();
        for e in parse_db(p.as_ref())? {
            if let Some((_, first)) = seen.get(&(e.degree, e.index)) {
                return Err(CliError::Duplicate {
                    origin,
                    line: e.line,
                    degree: e.degree,
                    index: e.index,
                    first: *first,
                });
            }
            seen.insert((e.degree, e.index), (origin.clone(), e.line));
            all.push(e);
        }
    }
    all.sort_by_key(|e| (e.degree, e.index));
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_two() {
        let db = parse_db_str("# tiny\n2 1 : (1,2)\n", "t").unwrap();
        assert_eq!(db.len(), 1);
        assert_eq!(db[0].label(), "2_1");
        assert_eq!(db[0].group.order().unwrap(), 2);
    }

    #[test]
    fn errors_name_the_line() {
        let e = parse_db_str("2 1 : (1,2)\n2 1 : (1,2)\n", "t").unwrap_err();
        assert!(matches!(e, CliError::Duplicate { line: 2, first: 1, .. }), "{e}");
        let e = parse_db_str("\n3 1 : (1,2)\n", "t").unwrap_err();
        assert!(matches!(e, CliError::Intransitive { line: 2, .. }), "{e}");
        let e = parse_db_str("3 1 (1,2,3)\n", "t").unwrap_err();
        assert!(e.to_string().starts_with("t:1:"), "{e}");
        let e = parse_db_str("3 1 : (1,2,3)\n3 2 : (1,2,4)\n", "t").unwrap_err();
        assert!(e.to_string().starts_with("t:2:"), "{e}");
        let e = parse_db_str("3 1 : (1,2,3)   # order=6\n", "t").unwrap_err();
        assert!(matches!(e, CliError::OrderMismatch { found: 3, expected: 6, .. }), "{e}");
    }

    #[test]
    fn identity_generators_allowed() {
        let db = parse_db_str("3 2 : (1,2,3) ; () ; (1,2)  # order=6\n", "t").unwrap();
        assert_eq!(db[0].group.order().unwrap(), 6);
    }
}
