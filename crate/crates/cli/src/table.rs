//! Counting transitive groups with `(*)_p` per degree.

use std::ops::RangeInclusive;

use permstar_core::star::has_star_p_with;
use permstar_core::Config;
use rayon::prelude::*;

use crate::db::TransitiveDbEntry;
use crate::error::{CliError, Result};

/// Published rows `(n, t(n), (*)_2, (*)_3)` for degrees 2..=47.
pub const PUBLISHED: &[(usize, u64, u64, u64)] = &[
    (2, 1, 1, 1),
    (3, 2, 1, 2),
    (4, 5, 5, 3),
    (5, 5, 1, 3),
    (6, 16, 6, 16),
    (7, 7, 2, 2),
    (8, 50, 50, 27),
    (9, 34, 5, 34),
    (10, 45, 5, 24),
    (11, 8, 2, 4),
    (12, 301, 96, 243),
    (13, 9, 2, 3),
    (14, 63, 16, 14),
    (15, 104, 5, 66),
    (16, 1954, 1954, 1438),
    (17, 10, 1, 5),
    (18, 983, 115, 983),
    (19, 8, 3, 2),
    (20, 1117, 116, 657),
    (21, 164, 17, 43),
    (22, 59, 12, 32),
    (23, 7, 2, 4),
    (24, 25000, 7911, 22245),
    (25, 211, 10, 119),
    (26, 96, 12, 24),
    (27, 2392, 231, 2392),
    (28, 1854, 542, 461),
    (29, 8, 2, 6),
    (30, 5712, 131, 4116),
    (31, 12, 4, 4),
    (32, 2801324, 2801324, 2737818),
    (33, 162, 16, 100),
    (34, 115, 7, 77),
    (35, 407, 12, 73),
    (36, 121279, 9612, 1113506),
    (37, 11, 3, 3),
    (38, 76, 21, 12),
    (39, 306, 37, 92),
    (40, 315842, 132071, 283122),
    (41, 10, 2, 8),
    (42, 9491, 703, 2335),
    (43, 10, 4, 4),
    (44, 2113, 872, 1540),
    (45, 10923, 256, 7893),
    (46, 56, 16, 36),
    (47, 6, 2, 4),
];

/// Published `(total, count)` for degree `n` and prime `p` in {2, 3}.
pub fn published(n: usize, p: u128) -> Option<(u64, u64)> {
    let row = PUBLISHED.iter().find(|r| r.0 == n)?;
    match p {
        2 => Some((row.1, row.2)),
        3 => Some((row.1, row.3)),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCount {
    pub degree: usize,
    pub total: u64,
    /// Counts in the order of the requested primes.
    pub counts: Vec<u64>,
}

/// Per-degree counts of entries with `(*)_p`, one column per prime.
pub fn table_counts(
    db: &[TransitiveDbEntry],
    degrees: RangeInclusive<usize>,
    primes: &[u128],
    shortcuts: bool,
    cfg: &Config,
) -> Result<Vec<DegreeCount>> {
    let mut out = Vec::new();
    for n in degrees {
        let entries: Vec<&TransitiveDbEntry> = db.iter().filter(|e| e.degree == n).collect();
        if entries.is_empty() {
            return Err(CliError::MissingDegree(n));
        }
        let verdicts = entries
            .par_iter()
            .map(|e| {
                primes
                    .iter()
                    .map(|&p| Ok(has_star_p_with(&e.group, p, shortcuts, cfg)?.verdict))
                    .collect::<Result<Vec<bool>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let counts = (0..primes.len()).map(|j| verdicts.iter().filter(|v| v[j]).count() as u64).collect();
        out.push(DegreeCount { degree: n, total: entries.len() as u64, counts });
    }
    Ok(out)
}

/// How a computed column compares with the published one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Match,
    Differs {
        published: u64,
    },
    /// The published count exceeds the published total, so it cannot be right.
    PublishedImpossible {
        published: u64,
    },
    Unpublished,
}

pub fn compare(n: usize, p: u128, computed: u64) -> Comparison {
    match published(n, p) {
        None => Comparison::Unpublished,
        Some((total, count)) if count > total => Comparison::PublishedImpossible { published: count },
        Some((_, count)) if count == computed => Comparison::Match,
        Some((_, count)) => Comparison::Differs { published: count },
    }
}

/// Renders rows as `n t(n) count...` plus a status column. Returns the text
/// and whether every published value was reproduced.
pub fn render(rows: &[DegreeCount], primes: &[u128]) -> (String, bool) {
    let mut s = String::from("n\tt(n)");
    for p in primes {
        s.push_str(&format!("\t(*)_{p}"));
    }
    s.push_str("\tstatus\n");
    let mut ok = true;
    for r in rows {
        s.push_str(&format!("{}\t{}", r.degree, r.total));
        for c in &r.counts {
            s.push_str(&format!("\t{c}"));
        }
        let mut notes = Vec::new();
        if let Some((t, _)) = published(r.degree, 2) {
            if t != r.total {
                ok = false;
                notes.push(format!("t(n) published {t}"));
            }
        }
        for (p, &c) in primes.iter().zip(&r.counts) {
            match compare(r.degree, *p, c) {
                Comparison::Match | Comparison::Unpublished => {}
                Comparison::Differs { published } => {
                    ok = false;
                    notes.push(format!("(*)_{p} published {published}"));
                }
                Comparison::PublishedImpossible { published } => {
                    notes.push(format!("(*)_{p} published {published} exceeds t(n)"));
                }
            }
        }
        let status = if notes.is_empty() {
            if primes.iter().any(|&p| published(r.degree, p).is_some()) {
                "match".to_string()
            } else {
                "-".to_string()
            }
        } else {
            notes.join("; ")
        };
        s.push_str(&format!("\t{status}\n"));
    }
    (s, ok)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::db::parse_db_str;

    #[test]
    fn published_table_shape() {
        assert_eq!(PUBLISHED.len(), 46);
        assert_eq!(published(12, 2), Some((301, 96)));
        assert_eq!(published(10, 3), Some((45, 24)));
        // the only row whose count exceeds its total
        let bad: Vec<usize> = PUBLISHED.iter().filter(|r| r.2 > r.1 || r.3 > r.1).map(|r| r.0).collect();
        assert_eq!(bad, vec![36]);
        assert_eq!(compare(36, 3, 0), Comparison::PublishedImpossible { published: 1113506 });
    }

    #[test]
    fn small_counts() {
        let db = parse_db_str("3 1 : (1,2,3)\n3 2 : (1,2,3) ; (1,2)\n", "t").unwrap();
        let rows = table_counts(&db, 3..=3, &[2, 3], true, &Config::default()).unwrap();
        assert_eq!(rows, vec![DegreeCount { degree: 3, total: 2, counts: vec![1, 2] }]);
        let (text, ok) = render(&rows, &[2, 3]);
        assert!(ok);
        assert_eq!(text, "n\tt(n)\t(*)_2\t(*)_3\tstatus\n3\t2\t1\t2\tmatch\n");
        assert!(matches!(table_counts(&db, 3..=4, &[2], true, &Config::default()), Err(CliError::MissingDegree(4))));
    }
}
