//! Group expressions like `3 Wr (7:3)` and the maximal `(*)_2` table.
//!
//! Atoms: `n` (cyclic of degree n), `p:d` (affine `x -> ax + b` with `a` of
//! order `d`), `Sn`, `An`, `Cn`, `Dn`, `PSL(2,q)`, `PGL(2,q)`, `PGammaL(2,q)`
//! on the projective line, and `n_i` for a transitive database entry. `Wr`
//! is the imprimitive wreath product and associates to the left.

use permstar_core::actions::{action_on_blocks, all_minimal_block_systems};
use permstar_core::constructions::{affine_group, psl2_action, Psl2Variant};
use permstar_core::star::has_star_p;
use permstar_core::wreath::wreath_imprimitive;
use permstar_core::{Config, PermGroup};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(u32),
    Ident(String),
    Sym(char),
}

fn lex(expr: &str) -> Result<Vec<Tok>> {
    let err = |msg: String| CliError::Expression { expr: expr.into(), msg };
    let cs: Vec<char> = expr.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = cs[start..i].iter().collect();
            out.push(Tok::Num(s.parse().map_err(|_| err(format!("number {s} too large")))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < cs.len() && cs[i].is_ascii_alphabetic() {
                i += 1;
            }
            out.push(Tok::Ident(cs[start..i].iter().collect()));
        } else if "():,_".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(err(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

/// Resolves `n_i` labels; return `None` when the entry is unavailable.
pub type Resolver<'a> = &'a dyn Fn(usize, usize) -> Option<PermGroup>;

struct Parser<'a> {
    expr: &'a str,
    toks: Vec<Tok>,
    pos: usize,
    resolve: Option<Resolver<'a>>,
    cfg: &'a Config,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> CliError {
        CliError::Expression { expr: self.expr.into(), msg: msg.into() }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn eat(&mut self, c: char) -> Result<()> {
        match self.next() {
            Some(Tok::Sym(d)) if d == c => Ok(()),
            other => Err(self.err(format!("expected {c:?}, found {other:?}"))),
        }
    }

    fn num(&mut self) -> Result<u32> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(n),
            other => Err(self.err(format!("expected a number, found {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<PermGroup> {
        let mut g = self.atom()?;
        while let Some(Tok::Ident(w)) = self.peek() {
            if w != "Wr" {
                return Err(self.err(format!("unexpected {w:?}")));
            }
            self.pos += 1;
            let k = self.atom()?;
            g = wreath_imprimitive(&g, &k)?;
        }
        Ok(g)
    }

    fn atom(&mut self) -> Result<PermGroup> {
        match self.next() {
            Some(Tok::Sym('(')) => {
                let g = self.expr()?;
                self.eat(')')?;
                Ok(g)
            }
            Some(Tok::Num(n)) => match self.peek() {
                Some(Tok::Sym(':')) => {
                    self.pos += 1;
                    let d = self.num()?;
                    Ok(affine_group(n, d, self.cfg)?)
                }
                Some(Tok::Sym('_')) => {
                    self.pos += 1;
                    let i = self.num()?;
                    let resolve = self.resolve.ok_or_else(|| self.err("no transitive database loaded"))?;
                    resolve(n as usize, i as usize).ok_or_else(|| self.err(format!("database has no entry {n}_{i}")))
                }
                _ => Ok(PermGroup::cyclic(n as usize)?),
            },
            Some(Tok::Ident(name)) => {
                let variant = match name.as_str() {
                    "PSL" => Some(Psl2Variant::Psl),
                    "PGL" => Some(Psl2Variant::Pgl),
                    "PGammaL" => Some(Psl2Variant::PGammaL),
                    _ => None,
                };
                if let Some(v) = variant {
                    self.eat('(')?;
                    if self.num()? != 2 {
                        return Err(self.err("only dimension 2 is supported"));
                    }
                    self.eat(',')?;
                    let q = self.num()?;
                    self.eat(')')?;
                    return Ok(psl2_action(q as u128, v, self.cfg)?);
                }
                let n = self.num()? as usize;
                Ok(match name.as_str() {
                    "S" => PermGroup::symmetric(n)?,
                    "A" => PermGroup::alternating(n)?,
                    "C" => PermGroup::cyclic(n)?,
                    "D" => PermGroup::dihedral(n)?,
                    _ => return Err(self.err(format!("unknown group {name:?}"))),
                })
            }
            other => Err(self.err(format!("unexpected {other:?}"))),
        }
    }
}

/// Builds the permutation group named by `expr`.
pub fn build_expression(expr: &str, resolve: Option<Resolver<'_>>, cfg: &Config) -> Result<PermGroup> {
    let mut p = Parser { expr, toks: lex(expr)?, pos: 0, resolve, cfg };
    let g = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.err(format!("trailing input at token {}", p.pos + 1)));
    }
    Ok(g)
}

/// Listed maximal transitive `(*)_2` groups of degree at most 20.
pub const MAXIMAL_TABLE: &[(usize, &[&str])] = &[
    (2, &["2"]),
    (3, &["3"]),
    (4, &["S4"]),
    (5, &["5"]),
    (6, &["3 Wr 2", "2 Wr 3", "PSL(2,5)"]),
    (7, &["7:3"]),
    (8, &["S8"]),
    (9, &["3 Wr 3"]),
    (10, &["5 Wr 2", "2 Wr 5"]),
    (11, &["11:5"]),
    (12, &["PSL(2,11)", "2 Wr (3 Wr 2)", "2 Wr PSL(2,5)", "3 Wr S4", "PSL(2,5) Wr 2", "S4 Wr 3"]),
    (13, &["13:3"]),
    (14, &["(7:3) Wr 2", "2 Wr (7:3)"]),
    (15, &["5 Wr 3", "3 Wr 5"]),
    (16, &["S16"]),
    (17, &["17"]),
    (18, &["3 Wr 3 Wr 2", "3 Wr 2 Wr 3", "2 Wr 3 Wr 3", "3 Wr PSL(2,5)", "PSL(2,5) Wr 3"]),
    (19, &["19:9"]),
    (20, &["20_89", "PSL(2,19)", "5 Wr S4", "2 Wr 5 Wr 2", "S4 Wr 5"]),
];

/// Groups with `(*)_2` that the table omits because they are not maximal.
pub const NON_MAXIMAL_EXAMPLES: &[(usize, &str)] = &[(12, "(3 Wr 2) Wr 2")];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowStatus {
    Pass,
    Fail(String),
    /// The entry needs a database that was not supplied.
    Skipped(String),
}

#[derive(Debug, Clone)]
pub struct MaximalRow {
    pub degree: usize,
    pub expr: &'static str,
    pub wreath: bool,
    pub order: Option<u128>,
    pub status: RowStatus,
}

fn check_entry(degree: usize, expr: &'static str, resolve: Option<Resolver<'_>>, cfg: &Config) -> MaximalRow {
    let wreath = expr.contains("Wr");
    let mut row = MaximalRow { degree, expr, wreath, order: None, status: RowStatus::Pass };
    if expr.contains('_') && resolve.is_none() {
        row.status = RowStatus::Skipped("needs a transitive database".into());
        return row;
    }
    let g = match build_expression(expr, resolve, cfg) {
        Ok(g) => g,
        Err(e) => {
            row.status = RowStatus::Fail(e.to_string());
            return row;
        }
    };
    let verdict = (|| -> Result<Option<String>> {
        row.order = Some(g.order()?);
        if g.degree() != degree {
            return Ok(Some(format!("degree {}", g.degree())));
        }
        if !g.is_transitive() {
            return Ok(Some("not transitive".into()));
        }
        if !has_star_p(&g, 2, cfg)?.verdict {
            return Ok(Some("no (*)_2".into()));
        }
        Ok(None)
    })();
    row.status = match verdict {
        Ok(None) => RowStatus::Pass,
        Ok(Some(msg)) => RowStatus::Fail(msg),
        Err(e) => RowStatus::Fail(e.to_string()),
    };
    row
}

/// Checks every listed entry with degree in `degrees`, then the non-maximal
/// examples in range.
pub fn maximal_table_check(
    degrees: std::ops::RangeInclusive<usize>,
    resolve: Option<Resolver<'_>>,
    cfg: &Config,
) -> Vec<MaximalRow> {
    let mut rows = Vec::new();
    for &(n, entries) in MAXIMAL_TABLE {
        if degrees.contains(&n) {
            rows.extend(entries.iter().map(|e| check_entry(n, e, resolve, cfg)));
        }
    }
    for &(n, e) in NON_MAXIMAL_EXAMPLES {
        if degrees.contains(&n) {
            rows.push(check_entry(n, e, resolve, cfg));
        }
    }
    rows
}

/// For an imprimitive group that is not a wreath product, the minimal block
/// systems whose quotient lacks `(*)_p` (as block size, block count).
pub fn quotients_without_star(g: &PermGroup, p: u128, cfg: &Config) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for b in all_minimal_block_systems(g)? {
        let top = action_on_blocks(g, &b)?.target;
        if !has_star_p(&top, p, cfg)?.verdict {
            out.push((b.block_size(), b.block_count()));
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn render(rows: &[MaximalRow]) -> (String, bool) {
    let mut s = String::new();
    let mut ok = true;
    for r in rows {
        let order = r.order.map(|o| o.to_string()).unwrap_or_else(|| "-".into());
        let status = match &r.status {
            RowStatus::Pass => "PASS".to_string(),
            RowStatus::Fail(m) => {
                ok = false;
                format!("FAIL {m}")
            }
            RowStatus::Skipped(m) => format!("SKIP {m}"),
        };
        s.push_str(&format!("{}\t{}\torder={}\t{}\n", r.degree, r.expr, order, status));
    }
    (s, ok)
}
