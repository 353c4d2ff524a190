//! The `(*)_p` test.
//!
//! A transitive group of degree `n` has `(*)_p` iff every orbit of a Sylow
//! p-subgroup has length `n_p`; the minimum orbit length is always `n_p`.
//! An intransitive group has `(*)_p` iff each transitive constituent has it.
//! Cheap sufficient conditions are tried first, in this order:
//!
//! 1. `p ∤ |G|`, or `p ∤ |G_ω|` for a transitive constituent;
//! 2. the constituent has prime-power degree `p^k`;
//! 3. `p·n_p > n`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::actions::action_on_orbit;
use crate::config::Config;
use crate::error::{precondition, Error, Result};
use crate::group::PermGroup;
use crate::numth::{is_prime, pp};
use crate::sylow::{sylow_subgroup, sylow_with, SylowMethod};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    ShortcutPnp,
    ShortcutStabCoprime,
    ShortcutPrimePowerDegree,
    OrbitLengthTest,
    PerOrbitAggregate,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::ShortcutPnp => "shortcut-pnp",
            Rule::ShortcutStabCoprime => "shortcut-stab-coprime",
            Rule::ShortcutPrimePowerDegree => "shortcut-prime-power-degree",
            Rule::OrbitLengthTest => "orbit-length-test",
            Rule::PerOrbitAggregate => "per-orbit-aggregate",
        }
    }
}

/// One transitive constituent of the action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constituent {
    pub points: Vec<usize>,
    pub n: usize,
    pub n_p: usize,
    pub order: u128,
    /// Sylow orbit lengths on this orbit, when the orbit test ran.
    pub orbit_lengths: Option<Vec<usize>>,
    pub verdict: bool,
    pub decided_by: Rule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarReport {
    pub p: u128,
    pub degree: usize,
    pub verdict: bool,
    pub decided_by: Rule,
    pub constituents: Vec<Constituent>,
    pub sylow_method: Option<SylowMethod>,
}

impl StarReport {
    /// Sylow orbit lengths over the whole domain, if every constituent ran
    /// the orbit test.
    pub fn orbit_lengths(&self) -> Option<Vec<usize>> {
        let mut all = Vec::new();
        for c in &self.constituents {
            all.extend_from_slice(c.orbit_lengths.as_ref()?);
        }
        all.sort_unstable();
        Some(all)
    }

    /// `degree=<n> p=<p> verdict=<bool> rule=<name> orbits=<multiset>`.
    pub fn machine_line(&self) -> String {
        let orbits = match self.orbit_lengths() {
            Some(v) => format!("{}", MultisetDisplay(&v)),
            None => String::from("-"),
        };
        format!(
            "degree={} p={} verdict={} rule={} orbits={}",
            self.degree,
            self.p,
            self.verdict,
            self.decided_by.name(),
            orbits
        )
    }

    pub fn human(&self) -> String {
        let mut s = format!(
            "Property (*)_{} on {} points: {}\n  decided by: {}\n",
            self.p,
            self.degree,
            if self.verdict { "holds" } else { "fails" },
            self.decided_by.name()
        );
        if let Some(m) = self.sylow_method {
            s.push_str(&format!("  sylow method: {}\n", m.name()));
        }
        for c in &self.constituents {
            s.push_str(&format!(
                "  orbit of {} (least point {}): n_p = {}, |G^orbit| = {}, {} by {}",
                c.n,
                c.points[0] + 1,
                c.n_p,
                c.order,
                if c.verdict { "holds" } else { "fails" },
                c.decided_by.name()
            ));
            if let Some(v) = &c.orbit_lengths {
                s.push_str(&format!(", Sylow orbits {}", MultisetDisplay(v)));
            }
            s.push('\n');
        }
        s
    }
}

struct MultisetDisplay<'a>(&'a [usize]);

impl core::fmt::Display for MultisetDisplay<'_> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

fn is_power_of(n: usize, p: u128) -> bool {
    pp(n as u128, p) == n as u128
}

/// Decides `(*)_p` with the shortcut ladder enabled.
pub fn has_star_p(g: &PermGroup, p: u128, cfg: &Config) -> Result<StarReport> {
    has_star_p_with(g, p, true, cfg)
}

/// Decides `(*)_p`; with `shortcuts = false` every constituent runs the
/// orbit-length test.
pub fn has_star_p_with(g: &PermGroup, p: u128, shortcuts: bool, cfg: &Config) -> Result<StarReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let order = g.order()?;
    let orbits = g.orbits();
    let transitive = orbits.len() == 1;
    if shortcuts && order % p != 0 {
        let constituents = orbits
            .orbits()
            .iter()
            .map(|o| Constituent {
                points: o.clone(),
                n: o.len(),
                n_p: pp(o.len() as u128, p) as usize,
                order: 0,
                orbit_lengths: None,
                verdict: true,
                decided_by: Rule::ShortcutStabCoprime,
            })
            .collect();
        return Ok(StarReport {
            p,
            degree: g.degree(),
            verdict: true,
            decided_by: Rule::ShortcutStabCoprime,
            constituents,
            sylow_method: None,
        });
    }
    let mut constituents = Vec::new();
    let mut method = None;
    for o in orbits.orbits() {
        let action;
        let a = if transitive {
            g
        } else {
            action = action_on_orbit(g, o)?;
            &action.target
        };
        let (c, m) = constituent(a, o, p, shortcuts, cfg)?;
        method = method.or(m);
        constituents.push(c);
    }
    let verdict = constituents.iter().all(|c| c.verdict);
    let decided_by = if transitive { constituents[0].decided_by } else { Rule::PerOrbitAggregate };
    Ok(StarReport { p, degree: g.degree(), verdict, decided_by, constituents, sylow_method: method })
}

fn constituent(
    a: &PermGroup,
    points: &[usize],
    p: u128,
    shortcuts: bool,
    cfg: &Config,
) -> Result<(Constituent, Option<SylowMethod>)> {
    let n = a.degree();
    let n_p = pp(n as u128, p) as usize;
    let order = a.order()?;
    let mut c = Constituent {
        points: points.to_vec(),
        n,
        n_p,
        order,
        orbit_lengths: None,
        verdict: true,
        decided_by: Rule::OrbitLengthTest,
    };
    if shortcuts {
        let stab_order = order / n as u128;
        let rule = if stab_order % p != 0 {
            Some(Rule::ShortcutStabCoprime)
        } else if is_power_of(n, p) {
            Some(Rule::ShortcutPrimePowerDegree)
        } else if (p as usize).saturating_mul(n_p) > n {
            Some(Rule::ShortcutPnp)
        } else {
            None
        };
        if let Some(rule) = rule {
            c.decided_by = rule;
            return Ok((c, None));
        }
    }
    let s = sylow_subgroup(a, p, cfg)?;
    let lengths = s.orbit_lengths();
    c.verdict = lengths.iter().all(|&l| l == n_p);
    c.orbit_lengths = Some(lengths);
    Ok((c, Some(s.method)))
}

/// The orbit criterion evaluated with a given Sylow subgroup `sylow` of `g`:
/// on every `g`-orbit `Δ`, all `sylow`-orbits inside `Δ` have length `|Δ|_p`.
pub fn criterion_with_sylow(g: &PermGroup, sylow: &PermGroup, p: u128) -> bool {
    let gorbits = g.orbits();
    let porbits = sylow.orbits();
    porbits.orbits().iter().all(|o| {
        let n = gorbits.orbits()[gorbits.orbit_of(o[0])].len();
        o.len() as u128 == pp(n as u128, p)
    })
}

/// Definition-level check by enumeration: a Sylow subgroup `P` is found by
/// the enumerative oracle, then `|P_ω|` is compared with the p-part of
/// `|G_ω|` for every point, counting stabilizer elements directly.
pub fn star_by_definition(g: &PermGroup, p: u128, cfg: &Config) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = g.degree();
    let gel: Vec<_> = g.elements(cfg.max_enum)?.collect();
    let sylow = sylow_with(g, p, SylowMethod::Oracle, cfg)?.subgroup;
    let pel: Vec<_> = sylow.elements(cfg.max_enum)?.collect();
    for w in 0..n {
        let g_w = gel.iter().filter(|x| x.fixes(w)).count() as u128;
        let p_w = pel.iter().filter(|x| x.fixes(w)).count() as u128;
        if p_w != pp(g_w, p) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For a transitive subgroup `h ≤ g`: false exactly when `g` has `(*)_p`
/// but `h` does not, which would contradict closure under transitive
/// subgroups.
pub fn subgroup_monotonicity_check(g: &PermGroup, h: &PermGroup, p: u128, cfg: &Config) -> Result<bool> {
    if !h.is_subgroup_of(g)? {
        return Err(precondition("H is not contained in G"));
    }
    if !h.is_transitive() {
        return Err(precondition("H is not transitive"));
    }
    let big = has_star_p(g, p, cfg)?.verdict;
    let small = has_star_p(h, p, cfg)?.verdict;
    Ok(!big || small)
}
