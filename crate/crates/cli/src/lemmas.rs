//! Self-checks behind `verify-lemmas`. Each suite returns named checks with
//! the observed values, so a failure says what was found.

use permstar_core::actions::{action_on_blocks, block_system_containing};
use permstar_core::backtrack::centralizer;
use permstar_core::constructions::{
    count_fixed_subspaces, diagonal_action, external_lines_action, gammal1_sylow, pgl2_pdivisible_example, psl2_action,
    tuple_block_example, Psl2Variant,
};
use permstar_core::fixtures::fixture;
use permstar_core::numth::{factorize, is_prime, morenum_holds, p_part, ppd_p_part, prime_power, Morenum};
use permstar_core::star::has_star_p;
use permstar_core::sylow::sylow_orbit_lengths;
use permstar_core::wreath::{wreath_imprimitive, wreath_product_action};
use permstar_core::{Config, PermGroup, Permutation};

use crate::error::Result;
use crate::maximal::{maximal_table_check, Resolver, RowStatus};

pub const SUITES: &[&str] = &["ppd", "morenum", "semilinear", "sporadic", "families", "wreath", "maximal"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), passed, detail: detail.into() }
}

fn naive_p_part(mut n: u128, p: u128) -> u128 {
    let mut r = 1;
    while n % p == 0 {
        n /= p;
        r *= p;
    }
    r
}

pub fn ppd_suite() -> Result<Vec<Check>> {
    let mut bad = Vec::new();
    let mut count = 0;
    for q in (2u128..=16).filter(|&q| prime_power(q).is_some()) {
        for m in 1u32..=12 {
            let n = q.pow(m) - 1;
            for (p, _) in factorize(n)? {
                count += 1;
                if ppd_p_part(q, m, p)? != naive_p_part(n, p) {
                    bad.push(format!("q={q} m={m} p={p}"));
                }
            }
        }
    }
    Ok(vec![check(
        "closed form = direct p-part, q <= 16, m <= 12",
        bad.is_empty(),
        format!("{count} triples, mismatches {bad:?}"),
    )])
}

pub fn morenum_suite() -> Result<Vec<Check>> {
    let mut eq = Vec::new();
    let mut violated = Vec::new();
    for r in (2u128..=13).filter(|&r| is_prime(r)) {
        for p in (3u128..=11).filter(|&p| is_prime(p)) {
            for f in (3u32..=12).filter(|&f| f as u128 % p == 0) {
                if (r.pow(f) + 1) % p != 0 {
                    continue;
                }
                match morenum_holds(r, p, f)? {
                    Morenum::Equality => eq.push((r, p, f)),
                    Morenum::Violated => violated.push((r, p, f)),
                    Morenum::Strict => {}
                }
            }
        }
    }
    Ok(vec![
        check("no violation for r <= 13, p <= 11, f <= 12", violated.is_empty(), format!("{violated:?}")),
        check("equality exactly at (2,3,3)", eq == [(2, 3, 3)], format!("{eq:?}")),
    ])
}

fn cyclic_span(x: &Permutation) -> Vec<Permutation> {
    let mut v = vec![Permutation::identity(x.degree())];
    let mut y = x.clone();
    while !y.is_identity() {
        v.push(y.clone());
        y = y.mul(x);
    }
    v.sort();
    v
}

fn semilinear_case(r: u32, d: u32, f: u32, p: u32, cfg: &Config) -> Result<Vec<Check>> {
    let tag = format!("(r,d,f,p)=({r},{d},{f},{p})");
    let s = gammal1_sylow(r, d, f, p, cfg)?;
    let (rr, pp) = (r as u128, p as u128);
    let qp = naive_p_part(rr.pow(d * f) - 1, pp);
    let mut out = Vec::new();

    let xs: Vec<Permutation> = s.x.elements(cfg.max_enum)?.collect();
    let mut subgroups: Vec<Vec<Permutation>> = Vec::new();
    for x in &xs {
        if x.order()? == pp && !s.y.contains(x)? {
            let span = cyclic_span(x);
            if !subgroups.contains(&span) {
                subgroups.push(span);
            }
        }
    }
    out.push(check(
        format!("{tag}: order-{p} subgroups outside Y"),
        subgroups.len() as u128 == pp,
        format!("found {}, expected {p}", subgroups.len()),
    ));

    let c = centralizer(&s.y, &s.sigma)?.order()?;
    out.push(check(
        format!("{tag}: |C_Y(sigma)| = (r^df - 1)_p / p"),
        c == qp / pp,
        format!("found {c}, expected {}", qp / pp),
    ));

    let fixed = count_fixed_subspaces(&s.field, &s.sigma, f)? as u128;
    let bound = rr.pow(d * f / p) - 1;
    out.push(check(format!("{tag}: fixed subspaces <= r^(df/p) - 1"), fixed <= bound, format!("{fixed} <= {bound}")));
    Ok(out)
}

pub fn semilinear_suite(cfg: &Config) -> Result<Vec<Check>> {
    let mut out = semilinear_case(2, 2, 3, 3, cfg)?;
    out.extend(semilinear_case(2, 4, 3, 3, cfg)?);
    Ok(out)
}

pub fn sporadic_suite(cfg: &Config) -> Result<Vec<Check>> {
    let rows: &[(&str, u128, &[usize])] = &[
        ("M11-deg12", 2, &[4, 8]),
        ("M11-deg12", 3, &[3, 3, 3, 3]),
        ("M12-deg12", 2, &[4, 8]),
        ("M12-deg12", 3, &[3, 9]),
        ("A7-deg15", 3, &[3, 3, 9]),
        ("M22-deg22", 2, &[2, 4, 16]),
        ("M22:2-deg22", 2, &[2, 4, 16]),
        ("M24", 2, &[8, 16]),
        ("M24", 3, &[3, 3, 9, 9]),
    ];
    let mut out = Vec::new();
    for &(name, p, expect) in rows {
        let got = sylow_orbit_lengths(&fixture(name)?, p, cfg)?;
        out.push(check(format!("{name} p={p} orbits"), got == expect, format!("{got:?}")));
    }
    let g = external_lines_action(8, Psl2Variant::PGammaL, cfg)?;
    let got = sylow_orbit_lengths(&g, 2, cfg)?;
    out.push(check("PGammaL(2,8) deg 28 p=2 orbits", got == [4; 7], format!("{got:?}")));
    Ok(out)
}

pub fn families_suite(cfg: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let star = |g: &PermGroup, p: u128| -> Result<bool> { Ok(has_star_p(g, p, cfg)?.verdict) };

    let spot: Vec<(&str, PermGroup, u128, bool)> = vec![
        ("A5 deg 6", external_lines_action(4, Psl2Variant::Psl, cfg)?, 2, true),
        ("M11 deg 12", fixture("M11-deg12")?, 3, true),
        ("PGammaL(2,8) deg 28", external_lines_action(8, Psl2Variant::PGammaL, cfg)?, 2, true),
        ("PSL(2,8) deg 28", external_lines_action(8, Psl2Variant::Psl, cfg)?, 2, true),
        ("M12 deg 12", fixture("M12-deg12")?, 3, false),
    ];
    for (name, g, p, expect) in spot {
        let v = star(&g, p)?;
        out.push(check(format!("{name} (*)_{p} = {expect}"), v == expect, format!("verdict {v}")));
    }

    for q in [4u128, 8, 16, 32] {
        let g = external_lines_action(q, Psl2Variant::Psl, cfg)?;
        let n = g.degree() as u128;
        let lengths = sylow_orbit_lengths(&g, 2, cfg)?;
        let stab = g.point_stabilizer(0)?.order()?;
        let n2 = p_part(n, 2)?.p_part;
        let ok = lengths.iter().all(|&l| l as u128 == q / 2) && star(&g, 2)? && 2 * n2 < n && stab == 2 * (q + 1);
        out.push(check(
            format!("external lines q={q}"),
            ok,
            format!("n={n} orbits all {}: {}, |stab|={stab}", q / 2, lengths.iter().all(|&l| l as u128 == q / 2)),
        ));
    }

    for (q, p) in [(4u128, 2u128), (8, 2), (9, 3)] {
        let ex = pgl2_pdivisible_example(q, cfg)?;
        let y = star(&ex.y.target, p)?;
        let quot = star(&ex.quotient.target, p)?;
        let div = ex.blocks.block_size() as u128 % p == 0;
        out.push(check(
            format!("tuple blocks q={q} p={p}"),
            y && div && !quot,
            format!("Y {y}, block size {}, G^B {quot}", ex.blocks.block_size()),
        ));
    }
    let a5 = psl2_action(4, Psl2Variant::Psl, cfg)?;
    let ex = tuple_block_example(&a5, &[0, 1], cfg)?;
    let got = sylow_orbit_lengths(&ex.quotient.target, 2, cfg)?;
    out.push(check("A5 on ordered pairs: G^B Sylow-2 orbits", got == [2, 2, 2, 4], format!("{got:?}")));

    let d12 = fixture("D12-regular")?;
    let b = block_system_containing(&d12, &[0, 3, 6])?;
    let top = action_on_blocks(&d12, &b)?.target;
    let (whole, quot) = (star(&d12, 2)?, star(&top, 2)?);
    out.push(check(
        "D12 regular has (*)_2, its S3 quotient does not",
        whole && !quot && top.order()? == 6 && top.degree() == 3,
        format!("G {whole}, G^B {quot} (order {}, degree {})", top.order()?, top.degree()),
    ));

    let diag = diagonal_action(&PermGroup::alternating(5)?, cfg)?;
    let (s2, s5) = (star(&diag, 2)?, star(&diag, 5)?);
    out.push(check(
        "diagonal A5 deg 60 fails (*)_2 and (*)_5",
        diag.degree() == 60 && !s2 && !s5,
        format!("degree {}, (*)_2 {s2}, (*)_5 {s5}", diag.degree()),
    ));
    Ok(out)
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

pub fn wreath_suite(cfg: &Config) -> Result<Vec<Check>> {
    let groups: Vec<(&str, PermGroup)> = vec![
        ("C2", PermGroup::cyclic(2)?),
        ("C3", PermGroup::cyclic(3)?),
        ("S3", PermGroup::symmetric(3)?),
        ("C4", PermGroup::cyclic(4)?),
        ("A4", PermGroup::alternating(4)?),
        ("S4", PermGroup::symmetric(4)?),
        ("D5", PermGroup::dihedral(5)?),
        ("A5", PermGroup::alternating(5)?),
    ];
    let star = |g: &PermGroup, p: u128| -> Result<bool> { Ok(has_star_p(g, p, cfg)?.verdict) };
    let mut out = Vec::new();
    let (mut imp, mut prod) = (Vec::new(), Vec::new());
    let (mut imp_pairs, mut prod_pairs) = (0, 0);
    for (hn, h) in &groups {
        for (kn, k) in groups.iter().take(5) {
            let g = wreath_imprimitive(h, k)?;
            imp_pairs += 1;
            for p in [2u128, 3] {
                if star(&g, p)? != (star(h, p)? && star(k, p)?) {
                    imp.push(format!("{hn} Wr {kn} p={p}"));
                }
            }
        }
        for (kn, k) in groups.iter().take(3) {
            let g = wreath_product_action(h, k, cfg)?;
            prod_pairs += 1;
            for p in [2u128, 3] {
                let expect = if k.order()? % p != 0 { star(h, p)? } else { is_power_of(h.degree(), p as usize) };
                if star(&g, p)? != expect {
                    prod.push(format!("{hn} Wr {kn} p={p}"));
                }
            }
        }
    }
    out.push(check(format!("imprimitive law over {imp_pairs} pairs"), imp.is_empty(), format!("failures {imp:?}")));
    out.push(check(
        format!("product-action laws over {prod_pairs} pairs"),
        prod.is_empty(),
        format!("failures {prod:?}"),
    ));

    let get = |n: &str| groups.iter().find(|(m, _)| *m == n).map(|(_, g)| g.clone()).expect("named group");
    let witnesses = [
        ("S3", "C2", 2u128, false),
        ("S4", "C2", 2, true),
        ("S3", "C3", 3, true),
        ("A5", "C2", 2, false),
        ("A5", "C2", 5, true),
    ];
    for (h, k, p, expect) in witnesses {
        let g = wreath_product_action(&get(h), &get(k), cfg)?;
        let v = star(&g, p)?;
        out.push(check(
            format!("product {h} Wr {k} deg {} (*)_{p} = {expect}", g.degree()),
            v == expect,
            format!("verdict {v}"),
        ));
    }
    Ok(out)
}

pub fn maximal_suite(resolve: Option<Resolver<'_>>, cfg: &Config) -> Result<Vec<Check>> {
    Ok(maximal_table_check(2..=20, resolve, cfg)
        .into_iter()
        .filter(|r| !matches!(r.status, RowStatus::Skipped(_)))
        .map(|r| {
            let detail = match &r.status {
                RowStatus::Fail(m) => m.clone(),
                _ => format!("order {}", r.order.unwrap_or(0)),
            };
            check(format!("degree {}: {} has (*)_2", r.degree, r.expr), r.status == RowStatus::Pass, detail)
        })
        .collect())
}

/// Checks grouped by suite name.
pub type SuiteResults = Vec<(String, Vec<Check>)>;

/// Runs one suite by name, or all of them for `all`.
pub fn run_suite(name: &str, resolve: Option<Resolver<'_>>, cfg: &Config) -> Option<Result<SuiteResults>> {
    let one = |s: &str| -> Result<Vec<Check>> {
        match s {
            "ppd" => ppd_suite(),
            "morenum" => morenum_suite(),
            "semilinear" => semilinear_suite(cfg),
            "sporadic" => sporadic_suite(cfg),
            "families" => families_suite(cfg),
            "wreath" => wreath_suite(cfg),
            "maximal" => maximal_suite(resolve, cfg),
            _ => unreachable!(),
        }
    };
    let names: Vec<&str> = match name {
        "all" => SUITES.to_vec(),
        s if SUITES.contains(&s) => vec![s],
        _ => return None,
    };
    Some(names.into_iter().map(|s| Ok((s.to_string(), one(s)?))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_theory_suites_pass() {
        for c in ppd_suite().unwrap().into_iter().chain(morenum_suite().unwrap()) {
            assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", None, &Config::default()).is_none());
    }
}
