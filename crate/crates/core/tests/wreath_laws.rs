use permstar_core::star::{has_star_p, has_star_p_with};
use permstar_core::wreath::{wreath_imprimitive, wreath_product_action};
use permstar_core::{Config, PermGroup};

fn named() -> Vec<(&'static str, PermGroup)> {
    vec![
        ("C2", PermGroup::cyclic(2).unwrap()),
        ("C3", PermGroup::cyclic(3).unwrap()),
        ("S3", PermGroup::symmetric(3).unwrap()),
        ("C4", PermGroup::cyclic(4).unwrap()),
        ("A4", PermGroup::alternating(4).unwrap()),
        ("S4", PermGroup::symmetric(4).unwrap()),
        ("D5", PermGroup::dihedral(5).unwrap()),
        ("A5", PermGroup::alternating(5).unwrap()),
        ("C6", PermGroup::cyclic(6).unwrap()),
    ]
}

fn get(name: &str) -> PermGroup {
    named().into_iter().find(|(n, _)| *n == name).unwrap().1
}

/// Verdict through the generic Sylow path, ignoring wreath structure.
fn star_plain(g: &PermGroup, p: u128, cfg: &Config) -> bool {
    let plain = PermGroup::new(g.degree(), g.generators().to_vec()).unwrap();
    has_star_p(&plain, p, cfg).unwrap().verdict
}

fn star(g: &PermGroup, p: u128, cfg: &Config) -> bool {
    let a = has_star_p(g, p, cfg).unwrap().verdict;
    let b = star_plain(g, p, cfg);
    assert_eq!(a, b, "structural and generic verdicts differ");
    let c = has_star_p_with(g, p, false, cfg).unwrap().verdict;
    assert_eq!(a, c, "shortcut and orbit-test verdicts differ");
    a
}

fn is_power_of(n: usize, p: usize) -> bool {
    let mut n = n;
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

#[test]
fn imprimitive_iff_both_factors() {
    let cfg = Config::default();
    let hs = ["C2", "C3", "S3", "A4", "S4", "D5", "A5", "C6"];
    let ks = ["C2", "C3", "S3", "C4", "A4", "D5"];
    let mut pairs = 0;
    for h in hs {
        for k in ks {
            let (hg, kg) = (get(h), get(k));
            let g = wreath_imprimitive(&hg, &kg).unwrap();
            for p in [2u128, 3] {
                let expect = star(&hg, p, &cfg) && star(&kg, p, &cfg);
                assert_eq!(star(&g, p, &cfg), expect, "{h} Wr {k}, p = {p}");
            }
            pairs += 1;
        }
    }
    assert!(pairs >= 12);
}

#[test]
fn product_action_laws() {
    let cfg = Config::default();
    let hs = ["C2", "C3", "S3", "C4", "A4", "S4", "D5", "A5", "C6"];
    let ks: Vec<(&str, PermGroup)> = vec![
        ("C2", PermGroup::cyclic(2).unwrap()),
        ("C3", PermGroup::cyclic(3).unwrap()),
        ("S3", PermGroup::symmetric(3).unwrap()),
        ("1on2", PermGroup::trivial(2)),
    ];
    let mut pairs = 0;
    for h in hs {
        for (kn, kg) in &ks {
            let hg = get(h);
            let g = wreath_product_action(&hg, kg, &cfg).unwrap();
            let m = hg.degree();
            for p in [2u128, 3] {
                let expect = if kg.order().unwrap() % p != 0 { star(&hg, p, &cfg) } else { is_power_of(m, p as usize) };
                assert_eq!(star(&g, p, &cfg), expect, "{h} Wr {kn} product, p = {p}");
            }
            pairs += 1;
        }
    }
    assert!(pairs >= 12);
}

#[test]
fn product_action_witnesses() {
    let cfg = Config::default();
    let c2 = PermGroup::cyclic(2).unwrap();
    let c3 = PermGroup::cyclic(3).unwrap();
    let s3w = wreath_product_action(&get("S3"), &c2, &cfg).unwrap();
    assert_eq!(s3w.degree(), 9);
    assert!(!star(&s3w, 2, &cfg));
    let s4w = wreath_product_action(&get("S4"), &c2, &cfg).unwrap();
    assert_eq!(s4w.degree(), 16);
    assert!(star(&s4w, 2, &cfg));
    let s3c3 = wreath_product_action(&get("S3"), &c3, &cfg).unwrap();
    assert_eq!(s3c3.degree(), 27);
    assert!(star(&s3c3, 3, &cfg));
    let a5w = wreath_product_action(&get("A5"), &c2, &cfg).unwrap();
    assert!(!star(&a5w, 2, &cfg));
    assert!(star(&a5w, 5, &cfg));
}

#[test]
fn nested_wreath() {
    let cfg = Config::default();
    let c2 = PermGroup::cyclic(2).unwrap();
    let c3 = PermGroup::cyclic(3).unwrap();
    let inner = wreath_imprimitive(&c3, &c2).unwrap();
    let g = wreath_imprimitive(&inner, &c2).unwrap();
    assert_eq!((g.degree(), g.order().unwrap()), (12, 18 * 18 * 2));
    assert!(star(&g, 2, &cfg));
}
