use permstar_core::actions::{action_on_blocks, block_system_containing};
use permstar_core::constructions::{
    diagonal_action, external_lines_action, pgl2_pdivisible_example, psl2_action, tuple_block_example, Psl2Variant,
};
use permstar_core::fixtures::fixture;
use permstar_core::star::has_star_p;
use permstar_core::sylow::sylow_orbit_lengths;
use permstar_core::{Config, PermGroup};

fn cfg() -> Config {
    Config::default()
}

#[test]
fn external_lines_family() {
    let c = cfg();
    for q in [4u128, 8, 16, 32] {
        let g = external_lines_action(q, Psl2Variant::Psl, &c).unwrap();
        let n = (q * (q - 1) / 2) as usize;
        assert_eq!(g.degree(), n);
        assert!(g.is_transitive());
        let lengths = sylow_orbit_lengths(&g, 2, &c).unwrap();
        assert!(lengths.iter().all(|&l| l as u128 == q / 2), "q={q}: {lengths:?}");
        assert!(has_star_p(&g, 2, &c).unwrap().verdict);
        let n2 = n & n.wrapping_neg();
        assert!(2 * n2 < n);
        let stab = g.point_stabilizer(0).unwrap().order().unwrap();
        assert_eq!(stab, 2 * (q + 1));
    }
}

#[test]
fn pgammal_28() {
    let c = cfg();
    let g = external_lines_action(8, Psl2Variant::PGammaL, &c).unwrap();
    assert_eq!(sylow_orbit_lengths(&g, 2, &c).unwrap(), vec![4; 7]);
    assert!(has_star_p(&g, 2, &c).unwrap().verdict);
    let h = external_lines_action(8, Psl2Variant::Psl, &c).unwrap();
    assert!(h.is_subgroup_of(&g).unwrap());
    assert!(has_star_p(&h, 2, &c).unwrap().verdict);
}

#[test]
fn a5_degree_6() {
    let c = cfg();
    let g = external_lines_action(4, Psl2Variant::Psl, &c).unwrap();
    assert!(has_star_p(&g, 2, &c).unwrap().verdict);
    let h = psl2_action(5, Psl2Variant::Psl, &c).unwrap();
    assert!(has_star_p(&h, 2, &c).unwrap().verdict);
}

#[test]
fn tuple_block_family() {
    let c = cfg();
    for (q, p) in [(4u128, 2u128), (8, 2), (9, 3)] {
        let ex = pgl2_pdivisible_example(q, &c).unwrap();
        assert!(has_star_p(&ex.y.target, p, &c).unwrap().verdict, "Y for q={q}");
        assert_eq!(ex.blocks.block_size() as u128 % p, 0);
        assert!(ex.blocks.is_invariant(&ex.y.target));
        assert!(!has_star_p(&ex.quotient.target, p, &c).unwrap().verdict, "G^B for q={q}");
    }
}

#[test]
fn a5_on_ordered_pairs() {
    let c = cfg();
    let a5 = psl2_action(4, Psl2Variant::Psl, &c).unwrap();
    let ex = tuple_block_example(&a5, &[0, 1], &c).unwrap();
    assert_eq!(ex.y.target.degree(), 20);
    assert!(has_star_p(&ex.y.target, 2, &c).unwrap().verdict);
    assert_eq!(sylow_orbit_lengths(&ex.quotient.target, 2, &c).unwrap(), vec![2, 2, 2, 4]);
    assert!(!has_star_p(&ex.quotient.target, 2, &c).unwrap().verdict);
}

#[test]
fn d12_regular_quotient() {
    let c = cfg();
    let g = fixture("D12-regular").unwrap();
    assert!(has_star_p(&g, 2, &c).unwrap().verdict);
    // points 1, 4, 7, 10 (1-based) form a block: the orbit of 1 under a Klein four-subgroup
    let b = block_system_containing(&g, &[0, 3, 6]).unwrap();
    assert_eq!(b.block_size(), 4);
    let q = action_on_blocks(&g, &b).unwrap();
    assert_eq!((q.target.degree(), q.target.order().unwrap()), (3, 6));
    assert!(!has_star_p(&q.target, 2, &c).unwrap().verdict);
}

#[test]
fn diagonal_negative() {
    let c = cfg();
    let a5 = PermGroup::alternating(5).unwrap();
    let g = diagonal_action(&a5, &c).unwrap();
    assert_eq!((g.degree(), g.order().unwrap()), (60, 3600));
    assert!(g.is_transitive());
    assert!(!has_star_p(&g, 2, &c).unwrap().verdict);
    assert!(!has_star_p(&g, 5, &c).unwrap().verdict);
    let c3 = PermGroup::cyclic(3).unwrap();
    let d = diagonal_action(&c3, &c).unwrap();
    let stab = d.point_stabilizer(0).unwrap().order().unwrap();
    assert_eq!(d.order().unwrap(), stab * d.orbit(0).len() as u128);
}
