use permstar_core::actions::{action_on_blocks, all_minimal_block_systems, block_restriction};
use permstar_core::numth::p_part;
use permstar_core::star::{has_star_p, has_star_p_with, star_by_definition};
use permstar_core::sylow::sylow_subgroup;
use permstar_core::{Config, PermGroup, Permutation};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

fn group() -> impl Strategy<Value = PermGroup> {
    (2usize..=8)
        .prop_flat_map(|n| prop::collection::vec(perm(n), 1..=3).prop_map(move |g| PermGroup::new(n, g).unwrap()))
}

fn prime() -> impl Strategy<Value = u128> {
    prop::sample::select(vec![2u128, 3, 5, 7])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_laws(a in perm(7), b in perm(7), c in perm(7)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_identity());
        prop_assert_eq!(a.mul(&b).image(3), b.image(a.image(3)));
        prop_assert_eq!(a.conjugate(&b), b.inverse().mul(&a).mul(&b));
        prop_assert!(a.pow(a.order().unwrap()).is_identity());
        let text = a.to_cycle_string();
        prop_assert_eq!(Permutation::parse_cycles(7, &text).unwrap(), a);
    }

    #[test]
    fn orbit_stabilizer(g in group()) {
        let order = g.order().unwrap();
        for w in 0..g.degree() {
            let stab = g.point_stabilizer(w).unwrap().order().unwrap();
            prop_assert_eq!(stab * g.orbit(w).len() as u128, order);
        }
    }

    #[test]
    fn sylow_has_full_p_part(g in group(), p in prime()) {
        let cfg = Config::default();
        let s = sylow_subgroup(&g, p, &cfg).unwrap();
        let order = g.order().unwrap();
        prop_assert_eq!(s.order, p_part(order, p).unwrap().p_part);
        prop_assert!(s.subgroup.is_subgroup_of(&g).unwrap());
        for x in s.subgroup.generators() {
            prop_assert_eq!(p_part(x.order().unwrap(), p).unwrap().cofactor, 1);
        }
    }

    #[test]
    fn star_agrees_with_definition(g in group(), p in prime()) {
        let cfg = Config::default();
        let def = star_by_definition(&g, p, &cfg).unwrap();
        prop_assert_eq!(has_star_p(&g, p, &cfg).unwrap().verdict, def);
        prop_assert_eq!(has_star_p_with(&g, p, false, &cfg).unwrap().verdict, def);
    }

    #[test]
    fn transitive_orbits_at_least_p_part(g in group(), p in prime()) {
        prop_assume!(g.is_transitive());
        let cfg = Config::default();
        let np = p_part(g.degree() as u128, p).unwrap().p_part as usize;
        let lengths = sylow_subgroup(&g, p, &cfg).unwrap().orbit_lengths();
        prop_assert_eq!(*lengths.iter().min().unwrap(), np);
        prop_assert!(lengths.iter().all(|l| l % np == 0));
    }

    #[test]
    fn imprimitive_implications(g in group(), p in prime()) {
        prop_assume!(g.is_transitive());
        let cfg = Config::default();
        let whole = has_star_p(&g, p, &cfg).unwrap().verdict;
        for b in all_minimal_block_systems(&g).unwrap() {
            prop_assert!(b.is_invariant(&g));
            prop_assert_eq!(b.block_size() * b.block_count(), g.degree());
            let top = action_on_blocks(&g, &b).unwrap().target;
            let bottom = block_restriction(&g, &b, 0).unwrap().target;
            prop_assert!(top.is_transitive() && bottom.is_transitive());
            let (t, s) = (has_star_p(&top, p, &cfg).unwrap().verdict, has_star_p(&bottom, p, &cfg).unwrap().verdict);
            if whole {
                prop_assert!(s);
            }
            if t && s {
                prop_assert!(whole);
            }
        }
    }
}
