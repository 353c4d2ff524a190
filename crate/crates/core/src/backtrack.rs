//! Subgroup-property backtrack search over a stabilizer chain, used for
//! element centralizers and normalizers.
//!
//! Cosets of `G^(i+1)` in `G^(i)` are tried for `i` from the bottom of the
//! chain upwards. Images of base points are fixed one level at a time; once
//! the images of all points fixed by `G^(j)` are known, the property's
//! `prune` test may reject the whole subtree. A candidate coset is skipped
//! when its base image already lies in the orbit of the subgroup found so
//! far, or is not the least point of its orbit under that subgroup's next
//! stabilizer.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{PermGroup, StabChain};
use crate::orbit::OrbitPartition;
use crate::perm::Permutation;

const NODE_CAP: u64 = 200_000_000;

pub(crate) trait SearchProperty {
    /// Necessary condition on `y`, which agrees with every sought element
    /// of the current coset on the points flagged in `determined`.
    fn prune(&self, y: &Permutation, determined: &[usize], mask: &[bool]) -> bool;
    fn accept(&self, y: &Permutation) -> bool;
}

struct Search<'a, P: SearchProperty> {
    chain: &'a StabChain,
    prop: &'a P,
    fixed: Vec<Vec<usize>>,
    masks: Vec<Vec<bool>>,
    nodes: u64,
}

impl<P: SearchProperty> Search<'_, P> {
    fn dfs(&mut self, j: usize, y: &Permutation) -> Result<Option<Permutation>> {
        self.nodes += 1;
        if self.nodes > NODE_CAP {
            return Err(Error::CapExceeded { what: "backtrack search nodes", cap: NODE_CAP as u128 });
        }
        if !self.prop.prune(y, &self.fixed[j], &self.masks[j]) {
            return Ok(None);
        }
        if self.prop.accept(y) {
            return Ok(Some(y.clone()));
        }
        let levels = self.chain.levels();
        if j == levels.len() {
            return Ok(None);
        }
        let level = &levels[j];
        for &delta in level.orbit() {
            let t = level.transversal(delta as usize).expect("orbit point has a transversal");
            let next = t.mul(y);
            if let Some(x) = self.dfs(j + 1, &next)? {
                return Ok(Some(x));
            }
        }
        Ok(None)
    }
}

/// Subgroup of `g` of all elements satisfying `prop`, which must define a
/// subgroup containing `known`.
pub(crate) fn subgroup_search<P: SearchProperty>(
    g: &PermGroup,
    base_prefix: &[usize],
    prop: &P,
    known: &[Permutation],
) -> Result<PermGroup> {
    let n = g.degree();
    let chain = g.chain_with_base(base_prefix)?;
    let base = chain.base();
    let k = base.len();

    let mut fixed = Vec::with_capacity(k + 1);
    let mut masks = Vec::with_capacity(k + 1);
    for j in 0..=k {
        let mask: Vec<bool> = if j == k {
            vec![true; n]
        } else {
            let gens = chain.levels()[j].generators();
            (0..n).map(|x| gens.iter().all(|s| s.fixes(x))).collect()
        };
        fixed.push((0..n).filter(|&x| mask[x]).collect::<Vec<_>>());
        masks.push(mask);
    }

    let mut kgens: Vec<Permutation> = known.iter().filter(|x| !x.is_identity()).cloned().collect();
    let mut kchain = StabChain::schreier_sims(n, &kgens, &base)?;
    let mut search = Search { chain: &chain, prop, fixed, masks, nodes: 0 };

    for i in (0..k).rev() {
        let level = &chain.levels()[i];
        let mut candidates: Vec<usize> = level.orbit().iter().map(|&x| x as usize).collect();
        candidates.sort_unstable();
        let deeper = |kc: &StabChain| -> OrbitPartition {
            let gens = if i + 1 < k { kc.levels()[i + 1].generators() } else { &[] };
            OrbitPartition::from_generators(n, gens)
        };
        let mut korbits = deeper(&kchain);
        for gamma in candidates {
            if gamma == level.base() || kchain.levels()[i].in_orbit(gamma) {
                continue;
            }
            let o = &korbits.orbits()[korbits.orbit_of(gamma)];
            if o[0] != gamma {
                continue;
            }
            let u = level.transversal(gamma).expect("orbit point has a transversal").clone();
            if let Some(x) = search.dfs(i + 1, &u)? {
                kgens.push(x);
                kchain = StabChain::schreier_sims(n, &kgens, &base)?;
                korbits = deeper(&kchain);
            }
        }
    }
    Ok(PermGroup::from_parts(n, kgens, None, Some(kchain)))
}

struct Centralizes<'a> {
    z: &'a Permutation,
    cycle_len: Vec<usize>,
}

impl SearchProperty for Centralizes<'_> {
    fn prune(&self, y: &Permutation, determined: &[usize], mask: &[bool]) -> bool {
        determined.iter().all(|&x| {
            let yx = y.image(x);
            if self.cycle_len[x] != self.cycle_len[yx] {
                return false;
            }
            let zx = self.z.image(x);
            !mask[zx] || y.image(zx) == self.z.image(yx)
        })
    }

    fn accept(&self, y: &Permutation) -> bool {
        (0..y.degree()).all(|x| y.image(self.z.image(x)) == self.z.image(y.image(x)))
    }
}

/// `C_G(z)`; `z` need not lie in `G`.
pub fn centralizer(g: &PermGroup, z: &Permutation) -> Result<PermGroup> {
    if z.degree() != g.degree() {
        return Err(Error::DegreeMismatch { left: g.degree(), right: z.degree() });
    }
    let mut cycles = z.cycles();
    cycles.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    let prefix: Vec<usize> = cycles.iter().flatten().copied().collect();
    let mut cycle_len = vec![1; g.degree()];
    for c in &cycles {
        for &x in c {
            cycle_len[x] = c.len();
        }
    }
    let prop = Centralizes { z, cycle_len };
    let mut known = g.generators().iter().filter(|s| prop.accept(s)).cloned().collect::<Vec<_>>();
    if g.contains(z)? {
        known.push(z.clone());
    }
    subgroup_search(g, &prefix, &prop, &known)
}

struct Normalizes<'a> {
    h: &'a PermGroup,
    hchain: &'a StabChain,
    orbits: OrbitPartition,
}

impl SearchProperty for Normalizes<'_> {
    fn prune(&self, y: &Permutation, determined: &[usize], _mask: &[bool]) -> bool {
        let m = self.orbits.len();
        let mut to = vec![usize::MAX; m];
        let mut from = vec![usize::MAX; m];
        for &x in determined {
            let a = self.orbits.orbit_of(x);
            let b = self.orbits.orbit_of(y.image(x));
            if to[a] == usize::MAX && from[b] == usize::MAX {
                if self.orbits.orbits()[a].len() != self.orbits.orbits()[b].len() {
                    return false;
                }
                to[a] = b;
                from[b] = a;
            } else if to[a] != b || from[b] != a {
                return false;
            }
        }
        true
    }

    fn accept(&self, y: &Permutation) -> bool {
        self.h.generators().iter().all(|s| self.hchain.contains(&s.conjugate(y)))
    }
}

/// Center of `g`, as the intersection of generator centralizers.
pub fn center(g: &PermGroup) -> Result<PermGroup> {
    let mut z = g.clone();
    for s in g.generators() {
        if z.is_trivial() {
            break;
        }
        z = centralizer(&z, s)?;
    }
    Ok(z)
}

/// `N_G(H)` by backtrack search; `H ≤ G` is checked.
pub fn normalizer(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    if !h.is_subgroup_of(g)? {
        return Err(crate::error::precondition("normalizer: H is not a subgroup of G"));
    }
    let orbits = h.orbits();
    let mut order: Vec<&Vec<usize>> = orbits.orbits().iter().collect();
    order.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    let prefix: Vec<usize> = order.iter().filter(|o| o.len() > 1).flat_map(|o| o.iter().copied()).collect();
    let hchain = h.chain()?;
    let prop = Normalizes { h, hchain, orbits };
    let mut known: Vec<Permutation> = h.generators().to_vec();
    known.extend(g.generators().iter().filter(|s| prop.accept(s)).cloned());
    subgroup_search(g, &prefix, &prop, &known)
}

/// `N_G(H)` by filtering an enumeration of `G` (baseline).
pub fn normalizer_by_enumeration(g: &PermGroup, h: &PermGroup, cap: u128) -> Result<PermGroup> {
    if !h.is_subgroup_of(g)? {
        return Err(crate::error::precondition("normalizer: H is not a subgroup of G"));
    }
    let n = g.degree();
    let hchain = h.chain()?;
    let mut gens: Vec<Permutation> = h.generators().to_vec();
    let mut nchain = StabChain::schreier_sims(n, &gens, &[])?;
    for x in g.elements(cap)? {
        if nchain.contains(&x) {
            continue;
        }
        if h.generators().iter().all(|s| hchain.contains(&s.conjugate(&x))) {
            gens.push(x);
            nchain = StabChain::schreier_sims(n, &gens, &[])?;
        }
    }
    Ok(PermGroup::from_parts(n, gens, None, Some(nchain)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    fn brute_centralizer_order(g: &PermGroup, z: &Permutation) -> usize {
        g.elements(1 << 20).unwrap().filter(|y| y.mul(z) == z.mul(y)).count()
    }

    #[test]
    fn centralizers_in_s5_match_brute_force() {
        let s5 = PermGroup::symmetric(5).unwrap();
        for z in ["(1,2)", "(1,2,3)", "(1,2)(3,4)", "(1,2,3,4,5)", "(1,2,3)(4,5)", "()"] {
            let z = perm(5, z);
            let c = centralizer(&s5, &z).unwrap();
            assert_eq!(c.order().unwrap() as usize, brute_centralizer_order(&s5, &z), "{z}");
            for s in c.generators() {
                assert_eq!(s.mul(&z), z.mul(s));
            }
        }
    }

    #[test]
    fn centralizer_in_m11() {
        let g = fixture("M11-deg12").unwrap();
        let mut rng = crate::Config::default().rng(7);
        for _ in 0..5 {
            let z = g.random_element(&mut rng).unwrap();
            let c = centralizer(&g, &z).unwrap();
            assert_eq!(c.order().unwrap() as usize, brute_centralizer_order(&g, &z));
        }
    }

    #[test]
    fn normalizer_examples() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let c3 = PermGroup::new(4, vec![perm(4, "(1,2,3)")]).unwrap();
        assert_eq!(normalizer(&s4, &c3).unwrap().order().unwrap(), 6);
        assert_eq!(normalizer_by_enumeration(&s4, &c3, 100).unwrap().order().unwrap(), 6);
        let a4 = PermGroup::alternating(4).unwrap();
        assert_eq!(normalizer(&a4, &a4).unwrap().order().unwrap(), 12);
        let c6 = PermGroup::cyclic(6).unwrap();
        let c2 = PermGroup::new(6, vec![c6.generators()[0].pow(2)]).unwrap();
        assert_eq!(normalizer(&c6, &c2).unwrap().order().unwrap(), 6);
    }

    #[test]
    fn normalizer_rejects_non_subgroup() {
        let a4 = PermGroup::alternating(4).unwrap();
        let h = PermGroup::new(4, vec![perm(4, "(1,2)")]).unwrap();
        assert!(normalizer(&a4, &h).is_err());
    }
}
