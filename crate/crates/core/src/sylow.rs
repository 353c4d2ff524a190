//! Sylow subgroups of permutation groups.
//!
//! The default method reduces along homomorphisms and centralizers:
//!
//! * intransitive `G`: project to an orbit whose constituent is not a
//!   p-group, take the preimage `Q` of a Sylow subgroup of the image and
//!   recurse on `Q` (`|G : Q|` is prime to `p`);
//! * imprimitive `G` whose block action is not a p-group: the same with the
//!   action on a block system;
//! * otherwise pick `z` of order `p` and compute `C = C_G(z)`. If `C` has
//!   full p-part, recurse on `C`. If `C = G`, the `⟨z⟩`-orbits form blocks
//!   with an elementary abelian kernel, so the preimage of a Sylow subgroup
//!   of the block action is Sylow. Otherwise let `P₀` be Sylow in `C` and
//!   move to an element `z'` of order `p` in `Z(P₀)` whose centralizer has
//!   a larger p-part; one exists because an element of `N_P(P₀) ∖ P₀`
//!   fixes a nontrivial element of `Ω₁(Z(P₀))`.
//!
//! `Oracle` (greedy closure over enumerated p-elements) and `Ascent`
//! (normalizer climbing) are kept for cross-checking.

use alloc::vec::Vec;

use rand_chacha::rand_core::RngCore;
use rand_chacha::ChaCha8Rng;

use crate::actions::{all_minimal_block_systems, Hom};
use crate::backtrack::{center, centralizer, normalizer};
use crate::config::Config;
use crate::error::{internal, precondition, Error, Result};
use crate::group::{PermGroup, StabChain};
use crate::numth::{is_prime, pp};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SylowMethod {
    Oracle,
    Ascent,
    Structural,
    Reduction,
}

impl SylowMethod {
    pub fn name(self) -> &'static str {
        match self {
            SylowMethod::Oracle => "oracle",
            SylowMethod::Ascent => "ascent",
            SylowMethod::Structural => "structural",
            SylowMethod::Reduction => "reduction",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SylowResult {
    pub p: u128,
    pub subgroup: PermGroup,
    pub order: u128,
    pub method: SylowMethod,
}

impl SylowResult {
    /// Orbit lengths of the subgroup on the whole domain, ascending.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.subgroup.orbits().lengths()
    }
}

fn check_prime(p: u128) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn is_p_power(n: u128, p: u128) -> bool {
    pp(n, p) == n
}

/// A nonidentity element of p-power order.
pub fn p_element(g: &PermGroup, p: u128, cfg: &Config) -> Result<Permutation> {
    check_prime(p)?;
    let mut rng = cfg.rng(0x9E1E);
    p_element_with(g, p, cfg, &mut rng)
}

fn p_element_with(g: &PermGroup, p: u128, cfg: &Config, rng: &mut ChaCha8Rng) -> Result<Permutation> {
    let order = g.order()?;
    if order % p != 0 {
        return Err(precondition("p does not divide the group order"));
    }
    for _ in 0..cfg.p_element_attempts {
        let x = g.random_element(rng)?;
        let m = x.order()?;
        let mp = pp(m, p);
        if mp > 1 {
            return Ok(x.pow(m / mp));
        }
    }
    for x in g.elements(cfg.max_enum)? {
        if !x.is_identity() && is_p_power(x.order()?, p) {
            return Ok(x);
        }
    }
    Err(internal("no p-element found although p divides the order"))
}

/// Sylow p-subgroup, using the structural construction for wreath products
/// and the reduction method otherwise; normalizer ascent is the fallback.
pub fn sylow_subgroup(g: &PermGroup, p: u128, cfg: &Config) -> Result<SylowResult> {
    check_prime(p)?;
    if let Some(spec) = g.structure() {
        return crate::wreath::sylow_structural(spec, p, cfg);
    }
    match sylow_with(g, p, SylowMethod::Reduction, cfg) {
        Ok(r) => Ok(r),
        Err(Error::CapExceeded { .. }) => sylow_with(g, p, SylowMethod::Ascent, cfg),
        Err(e) => Err(e),
    }
}

pub fn sylow_with(g: &PermGroup, p: u128, method: SylowMethod, cfg: &Config) -> Result<SylowResult> {
    check_prime(p)?;
    let order = g.order()?;
    let target = pp(order, p);
    let subgroup = match method {
        SylowMethod::Reduction => Reducer { p, cfg, rng: cfg.rng(0x5E1) }.sylow(g)?,
        SylowMethod::Oracle => oracle(g, p, cfg)?,
        SylowMethod::Ascent => ascent(g, p, cfg)?,
        SylowMethod::Structural => {
            let spec = g.structure().ok_or_else(|| precondition("group was not built as a wreath product"))?;
            return crate::wreath::sylow_structural(spec, p, cfg);
        }
    };
    finish(g, p, subgroup, target, method)
}

pub(crate) fn finish(
    g: &PermGroup,
    p: u128,
    subgroup: PermGroup,
    target: u128,
    method: SylowMethod,
) -> Result<SylowResult> {
    let got = subgroup.order()?;
    if got != target {
        return Err(internal(alloc::format!("Sylow subgroup has order {got}, expected {target}")));
    }
    if !subgroup.is_subgroup_of(g)? {
        return Err(internal("Sylow subgroup is not contained in the group"));
    }
    for s in subgroup.generators() {
        if !is_p_power(s.order()?, p) {
            return Err(internal("Sylow generator of non-p-power order"));
        }
    }
    Ok(SylowResult { p, subgroup, order: target, method })
}

/// Orbit lengths of a Sylow p-subgroup on the full domain, ascending.
pub fn sylow_orbit_lengths(g: &PermGroup, p: u128, cfg: &Config) -> Result<Vec<usize>> {
    Ok(sylow_subgroup(g, p, cfg)?.orbit_lengths())
}

struct Reducer<'a> {
    p: u128,
    cfg: &'a Config,
    rng: ChaCha8Rng,
}

impl Reducer<'_> {
    fn sylow(&mut self, g: &PermGroup) -> Result<PermGroup> {
        let p = self.p;
        let order = g.order()?;
        let target = pp(order, p);
        if target == 1 {
            return Ok(PermGroup::trivial(g.degree()));
        }
        if target == order {
            return Ok(g.clone());
        }
        let orbits = g.orbits();
        let moved: Vec<&Vec<usize>> = orbits.orbits().iter().filter(|o| o.len() > 1).collect();
        if moved.len() == 1 && moved[0].len() == g.degree() {
            return self.transitive(g, order, target);
        }
        for o in moved {
            let mut label = alloc::vec![u32::MAX; g.degree()];
            for (i, &x) in o.iter().enumerate() {
                label[x] = i as u32;
            }
            let images = g.generators().iter().map(|s| s.restrict(o, &label)).collect();
            let hom = Hom::new(g, images, o.len())?;
            if is_p_power(hom.target().order()?, p) {
                continue;
            }
            return self.through(g, &hom);
        }
        Err(internal("every constituent is a p-group but the group is not"))
    }

    /// Sylow subgroup of `g` via the preimage of a Sylow subgroup of the image.
    fn through(&mut self, g: &PermGroup, hom: &Hom) -> Result<PermGroup> {
        let s = self.sylow(hom.target())?;
        let q = hom.preimage(&s)?;
        let qo = q.order()?;
        if qo == g.order()? {
            return Err(internal("preimage reduction made no progress"));
        }
        if is_p_power(qo, self.p) {
            Ok(q)
        } else {
            self.sylow(&q)
        }
    }

    fn transitive(&mut self, g: &PermGroup, order: u128, target: u128) -> Result<PermGroup> {
        let p = self.p;
        if let Some(b) = all_minimal_block_systems(g)?.into_iter().next() {
            let images = g.generators().iter().map(|s| block_perm(&b, s)).collect();
            let hom = Hom::new(g, images, b.block_count())?;
            if !is_p_power(hom.target().order()?, p) {
                return self.through(g, &hom);
            }
        }
        let mut z = self.order_p_element(g)?;
        let mut c = centralizer(g, &z)?;
        loop {
            let co = c.order()?;
            if co == order {
                return self.central_quotient(g, &z);
            }
            if pp(co, p) == target {
                return self.sylow(&c);
            }
            let p0 = self.sylow(&c)?;
            let p0_order = p0.order()?;
            let mut next = None;
            for z2 in omega_one(&center(&p0)?, p, self.cfg)? {
                if z2 == z {
                    continue;
                }
                let c2 = centralizer(g, &z2)?;
                if pp(c2.order()?, p) > p0_order {
                    next = Some((z2, c2));
                    break;
                }
            }
            let (z2, c2) = next.ok_or_else(|| internal("no central element of the Sylow subgroup enlarges it"))?;
            z = z2;
            c = c2;
        }
    }

    /// `z` of order `p` central in transitive `g`: reduce modulo `⟨z⟩`-orbits.
    fn central_quotient(&mut self, g: &PermGroup, z: &Permutation) -> Result<PermGroup> {
        let b = crate::actions::BlockSystem::from_blocks(g.degree(), z.cycles())?;
        if b.block_size() as u128 != self.p || !b.is_invariant(g) {
            return Err(internal("central element does not induce a block system"));
        }
        let images = g.generators().iter().map(|s| block_perm(&b, s)).collect();
        let hom = Hom::new(g, images, b.block_count())?;
        if !is_p_power(hom.kernel().order()?, self.p) {
            return Err(internal("kernel modulo a central p-element is not a p-group"));
        }
        let s = self.sylow(hom.target())?;
        hom.preimage(&s)
    }

    fn order_p_element(&mut self, g: &PermGroup) -> Result<Permutation> {
        let x = p_element_with(g, self.p, self.cfg, &mut self.rng)?;
        let m = x.order()?;
        Ok(x.pow(m / self.p))
    }
}

fn block_perm(b: &crate::actions::BlockSystem, s: &Permutation) -> Permutation {
    let images = b.blocks().iter().map(|blk| b.block_of(s.image(blk[0])) as u32).collect();
    Permutation::from_images_unchecked(images)
}

/// Elements of order `p` in an abelian p-group.
fn omega_one(z: &PermGroup, p: u128, cfg: &Config) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for x in z.elements(cfg.max_enum)? {
        if !x.is_identity() && x.pow(p).is_identity() {
            out.push(x);
        }
    }
    Ok(out)
}

/// Greedy closure over the enumerated p-elements: repeatedly adjoin a
/// p-element normalizing the current p-subgroup.
fn oracle(g: &PermGroup, p: u128, cfg: &Config) -> Result<PermGroup> {
    let n = g.degree();
    let target = pp(g.order()?, p);
    let mut pelts = Vec::new();
    for x in g.elements(cfg.max_enum)? {
        if !x.is_identity() && is_p_power(x.order()?, p) {
            pelts.push(x);
        }
    }
    let mut gens: Vec<Permutation> = Vec::new();
    let mut chain = StabChain::schreier_sims(n, &gens, &[])?;
    while chain.order()? < target {
        let x = pelts
            .iter()
            .find(|x| !chain.contains(x) && gens.iter().all(|s| chain.contains(&s.conjugate(x))))
            .ok_or_else(|| internal("oracle found no normalizing p-element"))?
            .clone();
        gens.push(x);
        chain = StabChain::schreier_sims(n, &gens, &[])?;
    }
    Ok(PermGroup::from_parts(n, gens, None, Some(chain)))
}

/// Normalizer ascent: adjoin a p-element of `N_G(P) ∖ P` until `P` is Sylow.
fn ascent(g: &PermGroup, p: u128, cfg: &Config) -> Result<PermGroup> {
    let n = g.degree();
    let target = pp(g.order()?, p);
    let mut rng = cfg.rng(0xA5C);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut pgroup = PermGroup::trivial(n);
    while pgroup.order()? < target {
        let norm = normalizer(g, &pgroup)?;
        let pchain = pgroup.chain()?;
        let mut found = None;
        for _ in 0..cfg.p_element_attempts {
            let y = norm.random_element(&mut rng)?;
            let m = y.order()?;
            let mp = pp(m, p);
            let x = y.pow(m / mp);
            if !pchain.contains(&x) {
                found = Some(x);
                break;
            }
        }
        if found.is_none() {
            for y in norm.elements(cfg.max_enum)? {
                if !pchain.contains(&y) && is_p_power(y.order()?, p) {
                    found = Some(y);
                    break;
                }
            }
        }
        let x = found.ok_or_else(|| internal("normalizer contains no p-element outside P"))?;
        gens.push(x);
        let chain = StabChain::schreier_sims(n, &gens, &[])?;
        pgroup = PermGroup::from_parts(n, gens.clone(), None, Some(chain));
    }
    Ok(pgroup)
}

/// Random conjugate `P^x` of a subgroup, `x` uniform in `g`.
pub fn random_conjugate<R: RngCore>(g: &PermGroup, h: &PermGroup, rng: &mut R) -> Result<PermGroup> {
    let x = g.random_element(rng)?;
    Ok(h.conjugate(&x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fixture;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn p_element_examples() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let x = p_element(&s4, 2, &cfg()).unwrap();
        assert!(matches!(x.order().unwrap(), 2 | 4));
        let y = p_element(&s4, 3, &cfg()).unwrap();
        assert_eq!(y.cycle_type(), alloc::vec![1, 3]);
        assert!(p_element(&PermGroup::cyclic(5).unwrap(), 2, &cfg()).is_err());
    }

    #[test]
    fn s4_sylow() {
        let s4 = PermGroup::symmetric(4).unwrap();
        for m in [SylowMethod::Reduction, SylowMethod::Oracle, SylowMethod::Ascent] {
            assert_eq!(sylow_with(&s4, 2, m, &cfg()).unwrap().subgroup.order().unwrap(), 8);
        }
        assert_eq!(sylow_subgroup(&s4, 5, &cfg()).unwrap().subgroup.order().unwrap(), 1);
        assert!(sylow_subgroup(&s4, 4, &cfg()).is_err());
    }

    #[test]
    fn m11_sylow_three() {
        let g = fixture("M11-deg12").unwrap();
        let r = sylow_subgroup(&g, 3, &cfg()).unwrap();
        assert_eq!(r.order, 9);
        assert_eq!(r.orbit_lengths(), alloc::vec![3, 3, 3, 3]);
        assert_eq!(sylow_orbit_lengths(&g, 2, &cfg()).unwrap(), alloc::vec![4, 8]);
    }

    #[test]
    fn symmetric_groups() {
        for n in [6usize, 9, 12, 16] {
            let g = PermGroup::symmetric(n).unwrap();
            for p in [2u128, 3, 5] {
                let r = sylow_subgroup(&g, p, &cfg()).unwrap();
                assert_eq!(r.order, pp(g.order().unwrap(), p));
            }
        }
    }
}
