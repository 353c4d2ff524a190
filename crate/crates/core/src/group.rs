//! Permutation groups given by generators, backed by a lazily built
//! stabilizer chain (base and strong generating set).

use alloc::boxed::Box;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{internal, Error, Result};
use crate::orbit::{orbit_of_point, OrbitPartition};
use crate::perm::Permutation;
use crate::wreath::WreathSpec;

const NONE: u32 = u32::MAX;

/// One level of a stabilizer chain: `G^(i)`, the stabilizer of the earlier
/// base points, with its basic orbit and transversal.
#[derive(Clone, Debug)]
pub struct Level {
    pub(crate) base: usize,
    pub(crate) gens: Vec<Permutation>,
    pub(crate) orbit: Vec<u32>,
    pub(crate) index: Vec<u32>,
    pub(crate) trans: Vec<Permutation>,
    pub(crate) trans_inv: Vec<Permutation>,
    // checked[k]: Schreier generators (orbit[k], gens[s]) verified for s < checked[k]
    checked: Vec<u32>,
}

impl Level {
    fn new(degree: usize, base: usize) -> Self {
        let mut index = vec![NONE; degree];
        index[base] = 0;
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base as u32],
            index,
            trans: vec![Permutation::identity(degree)],
            trans_inv: vec![Permutation::identity(degree)],
            checked: vec![0],
        }
    }

    /// Extends orbit and transversal after generators were appended;
    /// existing transversal elements are kept.
    fn extend(&mut self) {
        let mut k = 0;
        while k < self.orbit.len() {
            let x = self.orbit[k] as usize;
            for s in 0..self.gens.len() {
                let y = self.gens[s].image(x);
                if self.index[y] == NONE {
                    self.index[y] = self.orbit.len() as u32;
                    self.orbit.push(y as u32);
                    let t = self.trans[k].mul(&self.gens[s]);
                    self.trans_inv.push(t.inverse());
                    self.trans.push(t);
                    self.checked.push(0);
                }
            }
            k += 1;
        }
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn orbit(&self) -> &[u32] {
        &self.orbit
    }

    pub fn orbit_len(&self) -> usize {
        self.orbit.len()
    }

    pub fn in_orbit(&self, point: usize) -> bool {
        self.index[point] != NONE
    }

    /// Transversal element mapping the base point to `point`.
    pub fn transversal(&self, point: usize) -> Option<&Permutation> {
        match self.index[point] {
            NONE => None,
            k => Some(&self.trans[k as usize]),
        }
    }

    pub fn transversal_inverse(&self, point: usize) -> Option<&Permutation> {
        match self.index[point] {
            NONE => None,
            k => Some(&self.trans_inv[k as usize]),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    fn empty(degree: usize, prefix: &[usize]) -> Self {
        StabChain { degree, levels: prefix.iter().map(|&b| Level::new(degree, b)).collect() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    pub fn order(&self) -> Result<u128> {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
            .ok_or(Error::Overflow("group order"))
    }

    /// Strips `g` through the levels starting at `from`; returns the residue
    /// and the level where stripping stopped (`levels.len()` if it passed all).
    pub fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let beta = h.image(level.base);
            match level.index[beta] {
                NONE => return (h, i),
                k => {
                    if k != 0 {
                        h = h.mul(&level.trans_inv[k as usize]);
                    }
                }
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (r, _) = self.sift(g, 0);
        r.is_identity()
    }

    /// Uniformly distributed element.
    pub fn random_element<R: RngCore>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let k = (rng.next_u64() % level.orbit.len() as u64) as usize;
            if k != 0 {
                g = g.mul(&level.trans[k]);
            }
        }
        g
    }

    /// Chain of `G^(from)` restricted to the first `n` points; every element
    /// at those levels must fix the points `n..degree`.
    pub(crate) fn restrict_domain(&self, from: usize, n: usize) -> StabChain {
        let cut = |p: &Permutation| Permutation::from_images_unchecked(p.images()[..n].to_vec());
        let levels = self.levels[from..]
            .iter()
            .map(|l| Level {
                base: l.base,
                gens: l.gens.iter().map(cut).collect(),
                orbit: l.orbit.clone(),
                index: l.index[..n].to_vec(),
                trans: l.trans.iter().map(cut).collect(),
                trans_inv: l.trans_inv.iter().map(cut).collect(),
                checked: l.checked.clone(),
            })
            .collect();
        StabChain { degree: n, levels }
    }

    /// The chain of `G^(from)`.
    pub fn tail(&self, from: usize) -> StabChain {
        StabChain { degree: self.degree, levels: self.levels[from..].to_vec() }
    }

    fn push_level_for(&mut self, r: &Permutation) -> Result<()> {
        let moved = (0..self.degree)
            .find(|&x| !r.fixes(x))
            .ok_or_else(|| internal("identity residue cannot extend the base"))?;
        self.levels.push(Level::new(self.degree, moved));
        Ok(())
    }

    /// Adds a residue that stopped at level `upto` to levels `from..=upto`.
    fn add_residue(&mut self, r: Permutation, from: usize, upto: usize) -> Result<()> {
        if upto == self.levels.len() {
            self.push_level_for(&r)?;
        }
        for l in from..=upto {
            self.levels[l].gens.push(r.clone());
            self.levels[l].extend();
        }
        Ok(())
    }

    /// Deterministic Schreier–Sims. Every base point in `prefix` is kept, in
    /// order, even when its basic orbit is trivial; further base points are
    /// the least points moved by the residues that need them.
    pub fn schreier_sims(degree: usize, gens: &[Permutation], prefix: &[usize]) -> Result<Self> {
        let mut chain = StabChain::empty(degree, prefix);
        for g in gens {
            if g.is_identity() {
                continue;
            }
            let (r, j) = chain.sift(g, 0);
            if !r.is_identity() {
                chain.add_residue(r, 0, j)?;
            }
        }
        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let iu = i as usize;
            match chain.first_failing_schreier_generator(iu) {
                Some((r, j)) => {
                    chain.add_residue(r, iu + 1, j)?;
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
        Ok(chain)
    }

    fn first_failing_schreier_generator(&mut self, i: usize) -> Option<(Permutation, usize)> {
        let mut k = 0;
        while k < self.levels[i].orbit.len() {
            let ngens = self.levels[i].gens.len() as u32;
            while self.levels[i].checked[k] < ngens {
                let s = self.levels[i].checked[k] as usize;
                let level = &self.levels[i];
                let beta = level.orbit[k] as usize;
                let img = level.gens[s].image(beta);
                let j_idx = level.index[img] as usize;
                let h = level.trans[k].mul(&level.gens[s]).mul(&level.trans_inv[j_idx]);
                if !h.is_identity() {
                    let (r, j) = self.sift(&h, i + 1);
                    if !r.is_identity() {
                        return Some((r, j));
                    }
                }
                self.levels[i].checked[k] += 1;
            }
            k += 1;
        }
        None
    }

    /// Randomized Schreier–Sims that stops once the chain reaches `order`,
    /// which must be the true order of the group the samples come from.
    /// Reaching the order certifies the chain: each basic orbit is then full.
    pub(crate) fn from_samples<F>(
        degree: usize,
        gens: &[Permutation],
        prefix: &[usize],
        order: u128,
        mut sample: F,
    ) -> Result<Self>
    where
        F: FnMut() -> Permutation,
    {
        let mut chain = StabChain::empty(degree, prefix);
        for g in gens {
            chain.absorb(g)?;
        }
        let mut stall = 0u32;
        loop {
            let current = chain.order()?;
            if current == order {
                return Ok(chain);
            }
            if current > order {
                return Err(internal("stabilizer chain exceeds the stated group order"));
            }
            if chain.absorb(&sample())? {
                stall = 0;
            } else {
                stall += 1;
                if stall > 20_000 {
                    return Err(internal("randomized Schreier-Sims failed to reach the stated order"));
                }
            }
        }
    }

    /// Sifts `g` and adds the residue if nontrivial; true if the chain grew.
    fn absorb(&mut self, g: &Permutation) -> Result<bool> {
        let (r, j) = self.sift(g, 0);
        if r.is_identity() {
            return Ok(false);
        }
        self.add_residue(r, 0, j)?;
        Ok(true)
    }

    /// Chain of the same group with a new base prefix.
    pub fn change_base(&self, prefix: &[usize], seed: u64) -> Result<StabChain> {
        if self.base().starts_with(prefix) {
            return Ok(self.clone());
        }
        let order = self.order()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        StabChain::from_samples(self.degree, &[], prefix, order, || self.random_element(&mut rng))
    }
}

/// Product-replacement random elements with an accumulator.
pub(crate) struct ProductReplacement {
    state: Vec<Permutation>,
    acc: Permutation,
    rng: ChaCha8Rng,
}

impl ProductReplacement {
    pub(crate) fn new(degree: usize, gens: &[Permutation], seed: u64) -> Self {
        let mut state: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if state.is_empty() {
            state.push(Permutation::identity(degree));
        }
        let base = state.clone();
        while state.len() < 10 {
            state.push(base[state.len() % base.len()].clone());
        }
        let mut pr =
            ProductReplacement { state, acc: Permutation::identity(degree), rng: ChaCha8Rng::seed_from_u64(seed) };
        for _ in 0..50 {
            pr.next_element();
        }
        pr
    }

    pub(crate) fn next_element(&mut self) -> Permutation {
        let n = self.state.len() as u64;
        let i = (self.rng.next_u64() % n) as usize;
        let mut j = (self.rng.next_u64() % (n - 1)) as usize;
        if j >= i {
            j += 1;
        }
        let t = if self.rng.next_u32() & 1 == 0 { self.state[j].clone() } else { self.state[j].inverse() };
        self.state[i] = if self.rng.next_u32() & 1 == 0 { self.state[i].mul(&t) } else { t.mul(&self.state[i]) };
        self.acc = self.acc.mul(&self.state[i]);
        self.acc.clone()
    }
}

/// A permutation group on `{0, …, degree-1}`.
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    order_hint: Option<u128>,
    chain: OnceBox<Arc<StabChain>>,
    structure: Option<Arc<WreathSpec>>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceBox::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(Box::new(c.clone()));
        }
        PermGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            order_hint: self.order_hint,
            chain,
            structure: self.structure.clone(),
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup").field("degree", &self.degree).field("generators", &self.gens).finish()
    }
}

impl PermGroup {
    /// Group generated by `gens` on `degree` points. Identity generators are
    /// dropped; an empty list gives the trivial group.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
            }
        }
        Ok(Self::from_parts(degree, gens, None, None))
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new(), Some(1), None)
    }

    pub(crate) fn from_parts(
        degree: usize,
        gens: Vec<Permutation>,
        order_hint: Option<u128>,
        chain: Option<StabChain>,
    ) -> Self {
        let gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let cell = OnceBox::new();
        if let Some(c) = chain {
            let _ = cell.set(Box::new(Arc::new(c)));
        }
        PermGroup { degree, gens, order_hint, chain: cell, structure: None }
    }

    /// Same group with a known order, which lets the stabilizer chain be
    /// built by randomized Schreier–Sims. The order must be correct: chain
    /// construction fails if it cannot be reached or is exceeded.
    pub fn with_known_order(mut self, order: u128) -> Self {
        if self.chain.get().is_none() {
            self.order_hint = Some(order);
        }
        self
    }

    pub(crate) fn from_chain(chain: StabChain) -> Self {
        let degree = chain.degree();
        let gens = chain.strong_generators().to_vec();
        Self::from_parts(degree, gens, None, Some(chain))
    }

    pub(crate) fn set_structure(&mut self, spec: Arc<WreathSpec>) {
        self.structure = Some(spec);
    }

    pub fn structure(&self) -> Option<&WreathSpec> {
        self.structure.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn chain(&self) -> Result<&StabChain> {
        self.chain
            .get_or_try_init(|| {
                let chain = match self.order_hint {
                    Some(order) => {
                        let mut pr = ProductReplacement::new(self.degree, &self.gens, 0x5151);
                        StabChain::from_samples(self.degree, &self.gens, &[], order, || pr.next_element())?
                    }
                    None => StabChain::schreier_sims(self.degree, &self.gens, &[])?,
                };
                Ok(Box::new(Arc::new(chain)))
            })
            .map(|c| &**c)
    }

    pub fn order(&self) -> Result<u128> {
        self.chain()?.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, x: &Permutation) -> Result<bool> {
        if x.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: x.degree() });
        }
        Ok(self.chain()?.contains(x))
    }

    /// True when every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool> {
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn orbits(&self) -> OrbitPartition {
        OrbitPartition::from_generators(self.degree, &self.gens)
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut o = orbit_of_point(&self.gens, point, self.degree);
        o.sort_unstable();
        o
    }

    pub fn is_transitive(&self) -> bool {
        orbit_of_point(&self.gens, 0, self.degree).len() == self.degree
    }

    /// Transitive with a point stabilizer transitive on the remaining points.
    pub fn is_two_transitive(&self) -> Result<bool> {
        if !self.is_transitive() {
            return Ok(false);
        }
        if self.degree <= 2 {
            return Ok(self.degree == 1 || !self.is_trivial());
        }
        let stab = self.point_stabilizer(0)?;
        Ok(orbit_of_point(&stab.gens, 1, self.degree).len() == self.degree - 1)
    }

    /// Chain whose base starts with `prefix`.
    pub fn chain_with_base(&self, prefix: &[usize]) -> Result<StabChain> {
        for &b in prefix {
            if b >= self.degree {
                return Err(Error::PointOutOfRange { point: b, degree: self.degree });
            }
        }
        self.chain()?.change_base(prefix, 0xBA5E)
    }

    /// The stabilizer `G_ω`, read off a chain with base starting at `ω`.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup> {
        let chain = self.chain_with_base(&[point])?;
        Ok(PermGroup::from_chain(chain.tail(1)))
    }

    /// Pointwise stabilizer of a sequence of points.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup> {
        let chain = self.chain_with_base(points)?;
        Ok(PermGroup::from_chain(chain.tail(points.len())))
    }

    pub fn random_element<R: RngCore>(&self, rng: &mut R) -> Result<Permutation> {
        Ok(self.chain()?.random_element(rng))
    }

    /// `x⁻¹ G x`.
    pub fn conjugate(&self, x: &Permutation) -> PermGroup {
        let gens = self.gens.iter().map(|g| g.conjugate(x)).collect();
        PermGroup::from_parts(self.degree, gens, self.order_hint, None)
    }

    /// All elements, each exactly once, as products of transversal elements.
    pub fn elements(&self, cap: u128) -> Result<Elements<'_>> {
        let order = self.order()?;
        if order > cap {
            return Err(Error::CapExceeded { what: "group order for enumeration", cap });
        }
        let chain = self.chain()?;
        Ok(Elements { chain, idx: vec![0; chain.levels.len()], done: false })
    }

    pub fn symmetric(n: usize) -> Result<PermGroup> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[vec![0, 1]])?);
        }
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[(0..n).collect()])?);
        }
        Ok(PermGroup::from_parts(n, gens, None, None))
    }

    pub fn alternating(n: usize) -> Result<PermGroup> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let gens = (0..n.saturating_sub(2))
            .map(|i| Permutation::from_cycles(n, &[vec![i, i + 1, i + 2]]))
            .collect::<Result<Vec<_>>>()?;
        Ok(PermGroup::from_parts(n, gens, None, None))
    }

    /// Cyclic group of order `n` acting regularly.
    pub fn cyclic(n: usize) -> Result<PermGroup> {
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let g = Permutation::from_cycles(n, &[(0..n).collect()])?;
        Ok(PermGroup::from_parts(n, vec![g], Some(n as u128), None))
    }

    /// Dihedral group of order `2n` on the `n`-gon.
    pub fn dihedral(n: usize) -> Result<PermGroup> {
        if n < 3 {
            return Err(crate::error::precondition("dihedral needs n >= 3"));
        }
        let r = Permutation::from_cycles(n, &[(0..n).collect()])?;
        let s = Permutation::from_images((0..n).map(|i| ((n - i) % n) as u32).collect())?;
        Ok(PermGroup::from_parts(n, vec![r, s], Some(2 * n as u128), None))
    }
}

pub struct Elements<'a> {
    chain: &'a StabChain,
    idx: Vec<usize>,
    done: bool,
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let mut g = Permutation::identity(self.chain.degree);
        for (level, &k) in self.chain.levels.iter().zip(&self.idx).rev() {
            if k != 0 {
                g = g.mul(&level.trans[k]);
            }
        }
        let mut i = self.idx.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.idx[i] += 1;
            if self.idx[i] < self.chain.levels[i].orbit.len() {
                break;
            }
            self.idx[i] = 0;
        }
        Some(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    /// Closure of the generators under multiplication, by breadth-first search.
    fn closure(degree: usize, gens: &[Permutation]) -> BTreeSet<Permutation> {
        let mut set = BTreeSet::new();
        let id = Permutation::identity(degree);
        set.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = x.mul(g);
                if set.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    #[test]
    fn s4_order_matches_closure() {
        let gens = vec![perm(4, "(1,2)"), perm(4, "(1,2,3,4)")];
        let g = PermGroup::new(4, gens.clone()).unwrap();
        assert_eq!(g.order().unwrap(), 24);
        assert_eq!(closure(4, &gens).len(), 24);
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::trivial(5);
        assert_eq!(g.order().unwrap(), 1);
        assert_eq!(g.orbits().len(), 5);
        assert!(g.contains(&Permutation::identity(5)).unwrap());
        assert_eq!(g.elements(10).unwrap().count(), 1);
    }

    #[test]
    fn membership() {
        let s4 = PermGroup::symmetric(4).unwrap();
        assert!(s4.contains(&perm(4, "(1,2,3)")).unwrap());
        let a4 = PermGroup::new(4, vec![perm(4, "(1,2,3)"), perm(4, "(2,3,4)")]).unwrap();
        assert!(!a4.contains(&perm(4, "(1,2)")).unwrap());
        assert_eq!(a4.order().unwrap(), 12);
    }

    #[test]
    fn orbits_examples() {
        let c6 = PermGroup::cyclic(6).unwrap();
        assert_eq!(c6.orbits().lengths(), vec![6]);
        let g = PermGroup::new(5, vec![perm(5, "(1,2)"), perm(5, "(3,4,5)")]).unwrap();
        assert_eq!(g.orbits().orbits(), &[vec![0, 1], vec![2, 3, 4]]);
        assert!(!PermGroup::new(3, vec![perm(3, "(1,2)")]).unwrap().is_transitive());
        assert!(c6.is_transitive());
    }

    #[test]
    fn stabilizers() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let st = s4.point_stabilizer(0).unwrap();
        assert_eq!(st.order().unwrap(), 6);
        for g in st.elements(100).unwrap() {
            assert!(g.fixes(0));
        }
        let c6 = PermGroup::cyclic(6).unwrap();
        assert_eq!(c6.point_stabilizer(3).unwrap().order().unwrap(), 1);
    }

    #[test]
    fn enumeration_is_exact() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let all: BTreeSet<Permutation> = s4.elements(100).unwrap().collect();
        assert_eq!(all.len(), 24);
        assert_eq!(PermGroup::cyclic(3).unwrap().elements(10).unwrap().count(), 3);
        assert!(PermGroup::symmetric(7).unwrap().elements(1000).is_err());
    }

    #[test]
    fn known_order_path_agrees() {
        let g = PermGroup::symmetric(9).unwrap().with_known_order(362880);
        assert_eq!(g.order().unwrap(), 362880);
        assert!(g.contains(&perm(9, "(1,5)(2,9,3)")).unwrap());
        let wrong = PermGroup::alternating(6).unwrap().with_known_order(720);
        assert!(wrong.order().is_err());
    }

    #[test]
    fn base_change_keeps_order() {
        let g = PermGroup::new(7, vec![perm(7, "(1,2,3,4,5,6,7)"), perm(7, "(2,3,5)(4,7,6)")]).unwrap();
        assert_eq!(g.order().unwrap(), 21);
        let c = g.chain_with_base(&[4, 2]).unwrap();
        assert_eq!(c.base()[..2], [4, 2]);
        assert_eq!(c.order().unwrap(), 21);
    }

    #[test]
    fn two_transitivity() {
        assert!(PermGroup::symmetric(5).unwrap().is_two_transitive().unwrap());
        assert!(!PermGroup::cyclic(5).unwrap().is_two_transitive().unwrap());
    }
}
