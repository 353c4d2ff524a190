//! Block systems and induced actions: on blocks, within a block, on an
//! orbit, and on tuples of points.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::config::Config;
use crate::error::{internal, precondition, Error, Result};
use crate::group::{PermGroup, ProductReplacement, StabChain};
use crate::perm::Permutation;

/// A partition of the domain into equal-size blocks, blocks sorted by least
/// point and each block sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSystem {
    degree: usize,
    block_of: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    /// Validates that `blocks` is a partition into equal sizes.
    pub fn from_blocks(degree: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; degree];
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        blocks.sort();
        let size = blocks.first().map(Vec::len).unwrap_or(0);
        for (i, b) in blocks.iter().enumerate() {
            if b.len() != size || size == 0 {
                return Err(precondition("blocks must be nonempty and of equal size"));
            }
            for &x in b {
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x, degree });
                }
                if block_of[x] != usize::MAX {
                    return Err(Error::RepeatedPoint(x));
                }
                block_of[x] = i;
            }
        }
        if block_of.contains(&usize::MAX) {
            return Err(precondition("blocks do not cover the domain"));
        }
        Ok(BlockSystem { degree, block_of, blocks })
    }

    fn from_labels(degree: usize, class: &[usize]) -> Self {
        let mut by_rep: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (x, &c) in class.iter().enumerate().take(degree) {
            by_rep.entry(c).or_default().push(x);
        }
        let mut blocks: Vec<Vec<usize>> = by_rep.into_values().collect();
        blocks.sort();
        let mut block_of = vec![0; degree];
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                block_of[x] = i;
            }
        }
        BlockSystem { degree, block_of, blocks }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, point: usize) -> usize {
        self.block_of[point]
    }

    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.block_size() == 1 || self.block_count() == 1
    }

    /// True if every generator maps blocks onto blocks.
    pub fn is_invariant(&self, g: &PermGroup) -> bool {
        g.generators().iter().all(|s| {
            self.blocks.iter().all(|b| {
                let target = self.block_of[s.image(b[0])];
                b.iter().all(|&x| self.block_of[s.image(x)] == target)
            })
        })
    }

    /// The block permutation induced by `s`.
    fn permutation_of(&self, s: &Permutation) -> Permutation {
        let images = self.blocks.iter().map(|b| self.block_of[s.image(b[0])] as u32).collect();
        Permutation::from_images_unchecked(images)
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Finest invariant partition with all of `points` in one block.
pub fn block_system_containing(g: &PermGroup, points: &[usize]) -> Result<BlockSystem> {
    let n = g.degree();
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    for &x in points {
        if x >= n {
            return Err(Error::PointOutOfRange { point: x, degree: n });
        }
    }
    let mut parent: Vec<usize> = (0..n).collect();
    let mut queue = Vec::new();
    if let Some((&first, rest)) = points.split_first() {
        for &x in rest {
            let (a, b) = (find(&mut parent, first), find(&mut parent, x));
            if a != b {
                parent[b] = a;
                queue.push((first, x));
            }
        }
    }
    while let Some((a, b)) = queue.pop() {
        for s in g.generators() {
            let (sa, sb) = (s.image(a), s.image(b));
            let (ra, rb) = (find(&mut parent, sa), find(&mut parent, sb));
            if ra != rb {
                parent[rb] = ra;
                queue.push((sa, sb));
            }
        }
    }
    let class: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    Ok(BlockSystem::from_labels(n, &class))
}

/// Finest invariant partition in which `alpha` and `beta` share a block.
pub fn minimal_block_system(g: &PermGroup, alpha: usize, beta: usize) -> Result<BlockSystem> {
    if alpha == beta {
        return Err(precondition("minimal_block_system needs alpha != beta"));
    }
    block_system_containing(g, &[alpha, beta])
}

/// Distinct nontrivial systems `minimal_block_system(g, 0, β)`; empty iff
/// `g` is primitive.
pub fn all_minimal_block_systems(g: &PermGroup) -> Result<Vec<BlockSystem>> {
    let mut out: Vec<BlockSystem> = Vec::new();
    for beta in 1..g.degree() {
        if out.iter().any(|b| b.block_of(beta) == b.block_of(0)) {
            continue;
        }
        let b = minimal_block_system(g, 0, beta)?;
        if b.block_count() > 1 {
            out.push(b);
        }
    }
    out.sort_by(|a, b| a.block_size().cmp(&b.block_size()).then(a.blocks.cmp(&b.blocks)));
    Ok(out)
}

/// What the points of an induced action stand for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Labels {
    Points(Vec<usize>),
    Blocks(Vec<Vec<usize>>),
    Tuples(Vec<Vec<usize>>),
}

#[derive(Debug, Clone)]
pub struct InducedAction {
    pub target: PermGroup,
    pub labels: Labels,
    pub source_order: u128,
    pub kernel_order: u128,
}

impl InducedAction {
    pub fn is_faithful(&self) -> bool {
        self.kernel_order == 1
    }
}

/// Checks `φ(ab) = φ(a)φ(b)` on products of generator pairs.
fn check_homomorphism<F>(g: &PermGroup, images: &[Permutation], act: F) -> Result<()>
where
    F: Fn(&Permutation) -> Permutation,
{
    let gens = g.generators();
    let k = gens.len().min(4);
    for i in 0..k {
        for j in 0..k {
            if act(&gens[i].mul(&gens[j])) != images[i].mul(&images[j]) {
                return Err(internal("induced map is not a homomorphism"));
            }
        }
    }
    Ok(())
}

fn induced(g: &PermGroup, images: Vec<Permutation>, m: usize, labels: Labels) -> Result<InducedAction> {
    let source_order = g.order()?;
    let target = PermGroup::new(m, images)?;
    let t = target.order()?;
    if source_order % t != 0 {
        return Err(internal("image order does not divide source order"));
    }
    Ok(InducedAction { target, labels, source_order, kernel_order: source_order / t })
}

/// `G^B`, the action on the blocks of `b`.
pub fn action_on_blocks(g: &PermGroup, b: &BlockSystem) -> Result<InducedAction> {
    if b.degree() != g.degree() {
        return Err(Error::DegreeMismatch { left: g.degree(), right: b.degree() });
    }
    if !b.is_invariant(g) {
        return Err(Error::NotInvariant);
    }
    let images: Vec<Permutation> = g.generators().iter().map(|s| b.permutation_of(s)).collect();
    check_homomorphism(g, &images, |x| b.permutation_of(x))?;
    induced(g, images, b.block_count(), Labels::Blocks(b.blocks.clone()))
}

/// `G_B^B`: the setwise stabilizer of block `index` acting on that block,
/// whose points are relabelled `0..block_size` in increasing order.
pub fn block_restriction(g: &PermGroup, b: &BlockSystem, index: usize) -> Result<InducedAction> {
    if index >= b.block_count() {
        return Err(Error::InvalidBlock { index, count: b.block_count() });
    }
    if !b.is_invariant(g) {
        return Err(Error::NotInvariant);
    }
    let block = &b.blocks[index];
    let hom = Hom::new(g, g.generators().iter().map(|s| b.permutation_of(s)).collect(), b.block_count())?;
    let stab = hom.target().point_stabilizer(index)?;
    let setwise = hom.preimage(&stab)?;
    let mut label = vec![u32::MAX; g.degree()];
    for (i, &x) in block.iter().enumerate() {
        label[x] = i as u32;
    }
    let images: Vec<Permutation> = setwise.generators().iter().map(|s| s.restrict(block, &label)).collect();
    induced(&setwise, images, block.len(), Labels::Points(block.clone()))
}

/// Action on an orbit, relabelled `0..|orbit|` in increasing point order.
pub fn action_on_orbit(g: &PermGroup, orbit: &[usize]) -> Result<InducedAction> {
    let mut pts = orbit.to_vec();
    pts.sort_unstable();
    let mut label = vec![u32::MAX; g.degree()];
    for (i, &x) in pts.iter().enumerate() {
        label[x] = i as u32;
    }
    for s in g.generators() {
        if pts.iter().any(|&x| label[s.image(x)] == u32::MAX) {
            return Err(precondition("point set is not invariant"));
        }
    }
    let images: Vec<Permutation> = g.generators().iter().map(|s| s.restrict(&pts, &label)).collect();
    induced(g, images, pts.len(), Labels::Points(pts))
}

/// Action on the orbit of a tuple of distinct points; the tuples of the
/// orbit are numbered in lexicographic order.
pub fn tuple_action(g: &PermGroup, seed: &[usize], cfg: &Config) -> Result<InducedAction> {
    let n = g.degree();
    if seed.is_empty() {
        return Err(precondition("empty seed tuple"));
    }
    for (i, &x) in seed.iter().enumerate() {
        if x >= n {
            return Err(Error::PointOutOfRange { point: x, degree: n });
        }
        if seed[..i].contains(&x) {
            return Err(Error::RepeatedPoint(x));
        }
    }
    let apply = |s: &Permutation, t: &[usize]| -> Vec<usize> { t.iter().map(|&x| s.image(x)).collect() };
    let mut seen: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
    let mut queue = vec![seed.to_vec()];
    seen.insert(seed.to_vec(), ());
    while let Some(t) = queue.pop() {
        for s in g.generators() {
            let u = apply(s, &t);
            if !seen.contains_key(&u) {
                if seen.len() >= cfg.max_action_degree {
                    return Err(Error::CapExceeded { what: "tuple orbit size", cap: cfg.max_action_degree as u128 });
                }
                seen.insert(u.clone(), ());
                queue.push(u);
            }
        }
    }
    let tuples: Vec<Vec<usize>> = seen.into_keys().collect();
    let index: BTreeMap<&[usize], u32> = tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i as u32)).collect();
    let act = |s: &Permutation| -> Permutation {
        Permutation::from_images_unchecked(tuples.iter().map(|t| index[apply(s, t).as_slice()]).collect())
    };
    let images: Vec<Permutation> = g.generators().iter().map(act).collect();
    check_homomorphism(g, &images, act)?;
    let m = tuples.len();
    induced(g, images, m, Labels::Tuples(tuples))
}

/// Blocks of a tuple action: tuples with the same underlying point set.
pub fn tuple_to_set_blocks(a: &InducedAction) -> Result<BlockSystem> {
    let Labels::Tuples(tuples) = &a.labels else {
        return Err(Error::NotTupleAction);
    };
    let mut by_set: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (i, t) in tuples.iter().enumerate() {
        let mut key = t.clone();
        key.sort_unstable();
        by_set.entry(key).or_default().push(i);
    }
    let b = BlockSystem::from_blocks(tuples.len(), by_set.into_values().collect())?;
    if !b.is_invariant(&a.target) {
        return Err(Error::NotInvariant);
    }
    Ok(b)
}

/// A permutation on `Ω ⊔ Δ` acting as `a` on `Ω` and `b` on `Δ`.
fn concat(a: &Permutation, b: &Permutation) -> Permutation {
    let n = a.degree() as u32;
    let mut images = a.images().to_vec();
    images.extend(b.images().iter().map(|&x| x + n));
    Permutation::from_images_unchecked(images)
}

/// A homomorphism `G → Ḡ ≤ Sym(m)` given by generator images, realised as
/// the group of pairs `(g, φ(g))` on `n + m` points whose stabilizer chain
/// starts with a base of `Ḡ`. The levels below that prefix form the kernel.
pub(crate) struct Hom {
    n: usize,
    target: PermGroup,
    combined: StabChain,
    prefix_len: usize,
    kernel: PermGroup,
}

impl Hom {
    pub(crate) fn new(g: &PermGroup, images: Vec<Permutation>, m: usize) -> Result<Hom> {
        let n = g.degree();
        if images.len() != g.generators().len() {
            return Err(internal("one image per generator required"));
        }
        let cgens: Vec<Permutation> = g.generators().iter().zip(&images).map(|(a, b)| concat(a, b)).collect();
        let target = PermGroup::new(m, images)?;
        let prefix: Vec<usize> = target.chain()?.base().iter().map(|b| b + n).collect();
        let order = g.order()?;
        let mut pr = ProductReplacement::new(n + m, &cgens, 0xC0DE ^ n as u64);
        let combined = StabChain::from_samples(n + m, &cgens, &prefix, order, || pr.next_element())?;
        let kernel = PermGroup::from_chain(combined.restrict_domain(prefix.len(), n));
        if kernel.order()?.checked_mul(target.order()?) != Some(order) {
            return Err(internal(format!("homomorphism kernel/image orders inconsistent for |G| = {order}")));
        }
        Ok(Hom { n, target, combined, prefix_len: prefix.len(), kernel })
    }

    pub(crate) fn target(&self) -> &PermGroup {
        &self.target
    }

    pub(crate) fn kernel(&self) -> &PermGroup {
        &self.kernel
    }

    /// Some preimage of `x ∈ Ḡ`.
    pub(crate) fn lift(&self, x: &Permutation) -> Result<Permutation> {
        let n = self.n;
        let mut r = concat(&Permutation::identity(n), x);
        for level in &self.combined.levels()[..self.prefix_len] {
            let beta = r.image(level.base());
            let inv = level.transversal_inverse(beta).ok_or_else(|| precondition("element is not in the image"))?;
            r = r.mul(inv);
        }
        if (n..r.degree()).any(|i| !r.fixes(i)) {
            return Err(precondition("element is not in the image"));
        }
        Ok(Permutation::from_images_unchecked(r.images()[..n].to_vec()).inverse())
    }

    /// Full preimage of a subgroup `S ≤ Ḡ`.
    pub(crate) fn preimage(&self, s: &PermGroup) -> Result<PermGroup> {
        let mut gens = self.kernel.generators().to_vec();
        for x in s.generators() {
            gens.push(self.lift(x)?);
        }
        let order = self.kernel.order()?.checked_mul(s.order()?).ok_or(Error::Overflow("preimage order"))?;
        Ok(PermGroup::from_parts(self.n, gens, Some(order), None))
    }
}
