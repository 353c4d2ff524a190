//! Wreath products `H Wr K` in imprimitive and product action.
//!
//! Encodings: in the imprimitive action on `Ω × Δ` the point `(ω, δ)` is
//! `δ·m + ω` (`m = |Ω|`), so block `δ` is `δ·m .. δ·m + m`. In the product
//! action on `Ω^k` the tuple `(δ₁, …, δ_k)` is the base-`m` number with
//! `δ₁` as the most significant digit; `h` in coordinate `i` maps `δ_i` to
//! `δ_i^h`, and `σ ∈ K` sends `(δ₁, …, δ_k)` to `(δ_{1σ⁻¹}, …, δ_{kσ⁻¹})`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::actions::BlockSystem;
use crate::config::Config;
use crate::error::{internal, Error, Result};
use crate::group::PermGroup;
use crate::numth::pow_checked;
use crate::perm::Permutation;
use crate::sylow::{finish, sylow_subgroup, SylowMethod, SylowResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WreathMode {
    Imprimitive,
    Product,
}

impl WreathMode {
    pub fn name(self) -> &'static str {
        match self {
            WreathMode::Imprimitive => "imprimitive",
            WreathMode::Product => "product",
        }
    }
}

#[derive(Debug, Clone)]
pub struct WreathSpec {
    pub h: PermGroup,
    pub k: PermGroup,
    pub mode: WreathMode,
}

impl WreathSpec {
    pub fn degree(&self) -> Result<usize> {
        let (m, k) = (self.h.degree(), self.k.degree());
        match self.mode {
            WreathMode::Imprimitive => Ok(m * k),
            WreathMode::Product => {
                usize::try_from(pow_checked(m as u128, k as u32)?).map_err(|_| Error::Overflow("product action degree"))
            }
        }
    }

    /// `|H|^k · |K|`.
    pub fn order(&self) -> Result<u128> {
        pow_checked(self.h.order()?, self.k.degree() as u32)?
            .checked_mul(self.k.order()?)
            .ok_or(Error::Overflow("wreath product order"))
    }

    /// A textual description of the point encoding.
    pub fn encoding(&self) -> &'static str {
        match self.mode {
            WreathMode::Imprimitive => "imprimitive: point (w,d) -> d*m + w, blocks of size m",
            WreathMode::Product => "product: point (d1..dk) -> base-m digits, d1 most significant",
        }
    }
}

/// Least point of each `K`-orbit on `{0..k-1}`.
fn orbit_representatives(k: &PermGroup) -> Vec<usize> {
    k.orbits().orbits().iter().map(|o| o[0]).collect()
}

fn embed_in_block(h: &Permutation, m: usize, k: usize, block: usize) -> Permutation {
    let mut images: Vec<u32> = (0..(m * k) as u32).collect();
    for w in 0..m {
        images[block * m + w] = (block * m + h.image(w)) as u32;
    }
    Permutation::from_images_unchecked(images)
}

fn permute_blocks(s: &Permutation, m: usize) -> Permutation {
    let k = s.degree();
    let images = (0..m * k).map(|x| (s.image(x / m) * m + x % m) as u32).collect();
    Permutation::from_images_unchecked(images)
}

fn digits(mut x: usize, m: usize, k: usize) -> Vec<usize> {
    let mut d = alloc::vec![0; k];
    for i in (0..k).rev() {
        d[i] = x % m;
        x /= m;
    }
    d
}

fn undigits(d: &[usize], m: usize) -> usize {
    d.iter().fold(0, |acc, &x| acc * m + x)
}

fn in_coordinate(h: &Permutation, m: usize, k: usize, coord: usize, n: usize) -> Permutation {
    let images = (0..n)
        .map(|x| {
            let mut d = digits(x, m, k);
            d[coord] = h.image(d[coord]);
            undigits(&d, m) as u32
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

fn permute_coordinates(s: &Permutation, m: usize, n: usize) -> Permutation {
    let k = s.degree();
    let images = (0..n)
        .map(|x| {
            let d = digits(x, m, k);
            let mut e = alloc::vec![0; k];
            for (i, &v) in d.iter().enumerate() {
                e[s.image(i)] = v;
            }
            undigits(&e, m) as u32
        })
        .collect();
    Permutation::from_images_unchecked(images)
}

fn check_order(g: &PermGroup, spec: &WreathSpec) -> Result<()> {
    let expected = spec.order()?;
    let got = g.order()?;
    if got != expected {
        return Err(internal(alloc::format!("wreath product has order {got}, expected {expected}")));
    }
    Ok(())
}

/// `H Wr K` on `m·k` points; `H` generators act in one block of each
/// `K`-orbit and `K` permutes the blocks.
pub fn wreath_imprimitive(h: &PermGroup, k: &PermGroup) -> Result<PermGroup> {
    let (m, kd) = (h.degree(), k.degree());
    let mut gens = Vec::new();
    for block in orbit_representatives(k) {
        gens.extend(h.generators().iter().map(|s| embed_in_block(s, m, kd, block)));
    }
    gens.extend(k.generators().iter().map(|s| permute_blocks(s, m)));
    let spec = WreathSpec { h: h.clone(), k: k.clone(), mode: WreathMode::Imprimitive };
    let mut g = PermGroup::new(m * kd, gens)?;
    check_order(&g, &spec)?;
    g.set_structure(Arc::new(spec));
    Ok(g)
}

/// The `k` blocks of size `m` of an imprimitive wreath product.
pub fn imprimitive_blocks(m: usize, k: usize) -> BlockSystem {
    BlockSystem::from_blocks(m * k, (0..k).map(|d| (d * m..d * m + m).collect()).collect())
        .expect("contiguous blocks form a partition")
}

/// `H Wr K` in product action on `m^k` points.
pub fn wreath_product_action(h: &PermGroup, k: &PermGroup, cfg: &Config) -> Result<PermGroup> {
    let (m, kd) = (h.degree(), k.degree());
    let spec = WreathSpec { h: h.clone(), k: k.clone(), mode: WreathMode::Product };
    let n = spec.degree()?;
    if n > cfg.max_action_degree {
        return Err(Error::CapExceeded { what: "product action degree", cap: cfg.max_action_degree as u128 });
    }
    let mut gens = Vec::new();
    for coord in orbit_representatives(k) {
        gens.extend(h.generators().iter().map(|s| in_coordinate(s, m, kd, coord, n)));
    }
    gens.extend(k.generators().iter().map(|s| permute_coordinates(s, m, n)));
    let mut g = PermGroup::new(n, gens)?;
    check_order(&g, &spec)?;
    g.set_structure(Arc::new(spec));
    Ok(g)
}

/// `P^k ⋊ Q` for Sylow subgroups `P` of `H` and `Q` of `K`.
pub fn sylow_structural(spec: &WreathSpec, p: u128, cfg: &Config) -> Result<SylowResult> {
    let (m, kd) = (spec.h.degree(), spec.k.degree());
    let n = spec.degree()?;
    let ph = sylow_subgroup(&spec.h, p, cfg)?;
    let qk = sylow_subgroup(&spec.k, p, cfg)?;
    let mut gens = Vec::new();
    for c in 0..kd {
        for s in ph.subgroup.generators() {
            gens.push(match spec.mode {
                WreathMode::Imprimitive => embed_in_block(s, m, kd, c),
                WreathMode::Product => in_coordinate(s, m, kd, c, n),
            });
        }
    }
    for s in qk.subgroup.generators() {
        gens.push(match spec.mode {
            WreathMode::Imprimitive => permute_blocks(s, m),
            WreathMode::Product => permute_coordinates(s, m, n),
        });
    }
    let order = pow_checked(ph.order, kd as u32)?.checked_mul(qk.order).ok_or(Error::Overflow("Sylow order"))?;
    let sub = PermGroup::from_parts(n, gens, Some(order), None);
    let whole = match spec.mode {
        WreathMode::Imprimitive => wreath_imprimitive(&spec.h, &spec.k)?,
        WreathMode::Product => wreath_product_action(&spec.h, &spec.k, cfg)?,
    };
    let target = crate::numth::pp(spec.order()?, p);
    finish(&whole, p, sub, target, SylowMethod::Structural)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sylow::sylow_with;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn c3_wr_c2() {
        let c3 = PermGroup::cyclic(3).unwrap();
        let c2 = PermGroup::cyclic(2).unwrap();
        let g = wreath_imprimitive(&c3, &c2).unwrap();
        assert_eq!((g.degree(), g.order().unwrap()), (6, 18));
        assert!(g.is_transitive());
        assert!(imprimitive_blocks(3, 2).is_invariant(&g));
        let s = sylow_subgroup(&g, 3, &cfg()).unwrap();
        assert_eq!(s.method, SylowMethod::Structural);
        assert_eq!(s.order, 9);
        assert_eq!(s.orbit_lengths(), alloc::vec![3, 3]);
    }

    #[test]
    fn trivial_top_or_bottom() {
        let k = PermGroup::symmetric(3).unwrap();
        let g = wreath_imprimitive(&PermGroup::trivial(1), &k).unwrap();
        assert_eq!(g.generators(), k.generators());
        let h = PermGroup::symmetric(3).unwrap();
        let pa = wreath_product_action(&h, &PermGroup::trivial(2), &cfg()).unwrap();
        assert_eq!((pa.degree(), pa.order().unwrap()), (9, 36));
        assert_eq!(pa.orbits().len(), 1);
    }

    #[test]
    fn product_action_orders() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let s4 = PermGroup::symmetric(4).unwrap();
        let c2 = PermGroup::cyclic(2).unwrap();
        let a = wreath_product_action(&s3, &c2, &cfg()).unwrap();
        assert_eq!((a.degree(), a.order().unwrap()), (9, 72));
        let b = wreath_product_action(&s4, &c2, &cfg()).unwrap();
        assert_eq!((b.degree(), b.order().unwrap()), (16, 1152));
        let s = sylow_subgroup(&b, 2, &cfg()).unwrap();
        assert_eq!(s.order, 128);
        assert!(s.subgroup.is_transitive());
        assert_eq!(sylow_subgroup(&b, 5, &cfg()).unwrap().order, 1);
    }

    #[test]
    fn coordinate_permutation_formula() {
        // (d1, d2, d3)^σ = (d_{1σ⁻¹}, d_{2σ⁻¹}, d_{3σ⁻¹}) with σ = (0 1 2)
        let s = Permutation::from_cycles(3, &[alloc::vec![0, 1, 2]]).unwrap();
        let g = permute_coordinates(&s, 2, 8);
        // (1,0,0) = 4 goes to (0,1,0) = 2
        assert_eq!(g.image(4), 2);
    }

    #[test]
    fn structural_matches_reduction() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let c3 = PermGroup::cyclic(3).unwrap();
        let g = wreath_product_action(&s3, &c3, &cfg()).unwrap();
        let a = sylow_subgroup(&g, 3, &cfg()).unwrap();
        let b = sylow_with(&g, 3, SylowMethod::Reduction, &cfg()).unwrap();
        assert_eq!(a.order, b.order);
        assert_eq!(a.orbit_lengths(), b.orbit_lengths());
    }
}
