//! Explicit groups: projective-line actions of `PSL₂(q)`, `PGL₂(q)`,
//! `PΓL₂(q)`, the action on external lines to a conic, the tuple/set block
//! example, semilinear Sylow subgroups of `ΓL₁`, coset and diagonal actions,
//! and small affine groups.
//!
//! On the projective line the point `x ∈ GF(q)` is its field index and
//! `∞ = q`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::actions::{action_on_blocks, tuple_action, tuple_to_set_blocks, BlockSystem, InducedAction};
use crate::config::Config;
use crate::error::{internal, precondition, Error, Result};
use crate::field::{field_make, Field, ProjectivePoint};
use crate::group::PermGroup;
use crate::numth::{gcd, is_prime, pp, prime_power};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Psl2Variant {
    Psl,
    Pgl,
    PGammaL,
    /// `SL₂(q)`, accepted only when it equals `PSL₂(q)` (q even).
    SlAsPsl,
}

impl Psl2Variant {
    pub fn name(self) -> &'static str {
        match self {
            Psl2Variant::Psl => "PSL",
            Psl2Variant::Pgl => "PGL",
            Psl2Variant::PGammaL => "PGammaL",
            Psl2Variant::SlAsPsl => "SL",
        }
    }
}

/// A 2×2 matrix `[[a, b], [c, d]]` acting by `x ↦ (ax + b)/(cx + d)`.
#[derive(Debug, Clone, Copy)]
struct Mobius {
    a: u32,
    b: u32,
    c: u32,
    d: u32,
}

impl Mobius {
    fn apply(&self, f: &Field, x: u32) -> u32 {
        let q = f.order();
        if x == q {
            return if self.c == 0 { q } else { f.div(self.a, self.c).expect("c nonzero") };
        }
        let num = f.add(f.mul(self.a, x), self.b);
        let den = f.add(f.mul(self.c, x), self.d);
        f.div(num, den).unwrap_or(q)
    }

    fn on_line(&self, f: &Field) -> Permutation {
        let images = (0..=f.order()).map(|x| self.apply(f, x)).collect();
        Permutation::from_images_unchecked(images)
    }
}

fn field_of_order(q: u128, cfg: &Config) -> Result<Field> {
    let (p, k) = prime_power(q).ok_or_else(|| precondition(format!("{q} is not a prime power")))?;
    field_make(p as u32, k, cfg)
}

fn frobenius_on_line(f: &Field) -> Permutation {
    let q = f.order();
    let images = (0..=q).map(|x| if x == q { q } else { f.frobenius(x) }).collect();
    Permutation::from_images_unchecked(images)
}

/// Generating Möbius maps: `x+1`, `λx` or `λ²x`, and `1/x` or `−1/x`.
fn mobius_generators(f: &Field, full: bool) -> [Mobius; 3] {
    let lambda = f.primitive();
    let one = 1;
    let minus_one = f.neg(one);
    if full {
        [
            Mobius { a: one, b: one, c: 0, d: one },
            Mobius { a: lambda, b: 0, c: 0, d: one },
            Mobius { a: 0, b: one, c: one, d: 0 },
        ]
    } else {
        [
            Mobius { a: one, b: one, c: 0, d: one },
            Mobius { a: f.mul(lambda, lambda), b: 0, c: 0, d: one },
            Mobius { a: 0, b: minus_one, c: one, d: 0 },
        ]
    }
}

/// Order of the projective group: `q(q²−1)/gcd(2, q−1)`, `q(q²−1)`, or
/// `q(q²−1)·k` for `q = p^k`.
pub fn psl2_order(q: u128, variant: Psl2Variant) -> Result<u128> {
    let (_, k) = prime_power(q).ok_or_else(|| precondition(format!("{q} is not a prime power")))?;
    let pgl = q * (q * q - 1);
    Ok(match variant {
        Psl2Variant::Psl | Psl2Variant::SlAsPsl => pgl / gcd(2, q - 1),
        Psl2Variant::Pgl => pgl,
        Psl2Variant::PGammaL => pgl * k as u128,
    })
}

fn checked(g: PermGroup, expected: u128, what: &str) -> Result<PermGroup> {
    let got = g.order()?;
    if got != expected {
        return Err(internal(format!("{what} has order {got}, expected {expected}")));
    }
    Ok(g)
}

/// The natural action on `GF(q) ∪ {∞}`, degree `q + 1`.
pub fn psl2_action(q: u128, variant: Psl2Variant, cfg: &Config) -> Result<PermGroup> {
    if q < 3 {
        return Err(precondition("q must be at least 3"));
    }
    if variant == Psl2Variant::SlAsPsl && q % 2 == 1 {
        return Err(Error::UnsupportedVariant(format!("SL(2,{q}) is not PSL(2,{q}) for odd q")));
    }
    let f = field_of_order(q, cfg)?;
    let full = matches!(variant, Psl2Variant::Pgl | Psl2Variant::PGammaL);
    let mut gens: Vec<Permutation> = mobius_generators(&f, full).iter().map(|m| m.on_line(&f)).collect();
    if variant == Psl2Variant::PGammaL {
        gens.push(frobenius_on_line(&f));
    }
    gens.retain(|g| !g.is_identity());
    let g = PermGroup::new(q as usize + 1, gens)?;
    checked(g, psl2_order(q, variant)?, &format!("{}(2,{q})", variant.name()))
}

/// Lines of `PG(2,q)` sorted by how many points of the conic
/// `{(1 : t : t²)} ∪ {(0 : 0 : 1)}` they contain.
#[derive(Debug, Clone)]
pub struct ConicLines {
    pub tangent: Vec<ProjectivePoint>,
    pub secant: Vec<ProjectivePoint>,
    pub external: Vec<ProjectivePoint>,
}

fn dot(f: &Field, a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

fn cross(f: &Field, a: &[u32], b: &[u32]) -> [u32; 3] {
    let m = |i: usize, j: usize| f.sub(f.mul(a[i], b[j]), f.mul(a[j], b[i]));
    [m(1, 2), m(2, 0), m(0, 1)]
}

fn projective_plane(f: &Field) -> Vec<ProjectivePoint> {
    let q = f.order();
    let mut pts = Vec::new();
    for x in 0..q {
        for y in 0..q {
            pts.push(ProjectivePoint::new(f, &[1, x, y]).expect("nonzero"));
        }
    }
    for y in 0..q {
        pts.push(ProjectivePoint::new(f, &[0, 1, y]).expect("nonzero"));
    }
    pts.push(ProjectivePoint::new(f, &[0, 0, 1]).expect("nonzero"));
    pts
}

fn conic(f: &Field) -> Vec<[u32; 3]> {
    let mut c: Vec<[u32; 3]> = (0..f.order()).map(|t| [1, t, f.mul(t, t)]).collect();
    c.push([0, 0, 1]);
    c
}

/// Classifies the lines of `PG(2, q)` against the conic.
pub fn classify_conic_lines(f: &Field) -> ConicLines {
    let c = conic(f);
    let mut out = ConicLines { tangent: Vec::new(), secant: Vec::new(), external: Vec::new() };
    for line in projective_plane(f) {
        match c.iter().filter(|x| dot(f, line.coords(), &x[..]) == 0).count() {
            0 => out.external.push(line),
            1 => out.tangent.push(line),
            2 => out.secant.push(line),
            n => unreachable!("a line meets a conic in {n} points"),
        }
    }
    out
}

/// Two distinct points on the line `l`.
fn points_on_line(f: &Field, l: &[u32]) -> ([u32; 3], [u32; 3]) {
    let basis = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let mut found: Vec<[u32; 3]> = Vec::new();
    for e in basis {
        let p = cross(f, l, &e);
        if p.iter().any(|&c| c != 0) {
            let pp = ProjectivePoint::new(f, &p).expect("nonzero");
            if found.iter().all(|x| ProjectivePoint::new(f, x).as_ref() != Some(&pp)) {
                found.push(p);
            }
        }
        if found.len() == 2 {
            break;
        }
    }
    (found[0], found[1])
}

/// `(s, t) ↦ (αs + βt, γs + δt)` lifted to `(s², st, t²)`.
fn symmetric_square(f: &Field, al: u32, be: u32, ga: u32, de: u32) -> [[u32; 3]; 3] {
    let two = |x: u32| f.add(x, x);
    [
        [f.mul(al, al), two(f.mul(al, be)), f.mul(be, be)],
        [f.mul(al, ga), f.add(f.mul(al, de), f.mul(be, ga)), f.mul(be, de)],
        [f.mul(ga, ga), two(f.mul(ga, de)), f.mul(de, de)],
    ]
}

fn apply_matrix(f: &Field, m: &[[u32; 3]; 3], x: &[u32; 3]) -> [u32; 3] {
    [dot(f, &m[0], x), dot(f, &m[1], x), dot(f, &m[2], x)]
}

/// The action on the `q(q−1)/2` external lines to the conic, for `q`
/// even, `q ≥ 4`.
pub fn external_lines_action(q: u128, variant: Psl2Variant, cfg: &Config) -> Result<PermGroup> {
    if q % 2 == 1 {
        return Err(precondition("external lines action needs even q"));
    }
    if q < 4 {
        return Err(precondition("external lines action needs q >= 4"));
    }
    if !matches!(variant, Psl2Variant::Psl | Psl2Variant::PGammaL) {
        return Err(Error::UnsupportedVariant(String::from(variant.name())));
    }
    let f = field_of_order(q, cfg)?;
    let lines = classify_conic_lines(&f);
    let qq = q as usize;
    if lines.tangent.len() != qq + 1
        || lines.secant.len() != qq * (qq + 1) / 2
        || lines.external.len() != qq * (qq - 1) / 2
    {
        return Err(internal(format!(
            "conic line counts {} / {} / {} for q = {q}",
            lines.tangent.len(),
            lines.secant.len(),
            lines.external.len()
        )));
    }
    let index: BTreeMap<&ProjectivePoint, usize> = lines.external.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let act = |map: &dyn Fn(&[u32; 3]) -> [u32; 3]| -> Result<Permutation> {
        let mut images = Vec::with_capacity(lines.external.len());
        for l in &lines.external {
            let (a, b) = points_on_line(&f, l.coords());
            let image = ProjectivePoint::new(&f, &cross(&f, &map(&a), &map(&b))).expect("distinct points");
            let j = index.get(&image).ok_or_else(|| internal("external line mapped to a non-external line"))?;
            images.push(*j as u32);
        }
        Permutation::from_images(images)
    };
    let lambda = f.primitive();
    // t ↦ t + 1, t ↦ λ²t, t ↦ 1/t on the conic point (1 : t : t²)
    let mats = [
        symmetric_square(&f, 1, 0, 1, 1),
        symmetric_square(&f, 1, 0, 0, f.mul(lambda, lambda)),
        symmetric_square(&f, 0, 1, 1, 0),
    ];
    let mut gens = Vec::new();
    for m in &mats {
        gens.push(act(&|x| apply_matrix(&f, m, x))?);
    }
    if variant == Psl2Variant::PGammaL {
        gens.push(act(&|x| [f.frobenius(x[0]), f.frobenius(x[1]), f.frobenius(x[2])])?);
    }
    gens.retain(|g| !g.is_identity());
    let g = PermGroup::new(lines.external.len(), gens)?;
    checked(g, psl2_order(q, variant)?, "external lines action")
}

/// A group acting on an orbit `Y` of tuples, the set partition of `Y`, and
/// the action induced on it.
#[derive(Debug, Clone)]
pub struct TupleBlockExample {
    pub natural: PermGroup,
    pub y: InducedAction,
    pub blocks: BlockSystem,
    pub quotient: InducedAction,
}

/// `Y = seed^G` with the partition by underlying sets and the action on it.
pub fn tuple_block_example(g: &PermGroup, seed: &[usize], cfg: &Config) -> Result<TupleBlockExample> {
    let y = tuple_action(g, seed, cfg)?;
    let blocks = tuple_to_set_blocks(&y)?;
    let quotient = action_on_blocks(&y.target, &blocks)?;
    Ok(TupleBlockExample { natural: g.clone(), y, blocks, quotient })
}

/// `PGL₂(q)` on the orbit of `(0, 1, …, p−1)`, `q` a power of `p`.
pub fn pgl2_pdivisible_example(q: u128, cfg: &Config) -> Result<TupleBlockExample> {
    let (p, _) = prime_power(q).ok_or_else(|| precondition(format!("{q} is not a prime power")))?;
    let g = psl2_action(q, Psl2Variant::Pgl, cfg)?;
    let seed: Vec<usize> = (0..p as usize).collect();
    let ex = tuple_block_example(&g, &seed, cfg)?;
    if ex.blocks.block_size() as u128 % p != 0 {
        return Err(internal(format!("block size {} is not divisible by {p}", ex.blocks.block_size())));
    }
    Ok(ex)
}

/// A Sylow p-subgroup `X = ⟨ξ̂, φ⟩` of `ΓL₁(r^{df})` acting on the nonzero
/// field elements; the nonzero element `x` is the point `x − 1`.
#[derive(Debug, Clone)]
pub struct GammaL1Sylow {
    pub field: Field,
    pub r: u32,
    pub d: u32,
    pub f: u32,
    pub p: u32,
    pub xi: u32,
    pub x: PermGroup,
    pub y: PermGroup,
    pub sigma: Permutation,
}

fn on_nonzero(field: &Field, map: impl Fn(u32) -> u32) -> Permutation {
    let images = (1..field.order()).map(|x| map(x) - 1).collect();
    Permutation::from_images_unchecked(images)
}

pub fn gammal1_sylow(r: u32, d: u32, f: u32, p: u32, cfg: &Config) -> Result<GammaL1Sylow> {
    if !is_prime(r as u128) {
        return Err(Error::NotPrime(r as u128));
    }
    if !is_prime(p as u128) {
        return Err(Error::NotPrime(p as u128));
    }
    if p == r {
        return Err(precondition("p and r must be distinct"));
    }
    if d < 2 || f == 0 || f % p != 0 || d % p == 0 {
        return Err(precondition("need d >= 2, p | f and gcd(d, p) = 1"));
    }
    let field = field_make(r, d * f, cfg)?;
    let n = field.order() as u128 - 1;
    if n % p as u128 != 0 {
        return Err(precondition("p must divide r^(df) - 1"));
    }
    let np = pp(n, p as u128);
    let fp = pp(f as u128, p as u128) as u32;
    let xi = field.exp((n / np) as u64);
    let xi_hat = on_nonzero(&field, |x| field.mul(xi, x));
    let e_phi = (r as u64).pow(d * f / fp);
    let phi = on_nonzero(&field, |x| field.pow(x, e_phi));
    let e_sigma = (r as u64).pow(d * f / p);
    let sigma = on_nonzero(&field, |x| field.pow(x, e_sigma));
    let deg = n as usize;
    let y = checked(PermGroup::new(deg, vec![xi_hat.clone()])?, np, "Y")?;
    let x = checked(PermGroup::new(deg, vec![xi_hat, phi])?, np * fp as u128, "X")?;
    Ok(GammaL1Sylow { field, r, d, f, p, xi, x, y, sigma })
}

/// Number of one-dimensional `GF(r^f)`-subspaces of `field` mapped to
/// themselves by `sigma`, which acts on nonzero elements as above.
pub fn count_fixed_subspaces(field: &Field, sigma: &Permutation, f: u32) -> Result<usize> {
    if sigma.degree() != field.order() as usize - 1 {
        return Err(Error::DegreeMismatch { left: field.order() as usize - 1, right: sigma.degree() });
    }
    let scalars: Vec<u32> = field.subfield(f)?.into_iter().filter(|&c| c != 0).collect();
    let mut seen = vec![false; field.order() as usize];
    let mut count = 0;
    for x in 1..field.order() {
        if seen[x as usize] {
            continue;
        }
        let line: Vec<u32> = scalars.iter().map(|&c| field.mul(c, x)).collect();
        for &y in &line {
            seen[y as usize] = true;
        }
        let image = sigma.image(x as usize - 1) as u32 + 1;
        if line.contains(&image) {
            count += 1;
        }
    }
    Ok(count)
}

/// `G` acting on the right cosets of `H`.
#[derive(Debug, Clone)]
pub struct CosetAction {
    pub target: PermGroup,
    reps: Vec<Permutation>,
    h: PermGroup,
}

impl CosetAction {
    fn find(&self, x: &Permutation) -> Option<usize> {
        let xi = x.inverse();
        let hchain = self.h.chain().ok()?;
        self.reps.iter().position(|r| hchain.contains(&r.mul(&xi)))
    }

    /// The permutation of the cosets induced by `x ∈ G`.
    pub fn image(&self, x: &Permutation) -> Result<Permutation> {
        let images = self
            .reps
            .iter()
            .map(|r| self.find(&r.mul(x)).map(|k| k as u32).ok_or_else(|| precondition("element is not in G")))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }
}

/// `G` on the right cosets `Hx`, numbered in order of first appearance in
/// a breadth-first walk from `H`.
pub fn coset_action(g: &PermGroup, h: &PermGroup, cfg: &Config) -> Result<CosetAction> {
    if !h.is_subgroup_of(g)? {
        return Err(precondition("coset action: H is not a subgroup of G"));
    }
    let index = g.order()? / h.order()?;
    if index > cfg.max_action_degree as u128 {
        return Err(Error::CapExceeded { what: "coset action degree", cap: cfg.max_action_degree as u128 });
    }
    let mut ca =
        CosetAction { target: PermGroup::trivial(1), reps: vec![Permutation::identity(g.degree())], h: h.clone() };
    let mut i = 0;
    while i < ca.reps.len() {
        for s in g.generators() {
            let y = ca.reps[i].mul(s);
            if ca.find(&y).is_none() {
                ca.reps.push(y);
            }
        }
        i += 1;
    }
    if ca.reps.len() as u128 != index {
        return Err(internal("coset enumeration found the wrong number of cosets"));
    }
    let gens = g.generators().iter().map(|s| ca.image(s)).collect::<Result<Vec<_>>>()?;
    ca.target = PermGroup::new(ca.reps.len(), gens)?;
    Ok(ca)
}

/// `T × T` on the elements of `T`, with `(a, b): t ↦ a⁻¹ t b`; the
/// elements of `T` are numbered in sorted order.
pub fn diagonal_action(t: &PermGroup, cfg: &Config) -> Result<PermGroup> {
    let mut elems: Vec<Permutation> = t.elements(cfg.max_enum)?.collect();
    elems.sort();
    let index: BTreeMap<&Permutation, usize> = elems.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut gens = Vec::new();
    for s in t.generators() {
        let si = s.inverse();
        let left = elems.iter().map(|x| index[&si.mul(x)] as u32).collect();
        let right = elems.iter().map(|x| index[&x.mul(s)] as u32).collect();
        gens.push(Permutation::from_images(left)?);
        gens.push(Permutation::from_images(right)?);
    }
    gens.retain(|g| !g.is_identity());
    PermGroup::new(elems.len(), gens)
}

/// `x ↦ ax + b` on `GF(p)` with `a` ranging over the subgroup of order
/// `d` of `GF(p)*`; order `p·d`. `d = 1` gives the cyclic group.
pub fn affine_group(p: u32, d: u32, cfg: &Config) -> Result<PermGroup> {
    if !is_prime(p as u128) {
        return Err(Error::NotPrime(p as u128));
    }
    if d == 0 || (p - 1) % d != 0 {
        return Err(precondition(format!("{d} does not divide {p} - 1")));
    }
    let f = field_make(p, 1, cfg)?;
    let omega = f.exp(((p - 1) / d) as u64);
    let shift = (0..p).map(|x| (x + 1) % p).collect();
    let scale = (0..p).map(|x| f.mul(omega, x)).collect();
    let mut gens = vec![Permutation::from_images(shift)?, Permutation::from_images(scale)?];
    gens.retain(|g| !g.is_identity());
    checked(PermGroup::new(p as usize, gens)?, p as u128 * d as u128, "affine group")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn projective_line_orders() {
        let c = cfg();
        let g = psl2_action(4, Psl2Variant::Pgl, &c).unwrap();
        assert_eq!((g.degree(), g.order().unwrap()), (5, 60));
        let g = psl2_action(5, Psl2Variant::Psl, &c).unwrap();
        assert_eq!((g.degree(), g.order().unwrap()), (6, 60));
        assert!(g.is_two_transitive().unwrap());
        let g = psl2_action(8, Psl2Variant::PGammaL, &c).unwrap();
        assert_eq!((g.degree(), g.order().unwrap()), (9, 1512));
        assert_eq!(psl2_action(9, Psl2Variant::Pgl, &c).unwrap().order().unwrap(), 720);
        assert_eq!(psl2_action(8, Psl2Variant::SlAsPsl, &c).unwrap().order().unwrap(), 504);
        assert!(matches!(psl2_action(7, Psl2Variant::SlAsPsl, &c), Err(Error::UnsupportedVariant(_))));
        assert!(psl2_action(6, Psl2Variant::Psl, &c).is_err());
    }

    #[test]
    fn external_lines_small() {
        let c = cfg();
        let g = external_lines_action(4, Psl2Variant::Psl, &c).unwrap();
        assert_eq!((g.degree(), g.order().unwrap()), (6, 60));
        let g = external_lines_action(8, Psl2Variant::PGammaL, &c).unwrap();
        assert_eq!((g.degree(), g.order().unwrap()), (28, 1512));
        assert!(g.is_transitive());
        assert!(external_lines_action(9, Psl2Variant::Psl, &c).is_err());
        assert!(external_lines_action(2, Psl2Variant::Psl, &c).is_err());
    }

    #[test]
    fn conic_line_counts() {
        for (p, k) in [(2, 2), (2, 3), (3, 1), (5, 1), (3, 2)] {
            let f = field_make(p, k, &cfg()).unwrap();
            let q = f.order() as usize;
            let l = classify_conic_lines(&f);
            assert_eq!(l.tangent.len() + l.secant.len() + l.external.len(), q * q + q + 1);
            assert_eq!(l.secant.len(), q * (q + 1) / 2);
            assert_eq!(l.tangent.len(), q + 1);
            assert_eq!(l.external.len(), q * (q - 1) / 2);
        }
    }

    #[test]
    fn tuple_example_a5() {
        let g = psl2_action(4, Psl2Variant::Psl, &cfg()).unwrap();
        let ex = tuple_block_example(&g, &[0, 1], &cfg()).unwrap();
        assert_eq!(ex.y.target.degree(), 20);
        assert_eq!(ex.blocks.block_size(), 2);
        assert_eq!(ex.quotient.target.degree(), 10);
    }

    #[test]
    fn gammal1_small() {
        let s = gammal1_sylow(2, 2, 3, 3, &cfg()).unwrap();
        assert_eq!(s.x.order().unwrap(), 27);
        assert_eq!(s.y.order().unwrap(), 9);
        assert_eq!(s.sigma.order().unwrap(), 3);
        assert!(s.x.contains(&s.sigma).unwrap());
        let all = count_fixed_subspaces(&s.field, &Permutation::identity(63), 3).unwrap();
        assert_eq!(all, 9);
        assert!(count_fixed_subspaces(&s.field, &s.sigma, 3).unwrap() <= 3);
        assert!(gammal1_sylow(2, 2, 2, 2, &cfg()).is_err());
    }

    #[test]
    fn cosets_and_diagonal() {
        let s4 = PermGroup::symmetric(4).unwrap();
        let s3 = s4.point_stabilizer(3).unwrap();
        let a = coset_action(&s4, &s3, &cfg()).unwrap().target;
        assert_eq!((a.degree(), a.order().unwrap()), (4, 24));
        let c3 = PermGroup::cyclic(3).unwrap();
        let d = diagonal_action(&c3, &cfg()).unwrap();
        assert_eq!((d.degree(), d.order().unwrap()), (3, 3));
        let s3 = PermGroup::symmetric(3).unwrap();
        let d = diagonal_action(&s3, &cfg()).unwrap();
        assert_eq!((d.degree(), d.order().unwrap()), (6, 36));
    }

    #[test]
    fn affine_orders() {
        let c = cfg();
        for (p, d) in [(7, 3), (11, 5), (13, 3), (19, 9), (17, 1), (23, 11)] {
            let g = affine_group(p, d, &c).unwrap();
            assert_eq!(g.order().unwrap(), (p * d) as u128);
        }
        assert!(affine_group(7, 4, &c).is_err());
    }
}
