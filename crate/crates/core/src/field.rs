//! Finite fields `GF(p^k)` in a polynomial basis.
//!
//! An element `c₀ + c₁x + … + c_{k-1}x^{k-1}` is stored as the integer
//! `c₀ + c₁p + … + c_{k-1}p^{k-1}`, so `0..p` is the prime field. The
//! modulus is the least monic irreducible of degree `k` when coefficient
//! vectors `(c₀, c₁, …)` are compared lexicographically.

use alloc::vec;
use alloc::vec::Vec;

use crate::config::Config;
use crate::error::{internal, precondition, Error, Result};
use crate::numth::{factorize, is_prime};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    p: u32,
    k: u32,
    q: u32,
    /// `modulus[i]` is the coefficient of `x^i`; the leading 1 is included.
    modulus: Vec<u32>,
    primitive: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

fn to_digits(x: u32, p: u32, k: u32) -> Vec<u32> {
    let mut d = vec![0; k as usize];
    let mut x = x;
    for c in d.iter_mut() {
        *c = x % p;
        x /= p;
    }
    d
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic `m`, both low-degree-first.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dm {
        let lead = r.pop().expect("nonempty");
        if lead != 0 {
            let shift = r.len() - dm;
            for (i, &c) in m[..dm].iter().enumerate() {
                let t = r[shift + i] + p - (lead * c) % p;
                r[shift + i] = t % p;
            }
        }
    }
    r
}

fn poly_mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut r = poly_rem(&prod, m, p);
    r.resize(m.len() - 1, 0);
    r
}

/// True iff the monic `f` of degree `k ≥ 1` has no monic factor of degree
/// `1..=k/2`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut g: Vec<u32> = to_digits(code as u32, p, d as u32);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of elements.
    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The least element of multiplicative order `q − 1`.
    pub fn primitive(&self) -> u32 {
        self.primitive
    }

    pub fn digits(&self, x: u32) -> Vec<u32> {
        to_digits(x, self.p, self.k)
    }

    pub fn from_digits(&self, d: &[u32]) -> u32 {
        from_digits(d, self.p)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b, mut r, mut place) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            r += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        r
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let (mut a, mut r, mut place) = (a, 0, 1);
        while a > 0 {
            r += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        r
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let e = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[e as usize]
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let l = self.log[a as usize];
        Some(self.exp[((self.q - 1 - l) % (self.q - 1)) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        Some(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = (self.log[a as usize] as u64 * (e % (self.q as u64 - 1))) % (self.q as u64 - 1);
        self.exp[l as usize]
    }

    /// `g^e` for the primitive element `g`.
    pub fn exp(&self, e: u64) -> u32 {
        self.exp[(e % (self.q as u64 - 1)) as usize]
    }

    /// Discrete logarithm to the primitive element.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// `x ↦ x^p`.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p as u64)
    }

    /// Elements of the subfield of order `p^d`, `d | k`.
    pub fn subfield(&self, d: u32) -> Result<Vec<u32>> {
        if d == 0 || self.k % d != 0 {
            return Err(precondition("subfield degree must divide the extension degree"));
        }
        let r = (self.p as u64).pow(d);
        Ok((0..self.q).filter(|&x| self.pow(x, r) == x).collect())
    }

    /// Product computed from the polynomial representation, without the
    /// log tables.
    pub fn mul_schoolbook(&self, a: u32, b: u32) -> u32 {
        let r = poly_mul_mod(&self.digits(a), &self.digits(b), &self.modulus, self.p);
        from_digits(&r, self.p)
    }
}

/// `GF(p^k)`.
pub fn field_make(p: u32, k: u32, cfg: &Config) -> Result<Field> {
    if !is_prime(p as u128) {
        return Err(Error::NotPrime(p as u128));
    }
    if k == 0 {
        return Err(precondition("extension degree must be positive"));
    }
    let cap = cfg.max_field_order;
    let q128 = (p as u128).checked_pow(k).filter(|&q| q <= cap);
    let q = match q128 {
        Some(q) => q as u32,
        None => return Err(Error::CapExceeded { what: "field order", cap }),
    };

    // (c₀, …, c_{k-1}) in lexicographic order, c₀ most significant.
    let mut modulus = None;
    for code in 0..q {
        let mut f: Vec<u32> = to_digits(code, p, k);
        f.reverse();
        f.push(1);
        if is_irreducible(&f, p) {
            modulus = Some(f);
            break;
        }
    }
    let modulus = modulus.ok_or_else(|| internal("no irreducible polynomial found"))?;

    let mut field = Field { p, k, q, modulus, primitive: 0, exp: Vec::new(), log: Vec::new() };
    let n = q - 1;
    let primes: Vec<u64> = factorize(n as u128)?.iter().map(|&(r, _)| r as u64).collect();
    let slow_pow = |a: u32, mut e: u64| -> u32 {
        let (mut base, mut acc) = (a, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = field.mul_schoolbook(acc, base);
            }
            base = field.mul_schoolbook(base, base);
            e >>= 1;
        }
        acc
    };
    let g = (1..q)
        .find(|&a| primes.iter().all(|&r| slow_pow(a, n as u64 / r) != 1))
        .ok_or_else(|| internal("no primitive element found"))?;
    let mut exp = Vec::with_capacity(n as usize);
    let mut log = vec![u32::MAX; q as usize];
    let mut x = 1;
    for i in 0..n {
        exp.push(x);
        log[x as usize] = i;
        x = field.mul_schoolbook(x, g);
    }
    if x != 1 || exp.len() != n as usize {
        return Err(internal("primitive element has the wrong order"));
    }
    field.primitive = g;
    field.exp = exp;
    field.log = log;
    Ok(field)
}

/// A point of a projective space over a field, normalized so that the
/// first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint(Vec<u32>);

impl ProjectivePoint {
    /// `None` for the zero vector.
    pub fn new(f: &Field, coords: &[u32]) -> Option<Self> {
        let lead = *coords.iter().find(|&&c| c != 0)?;
        let s = f.inv(lead)?;
        Some(ProjectivePoint(coords.iter().map(|&c| f.mul(c, s)).collect()))
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32, k: u32) -> Field {
        field_make(p, k, &Config::default()).unwrap()
    }

    #[test]
    fn moduli() {
        assert_eq!(gf(2, 1).modulus(), &[0, 1]);
        assert_eq!(gf(2, 2).modulus(), &[1, 1, 1]);
        assert_eq!(gf(3, 2).modulus(), &[1, 0, 1]);
        assert_eq!(gf(2, 3).modulus(), &[1, 0, 1, 1]);
    }

    #[test]
    fn small_field_arithmetic() {
        let f = gf(2, 2);
        // x · x = x + 1
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.primitive(), 2);
        let f9 = gf(3, 2);
        // x² = −1 = 2
        assert_eq!(f9.mul(3, 3), 2);
        assert_eq!(f9.add(5, 7), 0);
        assert_eq!(f9.add(5, 5), 1 + 3 * 2);
        assert_eq!(f9.neg(5), 1 + 3 * 2);
    }

    #[test]
    fn rejects_bad_input() {
        let cfg = Config::default();
        assert!(matches!(field_make(4, 1, &cfg), Err(Error::NotPrime(4))));
        assert!(field_make(2, 0, &cfg).is_err());
        assert!(matches!(field_make(2, 21, &cfg), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn subfields_and_frobenius() {
        let f = gf(2, 6);
        assert_eq!(f.subfield(2).unwrap().len(), 4);
        assert_eq!(f.subfield(3).unwrap().len(), 8);
        assert!(f.subfield(4).is_err());
        for a in 0..f.order() {
            assert_eq!(f.frobenius(a), f.mul(a, a));
        }
    }

    #[test]
    fn projective_normalization() {
        let f = gf(3, 1);
        let a = ProjectivePoint::new(&f, &[0, 2, 1]).unwrap();
        let b = ProjectivePoint::new(&f, &[0, 1, 2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coords(), &[0, 1, 2]);
        assert!(ProjectivePoint::new(&f, &[0, 0, 0]).is_none());
    }
}
