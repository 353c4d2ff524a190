//! Integer number theory: p-parts, multiplicative orders, the
//! primitive-prime-divisor p-part formula and the `(r^f+1)/p` inequality.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{precondition, Error, Result};

/// Trial division is used up to this bound.
pub const TRIAL_DIVISION_LIMIT: u128 = 1_000_000;

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm_checked(a: u128, b: u128) -> Result<u128> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b)).checked_mul(b).ok_or(Error::Overflow("lcm"))
}

pub fn pow_checked(base: u128, exp: u32) -> Result<u128> {
    base.checked_pow(exp).ok_or(Error::Overflow("power"))
}

pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u128;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn ensure_prime(p: u128) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Prime factorisation by trial division up to [`TRIAL_DIVISION_LIMIT`];
/// a remaining cofactor above the limit must itself be prime.
pub fn factorize(mut n: u128) -> Result<Vec<(u128, u32)>> {
    let mut out = Vec::new();
    let mut d = 2u128;
    while d * d <= n {
        if d > TRIAL_DIVISION_LIMIT {
            if !is_prime(n) {
                return Err(Error::CapExceeded { what: "trial division bound", cap: TRIAL_DIVISION_LIMIT });
            }
            break;
        }
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

/// `Some((p, f))` when `q = p^f` with `f ≥ 1`.
pub fn prime_power(q: u128) -> Option<(u128, u32)> {
    if q < 2 {
        return None;
    }
    let fs = factorize(q).ok()?;
    if fs.len() == 1 {
        Some(fs[0])
    } else {
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PPartResult {
    pub p: u128,
    pub n: u128,
    pub p_part: u128,
    pub cofactor: u128,
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: u128, p: u128) -> Result<PPartResult> {
    ensure_prime(p)?;
    if n == 0 {
        return Err(precondition("p_part of 0"));
    }
    let mut part = 1u128;
    let mut rest = n;
    while rest % p == 0 {
        rest /= p;
        part *= p;
    }
    Ok(PPartResult { p, n, p_part: part, cofactor: rest })
}

/// Shorthand for `p_part(n, p)?.p_part` with `p` already known prime.
pub(crate) fn pp(n: u128, p: u128) -> u128 {
    let mut part = 1u128;
    let mut rest = n;
    while rest % p == 0 {
        rest /= p;
        part *= p;
    }
    part
}

fn mod_pow(mut b: u128, mut e: u128, m: u128) -> u128 {
    // m is small enough here (a prime below 2^63) that products fit
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Least `e ≥ 1` with `q^e ≡ 1 (mod p)`.
pub fn mult_order(q: u128, p: u128) -> Result<u128> {
    ensure_prime(p)?;
    if p >= 1 << 63 {
        return Err(Error::Overflow("mult_order modulus"));
    }
    if q % p == 0 {
        return Err(precondition(format!("{p} divides {q}")));
    }
    let mut best = p - 1;
    for (r, _) in factorize(p - 1)? {
        while best % r == 0 && mod_pow(q, best / r, p) == 1 {
            best /= r;
        }
    }
    Ok(best)
}

/// `(q^m − 1)_p` via the closed form `(q^e − 1)_p · (m/e)_p` (odd `p`) or
/// `(q² − 1)_2 · (m/2)_2` / `(q − 1)_2` (`p = 2`).
pub fn ppd_p_part(q: u128, m: u32, p: u128) -> Result<u128> {
    ensure_prime(p)?;
    if prime_power(q).is_none() {
        return Err(precondition(format!("{q} is not a prime power")));
    }
    if m == 0 {
        return Err(precondition("m must be positive"));
    }
    if q % p == 0 {
        return Err(precondition(format!("{p} does not divide {q}^{m} - 1")));
    }
    if p == 2 {
        if q % 2 == 0 {
            return Err(precondition(format!("2 does not divide {q}^{m} - 1")));
        }
        return Ok(if m % 2 == 0 { pp(q * q - 1, 2) * pp(m as u128 / 2, 2) } else { pp(q - 1, 2) });
    }
    let e = mult_order(q, p)?;
    if m as u128 % e != 0 {
        return Err(precondition(format!("{p} does not divide {q}^{m} - 1")));
    }
    let b = m as u128 / e;
    let qe = pow_checked(q, e as u32)?;
    Ok(pp(qe - 1, p) * pp(b, p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Morenum {
    Strict,
    Equality,
    Violated,
}

/// Classifies `(r^f + 1)/p` against `r^(2f/p) − 1`.
pub fn morenum_holds(r: u128, p: u128, f: u32) -> Result<Morenum> {
    ensure_prime(r)?;
    ensure_prime(p)?;
    if p == 2 {
        return Err(precondition("p must be odd"));
    }
    if f < 3 || f as u128 % p != 0 {
        return Err(precondition(format!("need f >= 3 and {p} | f, got f = {f}")));
    }
    let rf = pow_checked(r, f)?;
    let top = rf.checked_add(1).ok_or(Error::Overflow("r^f + 1"))?;
    if top % p != 0 {
        return Err(precondition(format!("{p} does not divide {r}^{f} + 1")));
    }
    let lhs = top / p;
    let rhs = pow_checked(r, (2 * f as u128 / p) as u32)? - 1;
    Ok(match lhs.cmp(&rhs) {
        core::cmp::Ordering::Greater => Morenum::Strict,
        core::cmp::Ordering::Equal => Morenum::Equality,
        core::cmp::Ordering::Less => Morenum::Violated,
    })
}
