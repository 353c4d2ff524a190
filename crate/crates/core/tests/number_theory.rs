use permstar_core::backtrack::centralizer;
use permstar_core::constructions::{coset_action, count_fixed_subspaces, gammal1_sylow};
use permstar_core::field::field_make;
use permstar_core::numth::{factorize, is_prime, morenum_holds, p_part, ppd_p_part, prime_power, Morenum};
use permstar_core::{Config, PermGroup, Permutation};

fn naive_p_part(mut n: u128, p: u128) -> u128 {
    let mut r = 1;
    while n % p == 0 {
        n /= p;
        r *= p;
    }
    r
}

#[test]
fn ppd_formula_matches_direct() {
    let mut checked = 0;
    for q in 2u128..=16 {
        if prime_power(q).is_none() {
            continue;
        }
        for m in 1u32..=12 {
            let n = q.pow(m) - 1;
            for p in factorize(n).unwrap().into_iter().map(|(p, _)| p) {
                assert!(is_prime(p));
                assert_eq!(ppd_p_part(q, m, p).unwrap(), naive_p_part(n, p), "q={q} m={m} p={p}");
                assert_eq!(p_part(n, p).unwrap().p_part, naive_p_part(n, p));
                checked += 1;
            }
            if n > 1 {
                // a prime not dividing q^m - 1 is rejected
                let bad = (2..).find(|&p| is_prime(p) && n % p != 0).unwrap();
                assert!(ppd_p_part(q, m, bad).is_err());
            }
        }
    }
    assert!(checked > 300);
}

#[test]
fn morenum_search_box() {
    let mut equalities = Vec::new();
    for r in (2u128..=13).filter(|&r| is_prime(r)) {
        for p in (3u128..=11).filter(|&p| is_prime(p)) {
            for f in 3u32..=12 {
                if f as u128 % p != 0 || (r.pow(f) + 1) % p != 0 {
                    assert!(morenum_holds(r, p, f).is_err());
                    continue;
                }
                match morenum_holds(r, p, f).unwrap() {
                    Morenum::Violated => panic!("violated at {r} {p} {f}"),
                    Morenum::Equality => equalities.push((r, p, f)),
                    Morenum::Strict => {}
                }
            }
        }
    }
    assert_eq!(equalities, vec![(2, 3, 3)]);
    assert_eq!(morenum_holds(2, 3, 9).unwrap(), Morenum::Strict);
    assert_eq!(morenum_holds(5, 3, 3).unwrap(), Morenum::Strict);
}

fn elements(g: &PermGroup) -> Vec<Permutation> {
    g.elements(1 << 20).unwrap().collect()
}

fn cyclic_span(x: &Permutation) -> Vec<Permutation> {
    let mut v = vec![Permutation::identity(x.degree())];
    let mut y = x.clone();
    while !y.is_identity() {
        v.push(y.clone());
        y = y.mul(x);
    }
    v.sort();
    v
}

fn check_semilinear(r: u32, d: u32, f: u32, p: u32) {
    let cfg = Config::default();
    let s = gammal1_sylow(r, d, f, p, &cfg).unwrap();
    let (r, p) = (r as u128, p as u128);
    let q = r.pow(d * f);
    let qp = naive_p_part(q - 1, p);

    // (a)
    assert_eq!((r.pow(d * f / p as u32) - 1) % p, 0);

    // (b): order-p subgroups of X meeting Y trivially
    let xs = elements(&s.x);
    let mut subgroups: Vec<Vec<Permutation>> = Vec::new();
    for x in &xs {
        if x.order().unwrap() == p && !s.y.contains(x).unwrap() {
            let span = cyclic_span(x);
            if !subgroups.contains(&span) {
                subgroups.push(span);
            }
        }
    }
    assert_eq!(subgroups.len() as u128, p);
    let target = cyclic_span(&s.sigma);
    for sub in &subgroups {
        let conj = xs.iter().any(|g| {
            let mut c: Vec<Permutation> = sub.iter().map(|e| e.conjugate(g)).collect();
            c.sort();
            c == target
        });
        assert!(conj);
    }

    // (c)
    let by_enum = elements(&s.y).iter().filter(|y| y.mul(&s.sigma) == s.sigma.mul(y)).count() as u128;
    assert_eq!(by_enum, qp / p);
    assert_eq!(centralizer(&s.y, &s.sigma).unwrap().order().unwrap(), qp / p);

    // (d)
    let fixed = count_fixed_subspaces(&s.field, &s.sigma, f).unwrap() as u128;
    assert!(fixed < r.pow(d * f / p as u32), "fixed = {fixed}");

    // (e): P = <Y, σ> on the cosets of <σ>
    let deg = s.sigma.degree();
    let mut gens = s.y.generators().to_vec();
    gens.push(s.sigma.clone());
    let pg = PermGroup::new(deg, gens).unwrap();
    let sg = PermGroup::new(deg, vec![s.sigma.clone()]).unwrap();
    let omega = coset_action(&pg, &sg, &cfg).unwrap();
    let omega_y = omega.image(&s.y.generators()[0]).unwrap();
    let sigma_on_omega = omega.image(&s.sigma).unwrap();
    let omega = omega.target;
    assert_eq!(omega.degree() as u128, qp);
    assert!(omega.orbits().lengths().iter().all(|&l| l as u128 == qp));
    let y_on_omega = PermGroup::new(omega.degree(), vec![omega_y]).unwrap();
    assert!(y_on_omega.orbits().lengths().iter().all(|&l| l as u128 == qp));
    let fix = (0..omega.degree()).filter(|&w| sigma_on_omega.fixes(w)).count() as u128;
    assert_eq!(fix, omega.degree() as u128 / p);
}

#[test]
fn semilinear_lemma_small() {
    check_semilinear(2, 2, 3, 3);
}

#[test]
fn semilinear_lemma_larger() {
    check_semilinear(2, 4, 3, 3);
}

#[test]
fn semilinear_rejects_bad_parameters() {
    let cfg = Config::default();
    assert!(gammal1_sylow(2, 2, 2, 2, &cfg).is_err());
    assert!(gammal1_sylow(2, 3, 3, 3, &cfg).is_err());
    assert!(gammal1_sylow(3, 2, 3, 3, &cfg).is_err());
}

#[test]
fn field_axioms_exhaustive() {
    let cfg = Config::default();
    for q in 2u32..=256 {
        let Some((p, k)) = prime_power(q as u128) else { continue };
        let f = field_make(p as u32, k, &cfg).unwrap();
        assert_eq!(f.order(), q);
        let mul: Vec<u32> = (0..q * q).map(|i| f.mul(i / q, i % q)).collect();
        let add: Vec<u32> = (0..q * q).map(|i| f.add(i / q, i % q)).collect();
        let m = |a: u32, b: u32| mul[(a * q + b) as usize];
        let s = |a: u32, b: u32| add[(a * q + b) as usize];
        for a in 0..q {
            assert_eq!(s(a, 0), a);
            assert_eq!(m(a, 1), a);
            assert_eq!(s(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(m(a, f.inv(a).unwrap()), 1);
            }
            for b in 0..q {
                assert_eq!(m(a, b), f.mul_schoolbook(a, b));
                assert_eq!(m(a, b), m(b, a));
                assert_eq!(s(a, b), s(b, a));
                let (ab, sab) = (m(a, b), s(a, b));
                for c in 0..q {
                    assert_eq!(m(ab, c), m(a, m(b, c)));
                    assert_eq!(s(sab, c), s(a, s(b, c)));
                    assert_eq!(m(a, s(b, c)), s(m(a, b), m(a, c)));
                }
            }
        }
        // the multiplicative group is cyclic, generated by the cached element
        let g = f.primitive();
        let mut x = 1;
        for i in 1..q {
            x = m(x, g);
            assert_eq!(x == 1, i == q - 1);
        }
    }
}
