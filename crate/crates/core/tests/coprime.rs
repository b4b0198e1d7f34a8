mod common;

use num_integer::Integer as _;
use num_traits::{One, ToPrimitive};
use rand::Rng as _;

use common::{eval_int, gcd_ints, int, random_fp_poly, random_int_poly, zy};
use schinzel::arith::factorize;
use schinzel::bezout::{bezout_delta, require_coprime_over_fraction_field};
use schinzel::coprime::{
    brute_force_coprime, check_av1, check_av2, dstar, find_coprime_pid, find_coprime_polyring, gcd_profile, integer_box,
    lemma_monomials,
};
use schinzel::poly::Poly;
use schinzel::{GcdDomain, Integer, IntegerRing, Limits, PolyRing, PrimeField, Ring};

fn random_pairs(seed: u64, count: usize) -> Vec<Vec<Poly<Integer>>> {
    let r = zy();
    let mut g = common::rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let ps: Vec<Poly<Integer>> = (0..2)
            .map(|_| {
                let d = g.gen_range(1..=3);
                random_int_poly(&mut g, &r, d, 6)
            })
            .collect();
        if require_coprime_over_fraction_field(&r, &ps).is_ok() {
            out.push(ps);
        }
    }
    out
}

/// Residue scan written directly: for each prime `p ≤ 50` dividing `δ`, is
/// there `m mod p` where some value is nonzero mod `p`?
fn small_prime_obstruction(ps: &[Poly<Integer>], delta: &Integer) -> Option<Integer> {
    (2..=50i64).filter(|&p| (2..p).all(|d| p % d != 0)).map(int).find(|p| {
        delta.is_multiple_of(p) && (0..p.to_i64().unwrap()).all(|m| {
            ps.iter().all(|q| eval_int(q, &int(m)).is_multiple_of(p))
        })
    })
}

#[test]
fn av2_agrees_with_direct_residue_scan() {
    let l = Limits::default();
    let r = zy();
    for ps in random_pairs(1, 150) {
        let delta = bezout_delta(&r, &ps).unwrap().delta;
        let v = check_av2(&r, &ps, &l).unwrap();
        let direct = small_prime_obstruction(&ps, &delta);
        let all_small = factorize(&delta, l.factor).unwrap().primes().all(|p| *p <= int(50));
        if all_small {
            assert_eq!(v.holds, direct.is_none(), "{ps:?}");
        }
        if let Some(p) = direct {
            assert!(!v.holds);
            assert!(v.evidence.iter().any(|e| e.prime == p && e.fails()));
        }
    }
}

#[test]
fn av2_failures_from_the_parity_family() {
    // (y² − y + 2k, y² − y): every value pair is even
    let l = Limits::default();
    let r = zy();
    for k in 1..20 {
        let ps = [r.from_i64s(&[2 * k, -1, 1]), r.from_i64s(&[0, -1, 1])];
        let v = check_av2(&r, &ps, &l).unwrap();
        assert_eq!(v.failing_prime, Some(int(2)));
        assert!(brute_force_coprime(&r, &ps, integer_box(-200, 200)).is_none());
    }
}

#[test]
fn finders_agree_with_brute_force() {
    let l = Limits::default();
    let r = zy();
    for ps in random_pairs(2, 150) {
        let v = check_av2(&r, &ps, &l).unwrap();
        let brute = brute_force_coprime(&r, &ps, integer_box(-300, 300));
        if !v.holds {
            assert!(brute.is_none(), "an AV2 obstruction rules out every witness");
            continue;
        }
        let w = find_coprime_pid(&r, &ps, &l).unwrap();
        let values: Vec<Integer> = ps.iter().map(|p| eval_int(p, &w.m)).collect();
        assert!(gcd_ints(&values).is_one());
        assert!(w.verified);
        if let Some(b) = brute {
            assert!(gcd_ints(&ps.iter().map(|p| eval_int(p, &b.m)).collect::<Vec<_>>()).is_one());
        }
    }
}

#[test]
fn profiles_are_periodic_and_bounded() {
    let l = Limits::default();
    let r = zy();
    let mut checked = 0;
    for ps in random_pairs(3, 80) {
        let Ok(profile) = gcd_profile(&r, &ps, &l) else { continue };
        let delta = profile.delta.clone();
        for (m, d) in profile.table.iter().step_by((profile.table.len() / 20).max(1)) {
            assert!(delta.is_multiple_of(d));
            for ell in -2..=2 {
                let shifted = m + &delta * ell;
                let vals: Vec<Integer> = ps.iter().map(|p| eval_int(p, &shifted)).collect();
                assert_eq!(&gcd_ints(&vals), d);
            }
        }
        let ds = dstar(&r, &ps, &l).unwrap();
        for a in &ds.divisors {
            for b in &ds.divisors {
                assert!(ds.divisors.contains(&a.gcd(b)));
            }
        }
        assert!(ds.divisors.contains(&ds.d_star));
        assert_eq!(ds.av2.holds, ds.d_star.is_one());
        checked += 1;
    }
    assert!(checked >= 60);
}

#[test]
fn fp_u_witnesses_verify() {
    let l = Limits::default();
    let f2u = PolyRing::new(PrimeField::new(2).unwrap(), "u");
    let ry = PolyRing::new(f2u.clone(), "y");
    let mut g = common::rng(13);
    let mut seen = 0;
    while seen < 40 {
        let ps: Vec<Poly<Poly<u64>>> = (0..2)
            .map(|_| {
                let d = g.gen_range(1..=2);
                ry.from_coeffs(
                    (0..=d)
                        .map(|_| {
                            let e = g.gen_range(0..=2);
                            random_fp_poly(&mut g, &f2u, e)
                        })
                        .collect(),
                )
            })
            .collect();
        if ps.iter().any(Poly::is_zero) || require_coprime_over_fraction_field(&ry, &ps).is_err() {
            continue;
        }
        let v = check_av2(&ry, &ps, &l).unwrap();
        match find_coprime_pid(&ry, &ps, &l) {
            Ok(w) => {
                assert!(v.holds);
                let values: Vec<Poly<u64>> = ps.iter().map(|p| ry.eval(p, &w.m)).collect();
                assert!(f2u.is_unit(&f2u.gcd_all(values.iter())));
            }
            Err(e) => {
                assert!(!v.holds, "{e}");
                // the failing prime divides every value on a full residue scan
                let p = v.failing_prime.unwrap();
                for m in schinzel::poly::fp_polys_of_degree_below(2, p.degree().unwrap()) {
                    assert!(ps.iter().all(|q| f2u.div_rem(&ry.eval(q, &m), &p).unwrap().1.is_zero()));
                }
            }
        }
        seen += 1;
    }
}

#[test]
fn polyring_witnesses_verify() {
    let l = Limits::default();
    let zu = PolyRing::new(IntegerRing, "u");
    let ry = PolyRing::new(zu.clone(), "y");
    let mut g = common::rng(14);
    let mut seen = 0;
    while seen < 25 {
        let ps: Vec<Poly<Poly<Integer>>> = (0..2)
            .map(|_| {
                let d = g.gen_range(1..=2);
                ry.from_coeffs(
                    (0..=d)
                        .map(|_| {
                            let e = g.gen_range(0..=2);
                            random_int_poly(&mut g, &zu, e, 3)
                        })
                        .collect(),
                )
            })
            .collect();
        if require_coprime_over_fraction_field(&ry, &ps).is_err() {
            continue;
        }
        let content = zu.gcd_all(ps.iter().flat_map(|p| p.coeffs()));
        if !zu.is_unit(&content) {
            continue;
        }
        let w = find_coprime_polyring(&ry, &ps, &l).unwrap();
        let values: Vec<Poly<Integer>> = ps.iter().map(|p| ry.eval(p, &w.m)).collect();
        assert!(zu.is_unit(&zu.gcd_all(values.iter())));
        let ints: Vec<Integer> = values.iter().flat_map(|v| v.coeffs().iter().cloned()).collect();
        assert!(gcd_ints(&ints).is_one());
        seen += 1;
    }
}

#[test]
fn av1_rejects_fixed_prime_divisors() {
    let l = Limits::default();
    let r = zy();
    // y(y + 1) is always even; y² + y + 1 is never divisible by 2
    assert_eq!(check_av1(&r, &[r.gen(), r.from_i64s(&[1, 1])], &l).unwrap().failing_prime, Some(int(2)));
    assert!(check_av1(&r, &[r.from_i64s(&[1, 1, 1])], &l).unwrap().holds);
    // y³ − y is divisible by 6 for every y
    let v = check_av1(&r, &[r.from_i64s(&[0, -1, 0, 1])], &l).unwrap();
    assert!(!v.holds);
    assert!([int(2), int(3)].contains(&v.failing_prime.unwrap()));
}

/// `P(u, m(u))` is not divisible by `p` whenever `m` carries two monomials
/// `μ₁u^a`, `μ₂u^b` with `μ₂ ≡ 1 mod μ₁` and `min(a, b) > deg_u P`.
#[test]
fn two_monomial_substitutions_preserve_primitivity() {
    let zu = PolyRing::new(IntegerRing, "u");
    let ry = PolyRing::new(zu.clone(), "y");
    let mut g = common::rng(15);
    let mut cases = 0;
    while cases < 240 {
        let p = [2i64, 3, 5][g.gen_range(0..3)];
        let du = g.gen_range(0..=2);
        let dy = g.gen_range(1..=3);
        let coeffs: Vec<Poly<Integer>> = (0..=dy)
            .map(|_| zu.from_i64s(&(0..=du).map(|_| g.gen_range(-6..=6)).collect::<Vec<_>>()))
            .collect();
        let big_p = ry.from_coeffs(coeffs);
        let all_divisible = big_p.coeffs().iter().flat_map(|c| c.coeffs()).all(|c| c.is_multiple_of(&int(p)));
        let deg_u = big_p.coeffs().iter().filter_map(Poly::degree).max();
        let Some(deg_u) = deg_u else { continue };
        if all_divisible {
            continue;
        }
        let a = deg_u + 1 + g.gen_range(0..3);
        let b = a + 1 + g.gen_range(0..3);
        let mu1 = [1i64, -1, 2, -2, 3, 5, -7][g.gen_range(0..7)];
        let mu2 = 1 + mu1 * g.gen_range(-3..=3);
        if mu2 == 0 {
            continue;
        }
        let mut m = vec![0i64; b + 1];
        for c in m.iter_mut().take(deg_u + 1) {
            *c = g.gen_range(-9..=9);
        }
        m[a] = mu1;
        m[b] = mu2;
        let m = zu.from_i64s(&m);
        assert!(lemma_monomials(&m, deg_u).is_some());
        let value = big_p.coeffs().iter().rev().fold(zu.zero(), |acc, c| zu.add(&zu.mul(&acc, &m), c));
        assert!(
            value.coeffs().iter().any(|c| !c.is_multiple_of(&int(p))),
            "P = {big_p:?}, m = {m:?}, p = {p}"
        );
        cases += 1;
    }
}
