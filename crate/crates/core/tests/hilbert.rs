mod common;

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive};
use rand::Rng as _;

use common::{eval_int, gcd_ints, int, int_poly_divides, is_int_irreducible_naive, sieve};
use schinzel::hilbert::{
    goldbach_mod_n, irreducible_specializations, mod_n_schinzel, primitivity_progression, specialize, BivariateRing,
    SpecStatus,
};
use schinzel::poly::Poly;
use schinzel::{Error, Integer, IntegerRing, Limits, PolyRing, Ring};

fn zty() -> BivariateRing<IntegerRing> {
    PolyRing::new(PolyRing::new(IntegerRing, "t"), "y")
}

fn random_bivariate(g: &mut rand_chacha::ChaCha8Rng, ring: &BivariateRing<IntegerRing>) -> Poly<Poly<Integer>> {
    let zt = ring.base();
    let dy = g.gen_range(1..=3);
    let mut coeffs: Vec<Poly<Integer>> = (0..=dy)
        .map(|_| {
            let dt = g.gen_range(0..=2);
            zt.from_i64s(&(0..=dt).map(|_| g.gen_range(-4..=4)).collect::<Vec<_>>())
        })
        .collect();
    if coeffs[dy].is_zero() {
        coeffs[dy] = zt.one();
    }
    ring.from_coeffs(coeffs)
}

/// Content of `P(t*, y)` from direct evaluation of each coefficient.
fn content_at(p: &Poly<Poly<Integer>>, t: &Integer) -> Integer {
    gcd_ints(&p.coeffs().iter().map(|c| eval_int(c, t)).collect::<Vec<_>>())
}

#[test]
fn progressions_stay_primitive() {
    let ring = zty();
    let l = Limits::default();
    let mut g = common::rng(31);
    let mut built = 0;
    while built < 40 {
        let ps: Vec<Poly<Poly<Integer>>> = (0..g.gen_range(1..=2)).map(|_| random_bivariate(&mut g, &ring)).collect();
        match primitivity_progression(&ring, &ps, &l) {
            Ok(w) => {
                for k in -200..=200 {
                    let t = w.term(k);
                    for p in &ps {
                        assert!(content_at(p, &t).is_one(), "t* = {t}");
                    }
                }
                // off the progression every content prime divides the matching δᵢ
                for t in -60..60 {
                    for (p, d) in ps.iter().zip(&w.deltas) {
                        let c = content_at(p, &int(t));
                        assert!(d.is_multiple_of(&c), "content {c} at t = {t} must divide δ = {d}");
                    }
                }
                built += 1;
            }
            Err(Error::Av3Violation { prime }) => {
                let p: i64 = prime.parse().unwrap();
                let product = ps.iter().fold(ring.one(), |acc, q| ring.mul(&acc, q));
                for t in 0..p {
                    assert!(content_at(&product, &int(t)).is_multiple_of(&int(p)));
                }
            }
            Err(Error::CommonFactor(_)) => {}
            Err(e) => panic!("unexpected {e}"),
        }
    }
}

#[test]
fn hits_survive_an_independent_irreducibility_check() {
    let ring = zty();
    let l = Limits::default();
    let mut g = common::rng(32);
    let mut scanned = 0;
    while scanned < 25 {
        let p = random_bivariate(&mut g, &ring);
        let Ok(w) = primitivity_progression(&ring, std::slice::from_ref(&p), &l) else { continue };
        let report = irreducible_specializations(&ring, std::slice::from_ref(&p), &w, 1000, 15, &l).unwrap();
        for entry in &report.entries {
            let q = specialize(&ring, &p, &entry.m);
            match &entry.statuses[0] {
                SpecStatus::Irreducible { certified } => {
                    assert!(*certified);
                    assert!(is_int_irreducible_naive(&q), "{q:?} at m = {}", entry.m);
                }
                SpecStatus::Reducible { factor } => {
                    assert!(int_poly_divides(factor, &q));
                    assert!(factor.degree().unwrap() >= 1 && factor.degree() < q.degree());
                }
                SpecStatus::NotPrimitive { content } => assert_eq!(content, &content_at(&p, &entry.m).abs()),
                SpecStatus::Constant => assert_eq!(q.degree().unwrap_or(0), 0),
                SpecStatus::Inconclusive { reason } => panic!("{reason}"),
            }
        }
        scanned += 1;
    }
}

#[test]
fn mod_n_witnesses_reverify() {
    let zy = common::zy();
    let l = Limits::default();
    let primes = sieve(2_000_000);
    let mut g = common::rng(33);
    let mut done = 0;
    while done < 40 {
        let ps: Vec<Poly<Integer>> = (0..g.gen_range(1..=3))
            .map(|_| {
                let d = g.gen_range(1..=2);
                common::random_int_poly(&mut g, &zy, d, 5)
            })
            .collect();
        let n = int(g.gen_range(1..=30));
        match mod_n_schinzel(&zy, &ps, &n, 3, &l) {
            Ok(ws) => {
                assert_eq!(ws.len(), 3);
                for w in ws {
                    for (p, e) in ps.iter().zip(&w.entries) {
                        assert_eq!(e.value, eval_int(p, &w.m));
                        let q = e.prime.to_usize().unwrap();
                        assert!(primes[q]);
                        assert!(e.prime.gcd(&n).is_one());
                        assert!((&e.prime - &e.value).is_multiple_of(&n));
                    }
                }
                done += 1;
            }
            Err(Error::Av1Violation { prime }) => {
                let p: i64 = prime.parse().unwrap();
                for m in 0..p {
                    let v: Integer = ps.iter().map(|q| eval_int(q, &int(m))).product();
                    assert!(v.is_multiple_of(&int(p)));
                }
            }
            Err(e) => panic!("unexpected {e}"),
        }
    }
}

#[test]
fn goldbach_congruences() {
    let l = Limits::default();
    let primes = sieve(100_000);
    for n in 1..=25 {
        for two_n in (-10..=60).step_by(2) {
            let ws = goldbach_mod_n(&int(two_n), &int(n), 2, &l).unwrap();
            for w in ws {
                assert!(primes[w.p.to_usize().unwrap()] && primes[w.q.to_usize().unwrap()]);
                assert!((&w.p + &w.q - int(two_n)).is_multiple_of(&int(n)));
                assert!(w.p.gcd(&int(n)).is_one() && w.q.gcd(&int(n)).is_one());
            }
        }
    }
}
