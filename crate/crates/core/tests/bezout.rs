mod common;

use num_integer::Integer as _;
use num_traits::Zero;
use rand::Rng as _;

use common::{eval_int, gcd_ints, int, random_fp_poly, random_int_poly, zy};
use schinzel::bezout::{bezout_delta, delta_result, minimal_delta_bounded, require_coprime_over_fraction_field};
use schinzel::poly::Poly;
use schinzel::{Integer, PolyRing, PrimeField, Ring};

fn coprime_pairs(seed: u64, count: usize, s: usize) -> Vec<Vec<Poly<Integer>>> {
    let r = zy();
    let mut g = common::rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let ps: Vec<Poly<Integer>> = (0..s)
            .map(|_| {
                let d = g.gen_range(1..=4);
                random_int_poly(&mut g, &r, d, 9)
            })
            .collect();
        if require_coprime_over_fraction_field(&r, &ps).is_ok() {
            out.push(ps);
        }
    }
    out
}

#[test]
fn certificates_hold_pointwise() {
    for s in [2, 3] {
        for ps in coprime_pairs(21 + s as u64, 60, s) {
            let cert = bezout_delta(&zy(), &ps).unwrap();
            let top = cert.cofactors.iter().zip(&ps).map(|(v, p)| v.coeffs().len() + p.coeffs().len()).max().unwrap();
            // a polynomial identity of degree < top checked at top points
            for m in 0..top as i64 {
                let m = int(m - top as i64 / 2);
                let sum: Integer = cert.cofactors.iter().zip(&ps).map(|(v, p)| eval_int(v, &m) * eval_int(p, &m)).sum();
                assert_eq!(sum, cert.delta);
            }
            for m in -40..40 {
                let values: Vec<Integer> = ps.iter().map(|p| eval_int(p, &int(m))).collect();
                let d = gcd_ints(&values);
                assert!((&cert.delta % &d).is_zero(), "gcd {d} of values must divide δ = {}", cert.delta);
            }
        }
    }
}

#[test]
fn lattice_chain_and_resultant() {
    let r = zy();
    for ps in coprime_pairs(4, 50, 2) {
        let res = r.resultant(&ps[0], &ps[1]).unwrap();
        let cert = bezout_delta(&r, &ps).unwrap();
        let cof = cert.cofactors.iter().filter_map(Poly::degree).max().unwrap_or(0);
        let mut prev: Option<Integer> = None;
        for d in 0..=7 {
            let cur = minimal_delta_bounded(&r, &ps, d).unwrap();
            if let (Some(p), Some(c)) = (&prev, &cur) {
                assert!((p % c).is_zero(), "δ_{} = {c} must divide δ_{} = {p}", d, d - 1);
            }
            if prev.is_some() {
                assert!(cur.is_some());
            }
            if d >= cof {
                let c = cur.clone().expect("certificate fits under the bound");
                assert!((&res % &c).is_zero());
                assert!((&cert.delta % &c).is_zero());
            }
            prev = cur;
        }
        let dr = delta_result(&r, &ps, None).unwrap();
        assert!((&cert.delta % dr.best()).is_zero());
    }
}

#[test]
fn certificates_over_fp_u() {
    let f3u = PolyRing::new(PrimeField::new(3).unwrap(), "u");
    let ry = PolyRing::new(f3u.clone(), "y");
    let mut g = common::rng(77);
    let mut seen = 0;
    while seen < 30 {
        let ps: Vec<Poly<Poly<u64>>> = (0..2)
            .map(|_| {
                let d = g.gen_range(1..=2);
                ry.from_coeffs(
                    (0..=d)
                        .map(|_| {
                            let e = g.gen_range(0..=2);
                            random_fp_poly(&mut g, &f3u, e)
                        })
                        .collect(),
                )
            })
            .collect();
        if ps.iter().any(Poly::is_zero) || require_coprime_over_fraction_field(&ry, &ps).is_err() {
            continue;
        }
        let cert = bezout_delta(&ry, &ps).unwrap();
        let sum = cert.cofactors.iter().zip(&ps).fold(Poly::zero(), |acc, (v, p)| ry.add(&acc, &ry.mul(v, p)));
        assert_eq!(sum, ry.constant(cert.delta.clone()));
        assert!(!cert.delta.is_zero());
        let res = ry.resultant(&ps[0], &ps[1]).unwrap();
        assert!(f3u.divide(&res, &cert.delta).is_some() || f3u.divide(&cert.delta, &res).is_some());
        seen += 1;
    }
}

#[test]
fn gcd_of_values_is_bounded_by_delta_for_three_inputs() {
    let r = zy();
    for ps in coprime_pairs(8, 30, 3) {
        let delta = delta_result(&r, &ps, None).unwrap().best().clone();
        for m in -25..25 {
            let values: Vec<Integer> = ps.iter().map(|p| eval_int(p, &int(m))).collect();
            assert!(delta.is_multiple_of(&gcd_ints(&values)));
        }
    }
}
