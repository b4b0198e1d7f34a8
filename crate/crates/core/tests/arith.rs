mod common;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use common::{int, laplace_det, sieve};
use schinzel::arith::{crt, ext_gcd, factorize, hermite_normal_form, is_prime, FactorBudget, IntMatrix};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn ext_gcd_identity(a in any::<i64>(), b in any::<i64>()) {
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let (g, x, y) = ext_gcd(&a, &b);
        prop_assert_eq!(&a * &x + &b * &y, g.clone());
        prop_assert!(!g.is_negative());
        if !g.is_zero() {
            prop_assert!((&a % &g).is_zero() && (&b % &g).is_zero());
        }
    }
}

proptest! {
    #[test]
    fn crt_reproduces_residues(pairs in prop::collection::vec((-1000i64..1000, 1i64..60), 1..5)) {
        let cs: Vec<(BigInt, BigInt)> = pairs.iter().map(|&(r, n)| (int(r), int(n))).collect();
        match crt(&cs) {
            Ok((m, l)) => {
                for (r, n) in &cs {
                    prop_assert!((&m - r).mod_floor(n).is_zero());
                    prop_assert!((&l % n).is_zero());
                }
            }
            Err(_) => {
                // incompatible: some pair must disagree modulo the gcd of its moduli
                let bad = cs.iter().enumerate().any(|(i, (r1, n1))| {
                    cs[i + 1..].iter().any(|(r2, n2)| !(r1 - r2).mod_floor(&n1.gcd(n2)).is_zero())
                });
                prop_assert!(bad);
            }
        }
    }

    #[test]
    fn factorization_reconstructs(n in any::<i64>().prop_filter("nonzero", |n| *n != 0)) {
        let n = BigInt::from(n);
        let f = factorize(&n, FactorBudget::default()).unwrap();
        prop_assert_eq!(f.product(), n);
        for (p, e) in &f.factors {
            prop_assert!(*e >= 1);
            prop_assert!(is_prime(p));
        }
    }

    #[test]
    fn hnf_is_a_unimodular_echelon_form(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let m: Vec<Vec<BigInt>> = (0..rows)
            .map(|_| (0..cols).map(|_| int(rand::Rng::gen_range(&mut r, -20..=20))).collect())
            .collect();
        let mat = IntMatrix::from_rows(m).unwrap();
        let (h, u) = hermite_normal_form(&mat);
        prop_assert_eq!(u.mul(&mat).unwrap(), h.clone());
        prop_assert!(laplace_det(&u.to_rows()).abs().is_one());
        prop_assert!(h.is_hermite_normal_form());
    }
}

#[test]
fn unimodular_four_by_four_reduces_to_identity() {
    let mut r = common::rng(7);
    for _ in 0..30 {
        // product of random elementary row operations has determinant 1
        let mut m = IntMatrix::identity(4).to_rows();
        for _ in 0..12 {
            let i = rand::Rng::gen_range(&mut r, 0..4);
            let j = (i + rand::Rng::gen_range(&mut r, 1..4)) % 4;
            let k = int(rand::Rng::gen_range(&mut r, -3..=3));
            let src = m[j].clone();
            for (a, b) in m[i].iter_mut().zip(&src) {
                *a += &k * b;
            }
        }
        assert!(laplace_det(&m).is_one());
        let (h, _) = hermite_normal_form(&IntMatrix::from_rows(m).unwrap());
        assert_eq!(h, IntMatrix::identity(4));
    }
}

#[test]
fn primality_matches_sieve_to_a_million() {
    let s = sieve(1_000_000);
    for (n, &expected) in s.iter().enumerate() {
        assert_eq!(is_prime(&BigInt::from(n)), expected, "n = {n}");
    }
}
