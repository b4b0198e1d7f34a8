//! Exact integer arithmetic: Bézout identities, CRT, primality, factorization,
//! Hermite normal form and primes in progressions.

mod factor;
mod matrix;
mod prime;

pub use factor::{factorize, FactorBudget, FactoredInteger};
pub use matrix::{hermite_normal_form, hermite_rows, IntMatrix};
pub use prime::{is_prime, prime_in_progression};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{EuclideanDomain, IntegerRing, Integer};

/// Extended Euclid: `(g, x, y)` with `g = gcd(a, b) ≥ 0` and `a·x + b·y = g`.
///
/// `gcd(0, 0) = 0` with cofactors `(0, 0)`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    if a.is_zero() && b.is_zero() {
        return (BigInt::zero(), BigInt::zero(), BigInt::zero());
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut x0, mut x1) = (BigInt::from(1), BigInt::zero());
    let (mut y0, mut y1) = (BigInt::zero(), BigInt::from(1));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let nx = &x0 - &q * &x1;
        x0 = std::mem::replace(&mut x1, nx);
        let ny = &y0 - &q * &y1;
        y0 = std::mem::replace(&mut y1, ny);
    }
    if r0.is_negative() {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Solve `m ≡ rᵢ (mod nᵢ)`. Returns `(m, lcm)` with `0 ≤ m < |lcm|`.
///
/// Moduli need not be pairwise coprime; congruences that disagree on a shared
/// factor give [`Error::Incompatible`].
pub fn crt(congruences: &[(Integer, Integer)]) -> Result<(Integer, Integer)> {
    crt_in(&IntegerRing, congruences)
}

/// Chinese remaindering in any Euclidean domain; the residue is the canonical
/// remainder modulo the normalized lcm.
pub fn crt_in<R: EuclideanDomain>(ring: &R, congruences: &[(R::Elem, R::Elem)]) -> Result<(R::Elem, R::Elem)> {
    let mut m = ring.zero();
    let mut modulus = ring.one();
    for (r, n) in congruences {
        if ring.is_zero(n) {
            return Err(Error::Precondition("zero modulus in CRT".into()));
        }
        let n = ring.normalize(n);
        let (g, x, _) = ring.ext_gcd(&modulus, &n);
        let diff = ring.sub(r, &m);
        let (q, rem) = ring.div_rem(&diff, &g);
        if !ring.is_zero(&rem) {
            return Err(Error::Incompatible(format!(
                "residue {} mod {} conflicts with {} mod {}",
                ring.render(r),
                ring.render(&n),
                ring.render(&m),
                ring.render(&modulus)
            )));
        }
        let lcm = ring.normalize(&ring.mul(&ring.divide(&modulus, &g).expect("gcd divides"), &n));
        let shifted = ring.add(&m, &ring.mul(&ring.mul(&modulus, &x), &q));
        m = ring.div_rem(&shifted, &lcm).1;
        modulus = lcm;
    }
    // A unit modulus leaves a single class; pick its canonical representative.
    let m = ring.div_rem(&m, &modulus).1;
    Ok((m, modulus))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn ext_gcd_examples() {
        assert_eq!(ext_gcd(&int(0), &int(0)), (int(0), int(0), int(0)));
        assert_eq!(ext_gcd(&int(6), &int(4)), (int(2), int(1), int(-1)));
        let (g, x, y) = ext_gcd(&int(240), &int(46));
        assert_eq!(g, int(2));
        assert_eq!(int(240) * x + int(46) * y, int(2));
        let (g, x, y) = ext_gcd(&int(-12), &int(0));
        assert_eq!((g, x, y), (int(12), int(-1), int(0)));
    }

    #[test]
    fn crt_examples() {
        assert_eq!(crt(&[(int(1), int(2)), (int(2), int(3))]).unwrap(), (int(5), int(6)));
        assert_eq!(crt(&[(int(0), int(5))]).unwrap(), (int(0), int(5)));
        assert!(matches!(crt(&[(int(1), int(4)), (int(3), int(4))]), Err(Error::Incompatible(_))));
        // shared factor, compatible
        assert_eq!(crt(&[(int(3), int(4)), (int(1), int(6))]).unwrap(), (int(7), int(12)));
        assert_eq!(crt(&[]).unwrap(), (int(0), int(1)));
        assert_eq!(crt(&[(int(-1), int(-7))]).unwrap(), (int(6), int(7)));
        assert!(matches!(crt(&[(int(1), int(0))]), Err(Error::Precondition(_))));
    }
}
