use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

const SMALL_PRIMES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Miller–Rabin with the first thirteen prime bases is deterministic below this.
const DETERMINISTIC_LIMIT: &str = "3317044064679887385961981";

const EXTRA_ROUNDS: usize = 40;

/// Primality of `|n|`. Deterministic for `|n| < 3.3·10²⁴`; above that, forty
/// additional rounds with bases drawn from a generator seeded by `n` itself.
pub fn is_prime(n: &BigInt) -> bool {
    let n = n.magnitude();
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &SMALL_PRIMES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let bases: Vec<BigUint> = SMALL_PRIMES.iter().map(|&p| BigUint::from(p)).collect();
    if !bases.iter().all(|a| miller_rabin_round(n, a)) {
        return false;
    }
    let limit: BigUint = DETERMINISTIC_LIMIT.parse().expect("constant");
    if *n < limit {
        return true;
    }
    let seed = n.iter_u64_digits().fold(0x9e37_79b9_7f4a_7c15u64, |acc, d| acc.rotate_left(7) ^ d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let two = BigUint::from(2u32);
    let upper = n - 2u32;
    (0..EXTRA_ROUNDS).all(|_| {
        let a = rng.gen_biguint_range(&two, &upper);
        miller_rabin_round(n, &a)
    })
}

fn miller_rabin_round(n: &BigUint, a: &BigUint) -> bool {
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return true;
        }
    }
    false
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &SMALL_PRIMES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Least prime `p ≥ start` with `p ≡ a (mod n)`, examining at most `budget`
/// candidates of the progression.
pub fn prime_in_progression(a: &BigInt, n: &BigInt, start: &BigInt, budget: u64) -> Result<BigInt> {
    if !n.is_positive() {
        return Err(Error::Precondition(format!("modulus {n} must be positive")));
    }
    if !a.gcd(n).is_one() {
        return Err(Error::Precondition(format!("gcd({a}, {n}) ≠ 1")));
    }
    let start = start.max(&BigInt::from(2)).clone();
    let r = a.mod_floor(n);
    let mut candidate = &start + (&r - &start).mod_floor(n);
    for _ in 0..budget {
        if is_prime(&candidate) {
            return Ok(candidate);
        }
        candidate += n;
    }
    Err(Error::BudgetExceeded(format!(
        "no prime ≡ {r} mod {n} among {budget} candidates from {start}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn small_cases() {
        assert!(is_prime(&BigInt::from(2)));
        assert!(!is_prime(&BigInt::from(1)));
        assert!(!is_prime(&BigInt::from(0)));
        assert!(!is_prime(&BigInt::from(561)));
        assert!(is_prime(&BigInt::from(-7)));
        assert!(is_prime(&BigInt::from(1_000_003)));
    }

    #[test]
    fn agrees_with_trial_division_up_to_a_million() {
        let mismatches: Vec<u64> = (0..=1_000_000u64)
            .filter(|&n| is_prime_u64(n) != trial_division(n))
            .collect();
        assert!(mismatches.is_empty(), "{mismatches:?}");
    }

    #[test]
    fn large_values() {
        // 2^89 - 1 is a Mersenne prime; 2^67 - 1 is composite.
        let m89 = (BigInt::one() << 89) - 1;
        let m67 = (BigInt::one() << 67) - 1;
        assert!(is_prime(&m89));
        assert!(!is_prime(&m67));
        // 2^127 - 1 lies beyond the deterministic range.
        assert!(is_prime(&((BigInt::one() << 127) - 1)));
        assert!(!is_prime(&(((BigInt::one() << 127) - 1) * BigInt::from(3))));
    }

    #[test]
    fn progression_examples() {
        let i = BigInt::from;
        assert_eq!(prime_in_progression(&i(1), &i(4), &i(2), 100).unwrap(), i(5));
        assert_eq!(prime_in_progression(&i(3), &i(10), &i(14), 100).unwrap(), i(23));
        assert!(matches!(
            prime_in_progression(&i(2), &i(4), &i(2), 100),
            Err(Error::Precondition(_))
        ));
        assert_eq!(prime_in_progression(&i(0), &i(1), &i(0), 10).unwrap(), i(2));
        assert!(matches!(
            prime_in_progression(&i(1), &i(1_000_000), &i(2), 1),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
