use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::prime::is_prime;
use crate::error::{Error, Result};

/// Effort bound for [`factorize`]: trial division limit, then Pollard–Brent
/// iterations per composite cofactor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorBudget {
    pub trial_limit: u64,
    pub rho_iterations: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget { trial_limit: 1_000_000, rho_iterations: 2_000_000 }
    }
}

impl FactorBudget {
    pub fn scaled(self, num: u64, den: u64) -> Self {
        let s = |v: u64| ((v as u128 * num as u128) / den.max(1) as u128).max(1) as u64;
        FactorBudget { trial_limit: s(self.trial_limit), rho_iterations: s(self.rho_iterations) }
    }
}

/// `sign · ∏ pᵢ^eᵢ` with strictly increasing primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredInteger {
    pub sign: i8,
    pub factors: Vec<(BigInt, u32)>,
}

impl FactoredInteger {
    pub fn product(&self) -> BigInt {
        let mut acc = BigInt::from(self.sign);
        for (p, e) in &self.factors {
            acc *= num_traits::pow(p.clone(), *e as usize);
        }
        acc
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }

    /// Product of the distinct primes.
    pub fn radical(&self) -> BigInt {
        self.primes().product()
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{}", self.sign);
        }
        if self.sign < 0 {
            write!(f, "-")?;
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factor `n ≠ 0`: trial division up to the budget's limit, then Pollard rho
/// with Brent's cycle detection on what survives.
pub fn factorize(n: &BigInt, budget: FactorBudget) -> Result<FactoredInteger> {
    if n.is_zero() {
        return Err(Error::Precondition("cannot factor zero".into()));
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut rest = n.abs();
    let mut primes: Vec<BigInt> = Vec::new();

    let push_all = |rest: &mut BigInt, d: u64, primes: &mut Vec<BigInt>| {
        while (&*rest % d).is_zero() {
            *rest /= d;
            primes.push(BigInt::from(d));
        }
    };
    push_all(&mut rest, 2, &mut primes);
    push_all(&mut rest, 3, &mut primes);
    let mut d = 5u64;
    let mut step = 2u64;
    while d <= budget.trial_limit && !rest.is_one() {
        if let Some(r) = rest.to_u64() {
            if d.saturating_mul(d) > r {
                break;
            }
            if r % d == 0 {
                push_all(&mut rest, d, &mut primes);
            }
        } else if (&rest % d).is_zero() {
            push_all(&mut rest, d, &mut primes);
        }
        d += step;
        step = 6 - step;
    }

    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            primes.push(m);
            continue;
        }
        let d = pollard_brent(&m, budget.rho_iterations).ok_or_else(|| {
            Error::BudgetExceeded(format!("composite cofactor {m} survived {} rho iterations", budget.rho_iterations))
        })?;
        let q = &m / &d;
        stack.push(d);
        stack.push(q);
    }

    primes.sort();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(FactoredInteger { sign, factors })
}

/// A nontrivial divisor of the composite `n`, trying successive polynomial
/// constants until the iteration budget is spent.
fn pollard_brent(n: &BigInt, budget: u64) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    let mut spent = 0u64;
    for c in 1u64.. {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut y = BigInt::from(2);
        let mut r = 1u64;
        let mut q = BigInt::one();
        let m = 128u64;
        let mut g = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            spent += r;
            r *= 2;
            if spent > budget {
                return None;
            }
        }
        if g == *n {
            // backtrack one step at a time
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return Some(g);
        }
        if spent > budget {
            return None;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn examples() {
        let f = factorize(&int(12), FactorBudget::default()).unwrap();
        assert_eq!(f.factors, vec![(int(2), 2), (int(3), 1)]);
        assert_eq!(f.to_string(), "2^2*3");
        let f = factorize(&int(-1), FactorBudget::default()).unwrap();
        assert_eq!((f.sign, f.factors.len()), (-1, 0));
        let f = factorize(&int(1_000_003), FactorBudget::default()).unwrap();
        assert_eq!(f.factors, vec![(int(1_000_003), 1)]);
        assert!(factorize(&int(0), FactorBudget::default()).is_err());
    }

    #[test]
    fn rho_splits_semiprimes_beyond_trial_limit() {
        let p: BigInt = "1000000007".parse().unwrap();
        let q: BigInt = "998244353".parse().unwrap();
        let n = &p * &q * int(-4);
        let f = factorize(&n, FactorBudget::default()).unwrap();
        assert_eq!(f.factors, vec![(int(2), 2), (q.clone(), 1), (p.clone(), 1)]);
        assert_eq!(f.product(), n);
        // rho alone, with trial division disabled
        let tiny = FactorBudget { trial_limit: 1, rho_iterations: 1_000_000 };
        assert_eq!(factorize(&(&p * &q), tiny).unwrap().product(), &p * &q);
    }

    #[test]
    fn budget_is_enforced() {
        let p: BigInt = "1000000000039".parse().unwrap();
        let q: BigInt = "1000000000061".parse().unwrap();
        let tight = FactorBudget { trial_limit: 10, rho_iterations: 10 };
        assert!(matches!(factorize(&(p * q), tight), Err(Error::BudgetExceeded(_))));
    }
}
