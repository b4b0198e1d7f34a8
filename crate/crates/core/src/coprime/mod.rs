//! Assumptions on values, coprime witnesses and gcd profiles for
//! `P₁, …, P_s ∈ Z[y]`.
//!
//! Two families of coefficient rings are handled:
//! * [`ScanDomain`]s (ℤ and F_p[u]): principal ideal domains with finite
//!   residue fields, where local conditions are checked by scanning residues.
//! * [`ContentDomain`]s (ℚ[u] and ℤ[u]): every residue ring `Z/π` is
//!   infinite, so a prime fails to have a survivor only if it divides every
//!   coefficient; local conditions become content tests.

mod av;
mod finders;
mod profile;

pub use av::{check_av1, check_av1_by_content, check_av2, check_av2_by_content, scan_prime};
pub use finders::{
    brute_force_coprime, find_coprime_infinite_field, find_coprime_pid, find_coprime_polyring, fp_poly_box,
    int_poly_box, integer_box, verify_witness,
};
pub(crate) use finders::integer_scan;
pub use profile::{density_good_m, dstar, gcd_profile, lemma_monomials, DStar, GcdProfile};

use num_traits::{One, Signed, ToPrimitive};

use crate::arith::factorize;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{factor_over_prime_field, fp_polys_of_degree_below, kronecker_factor, monic_of_degree, Poly, PolyRing};
use crate::ring::{EuclideanDomain, GcdDomain, Integer, IntegerRing, PrimeField, RationalField, Ring};

/// What a single prime contributed to a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<E> {
    /// `P_index(residue)` is not divisible by the prime.
    Survivor { residue: E, index: usize },
    /// The prime divides every coefficient of every polynomial.
    ContentWitness,
    /// Every one of the `scanned` residues annihilates all polynomials.
    AllResiduesVanish { scanned: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeEvidence<E> {
    pub prime: E,
    pub outcome: Outcome<E>,
}

impl<E> PrimeEvidence<E> {
    pub fn fails(&self) -> bool {
        !matches!(self.outcome, Outcome::Survivor { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvVerdict<E> {
    pub holds: bool,
    pub failing_prime: Option<E>,
    pub evidence: Vec<PrimeEvidence<E>>,
}

impl<E: Clone> AvVerdict<E> {
    fn from_evidence(evidence: Vec<PrimeEvidence<E>>) -> Self {
        let failing_prime = evidence.iter().find(|e| e.fails()).map(|e| e.prime.clone());
        AvVerdict { holds: failing_prime.is_none(), failing_prime, evidence }
    }
}

/// `m` together with the values `Pᵢ(m)` and their normalized gcd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimeWitness<E> {
    pub m: E,
    pub values: Vec<E>,
    pub gcd: E,
    /// For ℤ[u]: gcd of the integer contents of the values.
    pub integer_content: Option<Integer>,
    pub verified: bool,
    pub method: &'static str,
}

/// Coefficient rings whose residue fields are finite and can be enumerated.
pub trait ScanDomain: EuclideanDomain {
    /// Distinct normalized primes dividing the nonzero `a`.
    fn prime_divisors(&self, a: &Self::Elem, limits: &Limits) -> Result<Vec<Self::Elem>>;
    /// Size of `Z/(n)` for nonzero `n`, saturating.
    fn residue_count(&self, n: &Self::Elem) -> u128;
    /// Canonical representatives of `Z/(n)`, lazily, in a fixed order.
    fn residues_mod(&self, n: &Self::Elem) -> Box<dyn Iterator<Item = Self::Elem>>;
    /// Every prime whose residue field has at most `bound` elements.
    fn small_primes(&self, bound: u128, limits: &Limits) -> Result<Vec<Self::Elem>>;
    /// Largest period a full-period enumeration may cover.
    fn period_cap(&self, limits: &Limits) -> u64;
}

impl ScanDomain for IntegerRing {
    fn prime_divisors(&self, a: &Integer, limits: &Limits) -> Result<Vec<Integer>> {
        Ok(factorize(a, limits.factor)?.primes().cloned().collect())
    }
    fn residue_count(&self, n: &Integer) -> u128 {
        n.abs().to_u128().unwrap_or(u128::MAX)
    }
    fn residues_mod(&self, n: &Integer) -> Box<dyn Iterator<Item = Integer>> {
        let n = n.abs();
        let mut next = Integer::from(0);
        Box::new(std::iter::from_fn(move || {
            (next < n).then(|| {
                let r = next.clone();
                next += 1;
                r
            })
        }))
    }
    fn small_primes(&self, bound: u128, _limits: &Limits) -> Result<Vec<Integer>> {
        let bound = bound.min(1 << 20) as u64;
        Ok((2..=bound).filter(|&p| crate::arith::is_prime(&Integer::from(p))).map(Integer::from).collect())
    }
    fn period_cap(&self, limits: &Limits) -> u64 {
        limits.integer_period_cap
    }
}

impl ScanDomain for PolyRing<PrimeField> {
    fn prime_divisors(&self, a: &Poly<u64>, limits: &Limits) -> Result<Vec<Poly<u64>>> {
        Ok(factor_over_prime_field(self, a, limits.fp_factor_candidates)?.factors.into_iter().map(|(f, _)| f).collect())
    }
    fn residue_count(&self, n: &Poly<u64>) -> u128 {
        let q = self.base().modulus() as u128;
        q.checked_pow(n.degree().unwrap_or(0) as u32).unwrap_or(u128::MAX)
    }
    fn residues_mod(&self, n: &Poly<u64>) -> Box<dyn Iterator<Item = Poly<u64>>> {
        Box::new(fp_polys_of_degree_below(self.base().modulus(), n.degree().unwrap_or(0)))
    }
    fn small_primes(&self, bound: u128, limits: &Limits) -> Result<Vec<Poly<u64>>> {
        let q = self.base().modulus();
        let mut out = Vec::new();
        let mut d = 1u32;
        while (q as u128).checked_pow(d).is_some_and(|c| c <= bound) {
            for f in monic_of_degree(q, d as usize) {
                if factor_over_prime_field(self, &f, limits.fp_factor_candidates)?.is_irreducible() {
                    out.push(f);
                }
            }
            d += 1;
        }
        Ok(out)
    }
    fn period_cap(&self, limits: &Limits) -> u64 {
        limits.poly_period_cap
    }
}

/// Coefficient rings where every prime has an infinite residue ring.
pub trait ContentDomain: GcdDomain {
    /// A prime divisor of the nonzero non-unit `c`. When `c` cannot be split
    /// within budget it is returned whole.
    fn prime_divisor(&self, c: &Self::Elem, limits: &Limits) -> Result<Self::Elem>;
}

impl ContentDomain for PolyRing<IntegerRing> {
    fn prime_divisor(&self, c: &Poly<Integer>, limits: &Limits) -> Result<Poly<Integer>> {
        let (k, prim) = self.content_and_primitive(c);
        if !k.abs().is_one() {
            let f = factorize(&k, limits.factor)?;
            return Ok(self.constant(f.factors[0].0.clone()));
        }
        match kronecker_factor(&prim, &limits.kronecker) {
            Ok(f) => Ok(f.factors[0].0.clone()),
            Err(e) if e.is_budget() => Ok(self.normalize(c)),
            Err(e) => Err(e),
        }
    }
}

impl ContentDomain for PolyRing<RationalField> {
    fn prime_divisor(&self, c: &Poly<crate::ring::Rational>, limits: &Limits) -> Result<Poly<crate::ring::Rational>> {
        if c.degree().unwrap_or(0) == 0 {
            return Err(Error::Precondition("units have no prime divisor".into()));
        }
        let zu = PolyRing::new(IntegerRing, self.var());
        let q = self.base();
        let integral = integral_associate(self, c);
        let split = match kronecker_factor(&integral, &limits.kronecker) {
            Ok(f) => f.factors[0].0.clone(),
            Err(e) if e.is_budget() => integral,
            Err(e) => return Err(e),
        };
        Ok(self.monic(&zu.map(&split, self, |a| q.from_integer(a))))
    }
}

/// Primitive integer polynomial associate to a nonzero `p ∈ ℚ[u]`.
pub(crate) fn integral_associate(qu: &PolyRing<RationalField>, p: &Poly<crate::ring::Rational>) -> Poly<Integer> {
    let zu = PolyRing::new(IntegerRing, qu.var());
    let z = IntegerRing;
    let l = p.coeffs().iter().fold(Integer::one(), |acc, c| z.lcm(&acc, &c.den));
    let cleared = zu.from_coeffs(p.coeffs().iter().map(|c| &c.num * (&l / &c.den)).collect());
    zu.primitive_part(&cleared)
}

pub(crate) fn require_at_least_two<E>(ps: &[Poly<E>]) -> Result<()> {
    if ps.len() < 2 {
        return Err(Error::Precondition(format!("need at least two polynomials, got {}", ps.len())));
    }
    if ps.iter().any(Poly::is_zero) {
        return Err(Error::ZeroInput);
    }
    Ok(())
}
