//! Specializations `t ↦ m` of polynomials `P(t, y)`: a progression of `m`
//! keeping every `Pᵢ(m, y)` primitive, scans for irreducible
//! specializations, and the mod-`N` form of Schinzel's hypothesis.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::{crt, factorize, is_prime, prime_in_progression};
use crate::bezout::bezout_delta;
use crate::coprime::{check_av1, find_coprime_pid, integer_scan, scan_prime, Outcome};
use crate::error::{Error, Result};
use crate::interrupt::stop_requested;
use crate::limits::Limits;
use crate::poly::{factor_over_prime_field, kronecker_factor, Poly, PolyRing};
use crate::ring::{Integer, IntegerRing, PrimeField, Ring};

/// Polynomials in `y` whose coefficients are polynomials in `t` over `R`.
pub type BivariateRing<R> = PolyRing<PolyRing<R>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeRecord {
    pub prime: Integer,
    /// `t ≡ residue (mod prime)` keeps the product primitive at `prime`.
    pub residue: Integer,
    /// `y`-degree of a coefficient of the product that is nonzero mod `prime`
    /// at `residue`.
    pub coefficient_degree: usize,
}

/// Every `t* ≡ b0 (mod a0)` makes each `Pᵢ(t*, y)` primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProgressionWitness {
    pub a0: Integer,
    pub b0: Integer,
    pub deltas: Vec<Integer>,
    pub records: Vec<PrimeRecord>,
    /// Points `b0 + k·a0`, `|k| ≤ 2`, re-checked on construction.
    pub sanity_checked: Vec<Integer>,
}

impl ProgressionWitness {
    pub fn term(&self, k: i64) -> Integer {
        &self.b0 + &self.a0 * k
    }
}

/// `P(m, y)` for `P ∈ R[t][y]`.
pub fn specialize<R: Ring>(ring: &BivariateRing<R>, p: &Poly<Poly<R::Elem>>, m: &R::Elem) -> Poly<R::Elem> {
    let inner = ring.base();
    let out = PolyRing::new(inner.base().clone(), ring.var());
    out.from_coeffs(p.coeffs().iter().map(|c| inner.eval(c, m)).collect())
}

/// Whether every `Pᵢ(m, y)` has unit content.
pub fn primitive_at(ring: &BivariateRing<IntegerRing>, ps: &[Poly<Poly<Integer>>], m: &Integer) -> bool {
    let zy = PolyRing::new(IntegerRing, ring.var());
    ps.iter().all(|p| zy.content(&specialize(ring, p, m)).is_one())
}

fn render_all<R: Ring>(ring: &R, xs: &[R::Elem]) -> String {
    xs.iter().map(|x| ring.render(x)).collect::<Vec<_>>().join(", ")
}

/// The arithmetic progression `a0·ℤ + b0` of primitive specializations.
pub fn primitivity_progression(
    ring: &BivariateRing<IntegerRing>,
    ps: &[Poly<Poly<Integer>>],
    limits: &Limits,
) -> Result<ProgressionWitness> {
    if ps.is_empty() {
        return Err(Error::Precondition("need at least one polynomial".into()));
    }
    if ps.iter().any(Poly::is_zero) {
        return Err(Error::ZeroInput);
    }
    let zt = ring.base();
    let mut deltas = Vec::new();
    for p in ps {
        let coeffs: Vec<Poly<Integer>> = p.coeffs().iter().filter(|c| !c.is_zero()).cloned().collect();
        let delta = if coeffs.len() == 1 {
            if coeffs[0].degree() != Some(0) {
                return Err(Error::CommonFactor(format!(
                    "the coefficients of {} share the factor {}",
                    ring.render(p),
                    zt.render(&coeffs[0])
                )));
            }
            coeffs[0].coeffs()[0].abs()
        } else {
            bezout_delta(zt, &coeffs).map_err(|e| match e {
                Error::CommonFactor(_) => Error::CommonFactor(format!(
                    "the coefficients {} of {} have a common factor over ℚ[{}]",
                    render_all(zt, &coeffs),
                    ring.render(p),
                    zt.var()
                )),
                e => e,
            })?
            .delta
            .abs()
        };
        deltas.push(delta);
    }

    let product = ps.iter().fold(ring.one(), |acc, p| ring.mul(&acc, p));
    let (degrees, family): (Vec<usize>, Vec<Poly<Integer>>) =
        product.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).unzip();
    let all: Integer = deltas.iter().product();
    let primes: Vec<Integer> =
        if all.is_one() { Vec::new() } else { factorize(&all, limits.factor)?.primes().cloned().collect() };
    let mut records = Vec::new();
    for p in primes {
        match scan_prime(zt, &family, &p).outcome {
            Outcome::Survivor { residue, index } => {
                records.push(PrimeRecord { prime: p, residue, coefficient_degree: degrees[index] })
            }
            _ => return Err(Error::Av3Violation { prime: p.to_string() }),
        }
    }
    let congruences: Vec<(Integer, Integer)> = records.iter().map(|r| (r.residue.clone(), r.prime.clone())).collect();
    let (b0, a0) = crt(&congruences)?;
    let mut witness = ProgressionWitness { a0, b0, deltas, records, sanity_checked: Vec::new() };
    for k in -2..=2 {
        let t = witness.term(k);
        assert!(primitive_at(ring, ps, &t), "progression term {t} must give primitive specializations");
        witness.sanity_checked.push(t);
    }
    Ok(witness)
}

/// Irreducibility status of one specialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecStatus<E> {
    /// `certified` is false when the verdict only means that no factor was
    /// found within the search bound.
    Irreducible { certified: bool },
    Reducible { factor: Poly<E> },
    NotPrimitive { content: E },
    /// The specialization lost every positive power of `y`.
    Constant,
    Inconclusive { reason: String },
}

impl<E> SpecStatus<E> {
    pub fn is_hit(&self) -> bool {
        matches!(self, SpecStatus::Irreducible { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecEntry<E> {
    pub m: E,
    pub statuses: Vec<SpecStatus<E>>,
}

impl<E> SpecEntry<E> {
    pub fn is_hit(&self) -> bool {
        self.statuses.iter().all(SpecStatus::is_hit)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationReport<E> {
    pub entries: Vec<SpecEntry<E>>,
    pub hits: usize,
    pub want: usize,
    pub cap: usize,
    /// The cap was reached with fewer than `want` hits.
    pub exhausted: bool,
    pub interrupted: bool,
    /// Results over F_p[u] are scan evidence, not instances of a theorem.
    pub evidence_only: bool,
    pub search_bound: String,
}

impl<E> SpecializationReport<E> {
    pub fn hit_values(&self) -> impl Iterator<Item = &E> {
        self.entries.iter().filter(|e| e.is_hit()).map(|e| &e.m)
    }
}

fn scan_report<E>(
    candidates: impl Iterator<Item = E>,
    want: usize,
    cap: usize,
    mut status: impl FnMut(&E) -> Vec<SpecStatus<E>>,
) -> SpecializationReport<E> {
    let mut report = SpecializationReport {
        entries: Vec::new(),
        hits: 0,
        want,
        cap,
        exhausted: false,
        interrupted: false,
        evidence_only: false,
        search_bound: String::new(),
    };
    for m in candidates.take(cap) {
        if stop_requested() {
            report.interrupted = true;
            break;
        }
        let entry = SpecEntry { statuses: status(&m), m };
        if entry.is_hit() {
            report.hits += 1;
        }
        report.entries.push(entry);
        if report.hits >= want {
            break;
        }
    }
    report.exhausted = report.hits < want && !report.interrupted;
    report
}

fn integer_status(q: &Poly<Integer>, limits: &Limits) -> SpecStatus<Integer> {
    if q.degree().unwrap_or(0) == 0 {
        return SpecStatus::Constant;
    }
    match kronecker_factor(q, &limits.kronecker) {
        Ok(f) if !f.unit.abs().is_one() => SpecStatus::NotPrimitive { content: f.unit.abs() },
        Ok(f) if f.is_irreducible() => SpecStatus::Irreducible { certified: true },
        Ok(f) => SpecStatus::Reducible { factor: f.factors[0].0.clone() },
        Err(e) => SpecStatus::Inconclusive { reason: e.to_string() },
    }
}

fn require_want(want: usize, cap: usize) -> Result<()> {
    if want == 0 || cap == 0 {
        return Err(Error::Precondition("want and cap must be positive".into()));
    }
    Ok(())
}

/// Scan `m = b0 + a0·k`, `k = 0, 1, −1, 2, …`, for `m` making every
/// `Pᵢ(m, y)` irreducible in ℤ[y].
pub fn irreducible_specializations(
    ring: &BivariateRing<IntegerRing>,
    ps: &[Poly<Poly<Integer>>],
    progression: &ProgressionWitness,
    want: usize,
    cap: usize,
    limits: &Limits,
) -> Result<SpecializationReport<Integer>> {
    require_want(want, cap)?;
    let ks = integer_scan();
    let candidates = ks.map(|k| &progression.b0 + &progression.a0 * k);
    let mut report = scan_report(candidates, want, cap, |m| {
        ps.iter().map(|p| integer_status(&specialize(ring, p, m), limits)).collect()
    });
    report.search_bound = format!("Kronecker factorization, degree ≤ {}", limits.kronecker.degree_cap);
    Ok(report)
}

const SUBSET_CAP: u64 = 4096;
const CERTIFICATE_POINTS: usize = 16;

/// Every product `∏ fᵢ^{eᵢ}` with `0 ≤ eᵢ ≤ kᵢ`, or `None` past the cap.
fn sub_products<R: Ring>(ring: &PolyRing<R>, factors: &[(Poly<R::Elem>, u32)]) -> Option<Vec<Poly<R::Elem>>> {
    let count = factors.iter().try_fold(1u64, |acc, (_, k)| acc.checked_mul(*k as u64 + 1))?;
    if count > SUBSET_CAP {
        return None;
    }
    let mut out = vec![ring.one()];
    for (f, k) in factors {
        let mut next = Vec::with_capacity(out.len() * (*k as usize + 1));
        for g in &out {
            let mut h = g.clone();
            next.push(h.clone());
            for _ in 0..*k {
                h = ring.mul(&h, f);
                next.push(h.clone());
            }
        }
        out = next;
    }
    Some(out)
}

/// Balanced base-`b` digits of `c` as a polynomial in `u`.
fn balanced_digits(c: &Integer, b: &Integer) -> Vec<Integer> {
    let half = b / 2;
    let mut c = c.clone();
    let mut out = Vec::new();
    while !c.is_zero() {
        let mut r = c.mod_floor(b);
        if r > half {
            r -= b;
        }
        c = (&c - &r) / b;
        out.push(r);
    }
    out
}

fn content_divisors(c: &Integer, limits: &Limits) -> Vec<Integer> {
    let c = c.abs();
    let Ok(f) = factorize(&c, limits.factor) else { return vec![Integer::one()] };
    let mut out = vec![Integer::one()];
    for (p, e) in &f.factors {
        let mut next = Vec::new();
        for d in &out {
            let mut x = d.clone();
            for _ in 0..=*e {
                next.push(x.clone());
                x *= p;
            }
        }
        out = next;
        if out.len() > SUBSET_CAP as usize {
            return vec![Integer::one()];
        }
    }
    out
}

/// Look for a factor of `q ∈ ℤ[u][y]` through its image under `u ↦ b`.
fn kronecker_substitution_factor(
    ring: &BivariateRing<IntegerRing>,
    q: &Poly<Poly<Integer>>,
    b: &Integer,
    limits: &Limits,
) -> Result<Option<Poly<Poly<Integer>>>> {
    let zu = ring.base();
    let zy = PolyRing::new(IntegerRing, ring.var());
    let image = zy.from_coeffs(q.coeffs().iter().map(|c| zu.eval(c, b)).collect());
    let half = q.degree().unwrap() / 2;
    let f = kronecker_factor(&image, &limits.kronecker)?;
    let Some(products) = sub_products(&zy, &f.factors) else {
        return Err(Error::BudgetExceeded("too many factor combinations".into()));
    };
    let scales = content_divisors(&f.unit, limits);
    for g in products.iter().filter(|g| (1..=half).contains(&g.degree().unwrap())) {
        for d in &scales {
            let coeffs = g.coeffs().iter().map(|c| zu.from_coeffs(balanced_digits(&(c * d), b))).collect();
            let candidate = ring.from_coeffs(coeffs);
            if candidate.degree() == g.degree() && ring.divide(q, &candidate).is_some() {
                return Ok(Some(ring.primitive_part(&candidate)));
            }
        }
    }
    Ok(None)
}

fn height(q: &Poly<Poly<Integer>>) -> Integer {
    q.coeffs().iter().flat_map(|c| c.coeffs()).map(|x| x.abs()).sum()
}

fn zu_status(ring: &BivariateRing<IntegerRing>, q: &Poly<Poly<Integer>>, limits: &Limits) -> SpecStatus<Poly<Integer>> {
    let zu = ring.base();
    let Some(dy) = q.degree().filter(|&d| d > 0) else { return SpecStatus::Constant };
    let content = ring.content(q);
    if !zu.is_unit(&content) {
        return SpecStatus::NotPrimitive { content };
    }
    if dy == 1 {
        return SpecStatus::Irreducible { certified: true };
    }
    // A factorization with both y-degrees positive survives any evaluation
    // that keeps the leading coefficient nonzero.
    let zy = PolyRing::new(IntegerRing, ring.var());
    let lead = q.lead().unwrap();
    for u0 in integer_scan().take(CERTIFICATE_POINTS) {
        if zu.eval(lead, &u0).is_zero() {
            continue;
        }
        let image = zy.from_coeffs(q.coeffs().iter().map(|c| zu.eval(c, &u0)).collect());
        if let Ok(f) = kronecker_factor(&image, &limits.kronecker) {
            if f.is_irreducible() {
                return SpecStatus::Irreducible { certified: true };
            }
        }
    }
    let h = height(q);
    let du = q.coeffs().iter().filter_map(Poly::degree).max().unwrap_or(0);
    let small = &h * 2 + 1;
    let large = (&h << (du + dy + 1)) + 1;
    let mut completed = false;
    for b in [small, large] {
        match kronecker_substitution_factor(ring, q, &b, limits) {
            Ok(Some(factor)) => return SpecStatus::Reducible { factor },
            Ok(None) => completed = true,
            Err(_) => {}
        }
    }
    if completed {
        SpecStatus::Irreducible { certified: false }
    } else {
        SpecStatus::Inconclusive { reason: "factor search exceeded its budget".into() }
    }
}

/// Over F_p the substitution `u ↦ x`, `y ↦ x^n` with `n > deg_u q` is
/// injective on polynomials of `u`-degree below `n`, so factoring the image
/// decides irreducibility.
fn fp_status(ring: &BivariateRing<PrimeField>, q: &Poly<Poly<u64>>, limits: &Limits) -> SpecStatus<Poly<u64>> {
    let fu = ring.base();
    let Some(dy) = q.degree().filter(|&d| d > 0) else { return SpecStatus::Constant };
    let content = ring.content(q);
    if !fu.is_unit(&content) {
        return SpecStatus::NotPrimitive { content };
    }
    if dy == 1 {
        return SpecStatus::Irreducible { certified: true };
    }
    let n = q.coeffs().iter().filter_map(Poly::degree).max().unwrap_or(0) + 1;
    let mut image = vec![0u64; n * (dy + 1)];
    for (j, c) in q.coeffs().iter().enumerate() {
        for (i, &a) in c.coeffs().iter().enumerate() {
            image[i + n * j] = a;
        }
    }
    let image = fu.from_coeffs(image);
    let f = match factor_over_prime_field(fu, &image, limits.fp_factor_candidates) {
        Ok(f) => f,
        Err(e) => return SpecStatus::Inconclusive { reason: e.to_string() },
    };
    let Some(products) = sub_products(fu, &f.factors) else {
        return SpecStatus::Inconclusive { reason: "too many factor combinations".into() };
    };
    for g in products {
        let mut coeffs = vec![Poly::zero(); g.coeffs().len() / n + 1];
        let mut digits = vec![vec![0u64; n]; coeffs.len()];
        for (e, &a) in g.coeffs().iter().enumerate() {
            digits[e / n][e % n] = a;
        }
        for (c, d) in coeffs.iter_mut().zip(digits) {
            *c = fu.from_coeffs(d);
        }
        let candidate = ring.from_coeffs(coeffs);
        if candidate.degree().is_some_and(|d| d >= 1 && 2 * d <= dy) && ring.divide(q, &candidate).is_some() {
            return SpecStatus::Reducible { factor: candidate };
        }
    }
    SpecStatus::Irreducible { certified: true }
}

fn require_y_degree<R: Ring>(ring: &PolyRing<R>, p: &Poly<R::Elem>) -> Result<()> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::Precondition(format!("{} has no positive degree in {}", ring.render(p), ring.var())));
    }
    Ok(())
}

/// Scan `m(u)` from `candidates` for `P(m, y)` irreducible in ℤ[u][y].
///
/// A hit is certified when some integer evaluation of `u` is irreducible;
/// otherwise it only means that the Kronecker-substitution search found no
/// factor.
pub fn specialize_polyring_irreducible(
    ring: &PolyRing<BivariateRing<IntegerRing>>,
    p: &Poly<Poly<Poly<Integer>>>,
    candidates: impl Iterator<Item = Poly<Integer>>,
    want: usize,
    limits: &Limits,
) -> Result<SpecializationReport<Poly<Integer>>> {
    require_y_degree(ring, p)?;
    let cap = limits.scan_candidates as usize;
    require_want(want, cap)?;
    let zuy = PolyRing::new(ring.base().base().clone(), ring.var());
    let mut report = scan_report(candidates, want, cap, |m| vec![zu_status(&zuy, &specialize(ring, p, m), limits)]);
    report.search_bound = "integer evaluations, then u ↦ 2H + 1 and u ↦ 2^(deg+1)·H + 1 substitution".into();
    Ok(report)
}

/// The F_p[u] counterpart of [`specialize_polyring_irreducible`]. Verdicts
/// are exact, but the report is labeled evidence only.
pub fn specialize_polyring_irreducible_fp(
    ring: &PolyRing<BivariateRing<PrimeField>>,
    p: &Poly<Poly<Poly<u64>>>,
    candidates: impl Iterator<Item = Poly<u64>>,
    want: usize,
    limits: &Limits,
) -> Result<SpecializationReport<Poly<u64>>> {
    require_y_degree(ring, p)?;
    let cap = limits.scan_candidates as usize;
    require_want(want, cap)?;
    let fuy = PolyRing::new(ring.base().base().clone(), ring.var());
    let mut report = scan_report(candidates, want, cap, |m| vec![fp_status(&fuy, &specialize(ring, p, m), limits)]);
    report.evidence_only = true;
    report.search_bound = "u ↦ x, y ↦ x^n substitution and F_p factorization".into();
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModNEntry {
    pub value: Integer,
    pub prime: Integer,
    /// `prime` is prime, coprime to `N` and congruent to `value` mod `N`.
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModNWitness {
    pub m: Integer,
    pub n: Integer,
    pub entries: Vec<ModNEntry>,
}

pub fn verify_mod_n_entry(value: &Integer, prime: &Integer, n: &Integer) -> bool {
    is_prime(prime) && prime.gcd(n).is_one() && (prime - value).mod_floor(n).is_zero()
}

/// `m` such that each `Pᵢ(m)` is congruent mod `N` to a prime not dividing `N`.
pub fn mod_n_schinzel(
    ring: &PolyRing<IntegerRing>,
    ps: &[Poly<Integer>],
    n: &Integer,
    want: usize,
    limits: &Limits,
) -> Result<Vec<ModNWitness>> {
    if !n.is_positive() {
        return Err(Error::Precondition(format!("modulus {n} must be at least 1")));
    }
    require_want(want, 1)?;
    let av1 = check_av1(ring, ps, limits)?;
    if let Some(p) = av1.failing_prime {
        return Err(Error::Av1Violation { prime: p.to_string() });
    }
    let product = ps.iter().fold(ring.one(), |acc, p| ring.mul(&acc, p));
    let pair = [product, ring.constant(n.clone())];
    let start = find_coprime_pid(ring, &pair, limits)?;
    let step = bezout_delta(ring, &pair)?.delta.abs();
    let mut out = Vec::new();
    let mut m = start.m;
    while out.len() < want && !stop_requested() {
        let mut entries = Vec::new();
        for p in ps {
            let value = ring.eval(p, &m);
            let prime = prime_in_progression(&value, n, &Integer::from(2), limits.prime_candidates)?;
            let verified = verify_mod_n_entry(&value, &prime, n);
            assert!(verified, "prime {prime} must certify {value} mod {n}");
            entries.push(ModNEntry { value, prime, verified });
        }
        out.push(ModNWitness { m: m.clone(), n: n.clone(), entries });
        m += &step;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldbachWitness {
    pub m: Integer,
    pub p: Integer,
    pub q: Integer,
}

/// Primes `p, q` with `p + q ≡ 2n (mod N)`, from `(y, 2n − y)`.
pub fn goldbach_mod_n(two_n: &Integer, n: &Integer, want: usize, limits: &Limits) -> Result<Vec<GoldbachWitness>> {
    if two_n.is_odd() {
        return Err(Error::Precondition(format!("{two_n} is odd")));
    }
    let zy = PolyRing::new(IntegerRing, "y");
    let ps = [zy.gen(), zy.from_coeffs(vec![two_n.clone(), -Integer::one()])];
    let witnesses = mod_n_schinzel(&zy, &ps, n, want, limits)?;
    Ok(witnesses
        .into_iter()
        .map(|w| {
            let (p, q) = (w.entries[0].prime.clone(), w.entries[1].prime.clone());
            assert!((&p + &q - two_n).mod_floor(n).is_zero());
            GoldbachWitness { m: w.m, p, q }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn small(x: &Integer) -> Option<i64> {
        x.to_i64()
    }

    fn zty() -> BivariateRing<IntegerRing> {
        PolyRing::new(PolyRing::new(IntegerRing, "t"), "y")
    }

    fn bi(ring: &BivariateRing<IntegerRing>, rows: &[&[i64]]) -> Poly<Poly<Integer>> {
        ring.from_coeffs(rows.iter().map(|r| ring.base().from_i64s(r)).collect())
    }

    #[test]
    fn progression_examples() {
        let r = zty();
        let l = Limits::default();
        let p = bi(&r, &[&[2, 1], &[0, 1]]);
        let w = primitivity_progression(&r, &[p], &l).unwrap();
        assert_eq!((w.a0.clone(), w.b0.clone()), (2.into(), 1.into()));
        assert_eq!(w.deltas, vec![Integer::from(2)]);
        let w = primitivity_progression(&r, &[bi(&r, &[&[0, 1], &[], &[1]])], &l).unwrap();
        assert_eq!((w.a0, w.b0), (1.into(), 0.into()));
        let bad = bi(&r, &[&[2, -1, 1], &[0, -1, 1]]);
        assert_eq!(
            primitivity_progression(&r, &[bad], &l).unwrap_err(),
            Error::Av3Violation { prime: "2".into() }
        );
        let common = bi(&r, &[&[0, 1], &[0, 1]]);
        assert!(matches!(primitivity_progression(&r, &[common], &l), Err(Error::CommonFactor(_))));
    }

    #[test]
    fn specialization_examples() {
        let r = zty();
        let l = Limits::default();
        let p = bi(&r, &[&[0, 1], &[], &[1]]);
        let w = primitivity_progression(&r, std::slice::from_ref(&p), &l).unwrap();
        let rep = irreducible_specializations(&r, std::slice::from_ref(&p), &w, 7, 100, &l).unwrap();
        let hits: Vec<i64> = rep.hit_values().filter_map(small).collect();
        assert_eq!(hits, vec![1, 2, -2, 3, -3, 4, 5]);
        assert!(!rep.exhausted);

        let lin = bi(&r, &[&[2, 1], &[0, 1]]);
        let w = primitivity_progression(&r, std::slice::from_ref(&lin), &l).unwrap();
        let rep = irreducible_specializations(&r, std::slice::from_ref(&lin), &w, 1000, 30, &l).unwrap();
        assert_eq!(rep.hits, 30);
        assert!(rep.exhausted);

        let sq = bi(&r, &[&[0, 0, -1], &[], &[1]]);
        let w = primitivity_progression(&r, std::slice::from_ref(&sq), &l).unwrap();
        let rep = irreducible_specializations(&r, std::slice::from_ref(&sq), &w, 1, 25, &l).unwrap();
        assert_eq!(rep.hits, 0);
    }

    #[test]
    fn polyring_examples() {
        let l = Limits::default();
        let zu = PolyRing::new(IntegerRing, "u");
        let ring = PolyRing::new(PolyRing::new(zu.clone(), "t"), "y");
        let zut = ring.base();
        let t = zut.gen();
        let minus_t = zut.neg(&t);
        let p = ring.from_coeffs(vec![minus_t, zut.zero(), zut.one()]);
        let rep = specialize_polyring_irreducible(&ring, &p, std::iter::once(zu.gen()), 1, &l).unwrap();
        assert_eq!(rep.hits, 1);
        let t2 = zut.neg(&zut.mul(&t, &t));
        let p = ring.from_coeffs(vec![t2, zut.zero(), zut.one()]);
        let rep = specialize_polyring_irreducible(&ring, &p, std::iter::once(zu.gen()), 1, &l).unwrap();
        assert_eq!(rep.hits, 0);
        assert!(matches!(rep.entries[0].statuses[0], SpecStatus::Reducible { .. }));

        let f2u = PolyRing::new(PrimeField::new(2).unwrap(), "u");
        let ring = PolyRing::new(PolyRing::new(f2u.clone(), "t"), "y");
        let ft = ring.base();
        let mut c = vec![ft.zero(); 9];
        c[0] = ft.gen();
        c[8] = ft.one();
        let p = ring.from_coeffs(c);
        let m = f2u.monomial(1, 3);
        let rep = specialize_polyring_irreducible_fp(&ring, &p, std::iter::once(m), 1, &l).unwrap();
        assert_eq!(rep.hits, 1);
        assert!(rep.evidence_only);
        // y² + t at m = u²: (y + u)² over F₂
        let p = ring.from_coeffs(vec![ft.gen(), ft.zero(), ft.one()]);
        let rep = specialize_polyring_irreducible_fp(&ring, &p, std::iter::once(f2u.monomial(1, 2)), 1, &l).unwrap();
        assert_eq!(rep.hits, 0);
    }

    #[test]
    fn mod_n_examples() {
        let l = Limits::default();
        let zy = PolyRing::new(IntegerRing, "y");
        let w = mod_n_schinzel(&zy, &[zy.gen(), zy.from_i64s(&[2, 1])], &4.into(), 1, &l).unwrap();
        assert_eq!(w[0].m, Integer::from(1));
        let primes: Vec<Integer> = w[0].entries.iter().map(|e| e.prime.clone()).collect();
        assert_eq!(primes, vec![Integer::from(5), Integer::from(3)]);
        let w = mod_n_schinzel(&zy, &[zy.from_i64s(&[1, 0, 1])], &3.into(), 3, &l).unwrap();
        assert_eq!(w.len(), 3);
        assert!(w.iter().all(|w| w.entries[0].verified));
        assert_eq!(
            mod_n_schinzel(&zy, &[zy.from_i64s(&[2, -1, 1])], &2.into(), 1, &l).unwrap_err(),
            Error::Av1Violation { prime: "2".into() }
        );
    }

    #[test]
    fn goldbach_examples() {
        let l = Limits::default();
        for (two_n, n) in [(8, 3), (4, 1), (2, 4)] {
            let w = goldbach_mod_n(&two_n.into(), &n.into(), 2, &l).unwrap();
            assert_eq!(w.len(), 2);
            for g in w {
                assert!(is_prime(&g.p) && is_prime(&g.q));
                assert!((&g.p + &g.q - Integer::from(two_n)).mod_floor(&Integer::from(n)).is_zero());
            }
        }
        assert!(goldbach_mod_n(&3.into(), &2.into(), 1, &l).is_err());
    }
}
