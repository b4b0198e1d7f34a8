use super::{require_at_least_two, AvVerdict, ContentDomain, Outcome, PrimeEvidence, ScanDomain};
use crate::bezout::bezout_delta;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{Poly, PolyRing};
use crate::ring::Ring;

/// Look for a residue `m` and an index `i` with `p ∤ Pᵢ(m)`.
///
/// Residues are visited lazily, so when `Z/p` has more elements than some
/// nonzero `P̄ᵢ` has roots the scan stops after at most `deg Pᵢ + 1` steps.
pub fn scan_prime<D: ScanDomain>(ring: &PolyRing<D>, ps: &[Poly<D::Elem>], p: &D::Elem) -> PrimeEvidence<D::Elem> {
    let base = ring.base();
    let reduce = |x: &D::Elem| base.div_rem(x, p).1;
    let reduced: Vec<Poly<D::Elem>> =
        ps.iter().map(|q| ring.from_coeffs(q.coeffs().iter().map(reduce).collect())).collect();
    if reduced.iter().all(Poly::is_zero) {
        return PrimeEvidence { prime: p.clone(), outcome: Outcome::ContentWitness };
    }
    let mut scanned = 0u64;
    for r in base.residues_mod(p) {
        scanned += 1;
        for (i, q) in reduced.iter().enumerate() {
            if !q.is_zero() && !base.is_zero(&reduce(&ring.eval(q, &r))) {
                return PrimeEvidence { prime: p.clone(), outcome: Outcome::Survivor { residue: r, index: i } };
            }
        }
    }
    PrimeEvidence { prime: p.clone(), outcome: Outcome::AllResiduesVanish { scanned } }
}

/// Common local obstruction: is there a prime `p` of `Z` dividing
/// `gcd(P₁(m), …, P_s(m))` for every `m`? Only primes of `δ` can.
pub fn check_av2<D: ScanDomain>(ring: &PolyRing<D>, ps: &[Poly<D::Elem>], limits: &Limits) -> Result<AvVerdict<D::Elem>> {
    require_at_least_two(ps)?;
    let delta = bezout_delta(ring, ps)?.delta;
    let base = ring.base();
    if base.is_unit(&delta) {
        return Ok(AvVerdict::from_evidence(Vec::new()));
    }
    let evidence = base.prime_divisors(&delta, limits)?.iter().map(|p| scan_prime(ring, ps, p)).collect();
    Ok(AvVerdict::from_evidence(evidence))
}

/// Local obstruction for the product: is there a prime dividing
/// `P₁(m)⋯P_s(m)` for every `m`? Either the prime divides the content of the
/// product, or its residue field is no larger than the product's degree.
pub fn check_av1<D: ScanDomain>(ring: &PolyRing<D>, ps: &[Poly<D::Elem>], limits: &Limits) -> Result<AvVerdict<D::Elem>> {
    if ps.is_empty() {
        return Err(Error::Precondition("need at least one polynomial".into()));
    }
    if ps.iter().any(Poly::is_zero) {
        return Err(Error::ZeroInput);
    }
    let base = ring.base();
    let product = ps.iter().fold(ring.one(), |acc, p| ring.mul(&acc, p));
    let content = ring.content(&product);
    let mut candidates = if base.is_unit(&content) { Vec::new() } else { base.prime_divisors(&content, limits)? };
    for p in base.small_primes(product.degree().unwrap() as u128, limits)? {
        if !candidates.contains(&p) {
            candidates.push(p);
        }
    }
    let single = [product];
    let evidence = candidates.iter().map(|p| scan_prime(ring, &single, p)).collect();
    Ok(AvVerdict::from_evidence(evidence))
}

fn content_evidence<D: ContentDomain>(base: &D, c: &D::Elem, limits: &Limits) -> Result<Option<PrimeEvidence<D::Elem>>> {
    if base.is_unit(c) {
        return Ok(None);
    }
    Ok(Some(PrimeEvidence { prime: base.prime_divisor(c, limits)?, outcome: Outcome::ContentWitness }))
}

/// AV2 over ℚ[u] or ℤ[u]: holds iff no prime divides every coefficient of
/// every `Pᵢ`.
pub fn check_av2_by_content<D: ContentDomain>(
    ring: &PolyRing<D>,
    ps: &[Poly<D::Elem>],
    limits: &Limits,
) -> Result<AvVerdict<D::Elem>> {
    require_at_least_two(ps)?;
    let base = ring.base();
    let c = base.gcd_all(ps.iter().flat_map(|p| p.coeffs()));
    Ok(AvVerdict::from_evidence(content_evidence(base, &c, limits)?.into_iter().collect()))
}

/// AV1 over ℚ[u] or ℤ[u]: holds iff no single `Pᵢ` has a prime content divisor.
pub fn check_av1_by_content<D: ContentDomain>(
    ring: &PolyRing<D>,
    ps: &[Poly<D::Elem>],
    limits: &Limits,
) -> Result<AvVerdict<D::Elem>> {
    if ps.is_empty() {
        return Err(Error::Precondition("need at least one polynomial".into()));
    }
    if ps.iter().any(Poly::is_zero) {
        return Err(Error::ZeroInput);
    }
    let mut evidence = Vec::new();
    for p in ps {
        if let Some(e) = content_evidence(ring.base(), &ring.content(p), limits)? {
            evidence.push(e);
        }
    }
    Ok(AvVerdict::from_evidence(evidence))
}
