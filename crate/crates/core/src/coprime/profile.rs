use num_traits::{Signed, ToPrimitive, Zero};

use super::{check_av2, require_at_least_two, AvVerdict, ScanDomain};
use crate::bezout::delta_result;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{Poly, PolyRing};
use crate::ring::{GcdDomain, Integer, IntegerRing, Rational, Ring};

/// `d_m = gcd(P₁(m), …, P_s(m))` over one period `m mod δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdProfile<E> {
    pub delta: E,
    /// `(m, d_m)` in residue order.
    pub table: Vec<(E, E)>,
    /// Number of `(m, ℓ)` pairs at which `d_{m+ℓδ} = d_m` was re-checked.
    pub periodicity_checks: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DStar<E> {
    /// Distinct values of `d_m`.
    pub divisors: Vec<E>,
    pub d_star: E,
    pub av2: AvVerdict<E>,
}

fn values_gcd<R: GcdDomain>(ring: &PolyRing<R>, ps: &[Poly<R::Elem>], m: &R::Elem) -> R::Elem {
    let base = ring.base();
    base.gcd_all(ps.iter().map(|p| ring.eval(p, m)).collect::<Vec<_>>().iter())
}

const PERIOD_SAMPLES: usize = 20;

/// Full-period table of `d_m`, with `δ` the lattice generator at the default
/// cofactor degree bound. A spread of table entries is re-evaluated at
/// `m + ℓδ`, `ℓ ∈ {−2, −1, 1, 2}`.
pub fn gcd_profile<D: ScanDomain>(ring: &PolyRing<D>, ps: &[Poly<D::Elem>], limits: &Limits) -> Result<GcdProfile<D::Elem>> {
    require_at_least_two(ps)?;
    let base = ring.base();
    let delta = base.normalize(delta_result(ring, ps, None)?.best());
    let count = base.residue_count(&delta);
    let cap = base.period_cap(limits);
    if count > cap as u128 {
        return Err(Error::CapExceeded(format!("period of {count} residues exceeds the cap {cap}")));
    }
    let table: Vec<(D::Elem, D::Elem)> = base
        .residues_mod(&delta)
        .map(|m| {
            let d = values_gcd(ring, ps, &m);
            assert!(base.divide(&delta, &d).is_some(), "d_m must divide δ");
            (m, d)
        })
        .collect();
    let step = (table.len() / PERIOD_SAMPLES).max(1);
    let mut checks = 0;
    for (m, d) in table.iter().step_by(step) {
        for l in [-2i64, -1, 1, 2] {
            let shifted = base.add(m, &base.mul(&base.from_i64(l), &delta));
            assert_eq!(values_gcd(ring, ps, &shifted), *d, "gcd of values must be δ-periodic");
            checks += 1;
        }
    }
    Ok(GcdProfile { delta, table, periodicity_checks: checks })
}

/// The set of `d_m` values and their gcd `d*`, which is a unit exactly when
/// AV2 holds.
pub fn dstar<D: ScanDomain>(ring: &PolyRing<D>, ps: &[Poly<D::Elem>], limits: &Limits) -> Result<DStar<D::Elem>> {
    let profile = gcd_profile(ring, ps, limits)?;
    let base = ring.base();
    let mut divisors: Vec<D::Elem> = Vec::new();
    for (_, d) in &profile.table {
        if !divisors.contains(d) {
            divisors.push(d.clone());
        }
    }
    divisors.sort_by(|a, b| {
        let (ra, rb) = (base.render(a), base.render(b));
        ra.len().cmp(&rb.len()).then(ra.cmp(&rb))
    });
    for a in &divisors {
        for b in &divisors {
            assert!(divisors.contains(&base.gcd(a, b)), "D* must be stable under gcd");
        }
    }
    let d_star = base.gcd_all(divisors.iter());
    assert!(divisors.contains(&d_star));
    let av2 = check_av2(ring, ps, limits)?;
    assert_eq!(av2.holds, base.is_unit(&d_star), "AV2 holds exactly when d* is a unit");
    Ok(DStar { divisors, d_star, av2 })
}

/// Exact proportion of `m ∈ [lo, hi)` with coprime values. The window length
/// must be a positive multiple of `δ`, so the ratio is the density.
pub fn density_good_m(
    ring: &PolyRing<IntegerRing>,
    ps: &[Poly<Integer>],
    lo: &Integer,
    hi: &Integer,
    limits: &Limits,
) -> Result<Rational> {
    require_at_least_two(ps)?;
    let len = hi - lo;
    if !len.is_positive() {
        return Err(Error::Precondition(format!("empty window [{lo}, {hi})")));
    }
    let delta = delta_result(ring, ps, None)?.best().abs();
    if !(&len % &delta).is_zero() {
        return Err(Error::Precondition(format!("window length {len} is not a multiple of δ = {delta}")));
    }
    let n = len.to_u64().filter(|&n| n <= limits.density_window_cap).ok_or_else(|| {
        Error::CapExceeded(format!("window length {len} exceeds {}", limits.density_window_cap))
    })?;
    let mut good = 0u64;
    let mut m = lo.clone();
    for _ in 0..n {
        if values_gcd(ring, ps, &m) == Integer::from(1) {
            good += 1;
        }
        m += 1;
    }
    Ok(Rational::new(good.into(), len))
}

/// Degrees `(a, b)` of two monomials `μ_a·u^a`, `μ_b·u^b` of `m` with
/// `μ_b ≡ 1 (mod μ_a)` and `min(a, b) > bound`. When such a pair exists,
/// `P(u, m(u))` is divisible by no prime that fails to divide `P`, for every
/// `P` with `deg_u P ≤ bound`.
pub fn lemma_monomials(m: &Poly<Integer>, bound: usize) -> Option<(usize, usize)> {
    let z = IntegerRing;
    let terms: Vec<(usize, &Integer)> = m.terms(&z).filter(|(k, _)| *k > bound).collect();
    for &(a, ma) in &terms {
        for &(b, mb) in &terms {
            if a != b && z.divide(&(mb - 1), ma).is_some() {
                return Some((a, b));
            }
        }
    }
    None
}
