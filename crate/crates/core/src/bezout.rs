//! Bézout denominators: a nonzero `δ ∈ (P₁, …, P_s) ∩ Z` for `Pᵢ ∈ Z[y]`
//! without a common factor, `Z` a principal ideal domain (ℤ or F_p[u]).

use crate::arith::hermite_rows;
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};
use crate::ring::{EuclideanDomain, FractionField, GcdDomain, Ring};

/// Matrix entry count above which [`minimal_delta_bounded`] refuses to run.
pub const LATTICE_ENTRY_CAP: usize = 60_000;

/// `Σ Vᵢ·Pᵢ = δ` with integral cofactors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutCertificate<E> {
    pub cofactors: Vec<Poly<E>>,
    pub delta: E,
    /// `Res(P₁, P₂)` when there are exactly two inputs.
    pub resultant: Option<E>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaResult<E> {
    pub bezout: BezoutCertificate<E>,
    /// Generator of the constants reachable with cofactors of degree at most
    /// `degree_bound_used`; `None` when no nonzero constant is reachable.
    pub minimal_delta: Option<E>,
    pub degree_bound_used: usize,
}

impl<E> DeltaResult<E> {
    /// The smallest certified denominator available.
    pub fn best(&self) -> &E {
        self.minimal_delta.as_ref().unwrap_or(&self.bezout.delta)
    }
}

fn check_inputs<D: Ring>(ps: &[Poly<D::Elem>]) -> Result<()> {
    if ps.len() < 2 {
        return Err(Error::Precondition(format!("need at least two polynomials, got {}", ps.len())));
    }
    if ps.iter().any(Poly::is_zero) {
        return Err(Error::ZeroInput);
    }
    Ok(())
}

fn lift<D: GcdDomain>(
    ring: &PolyRing<D>,
    ky: &PolyRing<FractionField<D>>,
    p: &Poly<D::Elem>,
) -> Poly<<FractionField<D> as Ring>::Elem> {
    ring.map(p, ky, |c| ky.base().embed(c))
}

/// Gcd of all inputs over the fraction field; `CommonFactor` if it is not constant.
pub fn require_coprime_over_fraction_field<D: GcdDomain>(ring: &PolyRing<D>, ps: &[Poly<D::Elem>]) -> Result<()> {
    let ky = PolyRing::new(FractionField::new(ring.base().clone()), ring.var());
    let mut g = Poly::zero();
    for p in ps {
        g = ky.gcd(&g, &lift(ring, &ky, p));
    }
    match g.degree() {
        Some(d) if d >= 1 => Err(Error::CommonFactor(ky.render(&g))),
        _ => Ok(()),
    }
}

/// Fold the two-term extended gcd over the fraction field, then clear all
/// denominators by their lcm.
pub fn bezout_delta<D: GcdDomain>(ring: &PolyRing<D>, ps: &[Poly<D::Elem>]) -> Result<BezoutCertificate<D::Elem>> {
    check_inputs::<D>(ps)?;
    let base = ring.base();
    let k = FractionField::new(base.clone());
    let ky = PolyRing::new(k.clone(), ring.var());
    let mut g = lift(ring, &ky, &ps[0]);
    let mut cof = vec![ky.one()];
    for p in &ps[1..] {
        let (g2, a, b) = ky.ext_gcd_over_field(&g, &lift(ring, &ky, p));
        for c in cof.iter_mut() {
            *c = ky.mul(c, &a);
        }
        cof.push(b);
        g = g2;
    }
    if g.degree() != Some(0) {
        return Err(Error::CommonFactor(ky.render(&g)));
    }
    // Now Σ cofᵢ·Pᵢ = 1 over the fraction field.
    let mut l = base.one();
    for c in cof.iter().flat_map(|c| c.coeffs()) {
        l = base.lcm(&l, &c.den);
    }
    let cofactors: Vec<Poly<D::Elem>> = cof
        .iter()
        .map(|c| {
            ring.from_coeffs(
                c.coeffs()
                    .iter()
                    .map(|x| base.divide(&base.mul(&x.num, &l), &x.den).expect("lcm clears"))
                    .collect(),
            )
        })
        .collect();
    let resultant = if ps.len() == 2 { Some(ring.resultant(&ps[0], &ps[1])?) } else { None };
    let cert = BezoutCertificate { cofactors, delta: l, resultant };
    assert!(verify_certificate(ring, &cert, ps), "Bézout certificate failed its own check");
    // two constants have resultant 1 by convention, outside the ideal in general
    if let (Some(r), false) = (&cert.resultant, ps.iter().all(|p| p.degree() == Some(0))) {
        assert!(base.divide(r, &cert.delta).is_some(), "δ must divide the resultant");
    }
    Ok(cert)
}

/// Exact check of `Σ Vᵢ·Pᵢ = δ` with `δ ≠ 0`.
pub fn verify_certificate<R: Ring>(ring: &PolyRing<R>, cert: &BezoutCertificate<R::Elem>, ps: &[Poly<R::Elem>]) -> bool {
    if cert.cofactors.len() != ps.len() || ring.base().is_zero(&cert.delta) {
        return false;
    }
    let sum = cert
        .cofactors
        .iter()
        .zip(ps)
        .fold(Poly::zero(), |acc, (v, p)| ring.add(&acc, &ring.mul(v, p)));
    sum == ring.constant(cert.delta.clone())
}

/// Generator of `{ Σ Vᵢ·Pᵢ constant : deg Vᵢ ≤ bound }`.
///
/// Rows of the matrix are the images `y^k·Pᵢ` in coefficient coordinates,
/// highest degree first so the constant coordinate is the last column. In
/// Hermite form the only row that can vanish off that column is the one
/// pivoting there.
pub fn minimal_delta_bounded<D: EuclideanDomain>(
    ring: &PolyRing<D>,
    ps: &[Poly<D::Elem>],
    bound: usize,
) -> Result<Option<D::Elem>> {
    check_inputs::<D>(ps)?;
    require_coprime_over_fraction_field(ring, ps)?;
    let base = ring.base();
    let top = bound + ps.iter().map(|p| p.degree().unwrap()).max().unwrap();
    let cols = top + 1;
    let nrows = ps.len() * (bound + 1);
    if nrows * cols > LATTICE_ENTRY_CAP {
        return Err(Error::CapExceeded(format!("{nrows}×{cols} lattice exceeds {LATTICE_ENTRY_CAP} entries")));
    }
    let mut rows = Vec::with_capacity(nrows);
    for p in ps {
        for k in 0..=bound {
            let mut row = vec![base.zero(); cols];
            for (j, c) in p.coeffs().iter().enumerate() {
                row[top - (j + k)] = c.clone();
            }
            rows.push(row);
        }
    }
    let (h, _) = hermite_rows(base, rows, false);
    let found = h.into_iter().find(|row| {
        !base.is_zero(&row[cols - 1]) && row[..cols - 1].iter().all(|c| base.is_zero(c))
    });
    Ok(found.map(|row| row[cols - 1].clone()))
}

/// The Bézout certificate plus the lattice generator at `bound`, which
/// defaults to `Σ deg Pᵢ` (raised if needed to cover the certificate's
/// cofactor degrees).
pub fn delta_result<D: EuclideanDomain>(
    ring: &PolyRing<D>,
    ps: &[Poly<D::Elem>],
    bound: Option<usize>,
) -> Result<DeltaResult<D::Elem>> {
    let bezout = bezout_delta(ring, ps)?;
    let d = bound.unwrap_or_else(|| {
        let total: usize = ps.iter().map(|p| p.degree().unwrap()).sum();
        let cof = bezout.cofactors.iter().filter_map(Poly::degree).max().unwrap_or(0);
        total.max(cof)
    });
    let minimal_delta = match minimal_delta_bounded(ring, ps, d) {
        Ok(m) => m,
        Err(Error::CapExceeded(_)) if bound.is_none() => None,
        Err(e) => return Err(e),
    };
    Ok(DeltaResult { bezout, minimal_delta, degree_bound_used: d })
}
