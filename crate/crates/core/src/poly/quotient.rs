use num_traits::{Signed, ToPrimitive};

use super::{fp_polys_of_degree_below, Poly, PolyRing};
use crate::error::{Error, Result};
use crate::ring::{EuclideanDomain, Field, GcdDomain, Integer, PrimeField, Ring, RingDescriptor};

/// `F[u]/(f)` for a monic `f` of positive degree. Elements are reduced
/// polynomials of degree `< deg f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRing<F: Field> {
    ring: PolyRing<F>,
    modulus: Poly<F::Elem>,
}

impl<F: Field> QuotientRing<F> {
    pub fn new(ring: PolyRing<F>, modulus: &Poly<F::Elem>) -> Result<Self> {
        if modulus.degree().unwrap_or(0) == 0 {
            return Err(Error::Precondition("quotient modulus must have positive degree".into()));
        }
        let modulus = ring.monic(modulus);
        Ok(QuotientRing { ring, modulus })
    }

    pub fn poly_ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn modulus(&self) -> &Poly<F::Elem> {
        &self.modulus
    }

    pub fn reduce(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.ring.div_rem(a, &self.modulus).expect("monic modulus").1
    }
}

impl QuotientRing<PrimeField> {
    /// Every residue class, as reduced representatives. Fails with
    /// [`Error::CapExceeded`] when there are more than `cap` of them.
    pub fn residues(&self, cap: u64) -> Result<impl Iterator<Item = Poly<u64>>> {
        let p = self.ring.base().modulus();
        let d = self.modulus.degree().unwrap();
        let count = (p as u128).checked_pow(d as u32);
        if count.is_none_or(|c| c > cap as u128) {
            return Err(Error::CapExceeded(format!("{p}^{d} residues exceed the cap {cap}")));
        }
        Ok(fp_polys_of_degree_below(p, d))
    }
}

/// The residues `0..n` of ℤ/(n), `n > 0`.
pub fn integer_residues(n: &Integer, cap: u64) -> Result<impl Iterator<Item = Integer>> {
    if !n.is_positive() {
        return Err(Error::Precondition(format!("modulus {n} must be positive")));
    }
    match n.to_u64() {
        Some(m) if m <= cap => Ok((0..m).map(Integer::from)),
        _ => Err(Error::CapExceeded(format!("{n} residues exceed the cap {cap}"))),
    }
}

impl<F: Field> Ring for QuotientRing<F> {
    type Elem = Poly<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }
    fn one(&self) -> Self::Elem {
        self.ring.one()
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring.add(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.ring.neg(a)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.ring.sub(a, b)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.reduce(&self.ring.mul(a, b))
    }
    fn from_integer(&self, n: &Integer) -> Self::Elem {
        self.reduce(&self.ring.from_integer(n))
    }
    /// Division by units only; a zero divisor never divides here.
    fn divide(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        let (g, x, _) = self.ring.ext_gcd(b, &self.modulus);
        (self.ring.is_one(&g)).then(|| self.mul(a, &x))
    }
    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.ring.is_one(&self.ring.gcd(a, &self.modulus))
    }
    fn is_field(&self) -> bool {
        false
    }
    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::QuotientRing(Box::new(self.ring.descriptor()), self.ring.render(&self.modulus))
    }
    fn render(&self, a: &Self::Elem) -> String {
        self.ring.render(a)
    }
    fn is_atomic(&self, a: &Self::Elem) -> bool {
        self.ring.is_atomic(a)
    }
}
