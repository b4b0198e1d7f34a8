//! Coefficient rings.
//!
//! A ring is a small context value (`IntegerRing`, `PrimeField`, `PolyRing<R>`, ...)
//! whose methods act on plain element values. Nesting contexts gives the towers
//! used throughout the crate, e.g. `PolyRing<PolyRing<IntegerRing>>` for ℤ[u][y].
//!
//! Every element type has a canonical form, so structural equality is ring
//! equality.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};

/// Arbitrary-precision integer.
pub type Integer = BigInt;

/// Runtime description of a ring, used in reports and by the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingDescriptor {
    IntegerRing,
    RationalField,
    PrimeField(Integer),
    FractionField(Box<RingDescriptor>),
    PolyRing(Box<RingDescriptor>, String),
    QuotientRing(Box<RingDescriptor>, String),
}

impl RingDescriptor {
    /// Number of polynomial layers.
    pub fn depth(&self) -> usize {
        match self {
            RingDescriptor::PolyRing(b, _) => 1 + b.depth(),
            RingDescriptor::QuotientRing(b, _) | RingDescriptor::FractionField(b) => b.depth(),
            _ => 0,
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::IntegerRing => write!(f, "Z"),
            RingDescriptor::RationalField => write!(f, "Q"),
            RingDescriptor::PrimeField(p) => write!(f, "F{p}"),
            RingDescriptor::FractionField(b) => write!(f, "Frac({b})"),
            RingDescriptor::PolyRing(b, v) => write!(f, "{b}[{v}]"),
            RingDescriptor::QuotientRing(b, m) => write!(f, "{b}/({m})"),
        }
    }
}

pub trait Ring: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + Eq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_integer(&self, n: &Integer) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_integer(&Integer::from(n))
    }
    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
    /// Exact quotient `a / b`, or `None` when `b` does not divide `a` (or is zero).
    fn divide(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
    fn is_unit(&self, a: &Self::Elem) -> bool;
    fn is_field(&self) -> bool {
        false
    }
    fn descriptor(&self) -> RingDescriptor;
    /// Canonical text form, parseable by the command-line grammar.
    fn render(&self, a: &Self::Elem) -> String;
    /// Whether the rendering of `a` can be juxtaposed without parentheses.
    fn is_atomic(&self, a: &Self::Elem) -> bool;
}

/// Integral domain with gcds; gcds and associates are reported in a fixed
/// normal form (positive over ℤ, monic over fields' polynomial rings).
pub trait GcdDomain: Ring {
    /// Normalized gcd; `gcd(0, 0) = 0`.
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// A unit `v` such that `v·a` is the normal representative of `a`.
    fn normal_unit(&self, a: &Self::Elem) -> Self::Elem;
    fn normalize(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.normal_unit(a))
    }
    fn lcm(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if self.is_zero(a) || self.is_zero(b) {
            return self.zero();
        }
        let g = self.gcd(a, b);
        let q = self.divide(a, &g).expect("gcd divides its argument");
        self.normalize(&self.mul(&q, b))
    }
    fn gcd_all<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        let mut g = self.zero();
        for x in items {
            g = self.gcd(&g, x);
            if self.is_one(&g) {
                break;
            }
        }
        g
    }
}

pub trait EuclideanDomain: GcdDomain {
    /// Division with canonical remainder. Panics if `b` is zero.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);

    /// `(g, x, y)` with `a·x + b·y = g`, `g` normalized.
    fn ext_gcd(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem, Self::Elem) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut x0, mut x1) = (self.one(), self.zero());
        let (mut y0, mut y1) = (self.zero(), self.one());
        while !self.is_zero(&r1) {
            let (q, r) = self.div_rem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let nx = self.sub(&x0, &self.mul(&q, &x1));
            x0 = std::mem::replace(&mut x1, nx);
            let ny = self.sub(&y0, &self.mul(&q, &y1));
            y0 = std::mem::replace(&mut y1, ny);
        }
        let v = self.normal_unit(&r0);
        (self.mul(&r0, &v), self.mul(&x0, &v), self.mul(&y0, &v))
    }
}

pub trait Field: GcdDomain {
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

// ---------------------------------------------------------------------------
// ℤ

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IntegerRing;

impl Ring for IntegerRing {
    type Elem = Integer;

    fn zero(&self) -> Integer {
        Integer::zero()
    }
    fn one(&self) -> Integer {
        Integer::one()
    }
    fn is_zero(&self, a: &Integer) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Integer, b: &Integer) -> Integer {
        a + b
    }
    fn neg(&self, a: &Integer) -> Integer {
        -a
    }
    fn sub(&self, a: &Integer, b: &Integer) -> Integer {
        a - b
    }
    fn mul(&self, a: &Integer, b: &Integer) -> Integer {
        a * b
    }
    fn from_integer(&self, n: &Integer) -> Integer {
        n.clone()
    }
    fn pow(&self, a: &Integer, e: u64) -> Integer {
        num_traits::pow(a.clone(), e as usize)
    }
    fn divide(&self, a: &Integer, b: &Integer) -> Option<Integer> {
        if b.is_zero() {
            return None;
        }
        let (q, r) = a.div_rem(b);
        r.is_zero().then_some(q)
    }
    fn is_unit(&self, a: &Integer) -> bool {
        a.abs().is_one()
    }
    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::IntegerRing
    }
    fn render(&self, a: &Integer) -> String {
        a.to_string()
    }
    fn is_atomic(&self, a: &Integer) -> bool {
        !a.is_negative()
    }
}

impl GcdDomain for IntegerRing {
    fn gcd(&self, a: &Integer, b: &Integer) -> Integer {
        a.gcd(b)
    }
    fn normal_unit(&self, a: &Integer) -> Integer {
        if a.is_negative() {
            -Integer::one()
        } else {
            Integer::one()
        }
    }
    fn normalize(&self, a: &Integer) -> Integer {
        a.abs()
    }
}

impl EuclideanDomain for IntegerRing {
    fn div_rem(&self, a: &Integer, b: &Integer) -> (Integer, Integer) {
        assert!(!b.is_zero(), "division by zero");
        let r = a.mod_floor(&b.abs());
        let q = (a - &r) / b;
        (q, r)
    }
    fn ext_gcd(&self, a: &Integer, b: &Integer) -> (Integer, Integer, Integer) {
        arith::ext_gcd(a, b)
    }
}

// ---------------------------------------------------------------------------
// F_p

/// The prime field ℤ/pℤ for a word-sized prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 62 || !arith::is_prime(&Integer::from(p)) {
            return Err(Error::Precondition(format!("{p} is not a supported prime modulus")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, n: &Integer) -> u64 {
        n.mod_floor(&Integer::from(self.p)).to_u64().expect("reduced below p")
    }

    /// Least nonnegative residue as a signed integer lift.
    pub fn lift(&self, a: u64) -> Integer {
        Integer::from(a)
    }

    fn mul_mod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }
}

impl Ring for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mul_mod(*a, *b)
    }
    fn from_integer(&self, n: &Integer) -> u64 {
        self.reduce(n)
    }
    fn divide(&self, a: &u64, b: &u64) -> Option<u64> {
        (*b != 0).then(|| self.mul_mod(*a, self.inv(b)))
    }
    fn is_unit(&self, a: &u64) -> bool {
        *a != 0
    }
    fn is_field(&self) -> bool {
        true
    }
    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::PrimeField(Integer::from(self.p))
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn is_atomic(&self, _a: &u64) -> bool {
        true
    }
}

impl GcdDomain for PrimeField {
    fn gcd(&self, a: &u64, b: &u64) -> u64 {
        if *a == 0 && *b == 0 {
            0
        } else {
            1
        }
    }
    fn normal_unit(&self, a: &u64) -> u64 {
        if *a == 0 {
            1
        } else {
            self.inv(a)
        }
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        let mut acc = 1u64;
        let mut base = *a;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_mod(acc, base);
            }
            base = self.mul_mod(base, base);
            e >>= 1;
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Fraction fields

/// A reduced fraction `num / den` over a gcd domain; `den` is normalized.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Frac<E> {
    pub num: E,
    pub den: E,
}

/// ℚ, and the type of exact rational results.
pub type Rational = Frac<Integer>;

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Rational {
    pub fn new(num: Integer, den: Integer) -> Self {
        RationalField::default().fraction(&num, &den).expect("nonzero denominator")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FractionField<D> {
    base: D,
}

/// ℚ = Frac(ℤ).
pub type RationalField = FractionField<IntegerRing>;

impl<D: GcdDomain> FractionField<D> {
    pub fn new(base: D) -> Self {
        FractionField { base }
    }

    pub fn base(&self) -> &D {
        &self.base
    }

    pub fn embed(&self, a: &D::Elem) -> Frac<D::Elem> {
        Frac { num: a.clone(), den: self.base.one() }
    }

    /// `num / den` in lowest terms; `None` if `den` is zero.
    pub fn fraction(&self, num: &D::Elem, den: &D::Elem) -> Option<Frac<D::Elem>> {
        let b = &self.base;
        if b.is_zero(den) {
            return None;
        }
        if b.is_zero(num) {
            return Some(self.zero());
        }
        let g = b.gcd(num, den);
        let n = b.divide(num, &g).expect("gcd divides");
        let d = b.divide(den, &g).expect("gcd divides");
        let v = b.normal_unit(&d);
        Some(Frac { num: b.mul(&n, &v), den: b.mul(&d, &v) })
    }

    /// The element as a base-ring element, if its denominator is one.
    pub fn as_integral(&self, a: &Frac<D::Elem>) -> Option<D::Elem> {
        self.base.is_one(&a.den).then(|| a.num.clone())
    }
}

impl<D: GcdDomain> Ring for FractionField<D> {
    type Elem = Frac<D::Elem>;

    fn zero(&self) -> Self::Elem {
        Frac { num: self.base.zero(), den: self.base.one() }
    }
    fn one(&self) -> Self::Elem {
        Frac { num: self.base.one(), den: self.base.one() }
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.num)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.base;
        if r.is_one(&a.den) && r.is_one(&b.den) {
            return Frac { num: r.add(&a.num, &b.num), den: r.one() };
        }
        let num = r.add(&r.mul(&a.num, &b.den), &r.mul(&b.num, &a.den));
        self.fraction(&num, &r.mul(&a.den, &b.den)).expect("nonzero denominator")
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Frac { num: self.base.neg(&a.num), den: a.den.clone() }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.base;
        if r.is_one(&a.den) && r.is_one(&b.den) {
            return Frac { num: r.mul(&a.num, &b.num), den: r.one() };
        }
        self.fraction(&r.mul(&a.num, &b.num), &r.mul(&a.den, &b.den)).expect("nonzero denominator")
    }
    fn from_integer(&self, n: &Integer) -> Self::Elem {
        self.embed(&self.base.from_integer(n))
    }
    fn divide(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(b) {
            return None;
        }
        Some(self.mul(a, &self.inv(b)))
    }
    fn is_unit(&self, a: &Self::Elem) -> bool {
        !self.is_zero(a)
    }
    fn is_field(&self) -> bool {
        true
    }
    fn descriptor(&self) -> RingDescriptor {
        match self.base.descriptor() {
            RingDescriptor::IntegerRing => RingDescriptor::RationalField,
            d => RingDescriptor::FractionField(Box::new(d)),
        }
    }
    fn render(&self, a: &Self::Elem) -> String {
        let b = &self.base;
        if b.is_one(&a.den) {
            return b.render(&a.num);
        }
        let wrap = |s: String, atomic: bool| if atomic { s } else { format!("({s})") };
        format!(
            "{}/{}",
            wrap(b.render(&a.num), b.is_atomic(&a.num) || b.is_atomic(&b.neg(&a.num))),
            wrap(b.render(&a.den), b.is_atomic(&a.den))
        )
    }
    fn is_atomic(&self, a: &Self::Elem) -> bool {
        self.base.is_one(&a.den) && self.base.is_atomic(&a.num)
    }
}

impl<D: GcdDomain> GcdDomain for FractionField<D> {
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if self.is_zero(a) && self.is_zero(b) {
            self.zero()
        } else {
            self.one()
        }
    }
    fn normal_unit(&self, a: &Self::Elem) -> Self::Elem {
        if self.is_zero(a) {
            self.one()
        } else {
            self.inv(a)
        }
    }
}

impl<D: GcdDomain> Field for FractionField<D> {
    fn inv(&self, a: &Self::Elem) -> Self::Elem {
        assert!(!self.is_zero(a), "inverse of zero");
        self.fraction(&a.den, &a.num).expect("nonzero numerator")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let q = RationalField::default();
        let a = q.fraction(&Integer::from(6), &Integer::from(-4)).unwrap();
        assert_eq!(a, Rational { num: Integer::from(-3), den: Integer::from(2) });
        assert_eq!(q.render(&a), "-3/2");
        let s = q.add(&a, &q.from_i64(2));
        assert_eq!(s.to_string(), "1/2");
        assert!(q.fraction(&Integer::one(), &Integer::zero()).is_none());
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(101).unwrap();
        for a in 1..101u64 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert!(PrimeField::new(91).is_err());
        assert_eq!(f.from_i64(-1), 100);
    }

    #[test]
    fn integer_division_has_nonnegative_remainder() {
        let z = IntegerRing;
        let (q, r) = z.div_rem(&Integer::from(-7), &Integer::from(3));
        assert_eq!((q, r), (Integer::from(-3), Integer::from(2)));
        let (q, r) = z.div_rem(&Integer::from(7), &Integer::from(-3));
        assert_eq!((q, r), (Integer::from(-2), Integer::from(1)));
    }
}
