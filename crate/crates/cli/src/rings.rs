//! Ring selectors and the nested polynomial rings they stand for.
//!
//! The selector names the coefficient ring `Z` of `Z[y]`. Variables nest
//! innermost first: `u`, then `t`, then `y`. `t` appears only for the
//! specialization commands, where `Z` is ℤ (Hilbert) or ℤ[u], F_p[u]
//! (polyring scans).

use std::fmt;
use std::str::FromStr;

use schinzel::{Integer, IntegerRing, Poly, PolyRing, PrimeField, RationalField, Ring};

use crate::parse::{parse_expr, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingSel {
    Z,
    Qu,
    Fpu(u64),
    Zu,
}

impl FromStr for RingSel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        match s {
            "Z" | "Z[t]" => return Ok(RingSel::Z),
            "Q[u]" => return Ok(RingSel::Qu),
            "Z[u]" => return Ok(RingSel::Zu),
            _ => {}
        }
        let p = s
            .strip_prefix("Fp[u]:")
            .ok_or_else(|| format!("unknown ring '{s}' (expected Z, Q[u], Fp[u]:p or Z[u])"))?;
        let p: u64 = p.parse().map_err(|_| format!("bad characteristic in '{s}'"))?;
        PrimeField::new(p).map_err(|e| e.to_string())?;
        Ok(RingSel::Fpu(p))
    }
}

impl fmt::Display for RingSel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSel::Z => write!(f, "Z"),
            RingSel::Qu => write!(f, "Q[u]"),
            RingSel::Fpu(p) => write!(f, "Fp[u]:{p}"),
            RingSel::Zu => write!(f, "Z[u]"),
        }
    }
}

pub type Zy = PolyRing<IntegerRing>;
pub type Over<B> = PolyRing<PolyRing<B>>;
pub type Over2<B> = PolyRing<PolyRing<PolyRing<B>>>;

pub fn zy() -> Zy {
    PolyRing::new(IntegerRing, "y")
}

/// `B[v][y]`.
pub fn over<B: Ring>(base: B, v: &str) -> Over<B> {
    PolyRing::new(PolyRing::new(base, v), "y")
}

/// `B[u][t][y]`.
pub fn over2<B: Ring>(base: B) -> Over2<B> {
    PolyRing::new(PolyRing::new(PolyRing::new(base, "u"), "t"), "y")
}

pub fn qu() -> Over<RationalField> {
    over(RationalField::default(), "u")
}

pub fn fpu(p: u64) -> Over<PrimeField> {
    over(PrimeField::new(p).expect("validated characteristic"), "u")
}

pub fn zu() -> Over<IntegerRing> {
    over(IntegerRing, "u")
}

/// Rings whose variables the parser can name.
pub trait Named: Ring {
    fn image(&self, v: char) -> Option<Self::Elem>;
}

impl Named for IntegerRing {
    fn image(&self, _v: char) -> Option<Integer> {
        None
    }
}

impl Named for PrimeField {
    fn image(&self, _v: char) -> Option<u64> {
        None
    }
}

impl Named for RationalField {
    fn image(&self, _v: char) -> Option<schinzel::Rational> {
        None
    }
}

/// Its own variable maps to the generator; anything else is looked up in
/// the coefficients and embedded as a constant.
impl<R: Named> Named for PolyRing<R> {
    fn image(&self, v: char) -> Option<Poly<R::Elem>> {
        if self.var().chars().eq(std::iter::once(v)) {
            return Some(self.gen());
        }
        self.base().image(v).map(|c| self.constant(c))
    }
}

pub fn ring_name<R: Ring>(ring: &R) -> String {
    ring.descriptor().to_string()
}

pub fn parse_in<R: Named>(ring: &R, text: &str) -> Result<R::Elem, ParseError> {
    parse_expr(text)?.eval(ring, &ring_name(ring), &|v| ring.image(v))
}

/// Random elements, for parser round trips.
pub trait Sample: Ring {
    fn sample(&self, g: &mut impl rand::Rng, size: usize) -> Self::Elem;
}

impl Sample for IntegerRing {
    fn sample(&self, g: &mut impl rand::Rng, size: usize) -> Integer {
        let h = 10i64.pow(size.min(12) as u32);
        if g.gen_bool(0.05) {
            // occasionally beyond 64 bits
            return Integer::from(g.gen_range(-h..=h)) * Integer::from(u64::MAX) + Integer::from(g.gen_range(0..h));
        }
        Integer::from(g.gen_range(-h..=h))
    }
}

impl Sample for PrimeField {
    fn sample(&self, g: &mut impl rand::Rng, _size: usize) -> u64 {
        g.gen_range(0..self.modulus())
    }
}

impl Sample for RationalField {
    fn sample(&self, g: &mut impl rand::Rng, size: usize) -> schinzel::Rational {
        let num = IntegerRing.sample(g, size);
        let den = Integer::from(g.gen_range(1..=12));
        schinzel::Rational::new(num, den)
    }
}

impl<R: Sample> Sample for PolyRing<R> {
    fn sample(&self, g: &mut impl rand::Rng, size: usize) -> Poly<R::Elem> {
        let deg = g.gen_range(0..=size.min(6));
        let coeffs = (0..=deg)
            .map(|_| if g.gen_bool(0.3) { self.base().zero() } else { self.base().sample(g, size.saturating_sub(1).max(1)) })
            .collect();
        self.from_coeffs(coeffs)
    }
}
