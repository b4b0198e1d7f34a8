//! Exact arithmetic for finding polynomial values that are coprime, with
//! certificates: Bézout denominators, local obstructions, coprime witnesses
//! over ℤ, F_p[u], ℚ[u] and ℤ[u], and integral Hilbert specializations.

pub mod arith;
pub mod bezout;
pub mod coprime;
pub mod error;
pub mod hilbert;
pub mod interrupt;
pub mod limits;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use limits::Limits;
pub use poly::{Poly, PolyRing};
pub use ring::{EuclideanDomain, Field, GcdDomain, Integer, IntegerRing, PrimeField, Rational, RationalField, Ring};
