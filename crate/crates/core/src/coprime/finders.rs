use num_traits::{One, Zero};

use super::{
    check_av2_by_content, require_at_least_two, scan_prime, CoprimeWitness, Outcome, ScanDomain,
};
use crate::arith::crt_in;
use crate::bezout::{bezout_delta, require_coprime_over_fraction_field};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poly::{fp_polys_of_degree_below, Poly, PolyRing};
use crate::ring::{GcdDomain, Integer, IntegerRing, RationalField, Ring};

/// Evaluate at `m` and record the normalized gcd of the values.
pub fn verify_witness<R: GcdDomain>(
    ring: &PolyRing<R>,
    ps: &[Poly<R::Elem>],
    m: R::Elem,
    method: &'static str,
) -> CoprimeWitness<R::Elem> {
    let base = ring.base();
    let values: Vec<R::Elem> = ps.iter().map(|p| ring.eval(p, &m)).collect();
    let gcd = base.gcd_all(values.iter());
    let verified = base.is_unit(&gcd);
    CoprimeWitness { m, values, gcd, integer_content: None, verified, method }
}

/// Over ℤ[u] the gcd is also reported through the integer content of the
/// values; a unit gcd means unit content and coprimality over ℚ[u].
fn verify_witness_zu(
    ring: &PolyRing<PolyRing<IntegerRing>>,
    ps: &[Poly<Poly<Integer>>],
    m: Poly<Integer>,
    method: &'static str,
) -> CoprimeWitness<Poly<Integer>> {
    let mut w = verify_witness(ring, ps, m, method);
    let zu = ring.base();
    w.integer_content = Some(IntegerRing.gcd_all(w.values.iter().map(|v| zu.content(v)).collect::<Vec<_>>().iter()));
    w
}

/// Over a PID: pick, for each prime `p | δ`, a residue where some `Pᵢ`
/// survives, and glue the residues with the Chinese remainder theorem.
pub fn find_coprime_pid<D: ScanDomain>(
    ring: &PolyRing<D>,
    ps: &[Poly<D::Elem>],
    limits: &Limits,
) -> Result<CoprimeWitness<D::Elem>> {
    require_at_least_two(ps)?;
    let base = ring.base();
    let delta = bezout_delta(ring, ps)?.delta;
    if base.is_unit(&delta) {
        return Ok(verify_witness(ring, ps, base.zero(), "unit-delta"));
    }
    let mut congruences = Vec::new();
    for p in base.prime_divisors(&delta, limits)? {
        match scan_prime(ring, ps, &p).outcome {
            Outcome::Survivor { residue, .. } => congruences.push((residue, p)),
            _ => return Err(Error::Av2Violation { prime: base.render(&p) }),
        }
    }
    let (m, _) = crt_in(base, &congruences)?;
    let w = verify_witness(ring, ps, m, "crt");
    assert!(w.verified, "CRT witness must have unit gcd");
    Ok(w)
}

/// 0, 1, −1, 2, −2, …
pub(crate) fn integer_scan() -> impl Iterator<Item = Integer> {
    let mut k = Integer::zero();
    std::iter::from_fn(move || {
        let out = k.clone();
        k = if k > Integer::zero() { -k.clone() } else { Integer::one() - &k };
        Some(out)
    })
}

/// Over ℚ[u]: try the constants 0, 1, −1, 2, … A prime `π | δ` can reject at
/// most `deg_y Pᵢ` of them (for any `Pᵢ` not divisible by `π`), and there are
/// at most `deg δ` such primes, which bounds the scan.
pub fn find_coprime_infinite_field(
    ring: &PolyRing<PolyRing<RationalField>>,
    ps: &[Poly<Poly<crate::ring::Rational>>],
    limits: &Limits,
) -> Result<CoprimeWitness<Poly<crate::ring::Rational>>> {
    require_at_least_two(ps)?;
    let qu = ring.base();
    let av = check_av2_by_content(ring, ps, limits)?;
    if let Some(p) = av.failing_prime {
        return Err(Error::Av2Violation { prime: qu.render(&p) });
    }
    let delta = bezout_delta(ring, ps)?.delta;
    if qu.is_unit(&delta) {
        return Ok(verify_witness(ring, ps, qu.zero(), "unit-delta"));
    }
    let max_y = ps.iter().map(|p| p.degree().unwrap()).max().unwrap();
    let bound = delta.degree().unwrap() * max_y + 1;
    for c in integer_scan().take(bound) {
        let w = verify_witness(ring, ps, qu.from_integer(&c), "constant-scan");
        if w.verified {
            return Ok(w);
        }
    }
    panic!("constant scan exceeded its termination bound {bound}");
}

fn signed_range(h: i64) -> impl Iterator<Item = i64> {
    (1..=h).flat_map(|k| [k, -k])
}

/// `λ₀ + λ₁·u^(d+1) + λ₂·u^(d+2)` with nonzero λ and `λ₂ ≡ 1 (mod λ₁)`, by
/// increasing height `max |λⱼ|`.
fn structured_candidates(zu: &PolyRing<IntegerRing>, d: usize) -> impl Iterator<Item = Poly<Integer>> + '_ {
    (1i64..).flat_map(move |h| {
        let mut batch = Vec::new();
        for l1 in signed_range(h) {
            for l2 in signed_range(h) {
                if (l2 - 1) % l1 != 0 {
                    continue;
                }
                for l0 in signed_range(h) {
                    if l0.abs().max(l1.abs()).max(l2.abs()) != h {
                        continue;
                    }
                    let mut c = vec![Integer::zero(); d + 3];
                    c[0] = l0.into();
                    c[d + 1] = l1.into();
                    c[d + 2] = l2.into();
                    batch.push(zu.from_coeffs(c));
                }
            }
        }
        batch
    })
}

/// Odometer over `[−h, h]^len`.
fn coefficient_vectors(len: usize, h: i64) -> impl Iterator<Item = Vec<i64>> {
    let mut cur = vec![-h; len];
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = cur.clone();
        done = true;
        for x in cur.iter_mut() {
            if *x < h {
                *x += 1;
                done = false;
                break;
            }
            *x = -h;
        }
        Some(out)
    })
}

/// Integer polynomials of degree `≤ max_deg` and height `≤ height`, ordered
/// by degree, then height.
pub fn int_poly_box(zu: &PolyRing<IntegerRing>, max_deg: usize, height: i64) -> impl Iterator<Item = Poly<Integer>> + '_ {
    std::iter::once(Poly::zero()).chain((0..=max_deg).flat_map(move |d| {
        (1..=height).flat_map(move |h| {
            coefficient_vectors(d + 1, h)
                .filter(move |c| c[d] != 0 && c.iter().any(|x| x.abs() == h))
                .map(|c| zu.from_i64s(&c))
        })
    }))
}

/// All `m(u)` with `max(deg m, height m) = b` for `b = 0, 1, 2, …`.
fn exhaustive_candidates(zu: &PolyRing<IntegerRing>) -> impl Iterator<Item = Poly<Integer>> + '_ {
    std::iter::once(Poly::zero()).chain((1usize..).flat_map(move |b| {
        let h = b as i64;
        coefficient_vectors(b + 1, h)
            .filter(move |c| c.iter().any(|x| x.abs() == h) || c[b] != 0)
            .map(|c| zu.from_i64s(&c))
    }))
}

/// Over ℤ[u]: search `m(u)` of the shape from the two-monomial construction,
/// verifying each candidate directly; fall back to exhaustive enumeration.
pub fn find_coprime_polyring(
    ring: &PolyRing<PolyRing<IntegerRing>>,
    ps: &[Poly<Poly<Integer>>],
    limits: &Limits,
) -> Result<CoprimeWitness<Poly<Integer>>> {
    require_at_least_two(ps)?;
    require_coprime_over_fraction_field(ring, ps)?;
    let zu = ring.base();
    let av = check_av2_by_content(ring, ps, limits)?;
    if let Some(p) = av.failing_prime {
        return Err(Error::Av2Violation { prime: zu.render(&p) });
    }
    let delta = bezout_delta(ring, ps)?.delta;
    if zu.is_unit(&delta) {
        return Ok(verify_witness_zu(ring, ps, zu.zero(), "unit-delta"));
    }
    let d = ps.iter().flat_map(|p| p.coeffs()).filter_map(Poly::degree).max().unwrap_or(0);
    let budget = limits.polyring_candidates as usize;
    for m in structured_candidates(zu, d).take(budget) {
        let w = verify_witness_zu(ring, ps, m, "structured");
        if w.verified {
            return Ok(w);
        }
    }
    for m in exhaustive_candidates(zu).take(budget) {
        let w = verify_witness_zu(ring, ps, m, "exhaustive");
        if w.verified {
            return Ok(w);
        }
    }
    Err(Error::BudgetExceeded(format!("no ℤ[u] witness among {budget} structured and {budget} exhaustive candidates")))
}

/// `lo, lo + 1, …, hi`.
pub fn integer_box(lo: i64, hi: i64) -> impl Iterator<Item = Integer> {
    (lo..=hi).map(Integer::from)
}

/// All polynomials over F_p of degree `≤ max_deg`, in counting order.
pub fn fp_poly_box(p: u64, max_deg: usize) -> impl Iterator<Item = Poly<u64>> {
    fp_polys_of_degree_below(p, max_deg + 1)
}

/// First candidate, in the given order, whose values have unit gcd.
pub fn brute_force_coprime<R: GcdDomain>(
    ring: &PolyRing<R>,
    ps: &[Poly<R::Elem>],
    candidates: impl IntoIterator<Item = R::Elem>,
) -> Option<CoprimeWitness<R::Elem>> {
    candidates.into_iter().map(|m| verify_witness(ring, ps, m, "brute-force")).find(|w| w.verified)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PrimeField;

    #[test]
    fn scan_order() {
        let v: Vec<Integer> = integer_scan().take(5).collect();
        assert_eq!(v, [0, 1, -1, 2, -2].map(Integer::from));
        let zu = PolyRing::new(IntegerRing, "u");
        // degree ≤ 1, height ≤ 1: 0, ±1, then the six with a nonzero u-coefficient
        assert_eq!(int_poly_box(&zu, 1, 1).count(), 9);
        assert_eq!(coefficient_vectors(2, 1).count(), 9);
    }

    #[test]
    fn pid_examples() {
        let l = Limits::default();
        let zy = PolyRing::new(IntegerRing, "y");
        let w = find_coprime_pid(&zy, &[zy.from_i64s(&[0, 1]), zy.from_i64s(&[2, 1])], &l).unwrap();
        assert_eq!((w.m.clone(), w.gcd.clone()), (Integer::from(1), Integer::from(1)));
        let w = find_coprime_pid(&zy, &[zy.from_i64s(&[1, 0, 1]), zy.gen()], &l).unwrap();
        assert_eq!(w.m, Integer::from(0));
        assert_eq!(w.values, vec![Integer::from(1), Integer::from(0)]);
        let e = find_coprime_pid(&zy, &[zy.from_i64s(&[2, -1, 1]), zy.from_i64s(&[0, -1, 1])], &l).unwrap_err();
        assert_eq!(e.failing_prime(), Some("2"));

        let f2u = PolyRing::new(PrimeField::new(2).unwrap(), "u");
        let ry = PolyRing::new(f2u.clone(), "y");
        let w = find_coprime_pid(&ry, &[ry.from_coeffs(vec![f2u.gen(), f2u.one()]), ry.gen()], &l).unwrap();
        assert_eq!(w.m, f2u.one());
        assert_eq!(w.values, vec![f2u.from_i64s(&[1, 1]), f2u.one()]);
    }

    #[test]
    fn infinite_field_examples() {
        let l = Limits::default();
        let qu = PolyRing::new(RationalField::default(), "u");
        let qy = PolyRing::new(qu.clone(), "y");
        let lin = |c: &[i64]| qy.from_coeffs(vec![qu.from_i64s(c), qu.one()]);
        let m = |a: &[i64], b: &[i64]| find_coprime_infinite_field(&qy, &[lin(a), lin(b)], &l).unwrap().m;
        assert_eq!(m(&[0, 1], &[0, -1]), qu.one());
        assert_eq!(m(&[0], &[0, 1]), qu.one());
        assert_eq!(m(&[0, -1], &[-1, -1]), qu.zero());
    }

    #[test]
    fn polyring_examples() {
        let l = Limits::default();
        let zu = PolyRing::new(IntegerRing, "u");
        let ry = PolyRing::new(zu.clone(), "y");
        let lin = |c: &[i64]| ry.from_coeffs(vec![zu.from_i64s(c), zu.one()]);
        let w = find_coprime_polyring(&ry, &[lin(&[0, 1]), lin(&[0, -1])], &l).unwrap();
        assert!(w.verified);
        assert_eq!(w.integer_content, Some(Integer::one()));
        assert_eq!(w.m, zu.from_i64s(&[1, 0, 1, 1]));
        let w = find_coprime_polyring(&ry, &[lin(&[0]), lin(&[2])], &l).unwrap();
        assert!(w.verified);
        let shared = lin(&[0, -1]);
        let a = ry.mul(&shared, &lin(&[1]));
        let b = ry.mul(&shared, &lin(&[3]));
        assert!(matches!(find_coprime_polyring(&ry, &[a, b], &l), Err(Error::CommonFactor(_))));
    }

    #[test]
    fn brute_force_examples() {
        let zy = PolyRing::new(IntegerRing, "y");
        let w = brute_force_coprime(&zy, &[zy.from_i64s(&[0, 1]), zy.from_i64s(&[2, 1])], integer_box(0, 10));
        assert_eq!(w.unwrap().m, Integer::from(1));
        let none = brute_force_coprime(&zy, &[zy.from_i64s(&[2, -1, 1]), zy.from_i64s(&[0, -1, 1])], integer_box(-50, 50));
        assert!(none.is_none());

        let f2u = PolyRing::new(PrimeField::new(2).unwrap(), "u");
        let ry = PolyRing::new(f2u.clone(), "y");
        let mut c = vec![Poly::zero(); 9];
        c[0] = f2u.monomial(1, 3);
        c[8] = f2u.one();
        let w = brute_force_coprime(&ry, &[ry.from_coeffs(c), ry.constant(f2u.gen())], fp_poly_box(2, 2));
        assert_eq!(w.unwrap().m, f2u.one());
    }
}
