//! Random instance generators and slow, independent oracles shared by the
//! integration suites.

#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use schinzel::poly::Poly;
use schinzel::{Integer, IntegerRing, PolyRing, PrimeField};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn zy() -> PolyRing<IntegerRing> {
    PolyRing::new(IntegerRing, "y")
}

pub fn int(x: i64) -> Integer {
    Integer::from(x)
}

/// Integer polynomial of exact degree `deg` with coefficients in `[-h, h]`.
pub fn random_int_poly(r: &mut ChaCha8Rng, ring: &PolyRing<IntegerRing>, deg: usize, h: i64) -> Poly<Integer> {
    let mut c: Vec<i64> = (0..=deg).map(|_| r.gen_range(-h..=h)).collect();
    while c[deg] == 0 {
        c[deg] = r.gen_range(-h..=h);
    }
    ring.from_i64s(&c)
}

pub fn random_fp_poly(r: &mut ChaCha8Rng, ring: &PolyRing<PrimeField>, deg: usize) -> Poly<u64> {
    let p = ring.base().modulus();
    let mut c: Vec<u64> = (0..=deg).map(|_| r.gen_range(0..p)).collect();
    c[deg] = r.gen_range(1..p);
    ring.from_coeffs(c)
}

/// Determinant by Laplace expansion along rows, memoized on the set of
/// columns already used.
pub fn laplace_det(m: &[Vec<Integer>]) -> Integer {
    fn go(m: &[Vec<Integer>], row: usize, used: u32, memo: &mut HashMap<u32, Integer>) -> Integer {
        if row == m.len() {
            return Integer::one();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut total = Integer::zero();
        let mut sign = 1;
        for col in 0..m.len() {
            if used & (1 << col) != 0 {
                continue;
            }
            if !m[row][col].is_zero() {
                let minor = go(m, row + 1, used | (1 << col), memo);
                total += &m[row][col] * minor * sign;
            }
            sign = -sign;
        }
        memo.insert(used, total.clone());
        total
    }
    go(m, 0, 0, &mut HashMap::new())
}

/// Sylvester matrix of `p` (degree m) and `q` (degree n), m + n rows.
pub fn sylvester(p: &[Integer], q: &[Integer]) -> Vec<Vec<Integer>> {
    let (m, n) = (p.len() - 1, q.len() - 1);
    let size = m + n;
    let mut rows = Vec::new();
    for i in 0..n {
        let mut row = vec![Integer::zero(); size];
        for (j, c) in p.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Integer::zero(); size];
        for (j, c) in q.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

pub fn sylvester_resultant(p: &Poly<Integer>, q: &Poly<Integer>) -> Integer {
    laplace_det(&sylvester(p.coeffs(), q.coeffs()))
}

/// Horner evaluation written out independently of the library.
pub fn eval_int(p: &Poly<Integer>, m: &Integer) -> Integer {
    p.coeffs().iter().rev().fold(Integer::zero(), |acc, c| acc * m + c)
}

pub fn gcd_ints<'a>(xs: impl IntoIterator<Item = &'a Integer>) -> Integer {
    xs.into_iter().fold(Integer::zero(), |acc, x| acc.gcd(x))
}

/// Naive exact division of integer polynomials.
pub fn int_poly_divides(d: &Poly<Integer>, p: &Poly<Integer>) -> bool {
    let d = d.coeffs();
    let mut r: Vec<Integer> = p.coeffs().to_vec();
    if d.is_empty() {
        return r.is_empty();
    }
    let dl = d.len();
    let lead = &d[dl - 1];
    while r.len() >= dl {
        let top = r.last().unwrap().clone();
        if !(&top % lead).is_zero() {
            return false;
        }
        let q = &top / lead;
        let shift = r.len() - dl;
        for (i, c) in d.iter().enumerate() {
            r[shift + i] -= &q * c;
        }
        r.pop();
    }
    r.iter().all(Zero::is_zero)
}

fn signed_divisors(n: &Integer) -> Vec<Integer> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = Integer::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let e = &n / &d;
            if e != d {
                out.push(e);
            }
        }
        d += 1;
    }
    out.iter().flat_map(|d| [d.clone(), -d.clone()]).collect()
}

/// Lagrange interpolation through `(xᵢ, vᵢ)`; `None` unless every
/// coefficient is an integer.
fn interpolate(xs: &[i64], vs: &[Integer]) -> Option<Vec<Integer>> {
    let k = xs.len();
    // numerators over the common denominator ∏_{i<j} (x_j − x_i) per basis
    let mut num = vec![Integer::zero(); k];
    let mut den_total = Integer::one();
    let mut parts = Vec::new();
    for i in 0..k {
        let mut basis = vec![Integer::one()];
        let mut den = Integer::one();
        for (j, &xj) in xs.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![Integer::zero(); basis.len() + 1];
            for (e, c) in basis.iter().enumerate() {
                next[e + 1] += c;
                next[e] -= c * xj;
            }
            basis = next;
            den *= xs[i] - xj;
        }
        parts.push((basis, den.clone()));
        den_total = den_total.lcm(&den);
    }
    for (i, (basis, den)) in parts.iter().enumerate() {
        let scale = &den_total / den;
        for (e, c) in basis.iter().enumerate() {
            num[e] += c * &vs[i] * &scale;
        }
    }
    num.iter().map(|c| (c % &den_total).is_zero().then(|| c / &den_total)).collect()
}

/// Exhaustive search for a factor of degree `1..=deg/2` of a primitive
/// `p ∈ ℤ[y]`: every candidate is pinned by its values at `k + 1` points,
/// which must divide the values of `p` there.
pub fn naive_integer_factor(p: &Poly<Integer>) -> Option<Poly<Integer>> {
    let zy = zy();
    let deg = p.degree()?;
    if deg < 2 {
        return None;
    }
    let points: Vec<i64> = {
        let mut pts: Vec<i64> = (-6..=6).collect();
        pts.sort_by_key(|&x| {
            let v = eval_int(p, &int(x));
            if v.is_zero() { 0 } else { signed_divisors(&v).len() }
        });
        pts
    };
    for &x in &points {
        if eval_int(p, &int(x)).is_zero() {
            return Some(zy.from_i64s(&[-x, 1]));
        }
    }
    for k in 1..=deg / 2 {
        let xs = &points[..=k];
        let lists: Vec<Vec<Integer>> = xs.iter().map(|&x| signed_divisors(&eval_int(p, &int(x)))).collect();
        let mut idx = vec![0usize; k + 1];
        loop {
            let vs: Vec<Integer> = idx.iter().zip(&lists).map(|(&i, l)| l[i].clone()).collect();
            if let Some(c) = interpolate(xs, &vs) {
                let f = zy.from_coeffs(c);
                if f.degree() == Some(k) && int_poly_divides(&f, p) {
                    return Some(f);
                }
            }
            let mut pos = 0;
            loop {
                if pos > k {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < lists[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos > k {
                break;
            }
        }
    }
    None
}

/// Every monic polynomial over F_p of degree `1..=deg/2` is tried as a divisor.
pub fn fp_has_proper_factor(ring: &PolyRing<PrimeField>, f: &Poly<u64>) -> bool {
    let p = ring.base().modulus();
    let deg = f.degree().unwrap_or(0);
    for d in 1..=deg / 2 {
        let total = p.pow(d as u32);
        for n in 0..total {
            let mut c = Vec::with_capacity(d + 1);
            let mut x = n;
            for _ in 0..d {
                c.push(x % p);
                x /= p;
            }
            c.push(1);
            let g = ring.from_coeffs(c);
            if ring.div_rem(f, &g).unwrap().1.is_zero() {
                return true;
            }
        }
    }
    false
}

/// Monic irreducibles over F_p found by the brute-force test above.
pub fn is_fp_irreducible(ring: &PolyRing<PrimeField>, f: &Poly<u64>) -> bool {
    f.degree().unwrap_or(0) >= 1 && !fp_has_proper_factor(ring, f)
}

pub fn is_int_irreducible_naive(p: &Poly<Integer>) -> bool {
    let zy = zy();
    p.degree().unwrap_or(0) >= 1 && zy.content(p).is_one() && naive_integer_factor(p).is_none()
}

pub fn sieve(n: usize) -> Vec<bool> {
    let mut s = vec![true; n + 1];
    s[0] = false;
    if n >= 1 {
        s[1] = false;
    }
    let mut i = 2;
    while i * i <= n {
        if s[i] {
            let mut j = i * i;
            while j <= n {
                s[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    s
}

pub fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
