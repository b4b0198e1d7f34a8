use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Poly, PolyRing};
use crate::arith::{factorize, FactorBudget};
use crate::error::{Error, Result};
use crate::ring::{GcdDomain, Integer, IntegerRing, PrimeField, Ring};

/// `unit · ∏ fᵢ^eᵢ` with each `fᵢ` normalized (monic over F_p, positive
/// leading coefficient over ℤ) and irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<E> {
    pub unit: E,
    pub factors: Vec<(Poly<E>, u32)>,
}

impl<E: Clone + PartialEq + Eq + std::fmt::Debug> Factorization<E> {
    pub fn product<R: Ring<Elem = E>>(&self, ring: &PolyRing<R>) -> Poly<E> {
        self.factors
            .iter()
            .fold(ring.constant(self.unit.clone()), |acc, (f, e)| ring.mul(&acc, &ring.pow(f, *e as u64)))
    }

    /// Whether the factorization is a single irreducible to the first power.
    pub fn is_irreducible(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    fn sort_and_merge(factors: Vec<Poly<E>>, key: impl Fn(&Poly<E>) -> Vec<Integer>) -> Vec<(Poly<E>, u32)> {
        let mut keyed: Vec<(Vec<Integer>, Poly<E>)> = factors.into_iter().map(|f| (key(&f), f)).collect();
        keyed.sort_by(|a, b| a.1.coeffs.len().cmp(&b.1.coeffs.len()).then_with(|| a.0.cmp(&b.0)));
        let mut out: Vec<(Poly<E>, u32)> = Vec::new();
        for (_, f) in keyed {
            match out.last_mut() {
                Some((g, e)) if *g == f => *e += 1,
                _ => out.push((f, 1)),
            }
        }
        out
    }
}

/// All polynomials over F_p of degree `< d` (including zero), in counting order.
pub fn fp_polys_of_degree_below(p: u64, d: usize) -> impl Iterator<Item = Poly<u64>> {
    let total = (p as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    let mut digits = vec![0u64; d];
    let mut first = true;
    let mut produced = 0u128;
    std::iter::from_fn(move || {
        if produced >= total {
            return None;
        }
        if !first {
            for x in digits.iter_mut() {
                *x += 1;
                if *x < p {
                    break;
                }
                *x = 0;
            }
        }
        first = false;
        produced += 1;
        let mut c = digits.clone();
        while c.last() == Some(&0) {
            c.pop();
        }
        Some(Poly { coeffs: c })
    })
}

pub(crate) fn monic_of_degree(p: u64, d: usize) -> impl Iterator<Item = Poly<u64>> {
    fp_polys_of_degree_below(p, d).map(move |low| {
        let mut c = low.coeffs;
        c.resize(d, 0);
        c.push(1);
        Poly { coeffs: c }
    })
}

fn powmod(ring: &PolyRing<PrimeField>, a: &Poly<u64>, mut e: u64, m: &Poly<u64>) -> Poly<u64> {
    let rem = |x: &Poly<u64>| ring.div_rem(x, m).expect("field").1;
    let mut base = rem(a);
    let mut acc = rem(&ring.one());
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&ring.mul(&acc, &base));
        }
        e >>= 1;
        if e > 0 {
            base = rem(&ring.mul(&base, &base));
        }
    }
    acc
}

/// Factor over F_p by trial division with monic candidates of increasing
/// degree. Before enumerating degree `d`, `gcd(f, x^(p^d) − x)` tells whether
/// any degree-`d` factor is present, so empty degrees cost nothing. `budget`
/// bounds the number of candidate divisors tried.
pub fn factor_over_prime_field(ring: &PolyRing<PrimeField>, f: &Poly<u64>, budget: u64) -> Result<Factorization<u64>> {
    let Some(_) = f.degree() else {
        return Err(Error::Precondition("cannot factor the zero polynomial".into()));
    };
    let field = ring.base();
    let p = field.modulus();
    let unit = *f.lead().unwrap();
    let mut g = ring.monic(f);
    let mut found: Vec<Poly<u64>> = Vec::new();
    let mut spent = 0u64;
    let x = ring.gen();
    let mut xq = x.clone();
    let mut d = 1usize;
    while 2 * d <= g.degree().unwrap() {
        xq = powmod(ring, &xq, p, &g);
        let mut block = ring.gcd(&g, &ring.sub(&xq, &x));
        if block.degree() == Some(0) {
            d += 1;
            continue;
        }
        for c in monic_of_degree(p, d) {
            if block.degree() == Some(0) {
                break;
            }
            spent += 1;
            if spent > budget {
                return Err(Error::BudgetExceeded(format!("F_{p} trial division exceeded {budget} candidates")));
            }
            let Some(q) = ring.divide(&block, &c) else { continue };
            block = q;
            while let Some(q) = ring.divide(&g, &c) {
                g = q;
                found.push(c.clone());
            }
        }
        xq = ring.div_rem(&xq, &g).expect("field").1;
        d += 1;
    }
    if g.degree().unwrap() >= 1 {
        found.push(g);
    }
    let factors = Factorization::sort_and_merge(found, |f| f.coeffs.iter().map(|&c| Integer::from(c)).collect());
    Ok(Factorization { unit, factors })
}

/// Effort bounds for [`kronecker_factor`].
#[derive(Clone, Copy, Debug)]
pub struct KroneckerConfig {
    pub degree_cap: usize,
    /// Search nodes (partial value assignments) across the whole run.
    pub node_budget: u64,
    /// Used when factoring sample values into divisor lists.
    pub value_budget: FactorBudget,
}

impl Default for KroneckerConfig {
    fn default() -> Self {
        KroneckerConfig {
            degree_cap: 8,
            node_budget: 5_000_000,
            value_budget: FactorBudget { trial_limit: 20_000, rho_iterations: 200_000 },
        }
    }
}

/// Factor `p ∈ ℤ[y]` into its signed content and irreducible primitive
/// factors with positive leading coefficients.
///
/// Degrees are tried in increasing order. A degree-`d` factor is pinned by
/// its values at `d + 1` integer points, each of which must divide the value
/// of `p`; points with the fewest divisors are used, and candidate values are
/// pruned as soon as a Newton divided difference fails to be integral.
pub fn kronecker_factor(p: &Poly<Integer>, cfg: &KroneckerConfig) -> Result<Factorization<Integer>> {
    let zy = PolyRing::new(IntegerRing, "y");
    let Some(deg) = p.degree() else {
        return Err(Error::Precondition("cannot factor the zero polynomial".into()));
    };
    if deg > cfg.degree_cap {
        return Err(Error::BudgetExceeded(format!("degree {deg} exceeds the factoring cap {}", cfg.degree_cap)));
    }
    let (mut unit, mut q) = zy.content_and_primitive(p);
    if q.lead().unwrap().is_negative() {
        unit = -unit;
        q = zy.neg(&q);
    }
    let mut found: Vec<Poly<Integer>> = Vec::new();
    let zeros = q.coeffs.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        found.extend(std::iter::repeat_n(zy.gen(), zeros));
        q = zy.from_coeffs(q.coeffs[zeros..].to_vec());
    }
    let mut nodes = 0u64;
    let mut d = 1;
    while 2 * d <= q.degree().unwrap() {
        match factor_of_degree(&zy, &q, d, cfg, &mut nodes)? {
            Some(f) => {
                q = zy.divide(&q, &f).expect("verified divisor");
                found.push(f);
            }
            None => d += 1,
        }
    }
    if q.degree().unwrap() >= 1 {
        found.push(q);
    }
    let factors = Factorization::sort_and_merge(found, |f| f.coeffs.clone());
    Ok(Factorization { unit, factors })
}

/// Whether `p` is irreducible in ℤ[y]: positive degree, unit content, and no
/// proper factorization over ℚ.
pub fn is_irreducible_over_integers(p: &Poly<Integer>, cfg: &KroneckerConfig) -> Result<bool> {
    if p.degree().unwrap_or(0) == 0 {
        return Ok(false);
    }
    let f = kronecker_factor(p, cfg)?;
    Ok(f.unit.abs().is_one() && f.is_irreducible())
}

fn positive_divisors(n: &BigInt, budget: FactorBudget) -> Option<Vec<BigInt>> {
    let f = factorize(n, budget).ok()?;
    let mut divs = vec![BigInt::one()];
    for (p, e) in &f.factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut pk = d.clone();
            for _ in 0..=*e {
                next.push(pk.clone());
                pk *= p;
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

struct Node {
    point: i64,
    choices: Vec<BigInt>,
}

fn factor_of_degree(
    zy: &PolyRing<IntegerRing>,
    q: &Poly<Integer>,
    d: usize,
    cfg: &KroneckerConfig,
    nodes: &mut u64,
) -> Result<Option<Poly<Integer>>> {
    let want = 2 * (d + 1) + 2;
    let mut pool: Vec<(usize, i64, Vec<BigInt>)> = Vec::new();
    let mut x = 0i64;
    let mut tried = 0;
    while pool.len() < want && tried < 8 * (want + q.coeffs.len()) {
        tried += 1;
        let v = zy.eval(q, &BigInt::from(x));
        if !v.is_zero() {
            if let Some(divs) = positive_divisors(&v.abs(), cfg.value_budget) {
                pool.push((divs.len(), x, divs));
            }
        }
        x = if x > 0 { -x } else { 1 - x };
    }
    if pool.len() < d + 1 {
        return Err(Error::BudgetExceeded("could not factor enough sample values".into()));
    }
    pool.sort_by_key(|(n, x, _)| (*n, x.abs()));
    pool.truncate(d + 1);
    let plan: Vec<Node> = pool
        .into_iter()
        .enumerate()
        .map(|(i, (_, point, divs))| {
            let choices = if i == 0 {
                divs
            } else {
                divs.iter().flat_map(|v| [v.clone(), -v]).collect()
            };
            Node { point, choices }
        })
        .collect();

    let lead_q = q.lead().unwrap();
    let const_q = &q.coeffs[0];
    let mut diag: Vec<Vec<BigInt>> = Vec::with_capacity(d + 1);
    let mut idx = vec![0usize; d + 1];
    let mut level = 0usize;
    loop {
        if idx[level] == plan[level].choices.len() {
            if level == 0 {
                return Ok(None);
            }
            idx[level] = 0;
            level -= 1;
            diag.pop();
            idx[level] += 1;
            continue;
        }
        *nodes += 1;
        if *nodes > cfg.node_budget {
            return Err(Error::BudgetExceeded(format!("Kronecker search exceeded {} nodes", cfg.node_budget)));
        }
        let v = plan[level].choices[idx[level]].clone();
        let xk = plan[level].point;
        let mut row = vec![v];
        let mut ok = true;
        for j in 1..=level {
            let num = &row[j - 1] - &diag[level - 1][j - 1];
            let den = BigInt::from(xk - plan[level - j].point);
            if !(&num % &den).is_zero() {
                ok = false;
                break;
            }
            row.push(num / den);
        }
        if ok && level == d {
            let top = &row[d];
            if !top.is_zero() && (lead_q % top).is_zero() {
                let newton: Vec<BigInt> = diag.iter().map(|r| r[r.len() - 1].clone()).chain([top.clone()]).collect();
                let mut f = newton_to_poly(zy, &newton, &plan);
                if f.lead().unwrap().is_negative() {
                    f = zy.neg(&f);
                }
                if !f.coeffs[0].is_zero() && (const_q % &f.coeffs[0]).is_zero() {
                    if let Some(_quot) = zy.divide(q, &f) {
                        return Ok(Some(f));
                    }
                }
            }
            idx[level] += 1;
        } else if ok {
            diag.push(row);
            level += 1;
        } else {
            idx[level] += 1;
        }
    }
}

fn newton_to_poly(zy: &PolyRing<IntegerRing>, c: &[BigInt], plan: &[Node]) -> Poly<Integer> {
    let n = c.len() - 1;
    let mut acc = zy.constant(c[n].clone());
    for k in (0..n).rev() {
        let lin = zy.from_coeffs(vec![BigInt::from(-plan[k].point), BigInt::one()]);
        acc = zy.add(&zy.mul(&acc, &lin), &zy.constant(c[k].clone()));
    }
    acc
}
