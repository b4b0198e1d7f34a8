//! Dense univariate polynomials over any [`Ring`].
//!
//! `Poly` only stores coefficients (ascending degree, no trailing zeros); all
//! arithmetic goes through a [`PolyRing`] context that knows the coefficient
//! ring and the variable name.

mod factor;
mod quotient;

pub(crate) use factor::monic_of_degree;
pub use factor::{
    factor_over_prime_field, fp_polys_of_degree_below, is_irreducible_over_integers, kronecker_factor,
    Factorization, KroneckerConfig,
};
pub use quotient::{integer_residues, QuotientRing};

use crate::error::{Error, Result};
use crate::ring::{EuclideanDomain, Field, GcdDomain, Integer, Ring, RingDescriptor};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Option<&E> {
        self.coeffs.get(k)
    }

    /// Nonzero coefficients with their degrees, ascending.
    pub fn terms<'a, R: Ring<Elem = E>>(&'a self, ring: &'a R) -> impl Iterator<Item = (usize, &'a E)> + 'a {
        self.coeffs.iter().enumerate().filter(move |(_, c)| !ring.is_zero(c))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing<R> {
    base: R,
    var: String,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(base: R, var: impl Into<String>) -> Self {
        PolyRing { base, var: var.into() }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Poly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(&self, coeffs: &[i64]) -> Poly<R::Elem> {
        self.from_coeffs(coeffs.iter().map(|&c| self.base.from_i64(c)).collect())
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn gen(&self) -> Poly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    pub fn monomial(&self, c: R::Elem, k: usize) -> Poly<R::Elem> {
        let mut coeffs = vec![self.base.zero(); k];
        coeffs.push(c);
        self.from_coeffs(coeffs)
    }

    /// Coefficient of degree `k`, zero past the end.
    pub fn coeff(&self, p: &Poly<R::Elem>, k: usize) -> R::Elem {
        p.coeffs.get(k).cloned().unwrap_or_else(|| self.base.zero())
    }

    /// Horner evaluation.
    pub fn eval(&self, p: &Poly<R::Elem>, x: &R::Elem) -> R::Elem {
        let b = &self.base;
        p.coeffs.iter().rev().fold(b.zero(), |acc, c| b.add(&b.mul(&acc, x), c))
    }

    /// Evaluate with coefficients pushed into an extension `target` of the base.
    pub fn eval_in<S: Ring>(&self, p: &Poly<R::Elem>, target: &S, x: &S::Elem, lift: impl Fn(&R::Elem) -> S::Elem) -> S::Elem {
        p.coeffs.iter().rev().fold(target.zero(), |acc, c| target.add(&target.mul(&acc, x), &lift(c)))
    }

    pub fn scale(&self, p: &Poly<R::Elem>, c: &R::Elem) -> Poly<R::Elem> {
        self.from_coeffs(p.coeffs.iter().map(|a| self.base.mul(a, c)).collect())
    }

    /// Multiply by `var^k`.
    pub fn shift(&self, p: &Poly<R::Elem>, k: usize) -> Poly<R::Elem> {
        if p.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![self.base.zero(); k];
        coeffs.extend(p.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn map<S: Ring>(&self, p: &Poly<R::Elem>, target: &PolyRing<S>, f: impl Fn(&R::Elem) -> S::Elem) -> Poly<S::Elem> {
        target.from_coeffs(p.coeffs.iter().map(f).collect())
    }

    /// `p(q)`.
    pub fn compose(&self, p: &Poly<R::Elem>, q: &Poly<R::Elem>) -> Poly<R::Elem> {
        p.coeffs.iter().rev().fold(Poly::zero(), |acc, c| self.add(&self.mul(&acc, q), &self.constant(c.clone())))
    }

    pub fn derivative(&self, p: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.from_coeffs(
            p.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| self.base.mul(&self.base.from_i64(k as i64), c))
                .collect(),
        )
    }

    /// Division by `b` whose leading coefficient divides every leading
    /// coefficient met along the way (always the case over a field, or for
    /// monic `b`). `None` if some such division is inexact.
    pub fn div_rem(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Option<(Poly<R::Elem>, Poly<R::Elem>)> {
        let db = b.degree()?;
        let lb = b.lead().expect("nonzero");
        let base = &self.base;
        let mut r = a.coeffs.clone();
        let mut q = vec![base.zero(); a.coeffs.len().saturating_sub(db)];
        while r.len() > db {
            let k = r.len() - 1 - db;
            let lr = r.last().expect("nonempty");
            if !base.is_zero(lr) {
                let c = base.divide(lr, lb)?;
                for (j, bj) in b.coeffs.iter().enumerate() {
                    r[k + j] = base.sub(&r[k + j], &base.mul(&c, bj));
                }
                q[k] = c;
            }
            r.pop();
        }
        Some((self.from_coeffs(q), self.from_coeffs(r)))
    }

    /// `lc(b)^(deg a − deg b + 1) · a mod b`.
    pub fn pseudo_rem(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        let db = b.degree().expect("pseudo-division by zero");
        let Some(da) = a.degree() else { return Poly::zero() };
        if da < db {
            return a.clone();
        }
        let base = &self.base;
        let lb = b.lead().expect("nonzero").clone();
        let mut r = a.clone();
        let mut e = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lead().expect("nonzero").clone();
            let t = self.shift(&self.scale(b, &lr), dr - db);
            r = self.sub(&self.scale(&r, &lb), &t);
            e -= 1;
        }
        self.scale(&r, &base.pow(&lb, e as u64))
    }

    /// Resultant via the subresultant pseudo-remainder sequence. The
    /// orientation is `Res(p, q) = lc(p)^deg q · ∏_{p(α)=0} q(α)`.
    pub fn resultant(&self, p: &Poly<R::Elem>, q: &Poly<R::Elem>) -> Result<R::Elem> {
        if p.is_zero() || q.is_zero() {
            return Err(Error::ZeroInput);
        }
        let base = &self.base;
        let inexact = || Error::Precondition("inexact division in subresultant chain".into());
        let (mut a, mut b) = (p.clone(), q.clone());
        let mut negate = false;
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
            if a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1 {
                negate = true;
            }
        }
        let sign = |x: R::Elem, negate: bool| if negate { base.neg(&x) } else { x };
        if b.degree() == Some(0) {
            let da = a.degree().unwrap() as u64;
            return Ok(sign(base.pow(b.lead().unwrap(), da), negate));
        }
        let mut g = base.one();
        let mut h = base.one();
        loop {
            let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
            let d = (da - db) as u64;
            if da % 2 == 1 && db % 2 == 1 {
                negate = !negate;
            }
            let r = self.pseudo_rem(&a, &b);
            a = b;
            if r.is_zero() {
                return Ok(base.zero());
            }
            let divisor = base.mul(&g, &base.pow(&h, d));
            b = self.from_coeffs(
                r.coeffs.iter().map(|c| base.divide(c, &divisor).ok_or_else(inexact)).collect::<Result<_>>()?,
            );
            g = a.lead().unwrap().clone();
            if d >= 1 {
                h = base.divide(&base.pow(&g, d), &base.pow(&h, d - 1)).ok_or_else(inexact)?;
            }
            if b.degree() == Some(0) {
                let da = a.degree().unwrap() as u64;
                let num = base.pow(b.lead().unwrap(), da);
                let res = base.divide(&num, &base.pow(&h, da - 1)).ok_or_else(inexact)?;
                return Ok(sign(res, negate));
            }
        }
    }

    /// Canonical text; `ascending` lists low degrees first.
    pub fn render_ordered(&self, p: &Poly<R::Elem>, ascending: bool) -> String {
        let mut terms: Vec<String> = p
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.base.is_zero(c))
            .map(|(k, c)| self.render_term(c, k))
            .collect();
        if terms.is_empty() {
            return "0".into();
        }
        if !ascending {
            terms.reverse();
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            match t.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(t);
                }
            }
        }
        out
    }

    fn render_term(&self, c: &R::Elem, k: usize) -> String {
        let b = &self.base;
        let mono = match k {
            0 => return b.render(c),
            1 => self.var.clone(),
            _ => format!("{}^{}", self.var, k),
        };
        if b.is_one(c) {
            return mono;
        }
        let minus = b.neg(c);
        if b.is_one(&minus) {
            return format!("-{mono}");
        }
        if b.is_atomic(c) {
            format!("{}*{mono}", b.render(c))
        } else if b.is_atomic(&minus) {
            format!("-{}*{mono}", b.render(&minus))
        } else {
            format!("({})*{mono}", b.render(c))
        }
    }
}

impl<R: Ring> Ring for PolyRing<R> {
    type Elem = Poly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = self.base.zero();
        self.from_coeffs(
            (0..n)
                .map(|k| self.base.add(a.coeffs.get(k).unwrap_or(&zero), b.coeffs.get(k).unwrap_or(&zero)))
                .collect(),
        )
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Poly { coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect() }
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = self.base.zero();
        self.from_coeffs(
            (0..n)
                .map(|k| self.base.sub(a.coeffs.get(k).unwrap_or(&zero), b.coeffs.get(k).unwrap_or(&zero)))
                .collect(),
        )
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let base = &self.base;
        let mut out = vec![base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = base.add(&out[i + j], &base.mul(x, y));
            }
        }
        self.from_coeffs(out)
    }
    fn from_integer(&self, n: &Integer) -> Self::Elem {
        self.constant(self.base.from_integer(n))
    }
    fn divide(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        let (q, r) = self.div_rem(a, b)?;
        r.is_zero().then_some(q)
    }
    fn is_unit(&self, a: &Self::Elem) -> bool {
        a.degree() == Some(0) && self.base.is_unit(&a.coeffs[0])
    }
    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::PolyRing(Box::new(self.base.descriptor()), self.var.clone())
    }
    fn render(&self, a: &Self::Elem) -> String {
        self.render_ordered(a, false)
    }
    fn is_atomic(&self, a: &Self::Elem) -> bool {
        let mut nonzero = a.terms(&self.base);
        match (nonzero.next(), nonzero.next()) {
            (None, _) => true,
            (Some((k, c)), None) => !self.render_term(c, k).starts_with('-') && (k > 0 || self.base.is_atomic(c)),
            _ => false,
        }
    }
}

impl<R: GcdDomain> PolyRing<R> {
    /// Normalized gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self, p: &Poly<R::Elem>) -> R::Elem {
        self.base.gcd_all(p.coeffs.iter())
    }

    /// `(content, primitive)` with `content · primitive = p`.
    pub fn content_and_primitive(&self, p: &Poly<R::Elem>) -> (R::Elem, Poly<R::Elem>) {
        let c = self.content(p);
        if p.is_zero() {
            return (c, Poly::zero());
        }
        let prim = self.from_coeffs(
            p.coeffs.iter().map(|a| self.base.divide(a, &c).expect("content divides")).collect(),
        );
        (c, prim)
    }

    pub fn primitive_part(&self, p: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.content_and_primitive(p).1
    }

    /// Whether the content is a unit of the base ring.
    pub fn is_primitive(&self, p: &Poly<R::Elem>) -> bool {
        self.base.is_unit(&self.content(p))
    }

    fn primitive_prs_gcd(&self, a: &Poly<R::Elem>, b: &Poly<R::Elem>) -> Poly<R::Elem> {
        let (ca, pa) = self.content_and_primitive(a);
        let (cb, pb) = self.content_and_primitive(b);
        let c = self.base.gcd(&ca, &cb);
        let (mut r0, mut r1) = if pa.degree() >= pb.degree() { (pa, pb) } else { (pb, pa) };
        let g = loop {
            let r = self.pseudo_rem(&r0, &r1);
            if r.is_zero() {
                break r1;
            }
            if r.degree() == Some(0) {
                break self.one();
            }
            r0 = r1;
            r1 = self.primitive_part(&r);
        };
        self.normalize(&self.scale(&self.primitive_part(&g), &c))
    }
}

impl<R: GcdDomain> GcdDomain for PolyRing<R> {
    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_zero() {
            return self.normalize(b);
        }
        if b.is_zero() {
            return self.normalize(a);
        }
        if self.base.is_field() {
            let (mut r0, mut r1) = (a.clone(), b.clone());
            while !r1.is_zero() {
                let (_, r) = self.div_rem(&r0, &r1).expect("field division");
                r0 = std::mem::replace(&mut r1, r);
            }
            self.normalize(&r0)
        } else {
            self.primitive_prs_gcd(a, b)
        }
    }
    fn normal_unit(&self, a: &Self::Elem) -> Self::Elem {
        match a.lead() {
            Some(l) => self.constant(self.base.normal_unit(l)),
            None => self.one(),
        }
    }
}

impl<F: Field> EuclideanDomain for PolyRing<F> {
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem) {
        PolyRing::div_rem(self, a, b).expect("division by nonzero polynomial over a field")
    }
}

impl<F: Field> PolyRing<F> {
    pub fn monic(&self, p: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.normalize(p)
    }

    /// Monic gcd by Euclid; `gcd(0, 0) = 0`.
    pub fn gcd_over_field(&self, p: &Poly<F::Elem>, q: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.gcd(p, q)
    }

    /// `(g, A, B)` with `A·p + B·q = g` monic. When `p` divides `q` the
    /// cofactors are `(1/lc(p), 0)`.
    pub fn ext_gcd_over_field(
        &self,
        p: &Poly<F::Elem>,
        q: &Poly<F::Elem>,
    ) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
        let f = &self.base;
        if p.is_zero() && q.is_zero() {
            return (Poly::zero(), Poly::zero(), Poly::zero());
        }
        if !p.is_zero() && PolyRing::div_rem(self, q, p).expect("field").1.is_zero() {
            let inv = f.inv(p.lead().unwrap());
            return (self.scale(p, &inv), self.constant(inv), Poly::zero());
        }
        let (g, a, b) = EuclideanDomain::ext_gcd(self, p, q);
        (g, a, b)
    }
}
