use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{EuclideanDomain, IntegerRing};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::Precondition("matrix must be rectangular with dimensions ≥ 1".into()));
        }
        Ok(IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![BigInt::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = BigInt::one();
        }
        IntMatrix { rows: n, cols: n, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> Option<IntMatrix> {
        if self.cols != other.rows {
            return None;
        }
        let mut data = vec![BigInt::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Some(IntMatrix { rows: self.rows, cols: other.cols, data })
    }

    /// Determinant by Bareiss fraction-free elimination; `None` if not square.
    pub fn determinant(&self) -> Option<BigInt> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                let swap = (k + 1..n).find(|&i| !a[i][k].is_zero());
                match swap {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Some(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        Some(sign * &a[n - 1][n - 1])
    }

    /// Row-style Hermite normal form shape: echelon, zero rows last, positive
    /// pivots, entries above each pivot in `[0, pivot)`.
    pub fn is_hermite_normal_form(&self) -> bool {
        let mut last_pivot: Option<usize> = None;
        let mut seen_zero_row = false;
        for i in 0..self.rows {
            let pivot = (0..self.cols).find(|&j| !self.get(i, j).is_zero());
            match pivot {
                None => seen_zero_row = true,
                Some(j) => {
                    if seen_zero_row || last_pivot.is_some_and(|p| j <= p) {
                        return false;
                    }
                    let pv = self.get(i, j);
                    if !pv.is_positive() {
                        return false;
                    }
                    for k in 0..i {
                        let e = self.get(k, j);
                        if e.is_negative() || e >= pv {
                            return false;
                        }
                    }
                    last_pivot = Some(j);
                }
            }
        }
        true
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i).iter().map(|v| v.to_string()).collect::<Vec<_>>())).finish()
    }
}

/// `(H, U)` with `H = U·M`, `U` unimodular and `H` in row-style Hermite normal form.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (h, u) = hermite_rows(&IntegerRing, m.to_rows(), true);
    let u = u.expect("transform requested");
    (
        IntMatrix::from_rows(h).expect("same shape"),
        IntMatrix::from_rows(u).expect("square"),
    )
}

/// Hermite form of the row module spanned by `rows` over a Euclidean domain:
/// pivots normalized, entries above a pivot reduced by its canonical remainder.
/// When `track` is set, also returns the unimodular transform.
#[allow(clippy::type_complexity)]
pub fn hermite_rows<R: EuclideanDomain>(
    ring: &R,
    mut a: Vec<Vec<R::Elem>>,
    track: bool,
) -> (Vec<Vec<R::Elem>>, Option<Vec<Vec<R::Elem>>>) {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut u: Option<Vec<Vec<R::Elem>>> = track.then(|| {
        (0..m)
            .map(|i| (0..m).map(|j| if i == j { ring.one() } else { ring.zero() }).collect())
            .collect()
    });

    // rows[r] := x·rows[r] + y·rows[i];  rows[i] := -q·rows[r] + p·rows[i]
    let combine = |rows: &mut Vec<Vec<R::Elem>>, r: usize, i: usize, coef: [&R::Elem; 4]| {
        let [x, y, q, p] = coef;
        for j in 0..rows[r].len() {
            let (ar, ai) = (rows[r][j].clone(), rows[i][j].clone());
            rows[r][j] = ring.add(&ring.mul(x, &ar), &ring.mul(y, &ai));
            rows[i][j] = ring.sub(&ring.mul(p, &ai), &ring.mul(q, &ar));
        }
    };

    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        for i in r + 1..m {
            if ring.is_zero(&a[i][c]) {
                continue;
            }
            let (g, x, y) = ring.ext_gcd(&a[r][c], &a[i][c]);
            let p = ring.divide(&a[r][c], &g).expect("gcd divides");
            let q = ring.divide(&a[i][c], &g).expect("gcd divides");
            combine(&mut a, r, i, [&x, &y, &q, &p]);
            if let Some(u) = u.as_mut() {
                combine(u, r, i, [&x, &y, &q, &p]);
            }
        }
        if ring.is_zero(&a[r][c]) {
            continue;
        }
        let v = ring.normal_unit(&a[r][c]);
        if !ring.is_one(&v) {
            for e in a[r].iter_mut() {
                *e = ring.mul(e, &v);
            }
            if let Some(u) = u.as_mut() {
                for e in u[r].iter_mut() {
                    *e = ring.mul(e, &v);
                }
            }
        }
        for i in 0..r {
            let (q, _) = ring.div_rem(&a[i][c], &a[r][c]);
            if ring.is_zero(&q) {
                continue;
            }
            for j in 0..n {
                a[i][j] = ring.sub(&a[i][j], &ring.mul(&q, &a[r][j]));
            }
            if let Some(u) = u.as_mut() {
                for j in 0..m {
                    u[i][j] = ring.sub(&u[i][j], &ring.mul(&q, &u[r][j]));
                }
            }
        }
        r += 1;
    }
    (a, u)
}
