//! Exact integer and rational linear algebra used throughout the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;
pub type QMatrix = Vec<Vec<Rat>>;

/// Square integer matrix acting on column vectors, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IMat {
    n: usize,
    data: Vec<i64>,
}

impl IMat {
    pub fn identity(n: usize) -> Self {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        IMat { n, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            data.extend_from_slice(row);
        }
        Ok(IMat { n, data })
    }

    /// Permutation matrix sending basis vector `j` to `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = IMat { n, data: vec![0; n * n] };
        for (j, &i) in perm.iter().enumerate() {
            m.data[i * n + j] = 1;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &IMat) -> IMat {
        let n = self.n;
        let mut data = vec![0i64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        IMat { n, data }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        (0..n).map(|i| (0..n).map(|j| self.data[i * n + j] * v[j]).sum()).collect()
    }

    pub fn apply_big(&self, v: &[Int]) -> Vec<Int> {
        let n = self.n;
        (0..n)
            .map(|i| {
                let mut acc = Int::zero();
                for j in 0..n {
                    let a = self.data[i * n + j];
                    if a != 0 {
                        acc += &v[j] * a;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> IMat {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j];
            }
        }
        IMat { n, data }
    }

    pub fn pow(&self, k: usize) -> IMat {
        let mut acc = IMat::identity(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == IMat::identity(self.n)
    }

    pub fn scale(&self, c: i64) -> IMat {
        IMat { n: self.n, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn sub(&self, other: &IMat) -> IMat {
        IMat { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    pub fn to_rational(&self) -> QMatrix {
        self.rows().into_iter().map(|r| r.into_iter().map(rat_int).collect()).collect()
    }

    /// Inverse over the integers, if the matrix is unimodular.
    pub fn inverse(&self) -> Option<IMat> {
        let inv = q_inverse(&self.to_rational())?;
        let mut data = Vec::with_capacity(self.n * self.n);
        for row in inv {
            for x in row {
                if !x.is_integer() {
                    return None;
                }
                data.push(i64::try_from(x.to_integer()).ok()?);
            }
        }
        Some(IMat { n: self.n, data })
    }

    /// Multiplicative order, if it is at most `cap`.
    pub fn order(&self, cap: usize) -> Option<usize> {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }
}

impl Serialize for IMat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IMat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<i64>>::deserialize(d)?;
        IMat::from_rows(&rows).map_err(serde::de::Error::custom)
    }
}

pub fn rat_int(x: i64) -> Rat {
    Rat::from_integer(Int::from(x))
}

pub fn dot_i64(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    let mut acc = Int::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

pub fn to_big(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

/// Divide out the content of an integer vector. The zero vector is returned unchanged.
pub fn primitive(mut v: Vec<Int>) -> Vec<Int> {
    let mut g = Int::zero();
    for x in &v {
        g = g.gcd(x);
        if g.is_one() {
            return v;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

/// Smallest positive integer multiple of a rational vector, made primitive.
pub fn clear_denominators(v: &[Rat]) -> Vec<Int> {
    let mut l = Int::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints = v.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect();
    primitive(ints)
}

pub fn is_zero_vec(v: &[Int]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn q_identity(n: usize) -> QMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect()
}

pub fn q_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let m = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    let mut acc = Rat::zero();
                    for (k, x) in row.iter().enumerate() {
                        if !x.is_zero() {
                            acc += x * &b[k][j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn q_apply(a: &QMatrix, v: &[Rat]) -> Vec<Rat> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(Rat::zero(), |acc, (x, y)| acc + x * y))
        .collect()
}

pub fn q_transpose(a: &QMatrix) -> QMatrix {
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Reduced row echelon form; returns the nonzero rows and the pivot columns.
pub fn q_rref(a: &QMatrix) -> (QMatrix, Vec<usize>) {
    let mut m: QMatrix = a.clone();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let t = &m[r][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn q_rank(a: &QMatrix) -> usize {
    q_rref(a).1.len()
}

pub fn q_inverse(a: &QMatrix) -> Option<QMatrix> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return None;
    }
    let aug: QMatrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    let (red, pivots) = q_rref(&aug);
    if n == 0 {
        return Some(Vec::new());
    }
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn q_det(a: &QMatrix) -> Rat {
    let n = a.len();
    let mut m = a.clone();
    let mut det = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else { return Rat::zero() };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let inv = m[c][c].recip();
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] * &inv;
                for j in c..n {
                    let t = &m[c][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
    }
    det
}

/// Basis of the right kernel `{x : A x = 0}` as primitive integer vectors.
pub fn q_kernel(a: &QMatrix, ncols: usize) -> Vec<Vec<Int>> {
    let (red, pivots) = q_rref(a);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            clear_denominators(&v)
        })
        .collect()
}

pub fn int_rows_to_q(rows: &[Vec<Int>]) -> QMatrix {
    rows.iter().map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect()).collect()
}

/// Canonical basis of the row span: reduced echelon rows, scaled to primitive integers.
pub fn span_basis(rows: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let (red, _) = q_rref(&int_rows_to_q(rows));
    red.iter().map(|r| clear_denominators(r)).collect()
}

/// Orthogonal projection of `v` onto the complement of the span of `basis`
/// (standard inner product), scaled to a primitive integer vector.
pub fn project_out(v: &[Int], basis: &[Vec<Int>]) -> Vec<Int> {
    if basis.is_empty() {
        return primitive(v.to_vec());
    }
    let b = int_rows_to_q(basis);
    let k = b.len();
    let vq: Vec<Rat> = v.iter().map(|x| Rat::from_integer(x.clone())).collect();
    // Solve the Gram system G c = B v, then subtract B^T c.
    let gram: QMatrix = (0..k)
        .map(|i| (0..k).map(|j| q_dot(&b[i], &b[j])).collect())
        .collect();
    let rhs: Vec<Rat> = (0..k).map(|i| q_dot(&b[i], &vq)).collect();
    let ginv = q_inverse(&gram).expect("span basis is independent");
    let c = q_apply(&ginv, &rhs);
    let mut out = vq;
    for (ci, bi) in c.iter().zip(&b) {
        for (o, x) in out.iter_mut().zip(bi) {
            *o -= ci * x;
        }
    }
    clear_denominators(&out)
}

pub fn q_dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn int_pow(base: u64, e: usize) -> Int {
    num_traits::pow(Int::from(base), e)
}

/// Sign of an integer as -1, 0 or 1.
pub fn sign(x: &Int) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

pub fn gcd_usize(a: usize, b: usize) -> usize {
    a.gcd(&b)
}

pub fn lcm_usize(a: usize, b: usize) -> usize {
    a.lcm(&b)
}
