//! Exact integer and rational matrices.
//!
//! [`IntMatrix`] values are group elements of GL(n, Z): the determinant is
//! checked to be ±1 whenever one is built from raw entries. Nilpotent and
//! logarithm matrices live in [`RatMatrix`], which has no such constraint.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::engine::encoding::{put_bigint, put_uvarint, Reader};
use crate::engine::{commutes, Group};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// Row-major entries; rejects anything that is not unimodular.
    pub fn new(n: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { left: n * n, right: entries.len() });
        }
        let m = IntMatrix { n, entries };
        let det = m.determinant();
        if det.abs() != BigInt::one() {
            return Err(Error::NotUnimodular { det: det.to_string() });
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { left: n, right: row.len() });
            }
            entries.extend(row.iter().map(|&v| BigInt::from(v)));
        }
        IntMatrix::new(n, entries)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        IntMatrix { n, entries }
    }

    /// `I + s e_ij` with 1-based `i`, `j`.
    pub fn elementary(n: usize, i: usize, j: usize, sign: i8) -> Result<Self> {
        if i == j {
            return Err(Error::DiagonalElementary(i));
        }
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::InvalidParameter(format!("index ({i},{j}) outside dimension {n}")));
        }
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidParameter(format!("elementary sign must be ±1, got {sign}")));
        }
        let mut m = IntMatrix::identity(n);
        m.entries[(i - 1) * n + (j - 1)] = BigInt::from(sign);
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.n + col]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    #[cfg(test)]
    pub(crate) fn set_entry(&mut self, row: usize, col: usize, v: BigInt) {
        self.entries[row * self.n + col] = v;
    }

    /// Fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        determinant(self.n, self.entries.clone())
    }

    pub fn is_unipotent(&self) -> bool {
        self.to_rat().sub(&RatMatrix::identity(self.n)).is_nilpotent()
    }

    pub fn to_rat(&self) -> RatMatrix {
        RatMatrix { n: self.n, entries: self.entries.iter().map(|v| BigRational::from_integer(v.clone())).collect() }
    }

    pub fn rows_as_strings(&self) -> Vec<Vec<String>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(|row| row.iter().map(|v| v.to_string()).collect()).collect()
    }

    pub fn from_string_rows(rows: &[Vec<String>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { left: n, right: row.len() });
            }
            for s in row {
                entries.push(s.parse::<BigInt>().map_err(|_| Error::InvalidParameter(format!("bad integer {s:?}")))?);
            }
        }
        IntMatrix::new(n, entries)
    }

    /// Payload: dimension, then the `n*n` entries row-major as big integers.
    pub(crate) fn encode_payload(&self, out: &mut Vec<u8>) {
        put_uvarint(out, self.n as u64);
        for v in &self.entries {
            put_bigint(out, v);
        }
    }

    pub(crate) fn decode_payload(r: &mut Reader<'_>) -> Result<Self> {
        let n = r.usize()?;
        let count = n.checked_mul(n).ok_or_else(|| Error::Decode("dimension overflow".into()))?;
        let mut entries = Vec::with_capacity(count.min(1 << 16));
        for _ in 0..count {
            entries.push(r.bigint()?);
        }
        IntMatrix::new(n, entries).map_err(|e| Error::Decode(e.to_string()))
    }
}

fn determinant(n: usize, mut a: Vec<BigInt>) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, swap * n + j);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j]) / &prev;
                a[i * n + j] = v;
            }
        }
        prev = a[k * n + k].clone();
    }
    sign * a[n * n - 1].clone()
}

impl Group for IntMatrix {
    fn identity_like(&self) -> Self {
        IntMatrix::identity(self.n)
    }

    fn is_identity(&self) -> bool {
        let n = self.n;
        self.entries.iter().enumerate().all(|(k, v)| if k / n == k % n { v.is_one() } else { v.is_zero() })
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch { left: self.n, right: rhs.n });
        }
        let n = self.n;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let lhs = &self.entries[i * n + k];
                if lhs.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let r = &rhs.entries[k * n + j];
                    if !r.is_zero() {
                        entries[i * n + j] += lhs * r;
                    }
                }
            }
        }
        Ok(IntMatrix { n, entries })
    }

    fn inverse(&self) -> Self {
        let inv = self.to_rat().inverse().expect("unimodular matrices are invertible");
        let entries = inv
            .entries
            .into_iter()
            .map(|q| {
                assert!(q.is_integer(), "inverse of a unimodular matrix is integral");
                q.to_integer()
            })
            .collect();
        IntMatrix { n: self.n, entries }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows_as_strings().into_iter().map(|r| r.join(" ")).collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// The 3x3 unitriangular model `a = I+e12`, `b = I+e23`, `c = I+e13`.
pub fn heisenberg_generators() -> (IntMatrix, IntMatrix, IntMatrix) {
    let e = |i, j| IntMatrix::elementary(3, i, j, 1).expect("off-diagonal");
    (e(1, 2), e(2, 3), e(1, 3))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zero(n: usize) -> Self {
        RatMatrix { n, entries: vec![BigRational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn from_entries(n: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { left: n * n, right: entries.len() });
        }
        Ok(RatMatrix { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigRational {
        &self.entries[row * self.n + col]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, other.n);
        RatMatrix { n: self.n, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, other.n);
        RatMatrix { n: self.n, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, k: &BigRational) -> RatMatrix {
        RatMatrix { n: self.n, entries: self.entries.iter().map(|a| a * k).collect() }
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut entries = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let lhs = &self.entries[i * n + k];
                if lhs.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let r = &other.entries[k * n + j];
                    if !r.is_zero() {
                        entries[i * n + j] += lhs * r;
                    }
                }
            }
        }
        RatMatrix { n, entries }
    }

    /// `N^n = 0`.
    pub fn is_nilpotent(&self) -> bool {
        let mut p = RatMatrix::identity(self.n);
        for _ in 0..self.n {
            p = p.mul(self);
            if p.is_zero() {
                return true;
            }
        }
        p.is_zero()
    }

    /// Gauss-Jordan over the rationals; `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut inv = RatMatrix::identity(n).entries;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r * n + col].is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a[col * n + col].clone();
            for j in 0..n {
                a[col * n + j] /= &p;
                inv[col * n + j] /= &p;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].clone();
                for j in 0..n {
                    let da = &factor * &a[col * n + j];
                    a[r * n + j] -= da;
                    let di = &factor * &inv[col * n + j];
                    inv[r * n + j] -= di;
                }
            }
        }
        Some(RatMatrix { n, entries: inv })
    }

    /// Entries as `"p"` or `"p/q"` strings, row by row.
    pub fn rows_as_strings(&self) -> Vec<Vec<String>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.entry(i, j).to_string()).collect()).collect()
    }

    pub fn from_string_rows(rows: &[Vec<String>]) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { left: n, right: row.len() });
            }
            for s in row {
                entries.push(parse_rational(s)?);
            }
        }
        Ok(RatMatrix { n, entries })
    }

    pub fn to_int(&self) -> Option<IntMatrix> {
        if !self.entries.iter().all(|q| q.is_integer()) {
            return None;
        }
        IntMatrix::new(self.n, self.entries.iter().map(|q| q.to_integer()).collect()).ok()
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidParameter(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `log m = Σ_{k≥1} (-1)^{k+1} (m-I)^k / k`, which terminates because
/// `m - I` is nilpotent.
pub fn unipotent_log(m: &IntMatrix) -> Result<RatMatrix> {
    let n = m.dim();
    let nil = m.to_rat().sub(&RatMatrix::identity(n));
    if !nil.is_nilpotent() {
        return Err(Error::NotUnipotent(format!("{m}: (m - I)^{n} != 0")));
    }
    let mut log = RatMatrix::zero(n);
    let mut p = nil.clone();
    let mut k = 1i64;
    while !p.is_zero() {
        let coeff = BigRational::new(BigInt::from(if k % 2 == 1 { 1 } else { -1 }), BigInt::from(k));
        log = log.add(&p.scale(&coeff));
        p = p.mul(&nil);
        k += 1;
    }
    Ok(log)
}

/// `exp L = Σ_{k≥0} L^k / k!` for nilpotent `L`.
pub fn nilpotent_exp(l: &RatMatrix) -> Result<RatMatrix> {
    if !l.is_nilpotent() {
        return Err(Error::NotUnipotent("exp series needs a nilpotent argument".into()));
    }
    let n = l.dim();
    let mut acc = RatMatrix::identity(n);
    let mut term = RatMatrix::identity(n);
    let mut k = 1i64;
    loop {
        term = term.mul(l).scale(&BigRational::new(BigInt::one(), BigInt::from(k)));
        if term.is_zero() {
            return Ok(acc);
        }
        acc = acc.add(&term);
        k += 1;
    }
}

/// Linear independence of two matrices viewed as vectors over Q.
pub fn linearly_independent(l1: &RatMatrix, l2: &RatMatrix) -> bool {
    if l1.dim() != l2.dim() || l1.is_zero() || l2.is_zero() {
        return false;
    }
    let pivot = l1.entries().iter().position(|q| !q.is_zero()).expect("nonzero matrix has a nonzero entry");
    let ratio = &l2.entries()[pivot] / &l1.entries()[pivot];
    l1.entries().iter().zip(l2.entries()).any(|(a, b)| &(a * &ratio) != b)
}

/// Whether commuting unipotents `m1`, `m2` generate a free abelian group of
/// rank 2: `m1^p m2^q = I` iff `p log m1 + q log m2 = 0`.
pub fn independent_logs(m1: &IntMatrix, m2: &IntMatrix) -> Result<bool> {
    if !commutes(m1, m2)? {
        return Err(Error::NonCommuting(format!("{m1} and {m2}")));
    }
    for m in [m1, m2] {
        if m.is_identity() {
            return Err(Error::NotUnipotent("identity has no rank-1 log".into()));
        }
    }
    let l1 = unipotent_log(m1)?;
    let l2 = unipotent_log(m2)?;
    Ok(linearly_independent(&l1, &l2))
}
