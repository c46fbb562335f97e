//! Thompson's group F as piecewise-linear homeomorphisms of [0, 1] with
//! dyadic breakpoints and power-of-two slopes.
//!
//! Two products are in play and must not be confused:
//!
//! * [`PlMap::compose`] is composition of functions: `f.compose(&g)` is
//!   `t -> f(g(t))`.
//! * the group product ([`Group::try_mul`]) acts on the right: `g·h` applies
//!   `g` first, i.e. `g·h = h.compose(&g)`.
//!
//! With the standard `x_0` (breakpoints 1/2, 3/4 sent to 1/4, 1/2) and `x_1`
//! (identity on [0, 1/2], a half-size copy of `x_0` on [1/2, 1]), the right
//! action is the orientation in which `x_{j+1} = x_i·x_j·x_i^-1` holds for
//! all `i < j`. See `generator_x`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::engine::encoding::{put_bigint, put_uvarint, Reader};
use crate::engine::{power, Group};
use crate::error::{Error, Result};

/// `num / 2^exp` in lowest terms (`num` odd or `exp == 0`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigInt,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: i64, exp: u32) -> Self {
        Dyadic::from_parts(BigInt::from(num), exp)
    }

    pub fn from_parts(num: BigInt, exp: u32) -> Self {
        let mut d = Dyadic { num, exp };
        d.normalize();
        d
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.num.trailing_zeros().unwrap_or(0);
        let shift = tz.min(u64::from(self.exp)) as u32;
        if shift > 0 {
            self.num >>= shift;
            self.exp -= shift;
        }
    }

    pub fn zero() -> Self {
        Dyadic { num: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { num: BigInt::one(), exp: 0 }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    fn aligned(&self, other: &Dyadic) -> (BigInt, BigInt, u32) {
        let e = self.exp.max(other.exp);
        (&self.num << (e - self.exp), &other.num << (e - other.exp), e)
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(other);
        Dyadic::from_parts(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(other);
        Dyadic::from_parts(a - b, e)
    }

    /// `self * 2^k`.
    pub fn mul_pow2(&self, k: i64) -> Dyadic {
        if k >= 0 {
            let k = k as u64;
            if u64::from(self.exp) >= k {
                Dyadic::from_parts(self.num.clone(), self.exp - k as u32)
            } else {
                Dyadic::from_parts(&self.num << (k - u64::from(self.exp)), 0)
            }
        } else {
            let shift = u32::try_from(k.unsigned_abs()).expect("dyadic exponent fits in u32");
            Dyadic::from_parts(self.num.clone(), self.exp + shift)
        }
    }

    /// `(odd, v)` with `self = odd * 2^v`; `None` for zero.
    fn two_adic(&self) -> Option<(BigInt, i64)> {
        let tz = self.num.trailing_zeros()?;
        Some((&self.num >> tz, tz as i64 - i64::from(self.exp)))
    }

    /// `log2(self / other)` when the ratio is a power of two.
    pub fn log2_ratio(&self, other: &Dyadic) -> Option<i64> {
        let (oa, va) = self.two_adic()?;
        let (ob, vb) = other.two_adic()?;
        (oa == ob).then_some(va - vb)
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, BigInt::one() << self.exp)
        }
    }
}

impl FromStr for Dyadic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPlMap(format!("not a dyadic rational: {s:?}"));
        let (p, q) = match s.trim().split_once('/') {
            Some((p, q)) => (p, q),
            None => (s.trim(), "1"),
        };
        let num: BigInt = p.parse().map_err(|_| bad())?;
        let den: BigInt = q.parse().map_err(|_| bad())?;
        if !den.is_positive() {
            return Err(bad());
        }
        let tz = den.trailing_zeros().unwrap_or(0);
        if (&den >> tz) != BigInt::one() {
            return Err(bad());
        }
        Ok(Dyadic::from_parts(num, u32::try_from(tz).map_err(|_| bad())?))
    }
}

/// An element of F in canonical form: no breakpoint where the slope does
/// not change. Slopes are stored as base-2 logarithms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlMap {
    breakpoints: Vec<Dyadic>,
    values: Vec<Dyadic>,
    slopes: Vec<i64>,
}

impl PlMap {
    pub fn identity() -> Self {
        PlMap {
            breakpoints: vec![Dyadic::zero(), Dyadic::one()],
            values: vec![Dyadic::zero(), Dyadic::one()],
            slopes: vec![0],
        }
    }

    /// Validates raw breakpoint data and merges collinear segments.
    pub fn normalize(breakpoints: Vec<Dyadic>, values: Vec<Dyadic>) -> Result<Self> {
        if breakpoints.len() != values.len() {
            return Err(Error::InvalidPlMap(format!("{} breakpoints but {} values", breakpoints.len(), values.len())));
        }
        if breakpoints.len() < 2 {
            return Err(Error::InvalidPlMap("need at least the endpoints 0 and 1".into()));
        }
        let (zero, one) = (Dyadic::zero(), Dyadic::one());
        let last = breakpoints.len() - 1;
        if breakpoints[0] != zero || values[0] != zero || breakpoints[last] != one || values[last] != one {
            return Err(Error::InvalidPlMap("endpoints must map 0 -> 0 and 1 -> 1".into()));
        }
        let mut slopes = Vec::with_capacity(last);
        for i in 0..last {
            let db = breakpoints[i + 1].sub(&breakpoints[i]);
            let dv = values[i + 1].sub(&values[i]);
            if db <= zero || dv <= zero {
                return Err(Error::InvalidPlMap(format!(
                    "not strictly increasing on segment {i} ({} -> {})",
                    breakpoints[i],
                    breakpoints[i + 1]
                )));
            }
            let slope = dv.log2_ratio(&db).ok_or_else(|| {
                Error::InvalidPlMap(format!(
                    "slope on [{}, {}] is not a power of two",
                    breakpoints[i],
                    breakpoints[i + 1]
                ))
            })?;
            slopes.push(slope);
        }
        let mut out =
            PlMap { breakpoints: vec![breakpoints[0].clone()], values: vec![values[0].clone()], slopes: Vec::new() };
        for i in 0..last {
            if out.slopes.last() == Some(&slopes[i]) {
                // extend the previous segment
                *out.breakpoints.last_mut().expect("nonempty") = breakpoints[i + 1].clone();
                *out.values.last_mut().expect("nonempty") = values[i + 1].clone();
            } else {
                out.slopes.push(slopes[i]);
                out.breakpoints.push(breakpoints[i + 1].clone());
                out.values.push(values[i + 1].clone());
            }
        }
        Ok(out)
    }

    pub fn from_strs(breakpoints: &[&str], values: &[&str]) -> Result<Self> {
        let parse = |xs: &[&str]| xs.iter().map(|s| s.parse()).collect::<Result<Vec<Dyadic>>>();
        PlMap::normalize(parse(breakpoints)?, parse(values)?)
    }

    pub fn breakpoints(&self) -> &[Dyadic] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[Dyadic] {
        &self.values
    }

    pub fn slope_exponents(&self) -> &[i64] {
        &self.slopes
    }

    pub fn evaluate(&self, t: &Dyadic) -> Result<Dyadic> {
        if t < &Dyadic::zero() || t > &Dyadic::one() {
            return Err(Error::OutOfDomain(t.to_string()));
        }
        Ok(self.eval_unchecked(t))
    }

    fn eval_unchecked(&self, t: &Dyadic) -> Dyadic {
        let seg = self.breakpoints.partition_point(|b| b <= t).saturating_sub(1).min(self.slopes.len() - 1);
        self.values[seg].add(&t.sub(&self.breakpoints[seg]).mul_pow2(self.slopes[seg]))
    }

    /// `t -> self(other(t))`.
    pub fn compose(&self, other: &PlMap) -> PlMap {
        let other_inv = other.inverse();
        let mut points: Vec<Dyadic> = other.breakpoints.clone();
        points.extend(self.breakpoints.iter().map(|b| other_inv.eval_unchecked(b)));
        points.sort();
        points.dedup();
        let values = points.iter().map(|p| self.eval_unchecked(&other.eval_unchecked(p))).collect();
        PlMap::normalize(points, values).expect("composite of elements of F lies in F")
    }

    /// `(log2 slope at 0+, log2 slope at 1-)`; a homomorphism F -> Z^2.
    pub fn slope_hom(&self) -> (i64, i64) {
        (self.slopes[0], *self.slopes.last().expect("at least one segment"))
    }

    /// Payload: breakpoint count, then `(numerator, exponent)` for every
    /// breakpoint, then the same for every value.
    pub(crate) fn encode_payload(&self, out: &mut Vec<u8>) {
        put_uvarint(out, self.breakpoints.len() as u64);
        for d in self.breakpoints.iter().chain(&self.values) {
            put_bigint(out, &d.num);
            put_uvarint(out, u64::from(d.exp));
        }
    }

    pub(crate) fn decode_payload(r: &mut Reader<'_>) -> Result<Self> {
        let count = r.usize()?;
        let mut raw = Vec::with_capacity(2 * count.min(1 << 16));
        for _ in 0..2 * count {
            let num = r.bigint()?;
            let exp = u32::try_from(r.uvarint()?).map_err(|_| Error::Decode("exponent overflow".into()))?;
            let d = Dyadic::from_parts(num.clone(), exp);
            if d.num != num || d.exp != exp {
                return Err(Error::Decode("dyadic not in lowest terms".into()));
            }
            raw.push(d);
        }
        let values = raw.split_off(count);
        let map = PlMap::normalize(raw.clone(), values).map_err(|e| Error::Decode(e.to_string()))?;
        if map.breakpoints != raw {
            return Err(Error::Decode("PL map not in canonical form".into()));
        }
        Ok(map)
    }
}

impl Group for PlMap {
    fn identity_like(&self) -> Self {
        PlMap::identity()
    }

    fn is_identity(&self) -> bool {
        self.slopes == [0]
    }

    /// Right action: `self` first, then `rhs`.
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        Ok(rhs.compose(self))
    }

    fn inverse(&self) -> Self {
        PlMap {
            breakpoints: self.values.clone(),
            values: self.breakpoints.clone(),
            slopes: self.slopes.iter().map(|s| -s).collect(),
        }
    }
}

impl fmt::Display for PlMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = self.breakpoints.iter().zip(&self.values).map(|(b, v)| format!("{b}->{v}")).collect();
        write!(f, "PL[{}]", pairs.join(", "))
    }
}

fn x0() -> PlMap {
    PlMap::from_strs(&["0", "1/2", "3/4", "1"], &["0", "1/4", "1/2", "1"]).expect("x0 is valid")
}

fn x1() -> PlMap {
    PlMap::from_strs(&["0", "1/2", "3/4", "7/8", "1"], &["0", "1/2", "5/8", "3/4", "1"]).expect("x1 is valid")
}

/// The generator `x_j` of the infinite presentation.
///
/// `x_0` and `x_1` are the standard maps; for `j >= 2`,
/// `x_j = x_0^(j-1) · x_1 · x_0^(1-j)` in the group product.
pub fn generator_x(j: i64) -> Result<PlMap> {
    match j {
        j if j < 0 => Err(Error::InvalidParameter(format!("generator index must be >= 0, got {j}"))),
        0 => Ok(x0()),
        1 => Ok(x1()),
        j => {
            let x0 = x0();
            let conj = power(&x0, j - 1);
            Ok(conj.try_mul(&x1())?.try_mul(&conj.inverse())?)
        }
    }
}

/// The map `x_0 ∘ x_1^-1` (apply `x_1^-1`, then `x_0`).
///
/// It is the identity on [3/4, 1], so it commutes with every `x_j`,
/// `j >= 2`. In the group product it is the word `x_1^-1 · x_0`; the word
/// `x_0 · x_1^-1` does not commute with `x_2`.
pub fn x0_after_x1_inverse() -> PlMap {
    x0().compose(&x1().inverse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{commutator, commutes};

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    fn x(j: i64) -> PlMap {
        generator_x(j).unwrap()
    }

    #[test]
    fn dyadic_basics() {
        assert_eq!(Dyadic::new(2, 2), Dyadic::new(1, 1));
        assert_eq!(d("6/8").to_string(), "3/4");
        assert_eq!(d("4/2").to_string(), "2");
        assert!(d("1/4") < d("1/2"));
        assert_eq!(d("3/4").sub(&d("1/2")), d("1/4"));
        assert_eq!(d("3/8").mul_pow2(3), d("3"));
        assert_eq!(d("3").mul_pow2(-2), d("3/4"));
        assert_eq!(d("1/2").log2_ratio(&d("1/8")), Some(2));
        assert_eq!(d("3/4").log2_ratio(&d("1/4")), None);
        assert!("1/3".parse::<Dyadic>().is_err());
        assert!("1/0".parse::<Dyadic>().is_err());
    }

    #[test]
    fn normalize_merges_collinear() {
        let f = PlMap::from_strs(&["0", "1/2", "1"], &["0", "1/2", "1"]).unwrap();
        assert_eq!(f, PlMap::identity());
        assert_eq!(f.breakpoints().len(), 2);
    }

    #[test]
    fn normalize_rejects_bad_input() {
        // slope 3 on [0, 1/4]
        assert!(PlMap::from_strs(&["0", "1/4", "1"], &["0", "3/4", "1"]).is_err());
        assert!(PlMap::from_strs(&["0", "1/2", "1"], &["0", "1/2", "1/2"]).is_err());
        assert!(PlMap::from_strs(&["0", "1/2", "1"], &["0", "3/4"]).is_err());
        assert!(PlMap::from_strs(&["0", "1"], &["0", "1/2"]).is_err());
        assert!(PlMap::from_strs(&["0", "3/4", "1/2", "1"], &["0", "1/4", "1/2", "1"]).is_err());
    }

    #[test]
    fn x0_values() {
        assert_eq!(x(0).evaluate(&d("1/2")).unwrap(), d("1/4"));
        assert_eq!(x(0).evaluate(&d("3/4")).unwrap(), d("1/2"));
        assert_eq!(x(0).evaluate(&d("7/8")).unwrap(), d("3/4"));
        assert_eq!(x(0).slope_exponents(), &[-1, 0, 1]);
    }

    #[test]
    fn x1_is_half_copy_of_x0() {
        let x1 = x(1);
        assert_eq!(x1.evaluate(&d("1/4")).unwrap(), d("1/4"));
        for t in ["0", "1/4", "1/2", "3/4", "7/8", "1"] {
            let t = d(t);
            // x1(1/2 + t/2) = 1/2 + x0(t)/2
            let lhs = x1.evaluate(&d("1/2").add(&t.mul_pow2(-1))).unwrap();
            let rhs = d("1/2").add(&x(0).evaluate(&t).unwrap().mul_pow2(-1));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn evaluate_domain() {
        assert!(matches!(x(0).evaluate(&d("3/2")), Err(Error::OutOfDomain(_))));
        assert!(x(0).evaluate(&d("-1/2")).is_err());
        for j in 0..5 {
            assert_eq!(x(j).evaluate(&Dyadic::zero()).unwrap(), Dyadic::zero());
            assert_eq!(x(j).evaluate(&Dyadic::one()).unwrap(), Dyadic::one());
        }
    }

    #[test]
    fn conjugation_relation_small() {
        let x0 = x(0);
        for j in 2..10 {
            let lhs = x0.try_mul(&x(j)).unwrap().try_mul(&x0.inverse()).unwrap();
            assert_eq!(lhs, x(j + 1), "j = {j}");
        }
        // x_1 · x_2 · x_1^-1 = x_3 is not forced by construction
        let x1 = x(1);
        assert_eq!(x1.try_mul(&x(2)).unwrap().try_mul(&x1.inverse()).unwrap(), x(3));
    }

    #[test]
    fn negative_index_rejected() {
        assert!(generator_x(-1).is_err());
    }

    #[test]
    fn tail_element_commutes() {
        let t = x0_after_x1_inverse();
        for j in 2..=10 {
            assert!(commutator(&t, &x(j)).unwrap().is_identity(), "j = {j}");
        }
        assert!(!commutes(&t, &x(0)).unwrap());
        assert!(!commutes(&t, &x(1)).unwrap());
        // the other reading of the same two letters
        let word = x(0).try_mul(&x(1).inverse()).unwrap();
        assert!(!commutes(&word, &x(2)).unwrap());
        assert_eq!(t, x(1).inverse().try_mul(&x(0)).unwrap());
    }

    #[test]
    fn slope_hom_examples() {
        assert_eq!(PlMap::identity().slope_hom(), (0, 0));
        assert_eq!(x(0).slope_hom(), (-1, 1));
        assert_eq!(x(2).slope_hom(), (0, 1));
        assert_eq!(x0_after_x1_inverse().slope_hom(), (-1, 0));
    }

    #[test]
    fn inverse_composes_to_identity() {
        let f = x(3).try_mul(&x(0)).unwrap();
        assert!(f.compose(&f.inverse()).is_identity());
        assert!(f.inverse().compose(&f).is_identity());
    }
}
