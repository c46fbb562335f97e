//! The group-engine contract and the operations every engine gets for free.
//!
//! An engine is a faithful concrete representation of a group: reduced words
//! in a free group, automorphisms of a free group given by basis images,
//! unimodular integer matrices, or dyadic piecewise-linear maps. Equality in
//! each engine is equality of a canonical form, so it is always decidable.
//!
//! # Element keys
//!
//! [`ElementKey`] is the canonical byte serialization of an element:
//!
//! ```text
//! byte 0      engine id: 0x01 word, 0x02 automorphism, 0x03 matrix, 0x04 thompson
//! bytes 1..   engine payload (see the `encode_payload` docs of each engine)
//! ```
//!
//! Payloads are built from three primitives: LEB128 unsigned varints,
//! zig-zag signed varints, and big integers written as a varint byte count
//! followed by minimal two's-complement big-endian bytes. Decoding rejects
//! non-minimal encodings, so keys are equal exactly when elements are equal.

pub mod encoding;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::autfree::{FreeAutomorphism, Word};
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::thompson::PlMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineId {
    Word,
    Automorphism,
    Matrix,
    Thompson,
}

impl EngineId {
    pub fn tag(self) -> u8 {
        match self {
            EngineId::Word => 0x01,
            EngineId::Automorphism => 0x02,
            EngineId::Matrix => 0x03,
            EngineId::Thompson => 0x04,
        }
    }

    pub fn from_tag(tag: u8) -> Option<Self> {
        match tag {
            0x01 => Some(EngineId::Word),
            0x02 => Some(EngineId::Automorphism),
            0x03 => Some(EngineId::Matrix),
            0x04 => Some(EngineId::Thompson),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EngineId::Word => "word",
            EngineId::Automorphism => "automorphism",
            EngineId::Matrix => "matrix",
            EngineId::Thompson => "thompson",
        }
    }
}

impl fmt::Display for EngineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Canonical serialization of a group element. Serialized as lowercase hex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementKey(Vec<u8>);

impl ElementKey {
    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        Self(bytes)
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn engine(&self) -> Option<EngineId> {
        self.0.first().copied().and_then(EngineId::from_tag)
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        hex::decode(s).map(Self).map_err(|e| Error::Decode(format!("bad hex: {e}")))
    }
}

impl fmt::Debug for ElementKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ElementKey({})", self.to_hex())
    }
}

impl Serialize for ElementKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for ElementKey {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        ElementKey::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

/// Operations every engine provides.
///
/// `try_mul` fails only when the operands live in incompatible ambient
/// groups (different rank, dimension or engine).
pub trait Group: Clone + PartialEq {
    fn identity_like(&self) -> Self;
    fn is_identity(&self) -> bool;
    fn try_mul(&self, rhs: &Self) -> Result<Self>;
    fn inverse(&self) -> Self;
}

/// `g^k` by repeated squaring on `|k|`.
pub fn power<G: Group>(g: &G, k: i64) -> G {
    let mut base = if k < 0 { g.inverse() } else { g.clone() };
    let mut exp = k.unsigned_abs();
    let mut acc = g.identity_like();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc.try_mul(&base).expect("powers of one element share an ambient group");
        }
        exp >>= 1;
        if exp > 0 {
            base = base.try_mul(&base).expect("powers of one element share an ambient group");
        }
    }
    acc
}

/// `[g, h] = g h g^-1 h^-1`.
pub fn commutator<G: Group>(g: &G, h: &G) -> Result<G> {
    g.try_mul(h)?.try_mul(&g.inverse())?.try_mul(&h.inverse())
}

/// `g h == h g`, without building the commutator.
pub fn commutes<G: Group>(g: &G, h: &G) -> Result<bool> {
    Ok(g.try_mul(h)? == h.try_mul(g)?)
}

/// All `(p, q)` with `0 < max(|p|, |q|) <= bound` and `g^p h^q = 1`, in
/// lexicographic order.
///
/// This is a sanity oracle only: an empty result means no relation exists
/// inside the box, not that `g` and `h` are independent.
pub fn relation_search<G: Group>(g: &G, h: &G, bound: u32) -> Result<Vec<(i64, i64)>> {
    if bound == 0 {
        return Err(Error::InvalidParameter("relation_search bound must be >= 1".into()));
    }
    let b = i64::from(bound);
    // check compatibility once, so the loop below cannot fail
    g.try_mul(h)?;
    let g_powers = power_table(g, b);
    let h_powers = power_table(h, b);
    let mut found = Vec::new();
    for p in -b..=b {
        let gp = &g_powers[(p + b) as usize];
        for q in -b..=b {
            if p == 0 && q == 0 {
                continue;
            }
            let prod = gp.try_mul(&h_powers[(q + b) as usize])?;
            if prod.is_identity() {
                found.push((p, q));
            }
        }
    }
    Ok(found)
}

/// `[g^-b, ..., g^0, ..., g^b]`, built incrementally.
fn power_table<G: Group>(g: &G, b: i64) -> Vec<G> {
    let inv = g.inverse();
    let mut neg = Vec::with_capacity(b as usize);
    let mut pos = Vec::with_capacity(b as usize);
    let mut cur_neg = g.identity_like();
    let mut cur_pos = g.identity_like();
    for _ in 0..b {
        cur_neg = cur_neg.try_mul(&inv).expect("same ambient group");
        cur_pos = cur_pos.try_mul(g).expect("same ambient group");
        neg.push(cur_neg.clone());
        pos.push(cur_pos.clone());
    }
    neg.reverse();
    neg.push(g.identity_like());
    neg.extend(pos);
    neg
}

/// An element of any engine.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Word(Word),
    Automorphism(FreeAutomorphism),
    Matrix(IntMatrix),
    Thompson(PlMap),
}

impl GroupElement {
    pub fn engine(&self) -> EngineId {
        match self {
            GroupElement::Word(_) => EngineId::Word,
            GroupElement::Automorphism(_) => EngineId::Automorphism,
            GroupElement::Matrix(_) => EngineId::Matrix,
            GroupElement::Thompson(_) => EngineId::Thompson,
        }
    }

    pub fn key(&self) -> ElementKey {
        let mut out = vec![self.engine().tag()];
        match self {
            GroupElement::Word(w) => w.encode_payload(&mut out),
            GroupElement::Automorphism(f) => f.encode_payload(&mut out),
            GroupElement::Matrix(m) => m.encode_payload(&mut out),
            GroupElement::Thompson(p) => p.encode_payload(&mut out),
        }
        ElementKey(out)
    }

    pub fn from_key(key: &ElementKey) -> Result<Self> {
        let (&tag, payload) = key.0.split_first().ok_or_else(|| Error::Decode("empty key".into()))?;
        let engine = EngineId::from_tag(tag).ok_or_else(|| Error::Decode(format!("unknown engine id {tag:#04x}")))?;
        let mut r = encoding::Reader::new(payload);
        let element = match engine {
            EngineId::Word => GroupElement::Word(Word::decode_payload(&mut r)?),
            EngineId::Automorphism => GroupElement::Automorphism(FreeAutomorphism::decode_payload(&mut r)?),
            EngineId::Matrix => GroupElement::Matrix(IntMatrix::decode_payload(&mut r)?),
            EngineId::Thompson => GroupElement::Thompson(PlMap::decode_payload(&mut r)?),
        };
        r.finish()?;
        Ok(element)
    }

    pub fn as_matrix(&self) -> Option<&IntMatrix> {
        match self {
            GroupElement::Matrix(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_automorphism(&self) -> Option<&FreeAutomorphism> {
        match self {
            GroupElement::Automorphism(f) => Some(f),
            _ => None,
        }
    }

    pub fn as_thompson(&self) -> Option<&PlMap> {
        match self {
            GroupElement::Thompson(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_word(&self) -> Option<&Word> {
        match self {
            GroupElement::Word(w) => Some(w),
            _ => None,
        }
    }
}

impl Group for GroupElement {
    fn identity_like(&self) -> Self {
        match self {
            GroupElement::Word(w) => GroupElement::Word(w.identity_like()),
            GroupElement::Automorphism(f) => GroupElement::Automorphism(f.identity_like()),
            GroupElement::Matrix(m) => GroupElement::Matrix(m.identity_like()),
            GroupElement::Thompson(p) => GroupElement::Thompson(p.identity_like()),
        }
    }

    fn is_identity(&self) -> bool {
        match self {
            GroupElement::Word(w) => w.is_identity(),
            GroupElement::Automorphism(f) => f.is_identity(),
            GroupElement::Matrix(m) => m.is_identity(),
            GroupElement::Thompson(p) => p.is_identity(),
        }
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        Ok(match (self, rhs) {
            (GroupElement::Word(a), GroupElement::Word(b)) => GroupElement::Word(a.try_mul(b)?),
            (GroupElement::Automorphism(a), GroupElement::Automorphism(b)) => GroupElement::Automorphism(a.try_mul(b)?),
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => GroupElement::Matrix(a.try_mul(b)?),
            (GroupElement::Thompson(a), GroupElement::Thompson(b)) => GroupElement::Thompson(a.try_mul(b)?),
            _ => return Err(Error::MixedEngines { left: self.engine(), right: rhs.engine() }),
        })
    }

    fn inverse(&self) -> Self {
        match self {
            GroupElement::Word(w) => GroupElement::Word(w.inverse()),
            GroupElement::Automorphism(f) => GroupElement::Automorphism(f.inverse()),
            GroupElement::Matrix(m) => GroupElement::Matrix(m.inverse()),
            GroupElement::Thompson(p) => GroupElement::Thompson(p.inverse()),
        }
    }
}

impl From<Word> for GroupElement {
    fn from(w: Word) -> Self {
        GroupElement::Word(w)
    }
}

impl From<FreeAutomorphism> for GroupElement {
    fn from(f: FreeAutomorphism) -> Self {
        GroupElement::Automorphism(f)
    }
}

impl From<IntMatrix> for GroupElement {
    fn from(m: IntMatrix) -> Self {
        GroupElement::Matrix(m)
    }
}

impl From<PlMap> for GroupElement {
    fn from(p: PlMap) -> Self {
        GroupElement::Thompson(p)
    }
}
