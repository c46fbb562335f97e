//! Free groups F_n as reduced words, and automorphisms of F_n given by the
//! images of the positive basis letters.
//!
//! An automorphism always carries the images of its inverse too; that pair
//! is the invertibility witness and is checked whenever an automorphism is
//! built from raw data.
//!
//! Composition is functional: `f.compose(&g)` applies `g` first.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigInt;

use crate::engine::encoding::{put_ivarint, put_uvarint, Reader};
use crate::engine::Group;
use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// A basis letter `x_i` or its inverse, stored as `+i` / `-i` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedLetter(i32);

impl SignedLetter {
    pub fn new(letter: i64, rank: usize) -> Result<Self> {
        let index = letter.unsigned_abs();
        if letter == 0 || index > rank as u64 || index > i32::MAX as u64 {
            return Err(Error::InvalidLetter { letter, rank });
        }
        Ok(SignedLetter(letter as i32))
    }

    pub fn positive(index: usize) -> Self {
        SignedLetter(index as i32)
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Self {
        SignedLetter(-self.0)
    }

    pub fn value(self) -> i64 {
        i64::from(self.0)
    }

    /// The letters of `E = X ∪ X^-1` in the order x1, x1^-1, x2, x2^-1, ...
    pub fn all(rank: usize) -> impl Iterator<Item = SignedLetter> {
        (1..=rank as i32).flat_map(|i| [SignedLetter(i), SignedLetter(-i)])
    }
}

impl fmt::Display for SignedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "x{}", self.index())
        } else {
            write!(f, "x{}^-1", self.index())
        }
    }
}

impl FromStr for SignedLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("bad letter {s:?}"));
        let body = s.trim().strip_prefix('x').ok_or_else(bad)?;
        let (digits, positive) = match body.strip_suffix("^-1") {
            Some(d) => (d, false),
            None => (body, true),
        };
        let index: i32 = digits.parse().map_err(|_| bad())?;
        if index <= 0 {
            return Err(bad());
        }
        Ok(SignedLetter(if positive { index } else { -index }))
    }
}

fn push_reduced(stack: &mut Vec<SignedLetter>, l: SignedLetter) {
    if stack.last() == Some(&l.inverse()) {
        stack.pop();
    } else {
        stack.push(l);
    }
}

/// A freely reduced word in F_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    rank: usize,
    letters: Vec<SignedLetter>,
}

impl Word {
    pub fn identity(rank: usize) -> Self {
        Word { rank, letters: Vec::new() }
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce(rank: usize, raw: &[SignedLetter]) -> Result<Self> {
        let mut letters = Vec::with_capacity(raw.len());
        for &l in raw {
            if l.index() > rank {
                return Err(Error::InvalidLetter { letter: l.value(), rank });
            }
            push_reduced(&mut letters, l);
        }
        Ok(Word { rank, letters })
    }

    /// Like [`Word::reduce`] for letters already known to be in range.
    pub fn from_signed(rank: usize, raw: &[SignedLetter]) -> Self {
        Self::reduce(rank, raw).expect("letters within rank")
    }

    /// Builds a reduced word from signed indices, e.g. `[1, -2]` for `x1 x2^-1`.
    pub fn from_letters(rank: usize, raw: &[i64]) -> Result<Self> {
        let letters = raw.iter().map(|&l| SignedLetter::new(l, rank)).collect::<Result<Vec<_>>>()?;
        Self::reduce(rank, &letters)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum of each basis letter.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.rank];
        for l in &self.letters {
            sums[l.index() - 1] += if l.is_positive() { 1 } else { -1 };
        }
        sums
    }

    fn inverse_letters(&self) -> impl Iterator<Item = SignedLetter> + '_ {
        self.letters.iter().rev().map(|l| l.inverse())
    }

    pub(crate) fn encode_payload(&self, out: &mut Vec<u8>) {
        put_uvarint(out, self.rank as u64);
        self.encode_letters(out);
    }

    fn encode_letters(&self, out: &mut Vec<u8>) {
        put_uvarint(out, self.letters.len() as u64);
        for l in &self.letters {
            put_ivarint(out, l.value());
        }
    }

    pub(crate) fn decode_payload(r: &mut Reader<'_>) -> Result<Self> {
        let rank = r.usize()?;
        Self::decode_letters(r, rank)
    }

    fn decode_letters(r: &mut Reader<'_>, rank: usize) -> Result<Self> {
        let len = r.usize()?;
        let mut letters = Vec::with_capacity(len.min(1 << 16));
        for _ in 0..len {
            letters.push(SignedLetter::new(r.ivarint()?, rank).map_err(|e| Error::Decode(e.to_string()))?);
        }
        let word = Word::reduce(rank, &letters)?;
        if word.letters != letters {
            return Err(Error::Decode("word is not freely reduced".into()));
        }
        Ok(word)
    }
}

impl Group for Word {
    fn identity_like(&self) -> Self {
        Word::identity(self.rank)
    }

    fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.rank != rhs.rank {
            return Err(Error::RankMismatch { left: self.rank, right: rhs.rank });
        }
        let mut letters = self.letters.clone();
        for &l in &rhs.letters {
            push_reduced(&mut letters, l);
        }
        Ok(Word { rank: self.rank, letters })
    }

    fn inverse(&self) -> Self {
        Word { rank: self.rank, letters: self.inverse_letters().collect() }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// An automorphism of F_n, stored as the images of `x1..xn` together with
/// the images under its inverse.
#[derive(Debug, Clone)]
pub struct FreeAutomorphism {
    rank: usize,
    images: Vec<Word>,
    inverse_images: Vec<Word>,
}

// An endomorphism of a free group is determined by the basis images.
impl PartialEq for FreeAutomorphism {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.images == other.images
    }
}

impl Eq for FreeAutomorphism {}

impl Hash for FreeAutomorphism {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rank.hash(state);
        self.images.hash(state);
    }
}

fn substitute(images: &[Word], w: &Word) -> Word {
    let mut letters = Vec::with_capacity(w.len() * 2);
    for &l in w.letters() {
        let image = &images[l.index() - 1];
        if l.is_positive() {
            for &m in image.letters() {
                push_reduced(&mut letters, m);
            }
        } else {
            for m in image.inverse_letters() {
                push_reduced(&mut letters, m);
            }
        }
    }
    Word { rank: w.rank, letters }
}

impl FreeAutomorphism {
    pub fn identity(rank: usize) -> Self {
        let images: Vec<Word> = (1..=rank).map(|i| Word { rank, letters: vec![SignedLetter::positive(i)] }).collect();
        FreeAutomorphism { rank, inverse_images: images.clone(), images }
    }

    /// Builds an automorphism from basis images and the basis images of its
    /// claimed inverse; both composites must be the identity.
    pub fn from_images_with_inverse(images: Vec<Word>, inverse_images: Vec<Word>) -> Result<Self> {
        let rank = images.len();
        if inverse_images.len() != rank {
            return Err(Error::RankMismatch { left: rank, right: inverse_images.len() });
        }
        for w in images.iter().chain(&inverse_images) {
            if w.rank != rank {
                return Err(Error::RankMismatch { left: rank, right: w.rank });
            }
        }
        let f = FreeAutomorphism { rank, images, inverse_images };
        let forward = FreeAutomorphism { rank, images: f.images.clone(), inverse_images: f.images.clone() };
        let backward =
            FreeAutomorphism { rank, images: f.inverse_images.clone(), inverse_images: f.inverse_images.clone() };
        let id = FreeAutomorphism::identity(rank);
        if forward.compose_unchecked(&backward).images != id.images
            || backward.compose_unchecked(&forward).images != id.images
        {
            return Err(Error::NotInvertible("supplied inverse images do not invert".into()));
        }
        Ok(f)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn inverse_images(&self) -> &[Word] {
        &self.inverse_images
    }

    pub fn apply(&self, w: &Word) -> Result<Word> {
        if w.rank != self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: w.rank });
        }
        Ok(substitute(&self.images, w))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(self.compose_unchecked(other))
    }

    fn compose_unchecked(&self, other: &Self) -> Self {
        FreeAutomorphism {
            rank: self.rank,
            images: other.images.iter().map(|w| substitute(&self.images, w)).collect(),
            inverse_images: self.inverse_images.iter().map(|w| substitute(&other.inverse_images, w)).collect(),
        }
    }

    /// Exponent-sum matrix (basis images as columns) and its determinant sign.
    pub fn abelianization(&self) -> Abelianization {
        let n = self.rank;
        let mut entries = vec![BigInt::from(0); n * n];
        for (col, image) in self.images.iter().enumerate() {
            for (row, sum) in image.exponent_sums().into_iter().enumerate() {
                entries[row * n + col] = BigInt::from(sum);
            }
        }
        let matrix = IntMatrix::new(n, entries).expect("abelianized automorphism is unimodular");
        let det_sign = if matrix.determinant() > BigInt::from(0) { 1 } else { -1 };
        Abelianization { matrix, det_sign }
    }

    /// Payload: rank, then the `n` image words (length + letters each), then
    /// the `n` inverse image words in the same layout.
    pub(crate) fn encode_payload(&self, out: &mut Vec<u8>) {
        put_uvarint(out, self.rank as u64);
        for w in self.images.iter().chain(&self.inverse_images) {
            w.encode_letters(out);
        }
    }

    pub(crate) fn decode_payload(r: &mut Reader<'_>) -> Result<Self> {
        let rank = r.usize()?;
        let mut words = Vec::with_capacity(2 * rank.min(1 << 12));
        for _ in 0..2 * rank {
            words.push(Word::decode_letters(r, rank)?);
        }
        let inverse_images = words.split_off(rank);
        FreeAutomorphism::from_images_with_inverse(words, inverse_images).map_err(|e| Error::Decode(e.to_string()))
    }
}

impl Group for FreeAutomorphism {
    fn identity_like(&self) -> Self {
        FreeAutomorphism::identity(self.rank)
    }

    fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.letters.len() == 1 && w.letters[0] == SignedLetter::positive(i + 1))
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.compose(rhs)
    }

    fn inverse(&self) -> Self {
        FreeAutomorphism { rank: self.rank, images: self.inverse_images.clone(), inverse_images: self.images.clone() }
    }
}

impl fmt::Display for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x{} -> {w}", i + 1)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Abelianization {
    pub matrix: IntMatrix,
    pub det_sign: i8,
}

/// The Nielsen map `E_ab`: `a -> ab`, every other basis letter fixed.
///
/// For `a = x^-1` the positive letter moves as `x -> b^-1 x`, so that
/// `E_ab(x^-1) = x^-1 b`. The inverse is `E_{a b^-1}`.
pub fn nielsen(a: SignedLetter, b: SignedLetter, rank: usize) -> Result<FreeAutomorphism> {
    NielsenLabel::new(a, b, rank)?.automorphism(rank)
}

/// Names a Nielsen map `E_ab` with `a != b, b^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NielsenLabel {
    pub a: SignedLetter,
    pub b: SignedLetter,
}

impl NielsenLabel {
    pub fn new(a: SignedLetter, b: SignedLetter, rank: usize) -> Result<Self> {
        for l in [a, b] {
            if l.index() > rank {
                return Err(Error::InvalidLetter { letter: l.value(), rank });
            }
        }
        if a.index() == b.index() {
            return Err(Error::InvalidNielsen(format!("need a != b, b^-1 (a = {a}, b = {b})")));
        }
        Ok(NielsenLabel { a, b })
    }

    /// All `4n(n-1)` valid labels, ordered by `a` then `b` in [`SignedLetter::all`] order.
    pub fn all(rank: usize) -> Vec<NielsenLabel> {
        let mut out = Vec::with_capacity(4 * rank * rank.saturating_sub(1));
        for a in SignedLetter::all(rank) {
            for b in SignedLetter::all(rank) {
                if a.index() != b.index() {
                    out.push(NielsenLabel { a, b });
                }
            }
        }
        out
    }

    pub fn automorphism(&self, rank: usize) -> Result<FreeAutomorphism> {
        let NielsenLabel { a, b } = *self;
        NielsenLabel::new(a, b, rank)?;
        let moved = |b: SignedLetter| {
            let x = SignedLetter::positive(a.index());
            if a.is_positive() {
                Word::from_signed(rank, &[x, b])
            } else {
                Word::from_signed(rank, &[b.inverse(), x])
            }
        };
        let mut f = FreeAutomorphism::identity(rank);
        f.images[a.index() - 1] = moved(b);
        f.inverse_images[a.index() - 1] = moved(b.inverse());
        Ok(f)
    }

    /// The commuting criterion `[E_ab, E_cd] = 1` when `a != c, d, d^-1`
    /// and `b != c, c^-1`, tried in both orders.
    pub fn index_condition(&self, other: &NielsenLabel) -> bool {
        let one_way =
            |p: &NielsenLabel, q: &NielsenLabel| p.a != q.a && p.a.index() != q.b.index() && p.b.index() != q.a.index();
        self != other && (one_way(self, other) || one_way(other, self))
    }
}

impl fmt::Display for NielsenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({},{})", self.a, self.b)
    }
}

impl FromStr for NielsenLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("bad Nielsen label {s:?}"));
        let inner = s.trim().strip_prefix("E(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        let a: SignedLetter = a.parse()?;
        let b: SignedLetter = b.parse()?;
        if a.index() == b.index() {
            return Err(Error::InvalidNielsen(format!("need a != b, b^-1 in {s:?}")));
        }
        Ok(NielsenLabel { a, b })
    }
}
