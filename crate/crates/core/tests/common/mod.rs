//! Random element generators shared by the integration tests.
#![allow(dead_code)]

use commgraph::autfree::{FreeAutomorphism, NielsenLabel, SignedLetter, Word};
use commgraph::matrix::IntMatrix;
use commgraph::thompson::{generator_x, Dyadic, PlMap};
use commgraph::Group;
use rand::Rng;

pub fn random_letters<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Vec<SignedLetter> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=rank as i64);
            SignedLetter::new(if rng.gen_bool(0.5) { i } else { -i }, rank).unwrap()
        })
        .collect()
}

pub fn random_word<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    Word::reduce(rank, &random_letters(rng, rank, max_len)).unwrap()
}

pub fn random_automorphism<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> FreeAutomorphism {
    let labels = NielsenLabel::all(rank);
    let mut f = FreeAutomorphism::identity(rank);
    for _ in 0..rng.gen_range(0..=max_len) {
        let l = labels[rng.gen_range(0..labels.len())];
        f = f.try_mul(&l.automorphism(rank).unwrap()).unwrap();
    }
    f
}

pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for _ in 0..rng.gen_range(0..=max_len) {
        let i = rng.gen_range(1..=n);
        let mut j = rng.gen_range(1..=n);
        while j == i {
            j = rng.gen_range(1..=n);
        }
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        m = m.try_mul(&IntMatrix::elementary(n, i, j, sign).unwrap()).unwrap();
    }
    m
}

/// Upper unitriangular with entries in `-bound..=bound` above the diagonal.
pub fn random_unitriangular<R: Rng>(rng: &mut R, n: usize, bound: i64) -> IntMatrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match j.cmp(&i) {
                    std::cmp::Ordering::Less => 0,
                    std::cmp::Ordering::Equal => 1,
                    std::cmp::Ordering::Greater => rng.gen_range(-bound..=bound),
                })
                .collect()
        })
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    IntMatrix::from_rows(&refs).unwrap()
}

pub fn random_thompson<R: Rng>(rng: &mut R, max_index: i64, max_len: usize) -> PlMap {
    let mut f = PlMap::identity();
    for _ in 0..rng.gen_range(0..=max_len) {
        let x = generator_x(rng.gen_range(0..=max_index)).unwrap();
        let x = if rng.gen_bool(0.5) { x } else { x.inverse() };
        f = f.try_mul(&x).unwrap();
    }
    f
}

/// A dyadic rational in `[0, 1]` with denominator at most `2^max_exp`.
pub fn random_dyadic<R: Rng>(rng: &mut R, max_exp: u32) -> Dyadic {
    let exp = rng.gen_range(0..=max_exp);
    Dyadic::new(rng.gen_range(0..=(1i64 << exp)), exp)
}
