//! Property tests for the group engines.

mod common;

use commgraph::autfree::Word;
use commgraph::{power, Group, GroupElement};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn elements(seed: u64) -> Vec<GroupElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    vec![
        common::random_word(&mut rng, 3, 10).into(),
        common::random_automorphism(&mut rng, 3, 4).into(),
        common::random_matrix(&mut rng, 3, 6).into(),
        common::random_thompson(&mut rng, 4, 4).into(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn associativity(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        for ((x, y), z) in elements(a).iter().zip(elements(b)).zip(elements(c)) {
            let lhs = x.try_mul(&y).unwrap().try_mul(&z).unwrap();
            let rhs = x.try_mul(&y.try_mul(&z).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn inverses(a in any::<u64>()) {
        for x in elements(a) {
            prop_assert!(x.try_mul(&x.inverse()).unwrap().is_identity());
            prop_assert!(x.inverse().try_mul(&x).unwrap().is_identity());
            prop_assert_eq!(x.inverse().inverse(), x);
        }
    }

    #[test]
    fn power_additivity(a in any::<u64>(), p in -6i64..=6, q in -6i64..=6) {
        for x in elements(a) {
            prop_assert_eq!(power(&x, p + q), power(&x, p).try_mul(&power(&x, q)).unwrap());
        }
    }

    #[test]
    fn keys_round_trip(a in any::<u64>()) {
        for x in elements(a) {
            let key = x.key();
            prop_assert_eq!(GroupElement::from_key(&key).unwrap(), x.clone());
            prop_assert_eq!(commgraph::ElementKey::from_hex(&key.to_hex()).unwrap(), key);
        }
    }

    #[test]
    fn equal_elements_have_equal_keys(a in any::<u64>()) {
        // x (y y^-1) builds the same element along a different path
        let es = elements(a);
        let others = elements(a.wrapping_add(1));
        for (x, y) in es.iter().zip(&others) {
            let z = x.try_mul(y).unwrap().try_mul(&y.inverse()).unwrap();
            prop_assert_eq!(z.key(), x.key());
        }
    }

    #[test]
    fn free_reduction_idempotent(letters in proptest::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 0..24)) {
        let w = Word::from_letters(3, &letters).unwrap();
        prop_assert_eq!(Word::reduce(3, w.letters()).unwrap(), w.clone());
        prop_assert!(w.letters().windows(2).all(|p| p[0] != p[1].inverse()));
    }

    #[test]
    fn pl_composition_matches_evaluation(a in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(a);
        let f = common::random_thompson(&mut rng, 5, 5);
        let g = common::random_thompson(&mut rng, 5, 5);
        let fg = f.compose(&g);
        for _ in 0..8 {
            let t = common::random_dyadic(&mut rng, 10);
            prop_assert_eq!(fg.evaluate(&t).unwrap(), f.evaluate(&g.evaluate(&t).unwrap()).unwrap());
        }
    }
}

#[test]
fn mixed_engines_are_rejected() {
    let es = elements(1);
    assert!(es[0].try_mul(&es[2]).is_err());
    assert!(commgraph::commutes(&es[1], &es[3]).is_err());
}
