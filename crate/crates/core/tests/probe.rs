//! Cayley-ball probe properties.

use commgraph::catalog::{heisenberg_set, nielsen_set};
use commgraph::certify::thompson_generators;
use commgraph::probe::{ball, ends_probe, DEFAULT_ELEMENT_CAP};
use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn predecessor_chains_replay() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for gens in [heisenberg_set(1).unwrap(), thompson_generators(4, 1).unwrap()] {
        let b = ball(&gens, 4, DEFAULT_ELEMENT_CAP).unwrap();
        for key in b.elements.keys().choose_multiple(&mut rng, 100) {
            let word = b.word_to(key).unwrap();
            assert_eq!(word.len() as u32, b.elements[key].distance);
            assert_eq!(&b.replay(&word).unwrap().key(), key);
        }
    }
}

#[test]
fn balls_are_nested() {
    let gens = heisenberg_set(1).unwrap();
    let small = ball(&gens, 3, DEFAULT_ELEMENT_CAP).unwrap();
    let large = ball(&gens, 4, DEFAULT_ELEMENT_CAP).unwrap();
    for (k, node) in &small.elements {
        assert_eq!(large.elements[k].distance, node.distance);
    }
    assert_eq!(&large.growth()[..4], &small.growth()[..]);
}

#[test]
fn reports_are_deterministic() {
    let gens = thompson_generators(4, 1).unwrap();
    let a = ends_probe(&gens, 1, 3, DEFAULT_ELEMENT_CAP).unwrap();
    let b = ends_probe(&gens, 1, 3, DEFAULT_ELEMENT_CAP).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.component_sizes.iter().sum::<usize>(), a.annulus_size);
}

#[test]
fn nielsen_set_is_closed_under_inverses() {
    // E_ab^-1 = E_{a b^-1}, so symmetrizing adds nothing
    let b = ball(&nielsen_set(3, 1).unwrap(), 1, DEFAULT_ELEMENT_CAP).unwrap();
    assert_eq!(b.generators.len(), 24);
    assert_eq!(b.len(), 25);
}
