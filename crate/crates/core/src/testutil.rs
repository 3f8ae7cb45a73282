//! Shared generators for unit tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::schema::SuperDim;
use crate::tangle::{BraidWord, Letter};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn d(m: usize, n: usize) -> SuperDim {
    SuperDim::new(m, n).unwrap()
}

pub fn random_letter<R: Rng>(rng: &mut R, strands: usize) -> Letter {
    let pos = rng.gen_range(1..strands);
    match rng.gen_range(0..3) {
        0 => Letter::sigma(pos),
        1 => Letter::sigma_inv(pos),
        _ => Letter::chi(pos),
    }
}

/// A random virtual braid word on `strands ≥ 2` strands.
pub fn random_braid<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    BraidWord { strands, letters: (0..len).map(|_| random_letter(rng, strands)).collect() }
}

/// A random classical braid word (no virtual letters).
pub fn random_classical<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let pos = rng.gen_range(1..strands);
            if rng.gen_bool(0.5) {
                Letter::sigma(pos)
            } else {
                Letter::sigma_inv(pos)
            }
        })
        .collect();
    BraidWord { strands, letters }
}
