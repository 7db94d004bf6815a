//! Seeded random and exhaustive instance sources.
//!
//! Randomness comes from a ChaCha8 stream seeded with a caller-supplied
//! 64-bit value: one draw per cross pair, an even draw orienting the lower id
//! towards the higher. The same spec therefore always yields the same
//! instance. Exhaustive enumeration walks all `2^P` orientations of the `P`
//! cross pairs in mask order, bit 0 belonging to the lexicographically first
//! pair and a zero bit meaning the lower id dominates.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::tournament::{Arc, MultipartiteTournament};

/// Largest cross-pair count accepted by [`enumerate_orientations`].
pub const ENUMERATION_PAIR_LIMIT: usize = 30;

/// What to generate: the part sizes, the seed, and how long rejection
/// sampling may look for a strong instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub part_sizes: Vec<usize>,
    pub seed: u64,
    pub max_attempts: usize,
}

impl GenSpec {
    pub fn new(part_sizes: Vec<usize>, seed: u64) -> Self {
        GenSpec {
            part_sizes,
            seed,
            max_attempts: 10_000,
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("no strong orientation found in {0} attempts")]
    AttemptsExhausted(usize),
    #[error("{pairs} cross pairs exceed the enumeration bound of {max}")]
    TooLarge { pairs: usize, max: usize },
}

/// Ordered cross-part pairs `(x, y)` with `x < y`, lexicographically.
pub fn cross_pairs(part_sizes: &[usize]) -> Vec<(usize, usize)> {
    let mut part_of = Vec::new();
    for (p, &s) in part_sizes.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, s));
    }
    let n = part_of.len();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if part_of[x] != part_of[y] {
                out.push((x, y));
            }
        }
    }
    out
}

fn orientation_from(part_sizes: &[usize], arcs: &[Arc]) -> MultipartiteTournament {
    MultipartiteTournament::new(part_sizes.to_vec(), arcs)
        .expect("generated arcs form a complete valid orientation")
}

/// One random orientation; identical specs give identical instances.
pub fn random_mpt(spec: &GenSpec) -> MultipartiteTournament {
    assert!(
        !spec.part_sizes.is_empty() && spec.part_sizes.iter().all(|&s| s > 0),
        "part sizes must be positive"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let arcs: Vec<Arc> = cross_pairs(&spec.part_sizes)
        .into_iter()
        .map(|(x, y)| {
            if rng.next_u32() & 1 == 0 {
                Arc::new(x, y)
            } else {
                Arc::new(y, x)
            }
        })
        .collect();
    orientation_from(&spec.part_sizes, &arcs)
}

/// Rejection-sample [`random_mpt`] with incrementing sub-seeds until the
/// instance is strong.
pub fn random_strong_mpt(spec: &GenSpec) -> Result<MultipartiteTournament, GenError> {
    for attempt in 0..spec.max_attempts {
        let sub = GenSpec {
            part_sizes: spec.part_sizes.clone(),
            seed: spec.seed.wrapping_add(attempt as u64),
            max_attempts: spec.max_attempts,
        };
        let d = random_mpt(&sub);
        if d.is_strong() {
            return Ok(d);
        }
    }
    Err(GenError::AttemptsExhausted(spec.max_attempts))
}

/// All `2^P` orientations, exactly once, in mask order.
pub struct OrientationIter {
    part_sizes: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    next: u64,
    total: u64,
}

impl Iterator for OrientationIter {
    type Item = MultipartiteTournament;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next == self.total {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let arcs: Vec<Arc> = self
            .pairs
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| {
                if mask >> i & 1 == 0 {
                    Arc::new(x, y)
                } else {
                    Arc::new(y, x)
                }
            })
            .collect();
        Some(orientation_from(&self.part_sizes, &arcs))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for OrientationIter {}

/// Stream every orientation of the given parts; errors when `2^P` would be
/// unreasonable.
pub fn enumerate_orientations(part_sizes: &[usize]) -> Result<OrientationIter, GenError> {
    let pairs = cross_pairs(part_sizes);
    if pairs.len() > ENUMERATION_PAIR_LIMIT {
        return Err(GenError::TooLarge {
            pairs: pairs.len(),
            max: ENUMERATION_PAIR_LIMIT,
        });
    }
    Ok(OrientationIter {
        part_sizes: part_sizes.to_vec(),
        total: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}
