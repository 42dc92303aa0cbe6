#![allow(dead_code)]

use std::collections::BTreeMap;

use dec_core::{Cochain, Scalar, SimplicialComplex, SimplicialMap, VertexId};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn full_simplex(n: u32) -> SimplicialComplex {
    SimplicialComplex::closure(&[(0..=n).map(VertexId).collect::<Vec<_>>()]).unwrap()
}

pub fn scalar(rng: &mut impl Rng) -> Scalar {
    Scalar::new(rng.random_range(-100i64..=100), rng.random_range(1i64..=100))
}

pub fn random_cochain(rng: &mut impl Rng, complex: &SimplicialComplex, degree: usize) -> Cochain {
    let mut c = Cochain::zero(degree);
    for (_, s) in complex.simplices(degree) {
        c.set(s.vertices(), scalar(rng)).unwrap();
    }
    c
}

/// A few random top simplices (random orderings) on `vertices` labels, of
/// dimension at most `max_dim`.
pub fn random_complex(rng: &mut impl Rng, vertices: u32, max_dim: usize) -> SimplicialComplex {
    let labels: Vec<VertexId> = (0..vertices).map(VertexId).collect();
    let count = rng.random_range(1..=4);
    let mut tops = Vec::new();
    for _ in 0..count {
        let dim = rng.random_range(0..=max_dim.min(vertices as usize - 1));
        let mut pick = labels.clone();
        pick.shuffle(rng);
        pick.truncate(dim + 1);
        tops.push(pick);
    }
    SimplicialComplex::closure(&tops).unwrap()
}

/// Rejection-samples a vertex map `source → target` with the spanning property.
pub fn random_map<'a>(
    rng: &mut impl Rng,
    source: &'a SimplicialComplex,
    target: &'a SimplicialComplex,
) -> Option<SimplicialMap<'a>> {
    let images: Vec<VertexId> = target.vertices().collect();
    for _ in 0..200 {
        let vmap: BTreeMap<_, _> = source
            .vertices()
            .map(|v| (v, images[rng.random_range(0..images.len())]))
            .collect();
        if let Ok(f) = SimplicialMap::validate(source, target, vmap) {
            return Some(f);
        }
    }
    None
}
