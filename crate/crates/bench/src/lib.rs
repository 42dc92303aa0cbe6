//! Shared fixtures for the benchmarks.

use dec_core::{Cochain, Scalar, SimplicialComplex, VertexId};

/// Closure of the standard `n`-simplex on vertices `0..=n`.
pub fn full_simplex(n: u32) -> SimplicialComplex {
    SimplicialComplex::closure(&[(0..=n).map(VertexId).collect::<Vec<_>>()]).expect("nonempty")
}

/// Dense cochain with deterministic, non-trivial rational values.
pub fn sample_cochain(complex: &SimplicialComplex, degree: usize, salt: i64) -> Cochain {
    let mut c = Cochain::zero(degree);
    for (i, (_, s)) in complex.simplices(degree).enumerate() {
        let i = i as i64;
        let value = Scalar::new((i * 37 + salt * 11) % 41 - 20, (i + salt) % 13 + 1);
        c.set(s.vertices(), value).expect("simplex of the complex");
    }
    c
}
