//! Vertices, canonical simplices and oriented simplices.

use std::fmt;

use itertools::Itertools;

use crate::error::{DecError, Result};
use crate::permutation::{sorting_sign, Sign};

/// Opaque vertex label. Ordering on ids fixes the canonical vertex order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

/// Convenience for literals in tests and examples: `vids(&[0, 1, 2])`.
pub fn vids(labels: &[u32]) -> Vec<VertexId> {
    labels.iter().copied().map(VertexId).collect()
}

/// An unoriented simplex stored as its ascending vertex list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// The ascending ordering, viewed as an oriented simplex.
    pub fn oriented(&self) -> OrientedSimplex {
        OrientedSimplex(self.0.clone())
    }

    /// All faces of dimension `dim`, in lexicographic order.
    pub fn faces(&self, dim: usize) -> impl Iterator<Item = Simplex> + '_ {
        self.0.iter().copied().combinations(dim + 1).map(Simplex)
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

/// A simplex together with an ordering of its vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrientedSimplex(Vec<VertexId>);

impl OrientedSimplex {
    pub fn new(vertices: Vec<VertexId>) -> Result<Self> {
        check_distinct(&vertices)?;
        Ok(OrientedSimplex(vertices))
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    /// Canonical simplex and the sign of this ordering relative to it.
    pub fn canonical(&self) -> (Simplex, Sign) {
        let sign = sorting_sign(&self.0);
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        (Simplex(sorted), sign)
    }

    /// The simplex with `self.vertices()[i]` removed, order otherwise kept.
    pub fn omit(&self, i: usize) -> OrientedSimplex {
        let mut v = self.0.clone();
        v.remove(i);
        OrientedSimplex(v)
    }
}

impl fmt::Debug for OrientedSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

impl From<Simplex> for OrientedSimplex {
    fn from(s: Simplex) -> Self {
        OrientedSimplex(s.0)
    }
}

fn check_distinct(vertices: &[VertexId]) -> Result<()> {
    for (i, v) in vertices.iter().enumerate() {
        if vertices[..i].contains(v) {
            return Err(DecError::DuplicateVertex(*v));
        }
    }
    Ok(())
}

/// Sorts `vertices` and reports the parity of the sorting permutation.
pub fn canonicalize(vertices: &[VertexId]) -> Result<(Simplex, Sign)> {
    check_distinct(vertices)?;
    let sign = sorting_sign(vertices);
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    Ok((Simplex(sorted), sign))
}
