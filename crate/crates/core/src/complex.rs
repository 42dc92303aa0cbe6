//! Abstract simplicial complexes built by face closure.

use std::collections::BTreeMap;

use crate::error::{DecError, Result};
use crate::simplex::{canonicalize, OrientedSimplex, Simplex, VertexId};

/// A face-closed set of simplices. Each stored simplex remembers a chosen
/// orientation: the listed ordering for declared top simplices, ascending
/// order for every generated face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    levels: Vec<BTreeMap<Simplex, OrientedSimplex>>,
}

impl SimplicialComplex {
    /// Builds the closure of the given simplices.
    pub fn closure<S: AsRef<[VertexId]>>(top_simplices: &[S]) -> Result<Self> {
        let mut declared = Vec::with_capacity(top_simplices.len());
        for s in top_simplices {
            let oriented = OrientedSimplex::new(s.as_ref().to_vec())?;
            declared.push(oriented);
        }
        let dim = declared
            .iter()
            .map(OrientedSimplex::dimension)
            .max()
            .ok_or(DecError::EmptyComplex)?;

        let mut levels = vec![BTreeMap::new(); dim + 1];
        for top in &declared {
            let (canon, _) = top.canonical();
            for (k, level) in levels.iter_mut().enumerate().take(top.dimension()) {
                for face in canon.faces(k) {
                    level.entry(face.clone()).or_insert_with(|| face.oriented());
                }
            }
        }
        // declared orderings win over generated ascending ones
        for top in declared {
            let (canon, _) = top.canonical();
            levels[canon.dimension()].insert(canon, top);
        }
        Ok(SimplicialComplex { levels })
    }

    pub fn dimension(&self) -> usize {
        self.levels.len() - 1
    }

    /// Canonical `k`-simplices with their chosen orientations, in canonical order.
    pub fn simplices(&self, k: usize) -> impl Iterator<Item = (&Simplex, &OrientedSimplex)> {
        self.levels.get(k).into_iter().flatten()
    }

    pub fn count(&self, k: usize) -> usize {
        self.levels.get(k).map_or(0, BTreeMap::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.levels.iter().map(BTreeMap::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.levels
            .iter()
            .enumerate()
            .map(|(k, level)| if k % 2 == 0 { level.len() as i64 } else { -(level.len() as i64) })
            .sum()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.simplices(0).map(|(s, _)| s.vertices()[0])
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.levels
            .get(s.dimension())
            .is_some_and(|level| level.contains_key(s))
    }

    /// True when the vertex set spans a simplex of the complex, in any order.
    pub fn spans(&self, vertices: &[VertexId]) -> bool {
        canonicalize(vertices).is_ok_and(|(s, _)| self.contains(&s))
    }

    pub fn orientation(&self, s: &Simplex) -> Option<&OrientedSimplex> {
        self.levels.get(s.dimension()).and_then(|level| level.get(s))
    }

    pub(crate) fn require(&self, s: &Simplex) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(DecError::SimplexNotInComplex(s.vertices().to_vec()))
        }
    }
}
