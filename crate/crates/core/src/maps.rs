//! Abstract simplicial maps, the induced chain map and cochain pullback.

use std::collections::BTreeMap;

use crate::chain::Chain;
use crate::cochain::Cochain;
use crate::complex::SimplicialComplex;
use crate::error::{DecError, Result};
use crate::simplex::{OrientedSimplex, VertexId};

/// A vertex map whose image of every source simplex spans a target simplex.
#[derive(Debug, Clone)]
pub struct SimplicialMap<'a> {
    source: &'a SimplicialComplex,
    target: &'a SimplicialComplex,
    vertex_map: BTreeMap<VertexId, VertexId>,
}

impl<'a> SimplicialMap<'a> {
    /// Checks totality and the spanning property over every source simplex,
    /// reporting the first violation in canonical order.
    pub fn validate(
        source: &'a SimplicialComplex,
        target: &'a SimplicialComplex,
        vertex_map: BTreeMap<VertexId, VertexId>,
    ) -> Result<Self> {
        for v in source.vertices() {
            let image = *vertex_map.get(&v).ok_or(DecError::MissingVertexImage(v))?;
            if !target.spans(&[image]) {
                return Err(DecError::ImageNotInTarget(image));
            }
        }
        let map = SimplicialMap { source, target, vertex_map };
        for k in 1..=source.dimension() {
            for (s, _) in source.simplices(k) {
                let mut image = map.image(s.vertices());
                image.sort_unstable();
                image.dedup();
                if !target.spans(&image) {
                    return Err(DecError::SpanningViolation(s.vertices().to_vec()));
                }
            }
        }
        Ok(map)
    }

    pub fn identity(complex: &'a SimplicialComplex) -> Self {
        let vertex_map = complex.vertices().map(|v| (v, v)).collect();
        SimplicialMap { source: complex, target: complex, vertex_map }
    }

    /// `next ∘ self`, revalidated.
    pub fn then(&self, next: &SimplicialMap<'a>) -> Result<SimplicialMap<'a>> {
        if self.target != next.source {
            return Err(DecError::NotComposable);
        }
        let vertex_map = self
            .vertex_map
            .iter()
            .map(|(&u, v)| Ok((u, next.apply(*v).ok_or(DecError::MissingVertexImage(*v))?)))
            .collect::<Result<_>>()?;
        SimplicialMap::validate(self.source, next.target, vertex_map)
    }

    pub fn source(&self) -> &'a SimplicialComplex {
        self.source
    }

    pub fn target(&self) -> &'a SimplicialComplex {
        self.target
    }

    pub fn vertex_map(&self) -> &BTreeMap<VertexId, VertexId> {
        &self.vertex_map
    }

    pub fn apply(&self, v: VertexId) -> Option<VertexId> {
        self.vertex_map.get(&v).copied()
    }

    /// True when the vertex map identifies some pair of source vertices.
    pub fn collapses(&self) -> bool {
        let mut images: Vec<_> = self.vertex_map.values().collect();
        images.sort_unstable();
        images.windows(2).any(|w| w[0] == w[1])
    }

    fn image(&self, vertices: &[VertexId]) -> Vec<VertexId> {
        vertices.iter().map(|v| self.vertex_map[v]).collect()
    }

    /// Image ordering of an oriented source simplex, or `None` when two of
    /// its vertices land on the same target vertex.
    fn image_if_distinct(&self, vertices: &[VertexId]) -> Option<Vec<VertexId>> {
        let image = self.image(vertices);
        let distinct = image.iter().enumerate().all(|(i, v)| !image[..i].contains(v));
        distinct.then_some(image)
    }

    /// `f♯` on a single oriented simplex.
    pub fn pushforward_simplex(&self, s: &OrientedSimplex) -> Result<Chain> {
        let (canon, _) = s.canonical();
        self.source.require(&canon)?;
        let mut out = Chain::zero(s.dimension());
        if let Some(image) = self.image_if_distinct(s.vertices()) {
            out.add_term(&image, crate::Scalar::one())?;
        }
        Ok(out)
    }

    /// `f♯` extended linearly to chains.
    pub fn pushforward(&self, c: &Chain) -> Result<Chain> {
        c.check_in(self.source)?;
        let mut out = Chain::zero(c.degree());
        for (s, coeff) in c.terms() {
            if let Some(image) = self.image_if_distinct(s.vertices()) {
                out.add_term(&image, coeff.clone())?;
            }
        }
        Ok(out)
    }

    /// `(f* a)(c) = a(f♯ c)`, tabulated on every source simplex.
    pub fn pullback(&self, a: &Cochain) -> Cochain {
        let k = a.degree();
        let mut out = Cochain::zero(k);
        for (s, _) in self.source.simplices(k) {
            if let Some(image) = self.image_if_distinct(s.vertices()) {
                let value = a.eval(&image).expect("image has k+1 distinct vertices");
                out.set(s.vertices(), value).expect("degree k");
            }
        }
        out
    }
}
