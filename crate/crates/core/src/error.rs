use thiserror::Error;

use crate::simplex::VertexId;

/// Errors raised by the simplicial substrate and the operators built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecError {
    #[error("vertex {0} appears more than once in a simplex")]
    DuplicateVertex(VertexId),
    #[error("simplex {0:?} is not in the complex")]
    SimplexNotInComplex(Vec<VertexId>),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("a vertex has no boundary")]
    BoundaryOfVertex,
    #[error("complex has no simplices")]
    EmptyComplex,
    #[error("ordering parts do not partition the vertices of {0:?}")]
    VertexMismatch(Vec<VertexId>),
    #[error("image of {0:?} does not span a simplex of the target")]
    SpanningViolation(Vec<VertexId>),
    #[error("vertex {0} has no image under the vertex map")]
    MissingVertexImage(VertexId),
    #[error("vertex map sends {0} outside the target complex")]
    ImageNotInTarget(VertexId),
    #[error("maps cannot be composed: target of the first is not the source of the second")]
    NotComposable,
    #[error("{0:?} is not a face of the ambient simplex")]
    FaceNotInAmbient(Vec<VertexId>),
    #[error("forms live on different ambient simplices")]
    AmbientMismatch,
    #[error("faces do not jointly span the given simplex")]
    NotSpanning,
    #[error("faces share more than one vertex")]
    OverlapTooLarge,
}

pub type Result<T, E = DecError> = std::result::Result<T, E>;
