//! Exact discrete exterior calculus on abstract simplicial complexes.
//!
//! Cochains over exact rationals, the coboundary `d`, cup and wedge products,
//! pullback along simplicial maps, and a Whitney-form integration oracle for
//! the wedge product. Every identity between these operations holds with
//! exact equality, so tests compare values with `==`.

pub mod chain;
pub mod cochain;
pub mod complex;
pub mod error;
pub mod maps;
pub mod operators;
pub mod permutation;
pub mod scalar;
pub mod simplex;
pub mod whitney;

pub use chain::{boundary, boundary_chain, Chain};
pub use cochain::Cochain;
pub use complex::SimplicialComplex;
pub use error::{DecError, Result};
pub use maps::SimplicialMap;
pub use operators::{cup, cup_eval, d, ordering_parity, wedge, wedge_avg, wedge_perm, Outer, WedgeMethod};
pub use permutation::Sign;
pub use scalar::{ParseScalarError, Scalar};
pub use simplex::{canonicalize, vids, OrientedSimplex, Simplex, VertexId};
pub use whitney::{epsilon_sign, integrate, whitney, wilson_product, wilson_product_closed_form, wedge_forms, EpsilonSign, PolyForm};
