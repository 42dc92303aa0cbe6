//! Chains and the boundary operator.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::complex::SimplicialComplex;
use crate::error::{DecError, Result};
use crate::permutation::Sign;
use crate::scalar::Scalar;
use crate::simplex::{canonicalize, OrientedSimplex, Simplex, VertexId};

/// A finite formal combination of `k`-simplices, keyed on canonical form.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    degree: usize,
    terms: BTreeMap<Simplex, Scalar>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain { degree, terms: BTreeMap::new() }
    }

    /// The elementary chain `1·[v0,…,vk]`, folded to canonical form.
    pub fn simplex(vertices: &[VertexId]) -> Result<Self> {
        let mut c = Chain::zero(vertices.len().saturating_sub(1));
        c.add_term(vertices, Scalar::one())?;
        Ok(c)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, s: &Simplex) -> Scalar {
        self.terms.get(s).cloned().unwrap_or_default()
    }

    /// Adds `coeff · [vertices]` with the orientation sign folded in.
    pub fn add_term(&mut self, vertices: &[VertexId], coeff: Scalar) -> Result<()> {
        if vertices.len() != self.degree + 1 {
            return Err(DecError::DegreeMismatch {
                expected: self.degree,
                found: vertices.len().saturating_sub(1),
            });
        }
        let (s, sign) = canonicalize(vertices)?;
        self.add_canonical(s, sign.apply(coeff));
        Ok(())
    }

    pub(crate) fn add_canonical(&mut self, s: Simplex, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(s);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, factor: &Scalar) -> Chain {
        let mut out = Chain::zero(self.degree);
        for (s, c) in &self.terms {
            out.add_canonical(s.clone(), c * factor);
        }
        out
    }

    /// Checks every simplex of the chain against `complex`.
    pub fn check_in(&self, complex: &SimplicialComplex) -> Result<()> {
        self.terms.keys().try_for_each(|s| complex.require(s))
    }
}

impl Add<&Chain> for &Chain {
    type Output = Chain;
    fn add(self, rhs: &Chain) -> Chain {
        assert_eq!(self.degree, rhs.degree, "adding chains of different degree");
        let mut out = self.clone();
        for (s, c) in &rhs.terms {
            out.add_canonical(s.clone(), c.clone());
        }
        out
    }
}

impl Neg for &Chain {
    type Output = Chain;
    fn neg(self) -> Chain {
        self.scale(&Scalar::from(-1))
    }
}

impl Sub<&Chain> for &Chain {
    type Output = Chain;
    fn sub(self, rhs: &Chain) -> Chain {
        self + &(-rhs)
    }
}

/// Boundary of an oriented simplex: Σᵢ (−1)ⁱ [v₀…v̂ᵢ…v_k].
pub fn boundary(complex: &SimplicialComplex, s: &OrientedSimplex) -> Result<Chain> {
    let (canon, _) = s.canonical();
    complex.require(&canon)?;
    boundary_unchecked(s)
}

pub(crate) fn boundary_unchecked(s: &OrientedSimplex) -> Result<Chain> {
    let k = s.dimension();
    if k == 0 {
        return Err(DecError::BoundaryOfVertex);
    }
    let mut out = Chain::zero(k - 1);
    for i in 0..=k {
        let face = s.omit(i);
        out.add_term(face.vertices(), Sign::alternating(i).to_scalar())?;
    }
    Ok(out)
}

/// Boundary extended linearly to chains.
pub fn boundary_chain(complex: &SimplicialComplex, c: &Chain) -> Result<Chain> {
    if c.degree() == 0 {
        return Err(DecError::BoundaryOfVertex);
    }
    c.check_in(complex)?;
    let mut out = Chain::zero(c.degree() - 1);
    for (s, coeff) in c.terms() {
        for (face, fc) in boundary_unchecked(&s.oriented())?.terms() {
            out.add_canonical(face.clone(), fc * coeff);
        }
    }
    Ok(out)
}
