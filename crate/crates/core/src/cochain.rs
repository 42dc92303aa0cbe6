//! Cochains: finitely supported functions on canonical simplices.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::chain::Chain;
use crate::complex::SimplicialComplex;
use crate::error::{DecError, Result};
use crate::scalar::Scalar;
use crate::simplex::{canonicalize, OrientedSimplex, Simplex, VertexId};

/// A `k`-cochain. Values are stored on canonical simplices; a simplex with no
/// stored value evaluates to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    values: BTreeMap<Simplex, Scalar>,
}

impl Cochain {
    pub fn zero(degree: usize) -> Self {
        Cochain { degree, values: BTreeMap::new() }
    }

    /// The cochain taking `value` on every `degree`-simplex of `complex`,
    /// in each simplex's canonical orientation.
    pub fn constant(complex: &SimplicialComplex, degree: usize, value: &Scalar) -> Self {
        let mut c = Cochain::zero(degree);
        for (s, _) in complex.simplices(degree) {
            c.set_canonical(s.clone(), value.clone());
        }
        c
    }

    /// Builds a cochain from values given on arbitrary orderings.
    pub fn from_values<I, V>(degree: usize, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = (V, Scalar)>,
        V: AsRef<[VertexId]>,
    {
        let mut c = Cochain::zero(degree);
        for (vertices, value) in values {
            c.set(vertices.as_ref(), value)?;
        }
        Ok(c)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Stored (nonzero) values on canonical simplices.
    pub fn values(&self) -> impl Iterator<Item = (&Simplex, &Scalar)> {
        self.values.iter()
    }

    /// Sets the value on the given ordering; the canonical entry receives the
    /// value times the ordering's parity.
    pub fn set(&mut self, vertices: &[VertexId], value: Scalar) -> Result<()> {
        self.check_len(vertices.len())?;
        let (s, sign) = canonicalize(vertices)?;
        self.set_canonical(s, sign.apply(value));
        Ok(())
    }

    pub(crate) fn set_canonical(&mut self, s: Simplex, value: Scalar) {
        if value.is_zero() {
            self.values.remove(&s);
        } else {
            self.values.insert(s, value);
        }
    }

    /// Value on the canonical orientation of `s`.
    pub fn value(&self, s: &Simplex) -> Scalar {
        self.values.get(s).cloned().unwrap_or_default()
    }

    /// Evaluation on an ordered vertex list: parity times the canonical value.
    pub fn eval(&self, vertices: &[VertexId]) -> Result<Scalar> {
        self.check_len(vertices.len())?;
        let (s, sign) = canonicalize(vertices)?;
        Ok(sign.apply(self.value(&s)))
    }

    pub fn eval_simplex(&self, s: &OrientedSimplex) -> Result<Scalar> {
        self.eval(s.vertices())
    }

    /// Linear extension of evaluation to chains.
    pub fn eval_chain(&self, c: &Chain) -> Result<Scalar> {
        if c.degree() != self.degree {
            return Err(DecError::DegreeMismatch { expected: self.degree, found: c.degree() });
        }
        Ok(c.terms().map(|(s, coeff)| coeff * self.value(s)).sum())
    }

    pub fn scale(&self, factor: &Scalar) -> Cochain {
        let mut out = Cochain::zero(self.degree);
        for (s, v) in &self.values {
            out.set_canonical(s.clone(), v * factor);
        }
        out
    }

    /// Checks that every stored simplex belongs to `complex`.
    pub fn check_in(&self, complex: &SimplicialComplex) -> Result<()> {
        self.values.keys().try_for_each(|s| complex.require(s))
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.degree + 1 {
            return Err(DecError::DegreeMismatch {
                expected: self.degree,
                found: len.saturating_sub(1),
            });
        }
        Ok(())
    }

    fn combine(&self, rhs: &Cochain, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Cochain {
        assert_eq!(self.degree, rhs.degree, "combining cochains of different degree");
        let mut out = Cochain::zero(self.degree);
        for s in self.values.keys().chain(rhs.values.keys()) {
            if !out.values.contains_key(s) {
                out.set_canonical(s.clone(), f(&self.value(s), &rhs.value(s)));
            }
        }
        out
    }
}

impl Add<&Cochain> for &Cochain {
    type Output = Cochain;
    fn add(self, rhs: &Cochain) -> Cochain {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub<&Cochain> for &Cochain {
    type Output = Cochain;
    fn sub(self, rhs: &Cochain) -> Cochain {
        self.combine(rhs, |a, b| a - b)
    }
}

impl Neg for &Cochain {
    type Output = Cochain;
    fn neg(self) -> Cochain {
        self.scale(&Scalar::from(-1))
    }
}
