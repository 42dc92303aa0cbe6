//! Whitney forms on a single reference simplex, handled symbolically.
//!
//! A [`PolyForm`] on an ambient simplex `ν = [w₀ … w_n]` is a sum of terms
//! `c · λ₀^a₀ ⋯ λ_n^a_n · dλ_{s₁} ∧ ⋯ ∧ dλ_{s_p}` with `1 ≤ s₁ < ⋯ < s_p ≤ n`.
//! The covector `dλ₀` never appears: it is rewritten as `−Σ_{i≥1} dλᵢ`, which
//! makes the representation canonical.
//!
//! The Whitney form of a face `[w_{i₀} … w_{i_k}]` is
//!
//! ```text
//! W = k! Σ_j (−1)^j λ_{i_j} dλ_{i₀} ∧ ⋯ ∧ (omit j) ∧ ⋯ ∧ dλ_{i_k}
//! ```
//!
//! and top-degree forms integrate exactly with the Dirichlet moment formula
//! `∫_ν λ^a dλ₁ ∧ ⋯ ∧ dλ_n = (Π aᵢ!) / (n + Σ aᵢ)!`, the sign fixed by taking
//! the ambient ordering as positive. No coordinates are involved.

use std::collections::BTreeMap;

use crate::cochain::Cochain;
use crate::complex::SimplicialComplex;
use crate::error::{DecError, Result};
use crate::permutation::{factorial, Sign};
use crate::scalar::Scalar;
use crate::simplex::{canonicalize, OrientedSimplex, Simplex, VertexId};

/// `λ₀^a₀ ⋯ λ_n^a_n`, indexed by position in the ambient simplex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarycentricMonomial {
    exponents: Vec<u32>,
}

impl BarycentricMonomial {
    pub fn one(n: usize) -> Self {
        BarycentricMonomial { exponents: vec![0; n + 1] }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn total_degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    fn times(&self, other: &Self) -> Self {
        let exponents = self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect();
        BarycentricMonomial { exponents }
    }
}

/// Bit `i` set means `dλ_i` is present; bit 0 is never used.
type Covectors = u32;

/// A polynomial differential form on one ambient simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyForm {
    ambient: Vec<VertexId>,
    degree: usize,
    terms: BTreeMap<(BarycentricMonomial, Covectors), Scalar>,
}

impl PolyForm {
    pub fn zero(ambient: &OrientedSimplex, degree: usize) -> Self {
        PolyForm { ambient: ambient.vertices().to_vec(), degree, terms: BTreeMap::new() }
    }

    /// The barycentric coordinate `λ_i` as a 0-form.
    pub fn lambda(ambient: &OrientedSimplex, i: usize) -> Self {
        let mut form = PolyForm::zero(ambient, 0);
        let mut mono = BarycentricMonomial::one(ambient.dimension());
        mono.exponents[i] = 1;
        form.add_term(mono, 0, Scalar::one());
        form
    }

    /// The 1-form `dλ_i`, with `dλ₀ = −Σ_{j≥1} dλ_j`.
    pub fn d_lambda(ambient: &OrientedSimplex, i: usize) -> Self {
        let n = ambient.dimension();
        let mut form = PolyForm::zero(ambient, 1);
        let one = BarycentricMonomial::one(n);
        if i == 0 {
            for j in 1..=n {
                form.add_term(one.clone(), 1 << j, Scalar::from(-1));
            }
        } else {
            form.add_term(one, 1 << i, Scalar::one());
        }
        form
    }

    pub fn ambient_dimension(&self) -> usize {
        self.ambient.len() - 1
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as (monomial, sorted covector indices, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (&BarycentricMonomial, Vec<usize>, &Scalar)> {
        self.terms.iter().map(|((m, mask), c)| {
            let idx = (1..32).filter(|i| mask & (1 << i) != 0).collect();
            (m, idx, c)
        })
    }

    fn add_term(&mut self, mono: BarycentricMonomial, mask: Covectors, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let key = (mono, mask);
        let entry = self.terms.entry(key.clone()).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &PolyForm) -> Result<PolyForm> {
        if self.ambient != other.ambient || self.degree != other.degree {
            return Err(DecError::AmbientMismatch);
        }
        let mut out = self.clone();
        for ((m, mask), c) in &other.terms {
            out.add_term(m.clone(), *mask, c.clone());
        }
        Ok(out)
    }

    /// Value of a 0-form at the point with barycentric coordinates `point`.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if self.degree != 0 {
            return Err(DecError::DegreeMismatch { expected: 0, found: self.degree });
        }
        if point.len() != self.ambient.len() {
            return Err(DecError::AmbientMismatch);
        }
        Ok(self
            .terms
            .iter()
            .map(|((mono, _), c)| {
                let value: Scalar = mono
                    .exponents
                    .iter()
                    .zip(point)
                    .flat_map(|(&a, x)| std::iter::repeat_n(x.clone(), a as usize))
                    .product();
                c * &value
            })
            .sum())
    }

    pub fn scale(&self, factor: &Scalar) -> PolyForm {
        let mut out = PolyForm { terms: BTreeMap::new(), ..self.clone() };
        for ((m, mask), c) in &self.terms {
            out.add_term(m.clone(), *mask, c * factor);
        }
        out
    }
}

/// Sign of merging two disjoint sorted covector lists into sorted order.
fn shuffle_sign(left: Covectors, right: Covectors) -> Sign {
    let crossings: u32 = (1..32)
        .filter(|b| right & (1 << b) != 0)
        .map(|b| (left >> (b + 1)).count_ones())
        .sum();
    Sign::alternating(crossings as usize)
}

/// Exterior product of polynomial forms on the same ambient simplex.
pub fn wedge_forms(p: &PolyForm, q: &PolyForm) -> Result<PolyForm> {
    if p.ambient != q.ambient {
        return Err(DecError::AmbientMismatch);
    }
    let mut out = PolyForm { ambient: p.ambient.clone(), degree: p.degree + q.degree, terms: BTreeMap::new() };
    for ((mp, sp), cp) in &p.terms {
        for ((mq, sq), cq) in &q.terms {
            if sp & sq != 0 {
                continue;
            }
            let coeff = shuffle_sign(*sp, *sq).apply(cp * cq);
            out.add_term(mp.times(mq), sp | sq, coeff);
        }
    }
    Ok(out)
}

/// Whitney form of `face`, a face of `ambient` given in any ordering.
pub fn whitney(ambient: &OrientedSimplex, face: &[VertexId]) -> Result<PolyForm> {
    canonicalize(face)?;
    let local = face
        .iter()
        .map(|v| ambient.vertices().iter().position(|w| w == v))
        .collect::<Option<Vec<usize>>>()
        .ok_or_else(|| DecError::FaceNotInAmbient(face.to_vec()))?;
    let k = local.len() - 1;
    let mut total = PolyForm::zero(ambient, k);
    for j in 0..=k {
        let mut term = PolyForm::lambda(ambient, local[j]);
        for (m, &i) in local.iter().enumerate() {
            if m != j {
                term = wedge_forms(&term, &PolyForm::d_lambda(ambient, i))?;
            }
        }
        total = total.add(&term.scale(&Sign::alternating(j).to_scalar()))?;
    }
    Ok(total.scale(&Scalar::from(factorial(k))))
}

/// Exact integral of a top-degree form over its ambient simplex, oriented by
/// the ambient ordering.
pub fn integrate(p: &PolyForm) -> Result<Scalar> {
    let n = p.ambient_dimension();
    if p.degree != n {
        return Err(DecError::DegreeMismatch { expected: n, found: p.degree });
    }
    Ok(p.terms
        .iter()
        .map(|((mono, _), c)| {
            let numer: num_bigint::BigInt = mono.exponents.iter().map(|&a| factorial(a as usize)).product();
            let denom = factorial(n + mono.total_degree() as usize);
            c * &Scalar::new(numer, denom)
        })
        .sum())
}

/// Sign ε with `sgn(σ)·sgn(τ) = ε·sgn(ν′)`, where `sgn` is the parity of the
/// permutation sorting each vertex list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EpsilonSign(Sign);

impl EpsilonSign {
    pub fn value(self) -> Sign {
        self.0
    }
}

pub fn epsilon_sign(sigma: &[VertexId], tau: &[VertexId], nu_prime: &[VertexId]) -> Result<EpsilonSign> {
    let (s, sgn_sigma) = canonicalize(sigma)?;
    let (t, sgn_tau) = canonicalize(tau)?;
    let (nu, sgn_nu) = canonicalize(nu_prime)?;
    match s.vertices().iter().filter(|v| t.contains(**v)).count() {
        0 => return Err(DecError::NotSpanning),
        1 => {}
        _ => return Err(DecError::OverlapTooLarge),
    }
    let mut union: Vec<_> = s.vertices().iter().chain(t.vertices()).copied().collect();
    union.sort_unstable();
    union.dedup();
    if union != nu.vertices() {
        return Err(DecError::NotSpanning);
    }
    Ok(EpsilonSign(sgn_sigma * sgn_tau * sgn_nu))
}

/// `k! l! / (k+l+1)!`
pub fn base_integral(k: usize, l: usize) -> Scalar {
    Scalar::new(factorial(k) * factorial(l), factorial(k + l + 1))
}

fn interpolate(ambient: &OrientedSimplex, nu: &Simplex, a: &Cochain) -> PolyForm {
    let mut form = PolyForm::zero(ambient, a.degree());
    for face in nu.faces(a.degree()) {
        let value = a.value(&face);
        if !value.is_zero() {
            let w = whitney(ambient, face.vertices()).expect("face of ambient");
            form = form.add(&w.scale(&value)).expect("same ambient");
        }
    }
    form
}

/// `∫_ν Wa ∧ Wb` on the canonical orientation of `nu`, by symbolic expansion.
pub fn wilson_value(nu: &Simplex, a: &Cochain, b: &Cochain) -> Scalar {
    let ambient = nu.oriented();
    let wa = interpolate(&ambient, nu, a);
    let wb = interpolate(&ambient, nu, b);
    let product = wedge_forms(&wa, &wb).expect("same ambient");
    integrate(&product).expect("top degree")
}

/// The same value from the closed form `Σ a_σ b_τ ε(σ,τ) k! l!/(k+l+1)!`
/// over face pairs meeting in exactly one vertex, with `a_σ`, `b_τ` the
/// values on ascending orientations.
pub fn wilson_value_closed_form(nu: &Simplex, a: &Cochain, b: &Cochain) -> Scalar {
    let (k, l) = (a.degree(), b.degree());
    let base = base_integral(k, l);
    let mut total = Scalar::zero();
    for sigma in nu.faces(k) {
        for tau in nu.faces(l) {
            let shared: Vec<_> = sigma.vertices().iter().copied().filter(|v| tau.contains(*v)).collect();
            let [junction] = shared[..] else { continue };
            let (sigma_ord, tau_ord, nu_prime) = junction_orderings(&sigma, &tau, junction);
            let eps = epsilon_sign(&sigma_ord, &tau_ord, &nu_prime).expect("single junction").value();
            total += eps.apply(a.value(&sigma) * b.value(&tau) * &base);
        }
    }
    total
}

/// `σ = [.., j]`, `τ = [j, ..]` and their concatenation `ν′`, other vertices
/// kept ascending.
pub fn junction_orderings(
    sigma: &Simplex,
    tau: &Simplex,
    junction: VertexId,
) -> (Vec<VertexId>, Vec<VertexId>, Vec<VertexId>) {
    let sigma_ord: Vec<_> = sigma.vertices().iter().copied().filter(|&v| v != junction).chain([junction]).collect();
    let tau_ord: Vec<_> = [junction].into_iter().chain(tau.vertices().iter().copied().filter(|&v| v != junction)).collect();
    let nu_prime = sigma_ord.iter().chain(&tau_ord[1..]).copied().collect();
    (sigma_ord, tau_ord, nu_prime)
}

fn tabulate(complex: &SimplicialComplex, a: &Cochain, b: &Cochain, f: impl Fn(&Simplex) -> Scalar) -> Cochain {
    let degree = a.degree() + b.degree();
    let mut out = Cochain::zero(degree);
    for (nu, _) in complex.simplices(degree) {
        out.set(nu.vertices(), f(nu)).expect("degree k+l");
    }
    out
}

/// Wilson's cochain product, `ν ↦ ∫_ν Wa ∧ Wb`, by symbolic integration.
pub fn wilson_product(complex: &SimplicialComplex, a: &Cochain, b: &Cochain) -> Cochain {
    tabulate(complex, a, b, |nu| wilson_value(nu, a, b))
}

/// Wilson's cochain product from the closed-form face-pair sum.
pub fn wilson_product_closed_form(complex: &SimplicialComplex, a: &Cochain, b: &Cochain) -> Cochain {
    tabulate(complex, a, b, |nu| wilson_value_closed_form(nu, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex::vids;

    fn simplex(v: &[u32]) -> OrientedSimplex {
        OrientedSimplex::new(vids(v)).unwrap()
    }

    #[test]
    fn vertex_whitney_form_is_hat_function() {
        let nu = simplex(&[0, 1]);
        assert_eq!(whitney(&nu, &vids(&[0])).unwrap(), PolyForm::lambda(&nu, 0));
    }

    #[test]
    fn edge_whitney_form_after_elimination() {
        // λ₀dλ₁ − λ₁dλ₀ = (λ₀ + λ₁) dλ₁
        let nu = simplex(&[0, 1]);
        let expected = wedge_forms(
            &PolyForm::lambda(&nu, 0).add(&PolyForm::lambda(&nu, 1)).unwrap(),
            &PolyForm::d_lambda(&nu, 1),
        )
        .unwrap();
        let w = whitney(&nu, &vids(&[0, 1])).unwrap();
        assert_eq!(w, expected);
        assert_eq!(integrate(&w).unwrap(), Scalar::one());
        assert_eq!(integrate(&whitney(&nu, &vids(&[1, 0])).unwrap()).unwrap(), Scalar::from(-1));
    }

    #[test]
    fn covector_algebra() {
        let nu = simplex(&[0, 1, 2]);
        let l0 = PolyForm::lambda(&nu, 0);
        let l1 = PolyForm::lambda(&nu, 1);
        let d1 = PolyForm::d_lambda(&nu, 1);
        let d2 = PolyForm::d_lambda(&nu, 2);
        let lhs = wedge_forms(&wedge_forms(&l0, &d1).unwrap(), &wedge_forms(&l1, &d2).unwrap()).unwrap();
        let (mono, idx, c) = lhs.terms().next().unwrap();
        assert_eq!(lhs.terms().count(), 1);
        assert_eq!(mono.exponents(), &[1, 1, 0]);
        assert_eq!(idx, vec![1, 2]);
        assert_eq!(c, &Scalar::one());

        assert!(wedge_forms(&d1, &d1).unwrap().is_zero());
        let swapped = wedge_forms(&d2, &d1).unwrap();
        assert_eq!(swapped, wedge_forms(&d1, &d2).unwrap().scale(&Scalar::from(-1)));
        // dλ₀ ∧ dλ₀ also vanishes after elimination
        let d0 = PolyForm::d_lambda(&nu, 0);
        assert!(wedge_forms(&d0, &d0).unwrap().is_zero());
    }

    #[test]
    fn triangle_base_integral() {
        let nu = simplex(&[0, 1, 2]);
        let w = wedge_forms(&whitney(&nu, &vids(&[0, 1])).unwrap(), &whitney(&nu, &vids(&[1, 2])).unwrap()).unwrap();
        assert_eq!(integrate(&w).unwrap(), Scalar::new(1, 6));
    }

    #[test]
    fn integrate_errors_and_zero() {
        let nu = simplex(&[0, 1, 2]);
        assert_eq!(integrate(&PolyForm::zero(&nu, 2)).unwrap(), Scalar::zero());
        assert_eq!(
            integrate(&PolyForm::d_lambda(&nu, 1)),
            Err(DecError::DegreeMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn ambient_errors() {
        let a = simplex(&[0, 1]);
        let b = simplex(&[0, 2]);
        assert_eq!(
            wedge_forms(&PolyForm::lambda(&a, 0), &PolyForm::lambda(&b, 0)),
            Err(DecError::AmbientMismatch)
        );
        assert_eq!(whitney(&a, &vids(&[0, 2])), Err(DecError::FaceNotInAmbient(vids(&[0, 2]))));
    }

    #[test]
    fn whitney_partition_of_unity() {
        for n in 0..=4u32 {
            let nu = simplex(&(0..=n).collect::<Vec<_>>());
            let mut sum = PolyForm::zero(&nu, 0);
            for v in 0..=n {
                sum = sum.add(&whitney(&nu, &vids(&[v])).unwrap()).unwrap();
            }
            // Σλᵢ is stored as a linear polynomial; it equals 1 on the simplex
            let n = n as i64;
            for shift in 0..3i64 {
                let point: Vec<Scalar> = (0..=n)
                    .map(|i| Scalar::new(i + shift + 1, (0..=n).map(|j| j + shift + 1).sum::<i64>()))
                    .collect();
                assert_eq!(sum.evaluate(&point).unwrap(), Scalar::one());
            }
            let top = whitney(&nu, nu.vertices()).unwrap();
            assert_eq!(integrate(&wedge_forms(&sum, &top).unwrap()).unwrap(), Scalar::one());
        }
    }

    #[test]
    fn epsilon_examples() {
        let eps = |s: &[u32], t: &[u32], n: &[u32]| epsilon_sign(&vids(s), &vids(t), &vids(n));
        assert_eq!(eps(&[0, 1], &[1, 2], &[0, 1, 2]).unwrap().value(), Sign::Plus);
        assert_eq!(eps(&[0, 2], &[2, 1], &[0, 2, 1]).unwrap().value(), Sign::Plus);
        assert_eq!(eps(&[1, 0], &[0, 2], &[0, 1, 2]).unwrap().value(), Sign::Minus);
        assert_eq!(eps(&[0, 1], &[2, 3], &[0, 1, 2, 3]), Err(DecError::NotSpanning));
        assert_eq!(eps(&[0, 1, 2], &[1, 2], &[0, 1, 2]), Err(DecError::OverlapTooLarge));
        assert_eq!(eps(&[0, 1], &[1, 2], &[0, 1, 3]), Err(DecError::NotSpanning));
    }

    #[test]
    fn vertex_product_is_pointwise() {
        let x = SimplicialComplex::closure(&[vids(&[4])]).unwrap();
        let a = Cochain::from_values(0, [(vids(&[4]), Scalar::new(2, 3))]).unwrap();
        let b = Cochain::from_values(0, [(vids(&[4]), Scalar::from(-9))]).unwrap();
        let w = wilson_product(&x, &a, &b);
        assert_eq!(w.eval(&vids(&[4])).unwrap(), Scalar::from(-6));
        assert_eq!(wilson_product_closed_form(&x, &a, &b), w);
    }
}
