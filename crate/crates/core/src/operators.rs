//! Discrete exterior derivative, cup product and discrete wedge product.
//!
//! The wedge has three interchangeable formulations:
//!
//! * [`WedgeMethod::PermutationSum`]: the antisymmetrized cup product,
//!   `1/(k+l+1)! Σ_τ sgn(τ) (a ⌣ b)[v_τ(0) … v_τ(k+l)]`.
//! * [`WedgeMethod::AverageOuterLeft`]: an outer average over the `k`-faces
//!   `f` carrying `a`, each weighted by the inner average of `b` over the
//!   simplices `v ∗ (σ ∖ f)` for vertices `v` of `f`.
//! * [`WedgeMethod::AverageOuterRight`]: the same with the roles of `a` and
//!   `b` exchanged.
//!
//! In the averaging forms every `(f, v)` term is oriented so that the
//! concatenated ordering is an even permutation of the simplex's chosen
//! orientation; [`ordering_parity`] supplies the correction sign.

use itertools::Itertools;

use crate::cochain::Cochain;
use crate::complex::SimplicialComplex;
use crate::error::{DecError, Result};
use crate::permutation::{binomial, factorial, signed_orderings, sorting_sign, Sign};
use crate::scalar::Scalar;
use crate::simplex::{OrientedSimplex, VertexId};

/// Which formula evaluates the wedge product. All three agree exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WedgeMethod {
    PermutationSum,
    #[default]
    AverageOuterLeft,
    AverageOuterRight,
}

/// Which factor carries the outer average in [`wedge_avg`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outer {
    Left,
    Right,
}

fn eval(c: &Cochain, vertices: &[VertexId]) -> Scalar {
    c.eval(vertices).expect("operator evaluates on well-formed faces")
}

/// Discrete exterior derivative: `(d a)(σ) = a(∂σ)`.
pub fn d(complex: &SimplicialComplex, a: &Cochain) -> Cochain {
    let k = a.degree();
    let mut out = Cochain::zero(k + 1);
    for (_, sigma) in complex.simplices(k + 1) {
        let value: Scalar = (0..=k + 1)
            .map(|i| Sign::alternating(i).apply(eval(a, sigma.omit(i).vertices())))
            .sum();
        out.set(sigma.vertices(), value).expect("simplex of degree k+1");
    }
    out
}

/// Cup product evaluated on an ordered simplex: front `k`-face times back
/// `l`-face, sharing the vertex at position `k`. Not skew-symmetric.
pub fn cup_eval(a: &Cochain, b: &Cochain, ordering: &[VertexId]) -> Result<Scalar> {
    let (k, l) = (a.degree(), b.degree());
    if ordering.len() != k + l + 1 {
        return Err(DecError::DegreeMismatch {
            expected: k + l,
            found: ordering.len().saturating_sub(1),
        });
    }
    Ok(a.eval(&ordering[..=k])? * b.eval(&ordering[k..])?)
}

/// Cup product recorded on the canonical (ascending) ordering of every
/// `(k+l)`-simplex. Other orderings must go through [`cup_eval`].
pub fn cup(complex: &SimplicialComplex, a: &Cochain, b: &Cochain) -> Cochain {
    let degree = a.degree() + b.degree();
    let mut out = Cochain::zero(degree);
    for (s, _) in complex.simplices(degree) {
        let value = cup_eval(a, b, s.vertices()).expect("degree checked");
        out.set(s.vertices(), value).expect("degree checked");
    }
    out
}

/// Wedge product as the normalized signed sum of cup products over all
/// vertex orderings.
pub fn wedge_perm(complex: &SimplicialComplex, a: &Cochain, b: &Cochain) -> Cochain {
    let degree = a.degree() + b.degree();
    let norm = Scalar::from(factorial(degree + 1));
    let mut out = Cochain::zero(degree);
    for (_, sigma) in complex.simplices(degree) {
        let total: Scalar = signed_orderings(sigma.vertices())
            .map(|(ordering, sign)| sign.apply(cup_eval(a, b, &ordering).expect("degree checked")))
            .sum();
        out.set(sigma.vertices(), total / &norm).expect("degree checked");
    }
    out
}

/// Sign of the permutation carrying `sigma`'s ordering to
/// `(f ∖ {v}, v, rest)`, where `f ∖ {v}` keeps the order of `f`.
pub fn ordering_parity(
    f: &[VertexId],
    v: VertexId,
    rest: &[VertexId],
    sigma: &OrientedSimplex,
) -> Result<Sign> {
    let mismatch = || DecError::VertexMismatch(sigma.vertices().to_vec());
    if !f.contains(&v) {
        return Err(mismatch());
    }
    let ordering: Vec<VertexId> = f
        .iter()
        .copied()
        .filter(|&u| u != v)
        .chain(std::iter::once(v))
        .chain(rest.iter().copied())
        .collect();
    if ordering.len() != sigma.vertices().len() {
        return Err(mismatch());
    }
    // positions of the new ordering inside sigma; parity of that index list
    let positions = ordering
        .iter()
        .map(|u| sigma.vertices().iter().position(|w| w == u))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(mismatch)?;
    if !positions.iter().all_unique() {
        return Err(mismatch());
    }
    Ok(sorting_sign(&positions))
}

/// Wedge product by the double-averaging formula.
pub fn wedge_avg(complex: &SimplicialComplex, a: &Cochain, b: &Cochain, outer: Outer) -> Cochain {
    let (k, l) = (a.degree(), b.degree());
    let degree = k + l;
    // the outer cochain lives on faces with `outer_deg + 1` vertices
    let outer_deg = match outer {
        Outer::Left => k,
        Outer::Right => l,
    };
    let norm = Scalar::from(binomial(degree + 1, outer_deg + 1) * (outer_deg + 1));
    let mut out = Cochain::zero(degree);
    for (canon, sigma) in complex.simplices(degree) {
        let mut total = Scalar::zero();
        for face in canon.faces(outer_deg) {
            let rest: Vec<VertexId> = canon
                .vertices()
                .iter()
                .copied()
                .filter(|u| !face.contains(*u))
                .collect();
            let face_v = face.vertices();
            for &v in face_v {
                let others: Vec<VertexId> = face_v.iter().copied().filter(|&u| u != v).collect();
                let term = match outer {
                    // a on (f∖v, v), b on (v, σ∖f); ordering (f∖v, v, σ∖f)
                    Outer::Left => {
                        let sign = ordering_parity(face_v, v, &rest, sigma).expect("partition");
                        let front: Vec<_> = others.iter().copied().chain([v]).collect();
                        let back: Vec<_> = [v].into_iter().chain(rest.iter().copied()).collect();
                        sign.apply(eval(a, &front) * eval(b, &back))
                    }
                    // a on (σ∖f, v), b on (v, f∖v); ordering (σ∖f, v, f∖v)
                    Outer::Right => {
                        let front: Vec<_> = rest.iter().copied().chain([v]).collect();
                        let back: Vec<_> = [v].into_iter().chain(others.iter().copied()).collect();
                        let sign = ordering_parity(&front, v, &others, sigma).expect("partition");
                        sign.apply(eval(a, &front) * eval(b, &back))
                    }
                };
                total += term;
            }
        }
        out.set(sigma.vertices(), total / &norm).expect("degree checked");
    }
    out
}

/// Discrete wedge product computed with the chosen method.
pub fn wedge(complex: &SimplicialComplex, a: &Cochain, b: &Cochain, method: WedgeMethod) -> Cochain {
    match method {
        WedgeMethod::PermutationSum => wedge_perm(complex, a, b),
        WedgeMethod::AverageOuterLeft => wedge_avg(complex, a, b, Outer::Left),
        WedgeMethod::AverageOuterRight => wedge_avg(complex, a, b, Outer::Right),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex::vids;

    fn complex(tops: &[&[u32]]) -> SimplicialComplex {
        let tops: Vec<_> = tops.iter().map(|t| vids(t)).collect();
        SimplicialComplex::closure(&tops).unwrap()
    }

    fn s(n: i64) -> Scalar {
        Scalar::from(n)
    }

    fn cochain(degree: usize, values: &[(&[u32], i64)]) -> Cochain {
        Cochain::from_values(degree, values.iter().map(|(v, x)| (vids(v), s(*x)))).unwrap()
    }

    #[test]
    fn d_on_edge() {
        let x = complex(&[&[0, 1]]);
        let a = cochain(0, &[(&[0], 4), (&[1], 9)]);
        let da = d(&x, &a);
        assert_eq!(da.eval(&vids(&[0, 1])).unwrap(), s(5));
    }

    #[test]
    fn d_of_constant_vanishes() {
        let x = complex(&[&[0, 1, 2], &[2, 3]]);
        let one = Cochain::constant(&x, 0, &s(7));
        assert!(d(&x, &one).is_zero());
    }

    #[test]
    fn d_squared_on_triangle() {
        let x = complex(&[&[0, 1, 2]]);
        let a = cochain(0, &[(&[0], 3), (&[1], -2), (&[2], 11)]);
        assert!(d(&x, &d(&x, &a)).is_zero());
    }

    #[test]
    fn d_beyond_top_dimension_is_zero() {
        let x = complex(&[&[0, 1]]);
        let a = cochain(1, &[(&[0, 1], 3)]);
        let da = d(&x, &a);
        assert_eq!(da.degree(), 2);
        assert!(da.is_zero());
    }

    #[test]
    fn cup_front_back_rule() {
        let a = cochain(1, &[(&[0, 1], 2), (&[1, 2], 3), (&[0, 2], 5)]);
        let b = cochain(1, &[(&[0, 1], 7), (&[1, 2], 11), (&[0, 2], 13)]);
        assert_eq!(cup_eval(&a, &b, &vids(&[0, 1, 2])).unwrap(), s(2 * 11));
        // [1,0,2]: a[1,0] · b[0,2]
        assert_eq!(cup_eval(&a, &b, &vids(&[1, 0, 2])).unwrap(), s(-2 * 13));

        let f = cochain(0, &[(&[0], 4), (&[1], 6)]);
        assert_eq!(cup_eval(&f, &a, &vids(&[0, 1])).unwrap(), s(4 * 2));

        let a2 = cochain(2, &[(&[0, 1, 2], 3)]);
        let b1 = cochain(1, &[(&[2, 3], 5)]);
        assert_eq!(cup_eval(&a2, &b1, &vids(&[0, 1, 2, 3])).unwrap(), s(15));
        assert!(cup_eval(&a2, &b1, &vids(&[0, 1, 2])).is_err());
    }

    #[test]
    fn cup_is_not_skew() {
        let x = complex(&[&[0, 1]]);
        let f = cochain(0, &[(&[0], 1), (&[1], 0)]);
        let a = cochain(1, &[(&[0, 1], 1)]);
        // f0·a01 = 1 but −f1·a10 = 0 on the reversed edge
        assert_eq!(cup(&x, &f, &a).eval(&vids(&[0, 1])).unwrap(), s(1));
        assert_eq!(cup_eval(&f, &a, &vids(&[1, 0])).unwrap(), s(0));
    }

    #[test]
    fn function_times_one_form_averages() {
        let x = complex(&[&[0, 1]]);
        let f = cochain(0, &[(&[0], 3), (&[1], 8)]);
        let a = cochain(1, &[(&[0, 1], 2)]);
        let expected = Scalar::new(11, 2) * s(2);
        for m in [WedgeMethod::PermutationSum, WedgeMethod::AverageOuterLeft, WedgeMethod::AverageOuterRight] {
            assert_eq!(wedge(&x, &f, &a, m).eval(&vids(&[0, 1])).unwrap(), expected, "{m:?}");
        }
    }

    #[test]
    fn zero_factor() {
        let x = complex(&[&[0, 1, 2]]);
        let b = cochain(1, &[(&[0, 1], 3), (&[1, 2], 4)]);
        for m in [WedgeMethod::PermutationSum, WedgeMethod::AverageOuterLeft, WedgeMethod::AverageOuterRight] {
            assert!(wedge(&x, &Cochain::zero(1), &b, m).is_zero());
        }
    }

    #[test]
    fn degree_overflow_is_zero_cochain() {
        let x = complex(&[&[0, 1]]);
        let a = cochain(1, &[(&[0, 1], 3)]);
        let w = wedge_perm(&x, &a, &a);
        assert_eq!(w.degree(), 2);
        assert!(w.is_zero());
    }

    #[test]
    fn ordering_parity_examples() {
        let tri = OrientedSimplex::new(vids(&[0, 1, 2])).unwrap();
        let tet = OrientedSimplex::new(vids(&[0, 1, 2, 3])).unwrap();
        let v = VertexId;
        assert_eq!(ordering_parity(&vids(&[0, 1]), v(1), &vids(&[2]), &tri).unwrap(), Sign::Plus);
        assert_eq!(ordering_parity(&vids(&[0, 2]), v(2), &vids(&[1]), &tri).unwrap(), Sign::Minus);
        // (1,2,0,3): two inversions
        assert_eq!(ordering_parity(&vids(&[0, 1, 2]), v(0), &vids(&[3]), &tet).unwrap(), Sign::Plus);
    }

    #[test]
    fn ordering_parity_relative_to_chosen_orientation() {
        let tri = OrientedSimplex::new(vids(&[1, 0, 2])).unwrap();
        assert_eq!(
            ordering_parity(&vids(&[0, 1]), VertexId(1), &vids(&[2]), &tri).unwrap(),
            Sign::Minus
        );
    }

    #[test]
    fn ordering_parity_mismatch() {
        let tri = OrientedSimplex::new(vids(&[0, 1, 2])).unwrap();
        let v = VertexId;
        for (f, vx, rest) in [
            (vids(&[0, 1]), v(2), vids(&[2])),
            (vids(&[0, 1]), v(1), vids(&[3])),
            (vids(&[0, 1]), v(1), vids(&[1])),
            (vids(&[0, 1]), v(1), vids(&[])),
        ] {
            assert_eq!(
                ordering_parity(&f, vx, &rest, &tri),
                Err(DecError::VertexMismatch(vids(&[0, 1, 2])))
            );
        }
    }
}
