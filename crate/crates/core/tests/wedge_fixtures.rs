//! Worked low-dimensional wedge products written out term by term.

mod common;

use common::*;
use dec_core::{vids, wedge, Cochain, Scalar, SimplicialComplex, WedgeMethod};

const METHODS: [WedgeMethod; 3] = [
    WedgeMethod::PermutationSum,
    WedgeMethod::AverageOuterLeft,
    WedgeMethod::AverageOuterRight,
];

fn at(c: &Cochain, v: &[u32]) -> Scalar {
    c.eval(&vids(v)).unwrap()
}

fn q(n: i64, d: i64) -> Scalar {
    Scalar::new(n, d)
}

#[test]
fn triangle_one_forms() {
    let x = full_simplex(2);
    for seed in 0..20 {
        let mut r = rng(seed);
        let a = random_cochain(&mut r, &x, 1);
        let b = random_cochain(&mut r, &x, 1);
        let (a_, b_) = (|v: &[u32]| at(&a, v), |v: &[u32]| at(&b, v));

        let six_term = q(1, 6)
            * (a_(&[0, 1]) * b_(&[1, 2]) - a_(&[0, 2]) * b_(&[2, 1]) - a_(&[1, 0]) * b_(&[0, 2])
                + a_(&[1, 2]) * b_(&[2, 0])
                + a_(&[2, 0]) * b_(&[0, 1])
                - a_(&[2, 1]) * b_(&[1, 0]));
        let by_vertex = q(1, 6)
            * ((a_(&[0, 1]) * b_(&[0, 2]) - a_(&[0, 2]) * b_(&[0, 1]))
                + (a_(&[0, 1]) * b_(&[1, 2]) - a_(&[1, 2]) * b_(&[0, 1]))
                + (a_(&[0, 2]) * b_(&[1, 2]) - a_(&[1, 2]) * b_(&[0, 2])));
        let outer_a = q(1, 3)
            * (a_(&[0, 1]) * (b_(&[0, 2]) + b_(&[1, 2])) * q(1, 2)
                + a_(&[1, 2]) * (b_(&[1, 0]) + b_(&[2, 0])) * q(1, 2)
                + a_(&[2, 0]) * (b_(&[0, 1]) + b_(&[2, 1])) * q(1, 2));
        let outer_b = q(1, 3)
            * ((a_(&[2, 0]) + a_(&[2, 1])) * q(1, 2) * b_(&[0, 1])
                + (a_(&[0, 1]) + a_(&[0, 2])) * q(1, 2) * b_(&[1, 2])
                + (a_(&[1, 0]) + a_(&[1, 2])) * q(1, 2) * b_(&[2, 0]));

        assert_eq!(six_term, by_vertex);
        assert_eq!(six_term, outer_a);
        assert_eq!(six_term, outer_b);
        for m in METHODS {
            assert_eq!(at(&wedge(&x, &a, &b, m), &[0, 1, 2]), six_term, "{m:?}");
        }
    }
}

#[test]
fn tetrahedron_two_form_with_one_form() {
    let x = full_simplex(3);
    for seed in 0..20 {
        let mut r = rng(100 + seed);
        let a = random_cochain(&mut r, &x, 2);
        let b = random_cochain(&mut r, &x, 1);
        let (a_, b_) = (|v: &[u32]| at(&a, v), |v: &[u32]| at(&b, v));
        let third = q(1, 3);
        let averaged = q(1, 4)
            * (a_(&[0, 1, 2]) * (b_(&[0, 3]) + b_(&[1, 3]) + b_(&[2, 3])) * &third
                + a_(&[0, 3, 1]) * (b_(&[0, 2]) + b_(&[1, 2]) + b_(&[3, 2])) * &third
                + a_(&[0, 2, 3]) * (b_(&[0, 1]) + b_(&[2, 1]) + b_(&[3, 1])) * &third
                + a_(&[1, 3, 2]) * (b_(&[1, 0]) + b_(&[2, 0]) + b_(&[3, 0])) * &third);
        let by_vertex = q(1, 24)
            * (q(2, 1) * (a_(&[0, 1, 2]) * b_(&[0, 3]) - a_(&[0, 1, 3]) * b_(&[0, 2]) + a_(&[0, 2, 3]) * b_(&[0, 1]))
                + q(2, 1) * (a_(&[0, 1, 2]) * b_(&[1, 3]) - a_(&[0, 1, 3]) * b_(&[1, 2]) + a_(&[1, 2, 3]) * b_(&[0, 1]))
                + q(2, 1) * (a_(&[0, 1, 2]) * b_(&[2, 3]) - a_(&[0, 2, 3]) * b_(&[1, 2]) + a_(&[1, 2, 3]) * b_(&[0, 2]))
                + q(2, 1) * (a_(&[0, 1, 3]) * b_(&[2, 3]) - a_(&[0, 2, 3]) * b_(&[1, 3]) + a_(&[1, 2, 3]) * b_(&[0, 3])));
        assert_eq!(averaged, by_vertex);
        for m in METHODS {
            assert_eq!(at(&wedge(&x, &a, &b, m), &[0, 1, 2, 3]), averaged, "{m:?}");
        }
    }
}

#[test]
fn function_times_two_form() {
    let x = full_simplex(2);
    let mut r = rng(7);
    let a = random_cochain(&mut r, &x, 0);
    let b = random_cochain(&mut r, &x, 2);
    let expected = (at(&a, &[0]) + at(&a, &[1]) + at(&a, &[2])) * q(1, 3) * at(&b, &[0, 1, 2]);
    for m in METHODS {
        assert_eq!(at(&wedge(&x, &a, &b, m), &[0, 1, 2]), expected, "{m:?}");
    }
}

#[test]
fn non_associativity_on_an_edge() {
    let x = full_simplex(1);
    let alpha = Cochain::from_values(0, [(vids(&[0]), q(1, 1)), (vids(&[1]), q(0, 1))]).unwrap();
    let beta = Cochain::from_values(0, [(vids(&[0]), q(0, 1)), (vids(&[1]), q(1, 1))]).unwrap();
    let omega = Cochain::from_values(1, [(vids(&[0, 1]), q(1, 1))]).unwrap();
    for m in METHODS {
        let left = wedge(&x, &wedge(&x, &alpha, &beta, m), &omega, m);
        let right = wedge(&x, &alpha, &wedge(&x, &beta, &omega, m), m);
        assert_eq!(at(&left, &[0, 1]), q(0, 1), "{m:?}");
        assert_eq!(at(&right, &[0, 1]), q(1, 4), "{m:?}");
    }
}

#[test]
fn constant_one_is_a_unit() {
    for n in 0..=4 {
        let x = full_simplex(n);
        let one = Cochain::constant(&x, 0, &Scalar::one());
        for l in 0..=n as usize {
            let b = random_cochain(&mut rng(n as u64 * 10 + l as u64), &x, l);
            // brute-force permutation sum first, then the averaging forms
            assert_eq!(wedge(&x, &one, &b, WedgeMethod::PermutationSum), b, "n={n} l={l}");
            assert_eq!(wedge(&x, &one, &b, WedgeMethod::AverageOuterLeft), b);
            assert_eq!(wedge(&x, &one, &b, WedgeMethod::AverageOuterRight), b);
        }
    }
}

#[test]
fn chosen_orientation_does_not_change_the_product() {
    let plain = full_simplex(3);
    let twisted = SimplicialComplex::closure(&[vids(&[2, 0, 3, 1])]).unwrap();
    let mut r = rng(99);
    let a = random_cochain(&mut r, &plain, 1);
    let b = random_cochain(&mut r, &plain, 2);
    for m in METHODS {
        assert_eq!(wedge(&plain, &a, &b, m), wedge(&twisted, &a, &b, m));
    }
}
