//! Permutation parity and small combinatorial helpers.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;
use std::ops::{Mul, Neg};

use crate::scalar::Scalar;

/// Sign of a permutation, or of an orientation relative to a reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// `(-1)^n`
    pub fn alternating(n: usize) -> Self {
        Sign::from_parity(n % 2 == 1)
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn to_scalar(self) -> Scalar {
        Scalar::from(self.to_i8() as i64)
    }

    /// Multiplies `value` by this sign.
    pub fn apply(self, value: Scalar) -> Scalar {
        match self {
            Sign::Plus => value,
            Sign::Minus => -value,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

/// Parity of the permutation that sorts `items` ascending, by inversion count.
/// Items are assumed distinct.
pub fn sorting_sign<T: Ord>(items: &[T]) -> Sign {
    let inversions = items
        .iter()
        .enumerate()
        .map(|(i, a)| items[i + 1..].iter().filter(|b| a > *b).count())
        .sum::<usize>();
    Sign::alternating(inversions)
}

/// Every ordering of `items` together with its sign relative to the given order.
pub fn signed_orderings<T: Clone>(items: &[T]) -> impl Iterator<Item = (Vec<T>, Sign)> + '_ {
    (0..items.len()).permutations(items.len()).map(move |idx| {
        let sign = sorting_sign(&idx);
        (idx.into_iter().map(|i| items[i].clone()).collect(), sign)
    })
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}
