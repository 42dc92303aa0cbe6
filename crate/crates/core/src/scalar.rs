//! Exact rational scalars.
//!
//! Every coefficient in this crate is a [`Scalar`], an arbitrary-precision
//! rational kept in lowest terms. The textual form is `p/q`, or just `p` when
//! the denominator is one.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(BigRational);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid scalar {input:?}: expected an integer or p/q with q nonzero")]
pub struct ParseScalarError {
    input: String,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Scalar(BigRational::from_integer(n.into()))
    }

    /// `numer / denom`, reduced. Panics when `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Scalar(BigRational::new(numer.into(), denom.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Scalar(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Self> {
        rhs.recip().map(|r| self * &r)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_integer(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from_integer(n)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::from_integer(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseScalarError { input: s.to_owned() };
        let s = s.trim();
        let (numer, denom) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let numer: BigInt = numer.parse().map_err(|_| err())?;
        let denom: BigInt = denom.parse().map_err(|_| err())?;
        if denom.is_zero() {
            return Err(err());
        }
        Ok(Scalar(BigRational::new(numer, denom)))
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $Trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl $Trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
        impl $Trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Division by zero panics, as for the underlying rational type.
forward_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!("2/4".parse::<Scalar>().unwrap(), Scalar::new(1, 2));
        assert_eq!("-3".parse::<Scalar>().unwrap(), Scalar::from(-3));
        assert_eq!("3/-6".parse::<Scalar>().unwrap(), Scalar::new(-1, 2));
        assert_eq!(Scalar::new(3, -6).denom(), &BigInt::from(2));
        assert_eq!(Scalar::new(6, 3).to_string(), "2");
        assert_eq!(Scalar::new(-3, 2).to_string(), "-3/2");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "1/0", "a", "1/2/3", "1.5", "/2"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn division() {
        let a = Scalar::new(3, 4);
        assert_eq!(a.checked_div(&Scalar::zero()), None);
        assert_eq!(a.checked_div(&Scalar::new(3, 2)), Some(Scalar::new(1, 2)));
        assert_eq!(Scalar::zero().recip(), None);
    }

    fn scalar() -> impl Strategy<Value = Scalar> {
        (-1000i64..=1000, 1i64..=1000).prop_map(|(n, d)| Scalar::new(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if let Some(q) = a.checked_div(&b) {
                prop_assert_eq!(q * &b, a.clone());
            }
        }

        #[test]
        fn text_round_trip(a in scalar()) {
            let s = a.to_string();
            prop_assert_eq!(s.parse::<Scalar>().unwrap(), a.clone());
            prop_assert!(a.denom() > &BigInt::zero());
        }
    }
}
