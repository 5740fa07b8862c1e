use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ring::{Field, Monomial, Ring};

/// Rationals are kept in lowest terms with a positive denominator by
/// `num_rational`, so equality is structural.
pub type Rational = BigRational;

/// The field `Q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn exact_div(&self, a: &Rational, b: &Rational) -> Option<Rational> {
        if b.is_zero() {
            None
        } else {
            Some(a / b)
        }
    }

    fn from_int(&self, n: &BigInt) -> Rational {
        Rational::from_integer(n.clone())
    }

    fn is_field(&self) -> bool {
        true
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn sample_points(&self, n: usize) -> Option<Vec<Rational>> {
        Some((0..n).map(|i| Rational::from_integer(BigInt::from(i))).collect())
    }

    fn monomials(&self, a: &Rational) -> Vec<Monomial> {
        if a.is_zero() {
            Vec::new()
        } else {
            vec![(a.clone(), Vec::new())]
        }
    }
}

impl Field for Rationals {}
