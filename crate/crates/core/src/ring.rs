//! Coefficient-domain abstraction.
//!
//! A ring is a *descriptor* value (it may carry a runtime modulus) and the
//! elements are plain data. All the polynomial, linear-algebra and
//! factorization code is written against these traits, so the same Bareiss
//! routine runs over `Q`, `F_p[T]` and `Q[X][T]`.

use std::fmt;
use std::hash::Hash;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Variable tags. Polynomials carry one and refuse to mix with another.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Var {
    X,
    Y,
    T,
    Z,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X, Var::Y, Var::T, Var::Z];

    pub fn from_char(c: char) -> Option<Var> {
        match c {
            'X' => Some(Var::X),
            'Y' => Some(Var::Y),
            'T' => Some(Var::T),
            'Z' => Some(Var::Z),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Var::X => 'X',
            Var::Y => 'Y',
            Var::T => 'T',
            Var::Z => 'Z',
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// One monomial of an element, flattened across all nested variables:
/// a scalar coefficient and the variable powers, innermost variable first.
pub type Monomial = (BigRational, Vec<(Var, u32)>);

/// Exact commutative ring with identity, given by a descriptor.
///
/// `exact_div` is the only division the generic algorithms need: it returns
/// `Some(q)` iff `b != 0` and `a = q * b` for a (necessarily unique) `q`.
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;

    /// Image of an integer under the canonical map `Z -> R`.
    fn from_int(&self, n: &BigInt) -> Self::Elem;

    /// `true` when every nonzero element is invertible.
    fn is_field(&self) -> bool;

    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    /// `n` distinct elements whose pairwise differences are units, if the
    /// ring has that many (interpolation nodes).
    fn sample_points(&self, n: usize) -> Option<Vec<Self::Elem>>;

    /// Flattened monomial expansion used by the printer.
    fn monomials(&self, a: &Self::Elem) -> Vec<Monomial>;

    /// The element denoted by a variable symbol, if `v` is declared in this ring.
    fn variable(&self, _v: Var) -> Option<Self::Elem> {
        None
    }

    /// Variables this ring declares, innermost first.
    fn variables(&self) -> Vec<Var> {
        Vec::new()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    /// Inverse of a unit.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.exact_div(&self.one(), a)
    }

    fn pow(&self, a: &Self::Elem, e: u64) -> Self::Elem {
        self.pow_big(a, &BigUint::from(e))
    }

    /// Square-and-multiply, most significant bit first.
    fn pow_big(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        if e.is_zero() {
            return self.one();
        }
        let mut acc = a.clone();
        for i in (0..e.bits() - 1).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }
}

/// Marker for rings where `inv` succeeds on every nonzero element.
pub trait Field: Ring {}

/// A finite field `F_q`, `q = p^d`.
#[allow(clippy::wrong_self_convention)]
pub trait FiniteField: Field {
    /// The prime `p`.
    fn prime(&self) -> u64;
    /// Degree `d` over the prime field.
    fn degree(&self) -> u32;
    /// Image of a residue of the prime subfield.
    fn from_prime_residue(&self, c: u64) -> Self::Elem;
    fn random_element<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem;
    /// Every element, in a fixed order. Only sensible for small fields.
    fn elements(&self) -> Vec<Self::Elem>;

    fn order(&self) -> BigUint {
        num_traits::pow(BigUint::from(self.prime()), self.degree() as usize)
    }

    /// `a -> a^p`.
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem {
        self.pow(a, self.prime())
    }

    /// The unique `b` with `b^p = a`, namely `a^(p^(d-1))`.
    fn pth_root(&self, a: &Self::Elem) -> Self::Elem {
        let e = num_traits::pow(BigUint::from(self.prime()), self.degree() as usize - 1);
        self.pow_big(a, &e)
    }
}

/// `true` when `q` is the integer 1 in the rational printer sense.
pub(crate) fn is_unit_scalar(q: &BigRational) -> bool {
    q.is_one() || (-q).is_one()
}
