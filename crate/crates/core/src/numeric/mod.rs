//! Exact scalar domains: the rationals, prime fields `F_p` and extension
//! fields `F_{p^d}` presented as `F_p[Z]/(m(Z))`.

mod ext_field;
mod prime_field;
mod rational;

pub use ext_field::ExtField;
pub use prime_field::{is_prime, mod_inverse, PrimeField, MAX_MODULUS};
pub use rational::{Rational, Rationals};
