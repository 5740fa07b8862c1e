//! Exact computer algebra for composed resultants
//! `h(T) = (-1)^deg g * Res_Y(g, f - T)`: resultants over `Q`, `F_p` and
//! `Q[X]`, factorization over finite fields, Newton polygons with the
//! Eisenstein-Dumas criterion, and Frobenius-orbit Galois checks.

pub mod campaign;
pub mod error;
pub mod expr_parse;
pub mod factor_ff;
pub mod field_spec;
pub mod galois;
pub mod newton_polygon;
pub mod numeric;
pub mod polynomial;
pub mod resultant;
pub mod ring;

pub use error::{Error, Result};
pub use field_spec::FieldSpec;
pub use polynomial::{BiPoly, Poly, PolyRing};
pub use ring::{Field, FiniteField, Ring, Var};
