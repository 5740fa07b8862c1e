use num_traits::{Signed, Zero};

use crate::ring::{is_unit_scalar, Ring};

/// Canonical text form: terms by descending outer degree (then descending
/// inner degree), coefficient `1` elided, explicit `*` between factors.
///
/// The output parses back to the same element with [`super::parse_poly`].
pub fn print_poly<R: Ring>(ring: &R, a: &R::Elem) -> String {
    let monomials = ring.monomials(a);
    if monomials.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (c, vars)) in monomials.iter().enumerate() {
        debug_assert!(!c.is_zero());
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let mut factors = Vec::new();
        if vars.is_empty() || !is_unit_scalar(&abs) {
            factors.push(abs.to_string());
        }
        for (v, k) in vars {
            if *k == 1 {
                factors.push(v.to_string());
            } else {
                factors.push(format!("{v}^{k}"));
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}
