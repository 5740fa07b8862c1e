#![no_main]

use kuores_core::expr_parse::{parse_poly, print_poly};
use kuores_core::numeric::Rational;
use kuores_core::polynomial::{q_poly, qx_poly};
use kuores_core::Var;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: Vec<(i32, u16)>| {
    let coeffs: Vec<Rational> = data.iter().map(|&(n, d)| Rational::new(n.into(), (i64::from(d) + 1).into())).collect();
    let r = q_poly(Var::Y);
    let a = r.from_coeffs(coeffs.clone());
    assert_eq!(parse_poly(&print_poly(&r, &a), &r).unwrap(), a);

    let rx = qx_poly(Var::T);
    let rows = coeffs.chunks(4).map(|c| rx.base().from_coeffs(c.to_vec())).collect();
    let b = rx.from_coeffs(rows);
    assert_eq!(parse_poly(&print_poly(&rx, &b), &rx).unwrap(), b);
});
