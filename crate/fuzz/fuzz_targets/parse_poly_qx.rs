#![no_main]

use kuores_core::expr_parse::{parse_poly, print_poly};
use kuores_core::polynomial::qx_poly;
use kuores_core::Var;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    for outer in [Var::Y, Var::T] {
        let ring = qx_poly(outer);
        if let Ok(p) = parse_poly(text, &ring) {
            assert_eq!(parse_poly(&print_poly(&ring, &p), &ring).unwrap(), p);
        }
    }
});
