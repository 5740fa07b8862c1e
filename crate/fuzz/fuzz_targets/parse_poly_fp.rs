#![no_main]

use kuores_core::expr_parse::{parse_poly, print_poly};
use kuores_core::numeric::PrimeField;
use kuores_core::polynomial::fp_poly;
use kuores_core::Var;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|input: (u8, &str)| {
    let (choice, text) = input;
    let p = [2, 3, 5, 7, 101, 65537][choice as usize % 6];
    let ring = fp_poly(PrimeField::new(p).unwrap(), Var::X);
    if let Ok(a) = parse_poly(text, &ring) {
        assert_eq!(parse_poly(&print_poly(&ring, &a), &ring).unwrap(), a);
    }
});
