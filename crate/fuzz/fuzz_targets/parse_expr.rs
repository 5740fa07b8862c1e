#![no_main]

use kuores_core::expr_parse::parse_expr;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Err(e) = parse_expr(text) {
        assert!(e.pos <= text.len());
    }
});
