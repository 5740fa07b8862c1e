#![no_main]

use kuores_core::FieldSpec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(spec) = text.parse::<FieldSpec>() {
        assert_eq!(spec.to_string().parse::<FieldSpec>().unwrap(), spec);
    }
});
