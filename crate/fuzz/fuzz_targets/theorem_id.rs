#![no_main]

use kuores_core::campaign::TheoremId;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    if let Ok(t) = text.parse::<TheoremId>() {
        assert_eq!(t.as_str(), text);
    }
});
