#![no_main]

use libfuzzer_sys::fuzz_target;

// Newline-separated argument vectors. Campaigns are skipped.
fuzz_target!(|text: &str| {
    let args: Vec<&str> = text.split('\n').collect();
    if args.contains(&"verify") {
        return;
    }
    let out = kuores_cli::run(std::iter::once("kuores").chain(args));
    assert!((0..=2).contains(&out.code));
});
