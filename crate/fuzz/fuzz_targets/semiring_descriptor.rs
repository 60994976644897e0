#![no_main]

use libfuzzer_sys::fuzz_target;
use wpump_core::{Semiring, SemiringSpec};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let short = text.parse::<SemiringSpec>();
    let json = serde_json::from_str::<SemiringSpec>(text);
    for spec in short.into_iter().chain(json) {
        if let Ok(semiring) = Semiring::from_spec(&spec) {
            assert_eq!(Semiring::from_spec(&semiring.spec()).unwrap(), semiring);
        }
    }
});
