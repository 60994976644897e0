#![no_main]

use libfuzzer_sys::fuzz_target;
use wpump_core::format;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(rep) = format::from_str(text) {
        let canonical = format::to_canonical_string(&rep);
        let again = format::from_str(&canonical).expect("canonical output parses");
        assert_eq!(format::to_canonical_string(&again), canonical);
    }
});
