#![no_main]

use libfuzzer_sys::fuzz_target;
use wpump_core::Semiring;

// First byte picks the semiring, the rest is the literal.
fuzz_target!(|data: &[u8]| {
    let Some((&pick, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let semiring = match pick % 7 {
        0 => Semiring::Boolean,
        1 => Semiring::Modular(12),
        2 => Semiring::PrimeField(7),
        3 => Semiring::Rationals,
        4 => Semiring::DualRationals,
        5 => Semiring::MaxTimes,
        _ => Semiring::Modular(256),
    };
    if let Ok(value) = semiring.parse(text) {
        let canonical = semiring.format(&value);
        assert_eq!(semiring.parse(&canonical).unwrap(), value);
    }
});
