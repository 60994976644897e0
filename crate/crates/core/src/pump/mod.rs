//! The pumping pipeline: quasipower towers, pseudoregular witnesses, the
//! gap-bounded pumped-weight sequence, large-alphabet variants and support
//! refutation.

mod alphabet;
mod gap;
mod quasipower;
mod refute;
mod witness;

pub use alphabet::{pump_power_witness, reduce_alphabet, AlphabetReduction};
pub use gap::{gap_sequence, pump_verify, GapReport, PumpReport, PumpedWord, DEFAULT_K};
pub use quasipower::{
    find_quasipower, quasipower_constant, verify_quasipower, QuasipowerDecomposition, QuasipowerMode,
};
pub use refute::{refute_support, Claim, Verdict};
pub use witness::{extract_witness, PumpingWitness, WitnessMode, WitnessSource};
