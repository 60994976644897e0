//! Pumping witnesses for recognizable weighted languages over Artinian
//! semirings.
//!
//! The crate is organised bottom-up:
//!
//! * [`scalars`]: exact commutative semirings (Boolean, `Z_n`, `F_p`, `Q`,
//!   dual rationals `Q[x]/(x²)`, max-times, explicit finite tables);
//! * [`linrep`]: matrices and linear representations `(Q, in, out, μ)`;
//! * [`spans`]: finitely generated subsemimodules, subsemimodule lattices
//!   and lengths;
//! * [`endos`]: pseudoregular endomorphisms;
//! * [`pump`]: quasipowers, witness extraction, pumped-weight sequences and
//!   support refutation;
//! * [`format`]: the JSON automaton file format.

pub mod endos;
pub mod error;
pub mod format;
pub mod linrep;
pub mod pump;
pub mod scalars;
pub mod spans;

pub use error::{Error, Result};
pub use linrep::{LinearRepresentation, Matrix};
pub use scalars::{Scalar, Semiring, SemiringSpec, Tier};
