//! The pumped-weight sequence `s_k = in·μ(u)·μ(x)^k·μ(v)·out` and its
//! bounded zero runs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linrep::{dot, LinearRepresentation};
use crate::pump::witness::{extract_witness, PumpingWitness, WitnessMode};
use crate::scalars::Scalar;
use crate::spans::length_bound;

/// Default number of pumping steps.
pub const DEFAULT_K: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapReport {
    /// `s_0, .., s_K`.
    pub weights: Vec<Scalar>,
    /// `None` when the semiring has no finite length bound.
    pub gap_bound: Option<usize>,
    /// Longest run of zeros among `s_1..s_K` after the first nonzero one.
    pub max_zero_run_after_first_nonzero: usize,
    /// `None` when no bound is available.
    pub violated: Option<bool>,
}

impl GapReport {
    pub fn nonzero_count(&self, zero: &Scalar) -> usize {
        self.weights.iter().filter(|s| *s != zero).count()
    }
}

fn zero_run(weights: &[Scalar], zero: &Scalar) -> usize {
    let mut seen_nonzero = false;
    let (mut run, mut best) = (0, 0);
    for s in weights {
        if s == zero {
            if seen_nonzero {
                run += 1;
                best = best.max(run);
            }
        } else {
            seen_nonzero = true;
            run = 0;
        }
    }
    best
}

/// Computes `s_0..s_K` for a witness of `rep`.
pub fn gap_sequence(rep: &LinearRepresentation, witness: &PumpingWitness, k_max: usize) -> Result<GapReport> {
    if k_max == 0 {
        return Err(Error::InvalidArgument("K must be at least 1".into()));
    }
    if witness.x.is_empty() {
        return Err(Error::InvalidArgument("witness has an empty pumped factor".into()));
    }
    let s = rep.semiring();
    let f = rep.prefix_covector(&witness.u)?;
    let alpha = rep.mu_of_word(&witness.x)?;
    let mut vec = rep.suffix_vector(&witness.v)?;
    let mut weights = Vec::with_capacity(k_max + 1);
    weights.push(dot(s, &f, &vec));
    for _ in 0..k_max {
        vec = alpha.apply(&vec);
        weights.push(dot(s, &f, &vec));
    }
    let zero = s.zero();
    let run = zero_run(&weights[1..], &zero);
    let gap_bound = length_bound(s, rep.dimension()).ok();
    let violated = gap_bound.map(|b| weights[1] != zero && run > b);
    Ok(GapReport {
        weights,
        gap_bound,
        max_zero_run_after_first_nonzero: run,
        violated,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PumpedWord {
    pub k: usize,
    pub word: String,
    pub weight: Scalar,
}

#[derive(Clone, Debug, Serialize)]
pub struct PumpReport {
    pub word: String,
    pub weight: Scalar,
    pub witness: PumpingWitness,
    pub pumped: Vec<PumpedWord>,
    pub nonzero_count: usize,
    pub gap: GapReport,
}

/// Extracts a witness for `w ∈ supp L` and pumps it `K` times.
pub fn pump_verify(
    rep: &LinearRepresentation,
    w: &str,
    k_max: usize,
    mode: WitnessMode,
) -> Result<PumpReport> {
    let weight = rep.evaluate(w)?;
    if rep.semiring().is_zero(&weight) {
        return Err(Error::NotInSupport(w.to_string()));
    }
    let witness = extract_witness(rep, w, mode)?;
    let gap = gap_sequence(rep, &witness, k_max)?;
    let pumped: Vec<PumpedWord> = gap
        .weights
        .iter()
        .enumerate()
        .map(|(k, weight)| PumpedWord {
            k,
            word: witness.pumped(k),
            weight: weight.clone(),
        })
        .collect();
    let nonzero_count = gap.nonzero_count(&rep.semiring().zero());
    Ok(PumpReport {
        word: w.to_string(),
        weight,
        witness,
        pumped,
        nonzero_count,
        gap,
    })
}
