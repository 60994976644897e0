//! Pumping witnesses `w = u·x·v` with `μ(x)` pseudoregular.

use std::collections::HashMap;

use serde::Serialize;

use crate::endos::{is_pseudoregular, EndoReport};
use crate::error::{Error, Result};
use crate::linrep::{LinearRepresentation, Matrix};
use crate::pump::quasipower::{find_quasipower, QuasipowerMode};
use crate::spans::{image_basis, length_bound, span_equal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessSource {
    QuasipowerChain,
    OpportunisticScan,
    PowerRule,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WitnessMode {
    /// Image chain along a strict quasipower tower.
    Chain,
    /// Shortest pseudoregular subword, leftmost first.
    #[default]
    Scan,
}

impl std::str::FromStr for WitnessMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<WitnessMode> {
        match s {
            "chain" => Ok(WitnessMode::Chain),
            "scan" => Ok(WitnessMode::Scan),
            other => Err(Error::InvalidArgument(format!("unknown witness mode {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PumpingWitness {
    pub u: String,
    pub x: String,
    pub v: String,
    pub evidence: EndoReport,
    pub source: WitnessSource,
}

impl PumpingWitness {
    pub fn word(&self) -> String {
        format!("{}{}{}", self.u, self.x, self.v)
    }

    /// `u·x^k·v`.
    pub fn pumped(&self, k: usize) -> String {
        format!("{}{}{}", self.u, self.x.repeat(k), self.v)
    }
}

fn split(chars: &[char], start: usize, len: usize) -> (String, String, String) {
    (
        chars[..start].iter().collect(),
        chars[start..start + len].iter().collect(),
        chars[start + len..].iter().collect(),
    )
}

/// Splits `w = u·x·v` with `x ≠ ε` and `μ(x)` pseudoregular.
pub fn extract_witness(rep: &LinearRepresentation, w: &str, mode: WitnessMode) -> Result<PumpingWitness> {
    rep.mu_of_word(w)?;
    match mode {
        WitnessMode::Scan => scan(rep, w),
        WitnessMode::Chain => chain(rep, w),
    }
}

fn scan(rep: &LinearRepresentation, w: &str) -> Result<PumpingWitness> {
    let chars: Vec<char> = w.chars().collect();
    let n = chars.len();
    let letters: Vec<&Matrix> = chars
        .iter()
        .map(|&c| rep.letter_matrix(c))
        .collect::<Result<_>>()?;
    // row[s] = μ(w[s..s+len])
    let mut row: Vec<Matrix> = Vec::new();
    let mut verdicts: HashMap<&[char], bool> = HashMap::new();
    for len in 1..=n {
        row = if len == 1 {
            letters.iter().map(|m| (*m).clone()).collect()
        } else {
            (0..=n - len)
                .map(|s| row[s].mul(letters[s + len - 1]))
                .collect::<Result<_>>()?
        };
        for (start, m) in row.iter().enumerate() {
            let key = &chars[start..start + len];
            if verdicts.get(key) == Some(&false) {
                continue;
            }
            let report = is_pseudoregular(m)?;
            if report.pseudoregular {
                let (u, x, v) = split(&chars, start, len);
                return Ok(PumpingWitness {
                    u,
                    x,
                    v,
                    evidence: report,
                    source: WitnessSource::OpportunisticScan,
                });
            }
            verdicts.insert(key, false);
        }
    }
    Err(Error::NoWitness(w.to_string()))
}

fn chain(rep: &LinearRepresentation, w: &str) -> Result<PumpingWitness> {
    let bound = length_bound(rep.semiring(), rep.dimension())?;
    let r = bound + 1;
    let tower = find_quasipower(w, r, QuasipowerMode::Strict)?;
    let mut previous = image_basis(&rep.mu_of_word(&tower.levels[0])?);
    for i in 1..=r {
        let current = image_basis(&rep.mu_of_word(&tower.levels[i])?);
        if span_equal(&current, &previous)? {
            let x = format!("{}{}", tower.middles[i - 1], tower.levels[i - 1]);
            let report = is_pseudoregular(&rep.mu_of_word(&x)?)?;
            if !report.pseudoregular {
                return Err(Error::Invariant(format!(
                    "chain step {i} gave a non-pseudoregular subword {x:?}"
                )));
            }
            let chars: Vec<char> = w.chars().collect();
            let start = tower.position + tower.levels[i - 1].chars().count();
            let (u, x, v) = split(&chars, start, x.chars().count());
            return Ok(PumpingWitness {
                u,
                x,
                v,
                evidence: report,
                source: WitnessSource::QuasipowerChain,
            });
        }
        previous = current;
    }
    Err(Error::Invariant(format!(
        "image chain of length {r} has no equal step although the length bound is {bound}"
    )))
}
