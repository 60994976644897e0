//! Bounded search for evidence that a representation does not have a
//! claimed support.
//!
//! # Why `a^n b^n` always fails
//!
//! Suppose `rep` had support exactly `{a^n b^n}` over an Artinian semiring.
//! Take `w = a^m b^m` with `m` large. Any factorization `w = u·x·v` whose
//! `μ(x)` is pseudoregular yields infinitely many `k` with `u·x^k·v` in the
//! support. Every candidate `x` fails to keep the shape: an `x` inside the
//! `a` block adds only `a`s, one inside the `b` block only `b`s, and one
//! straddling the boundary puts an `a` after a `b` once `k ≥ 2`. So some
//! pumped word is in the support but not of the form `a^n b^n`.
//!
//! [`refute_support`] replays this argument at desk scale. It first
//! compares the support with the claim on every word up to `max_len`; if
//! they agree, it extracts witnesses from the support words and pumps them
//! up to `K` times, looking for a pumped support word outside the claim.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linrep::{dot, LinearRepresentation, DEFAULT_SUPPORT_BUDGET};
use crate::pump::gap::gap_sequence;
use crate::pump::witness::{extract_witness, WitnessMode};
use crate::scalars::Scalar;

/// A decidable predicate on words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Claim {
    /// `{a^n b^n | n ≥ 0}`.
    AnBn,
    /// Words with as many `a`s as `b`s.
    EqualCounts,
    /// Words of even length.
    EvenLength,
    /// An explicit finite set.
    Words(BTreeSet<String>),
}

impl Claim {
    /// Resolves a built-in claim name; `words` builds an explicit set.
    pub fn from_name(name: &str, words: &[String]) -> Result<Claim> {
        match name {
            "anbn" | "a^n b^n" => Ok(Claim::AnBn),
            "equal-counts" => Ok(Claim::EqualCounts),
            "even-length" => Ok(Claim::EvenLength),
            "words" => Ok(Claim::Words(words.iter().cloned().collect())),
            other => Err(Error::InvalidArgument(format!(
                "unknown claim {other:?} (expected anbn, equal-counts, even-length or words)"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Claim::AnBn => "anbn",
            Claim::EqualCounts => "equal-counts",
            Claim::EvenLength => "even-length",
            Claim::Words(_) => "words",
        }
    }

    pub fn contains(&self, w: &str) -> bool {
        match self {
            Claim::AnBn => {
                let a = w.chars().take_while(|&c| c == 'a').count();
                let rest = &w[a..];
                rest.chars().all(|c| c == 'b') && rest.len() == a
            }
            Claim::EqualCounts => {
                w.chars().all(|c| c == 'a' || c == 'b')
                    && w.chars().filter(|&c| c == 'a').count() == w.chars().filter(|&c| c == 'b').count()
            }
            Claim::EvenLength => w.chars().count().is_multiple_of(2),
            Claim::Words(set) => set.contains(w),
        }
    }

    /// Letters the claim talks about.
    pub fn letters(&self) -> BTreeSet<char> {
        match self {
            Claim::AnBn | Claim::EqualCounts => BTreeSet::from(['a', 'b']),
            Claim::EvenLength => BTreeSet::new(),
            Claim::Words(set) => set.iter().flat_map(|w| w.chars()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Consistent {
        words_checked: usize,
        witnesses_pumped: usize,
    },
    SupportMismatch {
        word: String,
        weight: Scalar,
        in_support: bool,
        claimed: bool,
    },
    PumpingContradiction {
        word: String,
        u: String,
        x: String,
        v: String,
        k: usize,
        pumped_word: String,
        weight: Scalar,
    },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Consistent { .. } => "CONSISTENT",
            Verdict::SupportMismatch { .. } => "SUPPORT_MISMATCH",
            Verdict::PumpingContradiction { .. } => "PUMPING_CONTRADICTION",
        }
    }
}

/// All words up to `max_len` over `alphabet` with weights; words using a
/// letter outside the representation weigh zero.
fn enumerate(
    rep: &LinearRepresentation,
    alphabet: &[char],
    max_len: usize,
) -> Result<Vec<(String, Scalar)>> {
    let sigma = alphabet.len() as u128;
    let total: u128 = (0..=max_len as u32).fold(0u128, |acc, l| acc.saturating_add(sigma.saturating_pow(l)));
    if total > DEFAULT_SUPPORT_BUDGET as u128 {
        return Err(Error::BudgetExceeded {
            what: format!("claim check up to length {max_len}"),
            needed: format!("{total} words"),
            budget: DEFAULT_SUPPORT_BUDGET,
        });
    }
    let s = rep.semiring();
    let mut out = Vec::with_capacity(total as usize);
    let mut frontier: Vec<(String, Option<Vec<Scalar>>)> = vec![(String::new(), Some(rep.input().to_vec()))];
    for len in 0..=max_len {
        for (word, f) in &frontier {
            let weight = match f {
                Some(f) => dot(s, f, rep.output()),
                None => s.zero(),
            };
            out.push((word.clone(), weight));
        }
        if len == max_len {
            break;
        }
        let mut next = Vec::with_capacity(frontier.len() * alphabet.len());
        for (word, f) in &frontier {
            for &c in alphabet {
                let mut w = word.clone();
                w.push(c);
                let g = match (f, rep.letters().get(&c)) {
                    (Some(f), Some(m)) => Some(m.apply_left(f)),
                    _ => None,
                };
                next.push((w, g));
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// Compares `supp L` with `claim` up to `max_len`, then pumps every
/// support word's scan witness up to `k_max` times.
pub fn refute_support(
    rep: &LinearRepresentation,
    claim: &Claim,
    max_len: usize,
    k_max: usize,
) -> Result<Verdict> {
    let mut alphabet: BTreeSet<char> = rep.alphabet().into_iter().collect();
    alphabet.extend(claim.letters());
    let alphabet: Vec<char> = alphabet.into_iter().collect();
    let words = enumerate(rep, &alphabet, max_len)?;
    let zero = rep.semiring().zero();

    for (word, weight) in &words {
        let in_support = *weight != zero;
        let claimed = claim.contains(word);
        if in_support != claimed {
            return Ok(Verdict::SupportMismatch {
                word: word.clone(),
                weight: weight.clone(),
                in_support,
                claimed,
            });
        }
    }

    let mut pumped = 0;
    for (word, weight) in &words {
        if *weight == zero || word.is_empty() {
            continue;
        }
        let witness = match extract_witness(rep, word, WitnessMode::Scan) {
            Ok(w) => w,
            Err(Error::NoWitness(_)) => continue,
            Err(e) => return Err(e),
        };
        pumped += 1;
        let gap = gap_sequence(rep, &witness, k_max)?;
        for (k, s) in gap.weights.iter().enumerate() {
            if *s == zero {
                continue;
            }
            let candidate = witness.pumped(k);
            if !claim.contains(&candidate) {
                return Ok(Verdict::PumpingContradiction {
                    word: word.clone(),
                    u: witness.u,
                    x: witness.x,
                    v: witness.v,
                    k,
                    pumped_word: candidate,
                    weight: s.clone(),
                });
            }
        }
    }
    Ok(Verdict::Consistent {
        words_checked: words.len(),
        witnesses_pumped: pumped,
    })
}
