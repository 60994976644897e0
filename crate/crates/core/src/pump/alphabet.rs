//! Variants for large alphabets: powers of a single letter, and merging
//! letters that share a matrix.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::endos::pseudopower;
use crate::error::{Error, Result};
use crate::linrep::{LinearRepresentation, Matrix};
use crate::pump::witness::{PumpingWitness, WitnessSource};
use crate::spans::length_bound;

/// Witness `u = a`, `x = b^N`, `v = c` for `a·b^N·c ∈ supp L`, valid once
/// `N` reaches the length bound of `S^Q`.
pub fn pump_power_witness(
    rep: &LinearRepresentation,
    a: &str,
    b: char,
    c: &str,
    n: usize,
) -> Result<PumpingWitness> {
    if n == 0 {
        return Err(Error::InvalidArgument("N = 0 leaves the pumped factor empty".into()));
    }
    let bound = length_bound(rep.semiring(), rep.dimension())?;
    if n < bound {
        return Err(Error::InvalidArgument(format!(
            "N = {n} is below the length bound {bound}"
        )));
    }
    let x: String = std::iter::repeat_n(b, n).collect();
    let word = format!("{a}{x}{c}");
    if !rep.in_support(&word)? {
        return Err(Error::NotInSupport(word));
    }
    let (_, evidence) = pseudopower(rep.letter_matrix(b)?, n)?;
    if !evidence.pseudoregular {
        return Err(Error::Invariant(format!(
            "mu({b})^{n} is not pseudoregular although N reaches the length bound"
        )));
    }
    Ok(PumpingWitness {
        u: a.to_string(),
        x,
        v: c.to_string(),
        evidence,
        source: WitnessSource::PowerRule,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AlphabetReduction {
    #[serde(skip)]
    pub reduced: LinearRepresentation,
    /// ψ: every original letter to its class representative.
    pub mapping: BTreeMap<char, char>,
}

impl AlphabetReduction {
    pub fn map_word(&self, word: &str) -> Result<String> {
        word.chars()
            .map(|c| self.mapping.get(&c).copied().ok_or(Error::UnknownLetter(c)))
            .collect()
    }

    pub fn representatives(&self) -> Vec<char> {
        self.reduced.alphabet()
    }

    /// `μ(w) = μ(ψ(w))` on every given word.
    pub fn verify(&self, original: &LinearRepresentation, words: &[String]) -> Result<bool> {
        for w in words {
            if original.mu_of_word(w)? != self.reduced.mu_of_word(&self.map_word(w)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Merges letters with identical matrices; each class is represented by
/// its first letter in alphabet order.
pub fn reduce_alphabet(rep: &LinearRepresentation) -> Result<AlphabetReduction> {
    if !rep.semiring().is_finite() {
        return Err(Error::InfiniteCarrier(rep.semiring().name()));
    }
    let mut representatives: Vec<(char, &Matrix)> = Vec::new();
    let mut mapping = BTreeMap::new();
    for (&letter, m) in rep.letters() {
        let target = match representatives.iter().find(|(_, r)| *r == m) {
            Some(&(rep_letter, _)) => rep_letter,
            None => {
                representatives.push((letter, m));
                letter
            }
        };
        mapping.insert(letter, target);
    }
    let mu = representatives.into_iter().map(|(c, m)| (c, m.clone())).collect();
    Ok(AlphabetReduction {
        reduced: rep.with_letters(mu),
        mapping,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linrep::fixtures::{even_length, z4_double};
    use crate::scalars::{Scalar, Semiring};

    #[test]
    fn power_witness_examples() {
        let rep = even_length();
        let w = pump_power_witness(&rep, "", 'a', "", 2).unwrap();
        assert_eq!(w.x, "aa");
        assert!(w.evidence.pseudoregular);
        assert_eq!(w.evidence.matrix, Matrix::identity(rep.semiring(), 2));
        assert_eq!(w.source, WitnessSource::PowerRule);
        assert!(pump_power_witness(&rep, "", 'a', "", 0).is_err());
        assert!(pump_power_witness(&rep, "", 'a', "", 1).is_err());
        assert!(matches!(
            pump_power_witness(&rep, "a", 'a', "", 2),
            Err(Error::NotInSupport(_))
        ));
    }

    #[test]
    fn merges_equal_letters() {
        let s = Semiring::Modular(4);
        let two = Matrix::new(&s, 1, 1, vec![Scalar::Residue(2)]).unwrap();
        let three = Matrix::new(&s, 1, 1, vec![Scalar::Residue(3)]).unwrap();
        let rep = z4_double().with_letters(BTreeMap::from([
            ('a', two.clone()),
            ('b', two),
            ('c', three),
        ]));
        let red = reduce_alphabet(&rep).unwrap();
        assert_eq!(red.mapping, BTreeMap::from([('a', 'a'), ('b', 'a'), ('c', 'c')]));
        assert_eq!(red.representatives(), vec!['a', 'c']);
        assert_eq!(red.map_word("bca").unwrap(), "aca");
        assert!(red.verify(&rep, &["abc".into(), "cb".into(), String::new()]).unwrap());
    }

    #[test]
    fn distinct_letters_map_to_themselves() {
        let red = reduce_alphabet(&z4_double()).unwrap();
        assert_eq!(red.mapping, BTreeMap::from([('a', 'a')]));
        assert!(matches!(reduce_alphabet(&even_length()), Err(Error::InfiniteCarrier(_))));
    }
}
