//! Explicit enumeration of `S^n` for finite carriers.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::scalars::{Scalar, Semiring};

/// Fixed-size bit set over vector codes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> BitSet {
        BitSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, i % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }
}

/// `S^n` with vectors encoded as base-`|S|` integers.
#[derive(Debug)]
pub(crate) struct FiniteAmbient {
    semiring: Semiring,
    elements: Vec<Scalar>,
    index: HashMap<Scalar, usize>,
    add: Vec<usize>,
    mul: Vec<usize>,
    carrier: usize,
    dim: usize,
    size: usize,
}

impl FiniteAmbient {
    pub fn new(semiring: &Semiring, dim: usize, budget: usize) -> Result<FiniteAmbient> {
        let elements = semiring
            .elements()
            .ok_or_else(|| Error::InfiniteCarrier(semiring.name()))?;
        let carrier = elements.len();
        let size = (carrier as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
        if size > budget as u128 {
            return Err(Error::BudgetExceeded {
                what: format!("enumerating {}^{dim}", semiring.name()),
                needed: format!("{size} elements"),
                budget,
            });
        }
        let index: HashMap<Scalar, usize> =
            elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let mut add = Vec::with_capacity(carrier * carrier);
        let mut mul = Vec::with_capacity(carrier * carrier);
        for a in &elements {
            for b in &elements {
                add.push(index[&semiring.add(a, b)]);
                mul.push(index[&semiring.mul(a, b)]);
            }
        }
        Ok(FiniteAmbient {
            semiring: semiring.clone(),
            elements,
            index,
            add,
            mul,
            carrier,
            dim,
            size: size as usize,
        })
    }

    pub fn semiring(&self) -> &Semiring {
        &self.semiring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn encode(&self, v: &[Scalar]) -> usize {
        debug_assert_eq!(v.len(), self.dim);
        v.iter().rev().fold(0, |acc, s| acc * self.carrier + self.index[s])
    }

    fn digits(&self, mut code: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dim);
        for _ in 0..self.dim {
            out.push(code % self.carrier);
            code /= self.carrier;
        }
        out
    }

    fn undigits(&self, digits: &[usize]) -> usize {
        digits.iter().rev().fold(0, |acc, d| acc * self.carrier + d)
    }

    pub fn decode(&self, code: usize) -> Vec<Scalar> {
        self.digits(code)
            .into_iter()
            .map(|d| self.elements[d].clone())
            .collect()
    }

    pub fn add_codes(&self, a: usize, b: usize) -> usize {
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<usize> = da
            .iter()
            .zip(&db)
            .map(|(x, y)| self.add[x * self.carrier + y])
            .collect();
        self.undigits(&sum)
    }

    pub fn scale_code(&self, scalar: usize, code: usize) -> usize {
        let scaled: Vec<usize> = self
            .digits(code)
            .iter()
            .map(|x| self.mul[scalar * self.carrier + x])
            .collect();
        self.undigits(&scaled)
    }

    /// All scalar multiples of a vector.
    pub fn multiples(&self, code: usize) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.carrier).map(|s| self.scale_code(s, code)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn zero_set(&self) -> BitSet {
        let mut set = BitSet::new(self.size);
        set.insert(0);
        set
    }

    /// Smallest subsemimodule containing `base` (already closed) and the
    /// given vectors.
    pub fn extend(&self, base: &BitSet, vectors: &[usize]) -> BitSet {
        let mut atoms: Vec<usize> = vectors.iter().flat_map(|&v| self.multiples(v)).collect();
        atoms.sort_unstable();
        atoms.dedup();
        atoms.retain(|&a| a != 0);

        let mut set = base.clone();
        let mut queue: VecDeque<usize> = set.iter().collect();
        while let Some(e) = queue.pop_front() {
            for &a in &atoms {
                let f = self.add_codes(e, a);
                if set.insert(f) {
                    queue.push_back(f);
                }
            }
        }
        set
    }

    pub fn span(&self, generators: &[Vec<Scalar>]) -> BitSet {
        let codes: Vec<usize> = generators.iter().map(|g| self.encode(g)).collect();
        self.extend(&self.zero_set(), &codes)
    }

    /// Closed under addition and every scalar multiple, and contains 0.
    pub fn is_subsemimodule(&self, set: &BitSet) -> bool {
        if !set.contains(0) {
            return false;
        }
        let members: Vec<usize> = set.iter().collect();
        members.iter().all(|&a| {
            (0..self.carrier).all(|s| set.contains(self.scale_code(s, a)))
                && members.iter().all(|&b| set.contains(self.add_codes(a, b)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_decode_round_trip() {
        let amb = FiniteAmbient::new(&Semiring::Modular(3), 3, 4096).unwrap();
        for code in 0..amb.size() {
            assert_eq!(amb.encode(&amb.decode(code)), code);
        }
        assert_eq!(amb.encode(&vec![Scalar::Residue(0); 3]), 0);
    }

    #[test]
    fn spans_are_closed() {
        let amb = FiniteAmbient::new(&Semiring::Modular(4), 2, 4096).unwrap();
        let span = amb.span(&[vec![Scalar::Residue(1), Scalar::Residue(2)]]);
        assert_eq!(span.count(), 4);
        assert!(amb.is_subsemimodule(&span));
        assert!(!amb.is_subsemimodule(&BitSet::new(amb.size())));
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            FiniteAmbient::new(&Semiring::Modular(5), 6, 4096),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            FiniteAmbient::new(&Semiring::Rationals, 1, 4096),
            Err(Error::InfiniteCarrier(_))
        ));
    }
}
