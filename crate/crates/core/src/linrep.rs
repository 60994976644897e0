//! Matrices over a semiring and linear representations of weighted
//! languages.
//!
//! Words act left to right: `μ(uv) = μ(u)·μ(v)`, the input vector is a row
//! covector and the output vector a column, so `L(w) = in·μ(w)·out`.

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalars::{Scalar, Semiring};

/// Default cap on the number of words `support_sample` will evaluate.
pub const DEFAULT_SUPPORT_BUDGET: usize = 1_000_000;

/// Dense row-major matrix over a semiring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    semiring: Semiring,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(semiring: &Semiring, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Matrix> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| !semiring.contains(e)) {
            return Err(Error::CrossSemiring {
                semiring: semiring.name(),
                value: bad.to_string(),
            });
        }
        Ok(Matrix {
            semiring: semiring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(semiring: &Semiring, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().position(|r| r.len() != n_cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {r} has {} entries, expected {n_cols}",
                rows[r].len()
            )));
        }
        Matrix::new(semiring, n_rows, n_cols, rows.into_iter().flatten().collect())
    }

    /// Column vector (n×1).
    pub fn column_vector(semiring: &Semiring, v: Vec<Scalar>) -> Result<Matrix> {
        let n = v.len();
        Matrix::new(semiring, n, 1, v)
    }

    /// Row covector (1×n).
    pub fn row_vector(semiring: &Semiring, v: Vec<Scalar>) -> Result<Matrix> {
        let n = v.len();
        Matrix::new(semiring, 1, n, v)
    }

    pub fn identity(semiring: &Semiring, n: usize) -> Matrix {
        let mut m = Matrix::zero(semiring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = semiring.one();
        }
        m
    }

    pub fn zero(semiring: &Semiring, rows: usize, cols: usize) -> Matrix {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Matrix {
            semiring: semiring.clone(),
            rows,
            cols,
            entries: vec![semiring.zero(); rows * cols],
        }
    }

    pub fn semiring(&self) -> &Semiring {
        &self.semiring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        let zero = self.semiring.zero();
        self.entries.iter().all(|e| *e == zero)
    }

    /// `(A·B)[p][r] = Σ_q A[p][q]·B[q][r]`.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.semiring != other.semiring {
            return Err(Error::SemiringMismatch {
                left: self.semiring.name(),
                right: other.semiring.name(),
            });
        }
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let s = &self.semiring;
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for p in 0..self.rows {
            for r in 0..other.cols {
                let mut acc = s.zero();
                for q in 0..self.cols {
                    acc = s.add(&acc, &s.mul(self.get(p, q), other.get(q, r)));
                }
                entries.push(acc);
            }
        }
        Ok(Matrix {
            semiring: s.clone(),
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// `self^k` for a square matrix, `self^0 = identity`.
    pub fn pow(&self, mut k: usize) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "power of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut result = Matrix::identity(&self.semiring, self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        let s = &self.semiring;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(s.zero(), |acc, (a, b)| s.add(&acc, &s.mul(a, b)))
            })
            .collect()
    }

    /// Row covector times matrix.
    pub fn apply_left(&self, f: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(f.len(), self.rows, "covector length must match row count");
        let s = &self.semiring;
        (0..self.cols)
            .map(|c| {
                (0..self.rows).fold(s.zero(), |acc, r| s.add(&acc, &s.mul(&f[r], self.get(r, c))))
            })
            .collect()
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for r in 0..self.rows {
            seq.serialize_element(self.row(r))?;
        }
        seq.end()
    }
}

pub(crate) fn dot(semiring: &Semiring, f: &[Scalar], v: &[Scalar]) -> Scalar {
    f.iter()
        .zip(v)
        .fold(semiring.zero(), |acc, (a, b)| semiring.add(&acc, &semiring.mul(a, b)))
}

/// A word together with its weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedWordSample {
    pub word: String,
    pub weight: Scalar,
}

/// `(Q, in, out, μ)`: a weighted automaton in matrix form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRepresentation {
    semiring: Semiring,
    states: Vec<String>,
    input: Vec<Scalar>,
    output: Vec<Scalar>,
    mu: BTreeMap<char, Matrix>,
}

impl LinearRepresentation {
    pub fn new(
        semiring: &Semiring,
        states: Vec<String>,
        input: Vec<Scalar>,
        output: Vec<Scalar>,
        mu: BTreeMap<char, Matrix>,
    ) -> Result<LinearRepresentation> {
        let n = states.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("a representation needs at least one state".into()));
        }
        if input.len() != n || output.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{n} states but input has {} and output has {} entries",
                input.len(),
                output.len()
            )));
        }
        for v in input.iter().chain(&output) {
            if !semiring.contains(v) {
                return Err(Error::CrossSemiring {
                    semiring: semiring.name(),
                    value: v.to_string(),
                });
            }
        }
        for (letter, m) in &mu {
            if m.semiring() != semiring {
                return Err(Error::SemiringMismatch {
                    left: semiring.name(),
                    right: m.semiring().name(),
                });
            }
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch(format!(
                    "matrix for {letter:?} is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(LinearRepresentation {
            semiring: semiring.clone(),
            states,
            input,
            output,
            mu,
        })
    }

    pub fn semiring(&self) -> &Semiring {
        &self.semiring
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn dimension(&self) -> usize {
        self.states.len()
    }

    pub fn input(&self) -> &[Scalar] {
        &self.input
    }

    pub fn output(&self) -> &[Scalar] {
        &self.output
    }

    pub fn letters(&self) -> &BTreeMap<char, Matrix> {
        &self.mu
    }

    /// Σ in sorted order.
    pub fn alphabet(&self) -> Vec<char> {
        self.mu.keys().copied().collect()
    }

    pub fn letter_matrix(&self, letter: char) -> Result<&Matrix> {
        self.mu.get(&letter).ok_or(Error::UnknownLetter(letter))
    }

    /// μ(w), with μ(ε) the identity.
    pub fn mu_of_word(&self, word: &str) -> Result<Matrix> {
        let mut acc = Matrix::identity(&self.semiring, self.dimension());
        for letter in word.chars() {
            acc = acc.mul(self.letter_matrix(letter)?)?;
        }
        Ok(acc)
    }

    /// `in·μ(w)`.
    pub fn prefix_covector(&self, word: &str) -> Result<Vec<Scalar>> {
        let mut f = self.input.clone();
        for letter in word.chars() {
            f = self.letter_matrix(letter)?.apply_left(&f);
        }
        Ok(f)
    }

    /// `μ(w)·out`.
    pub fn suffix_vector(&self, word: &str) -> Result<Vec<Scalar>> {
        let letters: Vec<char> = word.chars().collect();
        let mut v = self.output.clone();
        for &letter in letters.iter().rev() {
            v = self.letter_matrix(letter)?.apply(&v);
        }
        Ok(v)
    }

    /// `L(w) = in·μ(w)·out`.
    pub fn evaluate(&self, word: &str) -> Result<Scalar> {
        let f = self.prefix_covector(word)?;
        Ok(dot(&self.semiring, &f, &self.output))
    }

    pub fn in_support(&self, word: &str) -> Result<bool> {
        Ok(!self.semiring.is_zero(&self.evaluate(word)?))
    }

    /// All nonzero-weight words of length at most `max_len`, in
    /// length-then-lexicographic order. Refuses when more than `budget`
    /// words would have to be evaluated.
    pub fn support_sample(&self, max_len: usize, budget: usize) -> Result<Vec<WeightedWordSample>> {
        let sigma = self.mu.len() as u128;
        let mut total: u128 = 0;
        let mut level: u128 = 1;
        for _ in 0..=max_len {
            total = total.saturating_add(level);
            level = level.saturating_mul(sigma);
            if total > budget as u128 {
                return Err(Error::BudgetExceeded {
                    what: format!("support sample up to length {max_len}"),
                    needed: format!("more than {budget} words"),
                    budget,
                });
            }
            if sigma == 0 {
                break;
            }
        }

        let s = &self.semiring;
        let mut out = Vec::new();
        let mut frontier: Vec<(String, Vec<Scalar>)> = vec![(String::new(), self.input.clone())];
        for len in 0..=max_len {
            for (word, f) in &frontier {
                let weight = dot(s, f, &self.output);
                if !s.is_zero(&weight) {
                    out.push(WeightedWordSample { word: word.clone(), weight });
                }
            }
            if len == max_len {
                break;
            }
            let mut next = Vec::with_capacity(frontier.len() * self.mu.len());
            for (word, f) in &frontier {
                for (&letter, m) in &self.mu {
                    let mut w = word.clone();
                    w.push(letter);
                    next.push((w, m.apply_left(f)));
                }
            }
            frontier = next;
        }
        Ok(out)
    }

    /// Replaces μ; used by alphabet reduction.
    pub(crate) fn with_letters(&self, mu: BTreeMap<char, Matrix>) -> LinearRepresentation {
        LinearRepresentation {
            semiring: self.semiring.clone(),
            states: self.states.clone(),
            input: self.input.clone(),
            output: self.output.clone(),
            mu,
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn q(n: i64) -> Scalar {
        Scalar::rational(n, 1)
    }

    /// Two states over Q, μ(a) swaps them; accepts words of even length.
    pub fn even_length() -> LinearRepresentation {
        let s = Semiring::Rationals;
        let swap = Matrix::from_rows(&s, vec![vec![q(0), q(1)], vec![q(1), q(0)]]).unwrap();
        LinearRepresentation::new(
            &s,
            vec!["even".into(), "odd".into()],
            vec![q(1), q(0)],
            vec![q(1), q(0)],
            BTreeMap::from([('a', swap)]),
        )
        .unwrap()
    }

    /// One state over B, μ(a) = 1: the language a*.
    pub fn boolean_astar() -> LinearRepresentation {
        let s = Semiring::Boolean;
        let one = Matrix::identity(&s, 1);
        LinearRepresentation::new(
            &s,
            vec!["q".into()],
            vec![s.one()],
            vec![s.one()],
            BTreeMap::from([('a', one)]),
        )
        .unwrap()
    }

    /// One state over Z4, μ(a) = [2].
    pub fn z4_double() -> LinearRepresentation {
        let s = Semiring::Modular(4);
        let two = Matrix::new(&s, 1, 1, vec![Scalar::Residue(2)]).unwrap();
        LinearRepresentation::new(
            &s,
            vec!["q".into()],
            vec![s.one()],
            vec![s.one()],
            BTreeMap::from([('a', two)]),
        )
        .unwrap()
    }
}
