//! Generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use wpump_core::scalars::random_scalar;
use wpump_core::{LinearRepresentation, Matrix, Scalar, Semiring};

pub fn random_matrix<R: Rng>(s: &Semiring, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    let entries = (0..rows * cols).map(|_| random_scalar(s, rng)).collect();
    Matrix::new(s, rows, cols, entries).unwrap()
}

pub fn random_vector<R: Rng>(s: &Semiring, n: usize, rng: &mut R) -> Vec<Scalar> {
    (0..n).map(|_| random_scalar(s, rng)).collect()
}

pub fn random_rep<R: Rng>(s: &Semiring, n: usize, letters: &[char], rng: &mut R) -> LinearRepresentation {
    let mu: BTreeMap<char, Matrix> = letters.iter().map(|&c| (c, random_matrix(s, n, n, rng))).collect();
    let states = (0..n).map(|i| format!("q{i}")).collect();
    LinearRepresentation::new(s, states, random_vector(s, n, rng), random_vector(s, n, rng), mu).unwrap()
}

pub fn random_word<R: Rng>(letters: &[char], len: usize, rng: &mut R) -> String {
    (0..len).map(|_| letters[rng.gen_range(0..letters.len())]).collect()
}

/// Every vector of `S^n` for a finite carrier.
pub fn all_vectors(s: &Semiring, n: usize) -> Vec<Vec<Scalar>> {
    let elements = s.elements().expect("finite carrier");
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                elements.iter().map(move |e| {
                    let mut w = v.clone();
                    w.push(e.clone());
                    w
                })
            })
            .collect();
    }
    out
}

/// Every square matrix of size `n` over a finite carrier.
pub fn all_matrices(s: &Semiring, n: usize) -> Vec<Matrix> {
    all_vectors(s, n * n)
        .into_iter()
        .map(|entries| Matrix::new(s, n, n, entries).unwrap())
        .collect()
}

/// `A·v` computed entry by entry.
pub fn naive_apply(s: &Semiring, a: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    (0..a.rows())
        .map(|i| {
            (0..a.cols()).fold(s.zero(), |acc, j| s.add(&acc, &s.mul(a.get(i, j), &v[j])))
        })
        .collect()
}

/// `{A·v | v ∈ S^n}`, which is exactly `im A`.
pub fn image_set(s: &Semiring, a: &Matrix) -> BTreeSet<Vec<Scalar>> {
    all_vectors(s, a.cols()).iter().map(|v| naive_apply(s, a, v)).collect()
}

pub fn naive_product(s: &Semiring, a: &Matrix, b: &Matrix) -> Matrix {
    let mut entries = Vec::with_capacity(a.rows() * b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            entries.push((0..a.cols()).fold(s.zero(), |acc, k| s.add(&acc, &s.mul(a.get(i, k), b.get(k, j)))));
        }
    }
    Matrix::new(s, a.rows(), b.cols(), entries).unwrap()
}

/// Pseudoregularity by comparing the explicit image sets of `A` and `A²`.
pub fn pseudoregular_oracle(s: &Semiring, a: &Matrix) -> bool {
    image_set(s, a) == image_set(s, &naive_product(s, a, a))
}

/// Length of a finite semimodule `M ⊆ S^n` by testing every subset of `M`
/// for closure and taking the longest inclusion chain. Only for `|M| ≤ 16`.
pub fn brute_length(s: &Semiring, module: &BTreeSet<Vec<Scalar>>) -> usize {
    let elems: Vec<Vec<Scalar>> = module.iter().cloned().collect();
    let m = elems.len();
    assert!(m <= 16, "brute-force oracle limited to 16 elements");
    let index: BTreeMap<&Vec<Scalar>, usize> = elems.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let carrier = s.elements().unwrap();
    let add = |a: &[Scalar], b: &[Scalar]| -> Vec<Scalar> { a.iter().zip(b).map(|(x, y)| s.add(x, y)).collect() };
    let scale = |c: &Scalar, a: &[Scalar]| -> Vec<Scalar> { a.iter().map(|x| s.mul(c, x)).collect() };
    let zero = vec![s.zero(); elems[0].len()];
    let zero_bit = 1u32 << index[&zero];
    let mut closed = Vec::new();
    for mask in 0u32..(1 << m) {
        if mask & zero_bit == 0 {
            continue;
        }
        let members: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
        let ok = members.iter().all(|&i| {
            carrier.iter().all(|c| mask & (1 << index[&scale(c, &elems[i])]) != 0)
                && members.iter().all(|&j| mask & (1 << index[&add(&elems[i], &elems[j])]) != 0)
        });
        if ok {
            closed.push(mask);
        }
    }
    closed.sort_by_key(|m| m.count_ones());
    let mut depth = vec![0usize; closed.len()];
    for i in 0..closed.len() {
        for j in 0..i {
            let (a, b) = (closed[j], closed[i]);
            if a != b && a & b == a {
                depth[i] = depth[i].max(depth[j] + 1);
            }
        }
    }
    depth.into_iter().max().unwrap_or(0)
}

pub fn q(n: i64) -> Scalar {
    Scalar::rational(n, 1)
}

/// Two states over Q; `a` swaps them; weight 1 on even lengths.
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

/// One Boolean state with `μ(a) = 1`.
pub fn boolean_astar() -> LinearRepresentation {
    let s = Semiring::Boolean;
    LinearRepresentation::new(
        &s,
        vec!["q".into()],
        vec![s.one()],
        vec![s.one()],
        BTreeMap::from([('a', Matrix::identity(&s, 1))]),
    )
    .unwrap()
}
