//! Row reduction over fields (prime fields, Q, field tables).

use crate::scalars::{Scalar, Semiring};

/// Rank of the given vectors. `semiring` must be a field.
pub(crate) fn rank(semiring: &Semiring, vectors: &[Vec<Scalar>]) -> usize {
    let Some(dim) = vectors.first().map(Vec::len) else {
        return 0;
    };
    let mut rows = vectors.to_vec();
    let mut rank = 0;
    for col in 0..dim {
        let Some(pivot) = (rank..rows.len()).find(|&r| !semiring.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = semiring
            .inv(&rows[rank][col])
            .expect("nonzero element of a field is invertible");
        for e in rows[rank].iter_mut() {
            *e = semiring.mul(&inv, e);
        }
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if semiring.is_zero(&row[col]) {
                continue;
            }
            let factor = semiring
                .neg(&row[col])
                .expect("field elements have additive inverses");
            for (e, p) in row.iter_mut().zip(&pivot_row) {
                *e = semiring.add(e, &semiring.mul(&factor, p));
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::rational(n, 1)
    }

    #[test]
    fn ranks_over_q() {
        let s = Semiring::Rationals;
        assert_eq!(rank(&s, &[]), 0);
        assert_eq!(rank(&s, &[vec![q(0), q(0)]]), 0);
        assert_eq!(rank(&s, &[vec![q(2), q(0)], vec![q(0), q(3)]]), 2);
        assert_eq!(rank(&s, &[vec![q(1), q(2)], vec![q(2), q(4)], vec![q(3), q(6)]]), 1);
    }

    #[test]
    fn ranks_over_f2() {
        let s = Semiring::PrimeField(2);
        let r = |v: &[u64]| v.iter().map(|&x| Scalar::Residue(x)).collect::<Vec<_>>();
        assert_eq!(rank(&s, &[r(&[1, 1, 0]), r(&[0, 1, 1]), r(&[1, 0, 1])]), 2);
    }
}
