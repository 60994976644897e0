mod common;

use common::{all_matrices, image_set, pseudoregular_oracle, random_matrix};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use wpump_core::endos::{factorization_check, injective_surjective, is_pseudoregular, pseudopower};
use wpump_core::spans::{field_rank, length_bound};
use wpump_core::{Matrix, Semiring};

#[test]
fn injective_iff_surjective_exhaustively() {
    for (s, n) in [
        (Semiring::Modular(4), 1),
        (Semiring::Modular(6), 1),
        (Semiring::Modular(2), 2),
        (Semiring::Boolean, 2),
    ] {
        let total = common::all_vectors(&s, n).len();
        for a in all_matrices(&s, n) {
            let (inj, surj) = injective_surjective(&a).unwrap();
            assert_eq!(inj, surj, "{s}: {a:?}");
            // oracle: distinct images of every vector
            assert_eq!(surj, image_set(&s, &a).len() == total);
        }
    }
}

#[test]
fn pseudopowers_are_pseudoregular_exhaustively() {
    for s in [Semiring::Modular(2), Semiring::Boolean] {
        let ell = length_bound(&s, 2).unwrap();
        for a in all_matrices(&s, 2) {
            let (power, report) = pseudopower(&a, ell).unwrap();
            assert!(report.pseudoregular, "{s}: {a:?}");
            assert!(pseudoregular_oracle(&s, &power));
        }
    }
}

#[test]
fn pseudoregularity_matches_image_oracle() {
    for s in [Semiring::Modular(4), Semiring::Boolean, Semiring::PrimeField(3)] {
        let n = if s.cardinality().unwrap() > 3 { 1 } else { 2 };
        for a in all_matrices(&s, n) {
            assert_eq!(is_pseudoregular(&a).unwrap().pseudoregular, pseudoregular_oracle(&s, &a), "{s}: {a:?}");
        }
    }
}

proptest! {
    #[test]
    fn identity_factorization_witnesses_pseudoregularity(seed in any::<u64>(), pick in 0usize..4) {
        let s = [Semiring::Boolean, Semiring::Modular(4), Semiring::PrimeField(3), Semiring::Rationals][pick].clone();
        let mut rng = StdRng::seed_from_u64(seed);
        let a = random_matrix(&s, 2, 2, &mut rng);
        if is_pseudoregular(&a).unwrap().pseudoregular {
            prop_assert!(factorization_check(&a, &Matrix::identity(&s, 2), &a).unwrap());
        }
        let g = random_matrix(&s, 2, 2, &mut rng);
        let b = random_matrix(&s, 2, 2, &mut rng);
        let gb = g.mul(&b).unwrap();
        if factorization_check(&gb, &g, &b).unwrap() {
            prop_assert!(is_pseudoregular(&gb).unwrap().pseudoregular);
        }
    }

    #[test]
    fn field_pseudoregularity_is_rank_stability(seed in any::<u64>(), pick in 0usize..2) {
        let s = [Semiring::Rationals, Semiring::PrimeField(2)][pick].clone();
        let mut rng = StdRng::seed_from_u64(seed);
        let n = rng.gen_range(1..=3);
        let a = random_matrix(&s, n, n, &mut rng);
        let rank_stable = field_rank(&a) == field_rank(&a.mul(&a).unwrap());
        prop_assert_eq!(is_pseudoregular(&a).unwrap().pseudoregular, rank_stable);
    }
}
