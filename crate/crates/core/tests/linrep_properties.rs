mod common;

use common::{even_length, naive_product, q, random_matrix, random_rep, random_word};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use wpump_core::Semiring;

fn semirings() -> Vec<Semiring> {
    vec![
        Semiring::Boolean,
        Semiring::Modular(6),
        Semiring::PrimeField(5),
        Semiring::Rationals,
        Semiring::DualRationals,
        Semiring::MaxTimes,
    ]
}

proptest! {
    #[test]
    fn matrix_product_is_associative(seed in any::<u64>(), pick in 0usize..6) {
        let s = &semirings()[pick];
        let mut rng = StdRng::seed_from_u64(seed);
        let (m, n, p, r) = (rng.gen_range(1..4), rng.gen_range(1..4), rng.gen_range(1..4), rng.gen_range(1..4));
        let a = random_matrix(s, m, n, &mut rng);
        let b = random_matrix(s, n, p, &mut rng);
        let c = random_matrix(s, p, r, &mut rng);
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        prop_assert_eq!(&left, &a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(left, naive_product(s, &naive_product(s, &a, &b), &c));
    }

    #[test]
    fn mu_is_a_monoid_morphism(seed in any::<u64>(), pick in 0usize..6) {
        let s = &semirings()[pick];
        let mut rng = StdRng::seed_from_u64(seed);
        let rep = random_rep(s, rng.gen_range(1..4), &['a', 'b'], &mut rng);
        let w1 = random_word(&['a', 'b'], rng.gen_range(0..6), &mut rng);
        let w2 = random_word(&['a', 'b'], rng.gen_range(0..6), &mut rng);
        let joined = rep.mu_of_word(&format!("{w1}{w2}")).unwrap();
        prop_assert_eq!(joined, rep.mu_of_word(&w1).unwrap().mul(&rep.mu_of_word(&w2).unwrap()).unwrap());
    }

    #[test]
    fn evaluate_agrees_with_matrix_sandwich(seed in any::<u64>(), pick in 0usize..6) {
        let s = &semirings()[pick];
        let mut rng = StdRng::seed_from_u64(seed);
        let rep = random_rep(s, rng.gen_range(1..4), &['a', 'b'], &mut rng);
        let w = random_word(&['a', 'b'], rng.gen_range(0..7), &mut rng);
        let m = rep.mu_of_word(&w).unwrap();
        let sandwich = rep
            .input()
            .iter()
            .enumerate()
            .fold(s.zero(), |acc, (i, f)| {
                (0..rep.dimension()).fold(acc, |acc, j| s.add(&acc, &s.mul(&s.mul(f, m.get(i, j)), &rep.output()[j])))
            });
        prop_assert_eq!(rep.evaluate(&w).unwrap(), sandwich);
    }
}

#[test]
fn even_length_weights() {
    let rep = even_length();
    for len in 0..=12 {
        let w = "a".repeat(len);
        assert_eq!(rep.evaluate(&w).unwrap(), q(if len % 2 == 0 { 1 } else { 0 }));
    }
}

#[test]
fn support_sample_is_ordered_and_complete() {
    let rep = even_length();
    let sample = rep.support_sample(6, 1000).unwrap();
    let words: Vec<&str> = sample.iter().map(|s| s.word.as_str()).collect();
    assert_eq!(words, vec!["", "aa", "aaaa", "aaaaaa"]);
}
