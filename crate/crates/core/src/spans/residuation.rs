//! Span membership over max-times by residuation.
//!
//! In `(Q≥0, max, ·)` a vector `v` lies in the span of `g_1..g_k` iff the
//! greatest combination below `v`, namely `max_g λ_g·g` with
//! `λ_g = min_{c: g_c ≠ 0} v_c / g_c`, reaches `v` exactly.

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::scalars::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Residuation {
    /// Greatest admissible coefficient per generator.
    pub lambdas: Vec<Scalar>,
    /// `max_g λ_g·g`, coordinate-wise.
    pub combination: Vec<Scalar>,
    pub member: bool,
}

fn value(s: &Scalar) -> &BigRational {
    match s {
        Scalar::MaxTimes(q) => q,
        other => panic!("{other} is not a max-times scalar"),
    }
}

pub fn residuate(generators: &[Vec<Scalar>], v: &[Scalar]) -> Residuation {
    let lambdas: Vec<BigRational> = generators
        .iter()
        .map(|g| {
            g.iter()
                .zip(v)
                .filter(|(gc, _)| !value(gc).is_zero())
                .map(|(gc, vc)| value(vc) / value(gc))
                .min()
                .unwrap_or_else(BigRational::zero)
        })
        .collect();
    let combination: Vec<BigRational> = (0..v.len())
        .map(|c| {
            generators
                .iter()
                .zip(&lambdas)
                .map(|(g, l)| l * value(&g[c]))
                .max()
                .unwrap_or_else(BigRational::zero)
        })
        .collect();
    let member = combination.iter().zip(v).all(|(a, b)| a == value(b));
    Residuation {
        lambdas: lambdas.into_iter().map(Scalar::MaxTimes).collect(),
        combination: combination.into_iter().map(Scalar::MaxTimes).collect(),
        member,
    }
}
