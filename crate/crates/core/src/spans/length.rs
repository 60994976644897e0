use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::{prime_factor_count, Scalar, Semiring, Tier};
use crate::spans::{enumerate_lattice, length_exact, residuate, DEFAULT_ENUMERATION_BUDGET};

/// An upper bound on `ℓ(S^n)`.
///
/// Fields give `n`; the dual rationals give `2n`; finite rings give
/// `n·ℓ(S)`; other finite semirings fall back to `|S|^n − 1` since every
/// strict step adds at least one element. Max-times has no finite bound:
/// `Qmax ⊕ Qmax` already contains an infinite strict chain.
pub fn length_bound(semiring: &Semiring, dim: usize) -> Result<usize> {
    let no_bound = || Error::NoFiniteBound(format!("{}^{dim}", semiring.name()));
    match semiring.tier() {
        Tier::None | Tier::MaxTimes => return Err(no_bound()),
        Tier::Algebra => return Ok(2 * dim),
        Tier::Field | Tier::Finite => {}
    }
    if semiring.is_field() {
        return Ok(dim);
    }
    match semiring {
        Semiring::Modular(n) => Ok(dim * prime_factor_count(*n)),
        _ if semiring.is_ring() => {
            let line = enumerate_lattice(semiring, 1, DEFAULT_ENUMERATION_BUDGET)?;
            Ok(dim * length_exact(&line))
        }
        _ => {
            let m = semiring.cardinality().ok_or_else(no_bound)? as usize;
            m.checked_pow(dim as u32).map(|size| size - 1).ok_or_else(no_bound)
        }
    }
}

/// One inclusion `M_i ⊆ M_{i+1}` of the max-times chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub index: usize,
    /// `u_{i+1} = (i+1, 1)`.
    pub next_generator: Vec<Scalar>,
    /// Best approximation of `u_{i+1}` from inside `M_i`.
    pub residual: Vec<Scalar>,
    pub strict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxTimesChainReport {
    pub steps: Vec<ChainStep>,
    /// `u_i ∈ M_i` for every `i`.
    pub generators_member: bool,
    pub all_strict: bool,
}

/// Builds `M_i = ⟨u_0, .., u_i⟩` with `u_i = (i, 1)` over max-times and
/// checks `u_{i+1} ∉ M_i` for every `i < i_max`.
pub fn maxtimes_chain(i_max: usize) -> Result<MaxTimesChainReport> {
    if i_max == 0 {
        return Err(Error::InvalidArgument("the chain needs at least one step".into()));
    }
    let u = |i: usize| vec![Scalar::max_times(i as u64, 1), Scalar::max_times(1, 1)];
    let mut generators = vec![u(0)];
    let mut steps = Vec::with_capacity(i_max);
    let mut generators_member = residuate(&generators, &u(0)).member;
    for i in 0..i_max {
        let next = u(i + 1);
        let r = residuate(&generators, &next);
        steps.push(ChainStep {
            index: i,
            next_generator: next.clone(),
            residual: r.combination,
            strict: !r.member,
        });
        generators.push(next.clone());
        generators_member &= residuate(&generators, &next).member;
    }
    let all_strict = steps.iter().all(|s| s.strict);
    Ok(MaxTimesChainReport {
        steps,
        generators_member,
        all_strict,
    })
}
