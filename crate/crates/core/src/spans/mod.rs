//! Finitely generated subsemimodules of `S^n`.
//!
//! A [`SpanBasis`] is a generator list. Membership and equality are decided
//! per capability tier:
//!
//! * `FINITE`: closure of the generators under `+` and every scalar
//!   multiple, then set lookup (falls back to row reduction for fields
//!   whose `S^n` exceeds the enumeration budget);
//! * `FIELD`: rank comparison by Gaussian elimination;
//! * `ALGEBRA`: dual rationals embedded in `Q^{2n}`, generators augmented
//!   by their `x`-multiples, then rational rank comparison;
//! * `MAXTIMES`: residuation.

mod field;
mod finite;
mod lattice;
mod length;
mod residuation;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_rational::BigRational;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linrep::Matrix;
use crate::scalars::{Scalar, Semiring, Tier};

pub(crate) use finite::{BitSet, FiniteAmbient};
pub use lattice::{enumerate_lattice, enumerate_span_lattice, length_exact, SubmoduleLattice};
pub use length::{length_bound, maxtimes_chain, ChainStep, MaxTimesChainReport};
pub use residuation::{residuate, Residuation};

/// Default cap on `|S|^n` for explicit enumeration.
pub const DEFAULT_ENUMERATION_BUDGET: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Procedure {
    Closure,
    Gaussian,
    Algebra,
    Residuation,
}

fn procedure(semiring: &Semiring, dim: usize, budget: usize, operation: &str) -> Result<Procedure> {
    match semiring.tier() {
        Tier::Finite => {
            let m = semiring.cardinality().unwrap_or(u64::MAX) as u128;
            if m.checked_pow(dim as u32).is_some_and(|size| size <= budget as u128) {
                Ok(Procedure::Closure)
            } else if semiring.is_field() {
                Ok(Procedure::Gaussian)
            } else {
                Err(Error::BudgetExceeded {
                    what: format!("{operation} over {}^{dim}", semiring.name()),
                    needed: format!("{m}^{dim} elements"),
                    budget,
                })
            }
        }
        Tier::Field => Ok(Procedure::Gaussian),
        Tier::Algebra => Ok(Procedure::Algebra),
        Tier::MaxTimes => Ok(Procedure::Residuation),
        Tier::None => Err(Error::Undecidable {
            operation: operation.to_string(),
            semiring: semiring.name(),
        }),
    }
}

struct Closure {
    ambient: Arc<FiniteAmbient>,
    set: BitSet,
}

/// `⟨V⟩` for a finite generator list `V ⊆ S^n`.
#[derive(Clone)]
pub struct SpanBasis {
    semiring: Semiring,
    dim: usize,
    generators: Vec<Vec<Scalar>>,
    budget: usize,
    closure: OnceLock<Result<Arc<Closure>>>,
}

impl fmt::Debug for SpanBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpanBasis")
            .field("semiring", &self.semiring.name())
            .field("dim", &self.dim)
            .field("generators", &self.generators)
            .finish()
    }
}

impl Serialize for SpanBasis {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SpanBasis", 2)?;
        st.serialize_field("ambient_dim", &self.dim)?;
        st.serialize_field("generators", &self.generators)?;
        st.end()
    }
}

impl SpanBasis {
    pub fn new(semiring: &Semiring, dim: usize, generators: Vec<Vec<Scalar>>) -> Result<SpanBasis> {
        for g in &generators {
            check_vector(semiring, dim, g)?;
        }
        Ok(SpanBasis {
            semiring: semiring.clone(),
            dim,
            generators,
            budget: DEFAULT_ENUMERATION_BUDGET,
            closure: OnceLock::new(),
        })
    }

    /// Overrides the enumeration budget used by the finite procedure.
    pub fn with_budget(mut self, budget: usize) -> SpanBasis {
        self.budget = budget;
        self.closure = OnceLock::new();
        self
    }

    pub fn semiring(&self) -> &Semiring {
        &self.semiring
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<Scalar>] {
        &self.generators
    }

    pub fn tier(&self) -> Tier {
        self.semiring.tier()
    }

    fn closure(&self) -> Result<Arc<Closure>> {
        self.closure
            .get_or_init(|| {
                let ambient = Arc::new(FiniteAmbient::new(&self.semiring, self.dim, self.budget)?);
                let set = ambient.span(&self.generators);
                Ok(Arc::new(Closure { ambient, set }))
            })
            .clone()
    }

    pub(crate) fn closure_set(&self) -> Result<(Arc<FiniteAmbient>, BitSet)> {
        let c = self.closure()?;
        Ok((c.ambient.clone(), c.set.clone()))
    }

    /// Every element of the span (finite carriers only), in code order.
    pub fn elements(&self) -> Result<Vec<Vec<Scalar>>> {
        let c = self.closure()?;
        Ok(c.set.iter().map(|code| c.ambient.decode(code)).collect())
    }

    /// `v ∈ ⟨generators⟩`.
    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        check_vector(&self.semiring, self.dim, v)?;
        match procedure(&self.semiring, self.dim, self.budget, "span membership")? {
            Procedure::Closure => {
                let c = self.closure()?;
                Ok(c.set.contains(c.ambient.encode(v)))
            }
            Procedure::Gaussian => {
                let base = field::rank(&self.semiring, &self.generators);
                let mut with = self.generators.clone();
                with.push(v.to_vec());
                Ok(field::rank(&self.semiring, &with) == base)
            }
            Procedure::Algebra => {
                let gens = dual_embedding(&self.generators);
                let base = field::rank(&Semiring::Rationals, &gens);
                let mut with = gens;
                with.push(dual_vector(v));
                Ok(field::rank(&Semiring::Rationals, &with) == base)
            }
            Procedure::Residuation => Ok(residuate(&self.generators, v).member),
        }
    }

    /// `⟨other⟩ ⊆ ⟨self⟩`.
    pub fn includes(&self, other: &SpanBasis) -> Result<bool> {
        self.check_compatible(other)?;
        if procedure(&self.semiring, self.dim, self.budget, "span inclusion")? == Procedure::Closure {
            let (a, b) = (self.closure()?, other.closure()?);
            return Ok(b.set.is_subset(&a.set));
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_compatible(&self, other: &SpanBasis) -> Result<()> {
        if self.semiring != other.semiring {
            return Err(Error::SemiringMismatch {
                left: self.semiring.name(),
                right: other.semiring.name(),
            });
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "spans live in dimensions {} and {}",
                self.dim, other.dim
            )));
        }
        Ok(())
    }
}

fn check_vector(semiring: &Semiring, dim: usize, v: &[Scalar]) -> Result<()> {
    if v.len() != dim {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} in ambient dimension {dim}",
            v.len()
        )));
    }
    if let Some(bad) = v.iter().find(|s| !semiring.contains(s)) {
        return Err(Error::CrossSemiring {
            semiring: semiring.name(),
            value: bad.to_string(),
        });
    }
    Ok(())
}

fn dual_parts(s: &Scalar) -> (BigRational, BigRational) {
    match s {
        Scalar::Dual(a, b) => (a.clone(), b.clone()),
        other => panic!("{other} is not a dual rational"),
    }
}

/// `(a_1 + b_1 x, ..) ↦ (a_1, .., a_n, b_1, .., b_n)` over Q.
fn dual_vector(v: &[Scalar]) -> Vec<Scalar> {
    let (a, b): (Vec<_>, Vec<_>) = v.iter().map(dual_parts).unzip();
    a.into_iter().chain(b).map(Scalar::Rational).collect()
}

/// Each generator `g` together with `x·g`.
fn dual_embedding(generators: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let mut out = Vec::with_capacity(2 * generators.len());
    for g in generators {
        out.push(dual_vector(g));
        let shifted: Vec<Scalar> = g
            .iter()
            .map(|s| {
                let (a, _) = dual_parts(s);
                Scalar::Dual(BigRational::zero(), a)
            })
            .collect();
        out.push(dual_vector(&shifted));
    }
    out
}

/// `v ∈ ⟨B⟩`.
pub fn span_membership(basis: &SpanBasis, v: &[Scalar]) -> Result<bool> {
    basis.contains(v)
}

/// `⟨B1⟩ = ⟨B2⟩`, by mutual inclusion.
pub fn span_equal(a: &SpanBasis, b: &SpanBasis) -> Result<bool> {
    a.check_compatible(b)?;
    match procedure(&a.semiring, a.dim, a.budget, "span equality")? {
        Procedure::Closure => {
            let (x, y) = (a.closure()?, b.closure()?);
            Ok(x.set == y.set)
        }
        Procedure::Gaussian => {
            let ra = field::rank(&a.semiring, &a.generators);
            let rb = field::rank(&a.semiring, &b.generators);
            let both: Vec<Vec<Scalar>> = a.generators.iter().chain(&b.generators).cloned().collect();
            let rab = field::rank(&a.semiring, &both);
            Ok(ra == rab && rb == rab)
        }
        _ => Ok(a.includes(b)? && b.includes(a)?),
    }
}

/// `im A`, generated by the columns of `A` (images of the unit vectors).
pub fn image_basis(a: &Matrix) -> SpanBasis {
    SpanBasis {
        semiring: a.semiring().clone(),
        dim: a.rows(),
        generators: a.columns(),
        budget: DEFAULT_ENUMERATION_BUDGET,
        closure: OnceLock::new(),
    }
}

/// Rank over a field-tier semiring; `None` for other tiers.
pub fn field_rank(a: &Matrix) -> Option<usize> {
    let s = a.semiring();
    s.is_field().then(|| field::rank(s, &a.columns()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn res(xs: &[u64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::Residue(x)).collect()
    }

    fn bools(xs: &[u8]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::Bool(x == 1)).collect()
    }

    #[test]
    fn zero_is_in_every_span() {
        let cases: Vec<(Semiring, Scalar)> = vec![
            (Semiring::Boolean, Scalar::Bool(false)),
            (Semiring::Modular(4), Scalar::Residue(0)),
            (Semiring::Rationals, Scalar::rational(0, 1)),
            (Semiring::DualRationals, Semiring::DualRationals.zero()),
            (Semiring::MaxTimes, Scalar::max_times(0, 1)),
        ];
        for (s, zero) in cases {
            let empty = SpanBasis::new(&s, 2, vec![]).unwrap();
            assert!(empty.contains(&[zero.clone(), zero.clone()]).unwrap(), "{s}");
        }
    }

    #[test]
    fn max_times_membership_example() {
        let s = Semiring::MaxTimes;
        let b = SpanBasis::new(&s, 2, vec![vec![Scalar::max_times(1, 1), Scalar::max_times(1, 1)]]).unwrap();
        assert!(!b.contains(&[Scalar::max_times(2, 1), Scalar::max_times(1, 1)]).unwrap());
        assert!(b.contains(&[Scalar::max_times(5, 2), Scalar::max_times(5, 2)]).unwrap());
    }

    #[test]
    fn rational_spans_are_subspaces() {
        let s = Semiring::Rationals;
        let b = SpanBasis::new(
            &s,
            2,
            vec![
                vec![Scalar::rational(2, 1), Scalar::rational(0, 1)],
                vec![Scalar::rational(0, 1), Scalar::rational(3, 1)],
            ],
        )
        .unwrap();
        assert!(b.contains(&[Scalar::rational(1, 1), Scalar::rational(1, 1)]).unwrap());
    }

    #[test]
    fn span_equal_examples() {
        let z4 = Semiring::Modular(4);
        let a = SpanBasis::new(&z4, 1, vec![res(&[2])]).unwrap();
        let b = SpanBasis::new(&z4, 1, vec![res(&[2]), res(&[0])]).unwrap();
        assert!(span_equal(&a, &a).unwrap());
        assert!(span_equal(&a, &b).unwrap());

        let bo = Semiring::Boolean;
        let c = SpanBasis::new(&bo, 2, vec![bools(&[1, 0])]).unwrap();
        let d = SpanBasis::new(&bo, 2, vec![bools(&[1, 0]), bools(&[1, 1])]).unwrap();
        assert!(!span_equal(&c, &d).unwrap());
        assert!(d.includes(&c).unwrap());
        assert!(!c.includes(&d).unwrap());
    }

    #[test]
    fn image_examples() {
        let f2 = Semiring::PrimeField(2);
        let id = Matrix::identity(&f2, 2);
        assert_eq!(image_basis(&id).elements().unwrap().len(), 4);
        let zero = Matrix::zero(&f2, 2, 2);
        assert_eq!(image_basis(&zero).elements().unwrap(), vec![res(&[0, 0])]);
        let nil = Matrix::from_rows(&f2, vec![res(&[0, 1]), res(&[0, 0])]).unwrap();
        let im = image_basis(&nil);
        assert_eq!(im.generators(), &[res(&[0, 0]), res(&[1, 0])]);
        assert_eq!(im.elements().unwrap(), vec![res(&[0, 0]), res(&[1, 0])]);
    }

    #[test]
    fn dual_spans_respect_x_action() {
        let d = Semiring::DualRationals;
        let p = |t: &str| d.parse(t).unwrap();
        // ⟨(1, 0)⟩ contains (x, 0) = x·(1, 0) but not (0, 1).
        let b = SpanBasis::new(&d, 2, vec![vec![p("1"), p("0")]]).unwrap();
        assert!(b.contains(&[p("1x"), p("0")]).unwrap());
        assert!(b.contains(&[p("3+2x"), p("0")]).unwrap());
        assert!(!b.contains(&[p("0"), p("1")]).unwrap());
        // ⟨(x)⟩ is the ideal xQ: contains 5x, not 1.
        let ideal = SpanBasis::new(&d, 1, vec![vec![p("1x")]]).unwrap();
        assert!(ideal.contains(&[p("5x")]).unwrap());
        assert!(!ideal.contains(&[p("1")]).unwrap());
        let whole = SpanBasis::new(&d, 1, vec![vec![p("2+1x")]]).unwrap();
        assert!(whole.contains(&[p("1")]).unwrap());
        assert!(span_equal(&whole, &SpanBasis::new(&d, 1, vec![vec![p("1")]]).unwrap()).unwrap());
    }

    #[test]
    fn undecidable_and_mismatch_errors() {
        let big = Semiring::Modular(1000);
        let b = SpanBasis::new(&big, 1, vec![vec![Scalar::Residue(2)]]).unwrap();
        assert!(matches!(b.contains(&[Scalar::Residue(4)]), Err(Error::Undecidable { .. })));

        let s = Semiring::Boolean;
        let b = SpanBasis::new(&s, 2, vec![]).unwrap();
        assert!(matches!(b.contains(&[Scalar::Bool(true)]), Err(Error::DimensionMismatch(_))));
        let c = SpanBasis::new(&s, 3, vec![]).unwrap();
        assert!(span_equal(&b, &c).is_err());
    }

    #[test]
    fn large_prime_field_uses_elimination() {
        let f = Semiring::PrimeField(101);
        let b = SpanBasis::new(&f, 3, vec![res(&[1, 2, 3])]).unwrap();
        assert!(b.contains(&res(&[2, 4, 6])).unwrap());
        assert!(!b.contains(&res(&[2, 4, 7])).unwrap());
    }
}
