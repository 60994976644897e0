//! Endomorphisms of `S^n`: pseudoregularity (`im α = im α²`), the
//! injective/surjective equivalence, and pseudoregular powers.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linrep::Matrix;
use crate::scalars::Tier;
use crate::spans::{field_rank, image_basis, span_equal, FiniteAmbient, SpanBasis, DEFAULT_ENUMERATION_BUDGET};

#[derive(Clone, Debug, Serialize)]
pub struct EndoReport {
    pub matrix: Matrix,
    pub pseudoregular: bool,
    pub im_basis: SpanBasis,
    pub im_sq_basis: SpanBasis,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub injective: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surjective: Option<bool>,
}

fn require_square(a: &Matrix) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(format!(
            "endomorphism needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )))
    }
}

/// Decides `im A = im A²` and reports both images.
pub fn is_pseudoregular(a: &Matrix) -> Result<EndoReport> {
    require_square(a)?;
    let square = a.mul(a)?;
    let im_basis = image_basis(a);
    let im_sq_basis = image_basis(&square);
    let pseudoregular = span_equal(&im_basis, &im_sq_basis)?;
    let (injective, surjective) = match injective_surjective(a) {
        Ok((i, s)) => (Some(i), Some(s)),
        Err(_) => (None, None),
    };
    Ok(EndoReport {
        matrix: a.clone(),
        pseudoregular,
        im_basis,
        im_sq_basis,
        injective,
        surjective,
    })
}

/// True iff `A = G·B` and `im B = im (B·G·B)`; such a factorization forces
/// `A` to be pseudoregular.
pub fn factorization_check(a: &Matrix, g: &Matrix, b: &Matrix) -> Result<bool> {
    for m in [a, g, b] {
        require_square(m)?;
    }
    if g.mul(b)? != *a {
        return Ok(false);
    }
    let bgb = b.mul(g)?.mul(b)?;
    span_equal(&image_basis(b), &image_basis(&bgb))
}

/// `(injective, surjective)`. Finite carriers are decided by enumerating
/// every vector of `S^n`; fields by rank.
pub fn injective_surjective(a: &Matrix) -> Result<(bool, bool)> {
    require_square(a)?;
    let s = a.semiring();
    let n = a.rows();
    let by_rank = || {
        let full = field_rank(a) == Some(n);
        (full, full)
    };
    match s.tier() {
        Tier::Finite => {
            let ambient = match FiniteAmbient::new(s, n, DEFAULT_ENUMERATION_BUDGET) {
                Ok(amb) => amb,
                Err(_) if s.is_field() => return Ok(by_rank()),
                Err(e) => return Err(e),
            };
            let mut seen = HashSet::with_capacity(ambient.size());
            let mut injective = true;
            for code in 0..ambient.size() {
                let image = ambient.encode(&a.apply(&ambient.decode(code)));
                injective &= seen.insert(image);
            }
            let image = image_basis(a).elements()?;
            Ok((injective, image.len() == ambient.size()))
        }
        Tier::Field => Ok(by_rank()),
        _ => Err(Error::Undecidable {
            operation: "injectivity/surjectivity".into(),
            semiring: s.name(),
        }),
    }
}

/// `A^ell` and its pseudoregularity report. With `ell ≥ ℓ(S^n)` the report
/// is always positive.
pub fn pseudopower(a: &Matrix, ell: usize) -> Result<(Matrix, EndoReport)> {
    require_square(a)?;
    let power = a.pow(ell)?;
    let report = is_pseudoregular(&power)?;
    Ok((power, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Scalar, Semiring};

    fn res(s: &Semiring, rows: &[&[u64]]) -> Matrix {
        Matrix::from_rows(s, rows.iter().map(|r| r.iter().map(|&x| Scalar::Residue(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn identity_and_zero_are_pseudoregular() {
        for s in [Semiring::Boolean, Semiring::Modular(4), Semiring::Rationals, Semiring::MaxTimes] {
            assert!(is_pseudoregular(&Matrix::identity(&s, 2)).unwrap().pseudoregular, "{s}");
            assert!(is_pseudoregular(&Matrix::zero(&s, 2, 2)).unwrap().pseudoregular, "{s}");
        }
    }

    #[test]
    fn nilpotent_is_not_pseudoregular() {
        let f2 = Semiring::PrimeField(2);
        let n = res(&f2, &[&[0, 1], &[0, 0]]);
        let r = is_pseudoregular(&n).unwrap();
        assert!(!r.pseudoregular);
        assert_eq!(r.im_basis.elements().unwrap().len(), 2);
        assert_eq!(r.im_sq_basis.elements().unwrap().len(), 1);
        assert_eq!((r.injective, r.surjective), (Some(false), Some(false)));

        let z4 = Semiring::Modular(4);
        assert!(!is_pseudoregular(&res(&z4, &[&[2]])).unwrap().pseudoregular);
    }

    #[test]
    fn factorization_examples() {
        let q = Semiring::Rationals;
        let swap = Matrix::from_rows(
            &q,
            vec![vec![Scalar::rational(0, 1), Scalar::rational(1, 1)], vec![Scalar::rational(1, 1), Scalar::rational(0, 1)]],
        )
        .unwrap();
        let id = Matrix::identity(&q, 2);
        assert!(factorization_check(&swap, &id, &swap).unwrap());

        let f2 = Semiring::PrimeField(2);
        let n = res(&f2, &[&[0, 1], &[0, 0]]);
        assert!(!factorization_check(&n, &Matrix::identity(&f2, 2), &n).unwrap());
        // A ≠ G·B
        let id2 = Matrix::identity(&f2, 2);
        assert!(!factorization_check(&id2, &id2, &Matrix::zero(&f2, 2, 2)).unwrap());
    }

    #[test]
    fn injective_surjective_examples() {
        let z4 = Semiring::Modular(4);
        assert_eq!(injective_surjective(&res(&z4, &[&[3]])).unwrap(), (true, true));
        assert_eq!(injective_surjective(&res(&z4, &[&[2]])).unwrap(), (false, false));
        for s in [Semiring::Boolean, Semiring::Modular(6), Semiring::PrimeField(3)] {
            assert_eq!(injective_surjective(&Matrix::identity(&s, 2)).unwrap(), (true, true));
        }
        let q = Semiring::Rationals;
        assert_eq!(injective_surjective(&Matrix::zero(&q, 2, 2)).unwrap(), (false, false));
        assert!(matches!(
            injective_surjective(&Matrix::identity(&Semiring::DualRationals, 1)),
            Err(Error::Undecidable { .. })
        ));
    }

    #[test]
    fn pseudopower_examples() {
        let f2 = Semiring::PrimeField(2);
        let n = res(&f2, &[&[0, 1], &[0, 0]]);
        let (p, r) = pseudopower(&n, 2).unwrap();
        assert!(p.is_zero());
        assert!(r.pseudoregular);

        let q = Semiring::Rationals;
        let swap = Matrix::from_rows(
            &q,
            vec![vec![Scalar::rational(0, 1), Scalar::rational(1, 1)], vec![Scalar::rational(1, 1), Scalar::rational(0, 1)]],
        )
        .unwrap();
        let (p, r) = pseudopower(&swap, 2).unwrap();
        assert_eq!(p, Matrix::identity(&q, 2));
        assert!(r.pseudoregular);
    }

    #[test]
    fn non_square_is_rejected() {
        let m = Matrix::zero(&Semiring::Boolean, 1, 2);
        assert!(is_pseudoregular(&m).is_err());
    }
}
