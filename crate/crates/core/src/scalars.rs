//! Commutative semirings with exact arithmetic.
//!
//! A [`Semiring`] is a small handle describing the carrier and its two
//! operations; [`Scalar`] values are plain data and carry no reference to
//! their semiring. Every operation on scalars goes through the semiring
//! handle so that cross-semiring mistakes can be caught by the `try_*`
//! variants.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest carrier the finite procedures will enumerate directly.
pub const MAX_FINITE_CARRIER: u64 = 256;

/// Capability tier: which exact decision procedure applies to spans over a
/// semiring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tier {
    /// Finite carrier, decided by closure enumeration.
    Finite,
    /// Field, decided by Gaussian elimination.
    Field,
    /// Dual rationals, decided as rational subspaces stable under `x`.
    Algebra,
    /// Max-times, decided by residuation.
    MaxTimes,
    /// No procedure.
    None,
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tier::Finite => "FINITE",
            Tier::Field => "FIELD",
            Tier::Algebra => "ALGEBRA",
            Tier::MaxTimes => "MAXTIMES",
            Tier::None => "NONE",
        };
        f.write_str(s)
    }
}

/// A semiring element. The variant matches the semiring kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Bool(bool),
    /// Residue in `0..n`.
    Residue(u64),
    Rational(BigRational),
    /// `a + b·x` with `x² = 0`.
    Dual(BigRational, BigRational),
    /// Non-negative rational under `(max, ·)`.
    MaxTimes(BigRational),
    /// Element id of a finite-table semiring.
    Element(u32),
}

impl Scalar {
    pub fn rational(num: i64, den: i64) -> Scalar {
        Scalar::Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn dual(a: BigRational, b: BigRational) -> Scalar {
        Scalar::Dual(a, b)
    }

    pub fn max_times(num: u64, den: u64) -> Scalar {
        Scalar::MaxTimes(BigRational::new(num.into(), den.into()))
    }
}

fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Canonical literal, identical to [`Semiring::format`].
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Bool(b) => f.write_str(if *b { "1" } else { "0" }),
            Scalar::Residue(r) => write!(f, "{r}"),
            Scalar::Rational(q) | Scalar::MaxTimes(q) => fmt_rational(q, f),
            Scalar::Dual(a, b) => {
                if b.is_zero() {
                    fmt_rational(a, f)
                } else if a.is_zero() {
                    fmt_rational(b, f)?;
                    f.write_str("x")
                } else {
                    fmt_rational(a, f)?;
                    f.write_str("+")?;
                    fmt_rational(b, f)?;
                    f.write_str("x")
                }
            }
            Scalar::Element(id) => write!(f, "#{id}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Semiring descriptor, as written in automaton files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SemiringSpec {
    Boolean,
    ModularInt {
        n: u64,
    },
    PrimeField {
        p: u64,
    },
    Rationals,
    DualRationals,
    MaxTimes,
    /// Operation tables over ids `0..m`; id 0 is the additive neutral and
    /// id 1 the multiplicative neutral.
    FiniteTable {
        add: Vec<Vec<u32>>,
        mul: Vec<Vec<u32>>,
    },
}

/// Short textual descriptors for the command line: `boolean`, `z4`,
/// `mod:4`, `f3`, `gf:3`, `rationals`, `dual-rationals`, `max-times`.
impl FromStr for SemiringSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidDescriptor(format!("unrecognized semiring {s:?}"));
        let number = |digits: &str| -> Result<u64> {
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            digits.parse::<u64>().map_err(|_| bad())
        };
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "boolean" | "bool" | "b" => Ok(SemiringSpec::Boolean),
            "rationals" | "q" => Ok(SemiringSpec::Rationals),
            "dual-rationals" | "dual" => Ok(SemiringSpec::DualRationals),
            "max-times" | "qmax" => Ok(SemiringSpec::MaxTimes),
            _ => {
                if let Some(rest) = lower.strip_prefix("mod:").or_else(|| lower.strip_prefix('z')) {
                    Ok(SemiringSpec::ModularInt { n: number(rest)? })
                } else if let Some(rest) =
                    lower.strip_prefix("gf:").or_else(|| lower.strip_prefix('f'))
                {
                    Ok(SemiringSpec::PrimeField { p: number(rest)? })
                } else {
                    Err(bad())
                }
            }
        }
    }
}

/// Explicit operation tables of a finite semiring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteTable {
    size: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
}

impl FiniteTable {
    pub fn size(&self) -> u32 {
        self.size
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.size + b) as usize]
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.size + b) as usize]
    }

    fn rows(&self, flat: &[u32]) -> Vec<Vec<u32>> {
        flat.chunks(self.size as usize).map(<[u32]>::to_vec).collect()
    }
}

/// A commutative semiring handle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Semiring {
    Boolean,
    Modular(u64),
    PrimeField(u64),
    Rationals,
    DualRationals,
    MaxTimes,
    Table(Arc<FiniteTable>),
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while (d as u128) * (d as u128) <= n as u128 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Number of prime factors of `n`, counted with multiplicity.
pub(crate) fn prime_factor_count(mut n: u64) -> usize {
    let mut count = 0;
    let mut d = 2u64;
    while (d as u128) * (d as u128) <= n as u128 {
        while n.is_multiple_of(d) {
            n /= d;
            count += 1;
        }
        d += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}

fn rat_zero() -> BigRational {
    BigRational::zero()
}

fn rat_one() -> BigRational {
    BigRational::from_integer(BigInt::from(1))
}

impl Semiring {
    /// Builds a semiring from its descriptor. Finite tables are checked
    /// exhaustively against every semiring axiom.
    pub fn from_spec(spec: &SemiringSpec) -> Result<Semiring> {
        let semiring = Semiring::from_spec_unchecked(spec)?;
        if let Semiring::PrimeField(p) = semiring {
            if !is_prime(p) {
                return Err(Error::InvalidDescriptor(format!(
                    "prime-field modulus {p} is not prime"
                )));
            }
        }
        if let Semiring::Table(_) = semiring {
            let report = axiom_suite(&semiring, &AxiomSamples::Exhaustive)?;
            if let Some(v) = report.first() {
                return Err(Error::AxiomViolation {
                    axiom: v.axiom.to_string(),
                    witness: v.witness_string(),
                });
            }
        }
        Ok(semiring)
    }

    /// Structural checks only: modulus ranges, table shapes and id ranges.
    /// The result may violate semiring axioms; use [`axiom_suite`] to find
    /// out which.
    pub fn from_spec_unchecked(spec: &SemiringSpec) -> Result<Semiring> {
        match spec {
            SemiringSpec::Boolean => Ok(Semiring::Boolean),
            SemiringSpec::ModularInt { n } => {
                if *n < 2 {
                    return Err(Error::InvalidDescriptor(format!(
                        "modulus must be at least 2, got {n}"
                    )));
                }
                Ok(Semiring::Modular(*n))
            }
            SemiringSpec::PrimeField { p } => {
                if *p < 2 {
                    return Err(Error::InvalidDescriptor(format!(
                        "prime-field modulus {p} is not prime"
                    )));
                }
                Ok(Semiring::PrimeField(*p))
            }
            SemiringSpec::Rationals => Ok(Semiring::Rationals),
            SemiringSpec::DualRationals => Ok(Semiring::DualRationals),
            SemiringSpec::MaxTimes => Ok(Semiring::MaxTimes),
            SemiringSpec::FiniteTable { add, mul } => {
                let m = add.len();
                if m < 2 {
                    return Err(Error::InvalidDescriptor(
                        "finite table needs at least two elements (ids 0 and 1)".into(),
                    ));
                }
                if m as u64 > MAX_FINITE_CARRIER {
                    return Err(Error::InvalidDescriptor(format!(
                        "finite table with {m} elements exceeds the limit of {MAX_FINITE_CARRIER}"
                    )));
                }
                if mul.len() != m {
                    return Err(Error::InvalidDescriptor(format!(
                        "addition table has {m} rows but multiplication table has {}",
                        mul.len()
                    )));
                }
                let mut flat_add = Vec::with_capacity(m * m);
                let mut flat_mul = Vec::with_capacity(m * m);
                for (name, table, flat) in [("add", add, &mut flat_add), ("mul", mul, &mut flat_mul)] {
                    for (i, row) in table.iter().enumerate() {
                        if row.len() != m {
                            return Err(Error::InvalidDescriptor(format!(
                                "{name} table row {i} has {} entries, expected {m}",
                                row.len()
                            )));
                        }
                        for &e in row {
                            if e as usize >= m {
                                return Err(Error::InvalidDescriptor(format!(
                                    "{name} table entry #{e} out of range 0..{m}"
                                )));
                            }
                            flat.push(e);
                        }
                    }
                }
                Ok(Semiring::Table(Arc::new(FiniteTable {
                    size: m as u32,
                    add: flat_add,
                    mul: flat_mul,
                })))
            }
        }
    }

    pub fn spec(&self) -> SemiringSpec {
        match self {
            Semiring::Boolean => SemiringSpec::Boolean,
            Semiring::Modular(n) => SemiringSpec::ModularInt { n: *n },
            Semiring::PrimeField(p) => SemiringSpec::PrimeField { p: *p },
            Semiring::Rationals => SemiringSpec::Rationals,
            Semiring::DualRationals => SemiringSpec::DualRationals,
            Semiring::MaxTimes => SemiringSpec::MaxTimes,
            Semiring::Table(t) => SemiringSpec::FiniteTable {
                add: t.rows(&t.add),
                mul: t.rows(&t.mul),
            },
        }
    }

    /// Short human-readable name such as `Z4`, `F3` or `Qmax`.
    pub fn name(&self) -> String {
        match self {
            Semiring::Boolean => "B".into(),
            Semiring::Modular(n) => format!("Z{n}"),
            Semiring::PrimeField(p) => format!("F{p}"),
            Semiring::Rationals => "Q".into(),
            Semiring::DualRationals => "Q[x]/(x^2)".into(),
            Semiring::MaxTimes => "Qmax".into(),
            Semiring::Table(t) => format!("table({})", t.size),
        }
    }

    pub fn tier(&self) -> Tier {
        match self {
            Semiring::Boolean | Semiring::Table(_) => Tier::Finite,
            Semiring::Modular(n) => {
                if *n <= MAX_FINITE_CARRIER {
                    Tier::Finite
                } else if is_prime(*n) {
                    Tier::Field
                } else {
                    Tier::None
                }
            }
            Semiring::PrimeField(p) => {
                if *p <= MAX_FINITE_CARRIER {
                    Tier::Finite
                } else {
                    Tier::Field
                }
            }
            Semiring::Rationals => Tier::Field,
            Semiring::DualRationals => Tier::Algebra,
            Semiring::MaxTimes => Tier::MaxTimes,
        }
    }

    /// True when every nonzero element has a multiplicative inverse and
    /// every element an additive inverse.
    pub fn is_field(&self) -> bool {
        match self {
            Semiring::PrimeField(_) | Semiring::Rationals => true,
            Semiring::Modular(n) => is_prime(*n),
            Semiring::Table(t) => {
                let ring = (0..t.size).all(|a| (0..t.size).any(|b| t.add(a, b) == 0));
                ring && (1..t.size).all(|a| (0..t.size).any(|b| t.mul(a, b) == 1))
            }
            _ => false,
        }
    }

    /// True when every element has an additive inverse.
    pub fn is_ring(&self) -> bool {
        match self {
            Semiring::Boolean | Semiring::MaxTimes => false,
            Semiring::Modular(_)
            | Semiring::PrimeField(_)
            | Semiring::Rationals
            | Semiring::DualRationals => true,
            Semiring::Table(t) => (0..t.size).all(|a| (0..t.size).any(|b| t.add(a, b) == 0)),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.cardinality().is_some()
    }

    pub fn cardinality(&self) -> Option<u64> {
        match self {
            Semiring::Boolean => Some(2),
            Semiring::Modular(n) | Semiring::PrimeField(n) => Some(*n),
            Semiring::Table(t) => Some(t.size as u64),
            _ => None,
        }
    }

    /// All elements of a finite carrier, zero first and one second.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Semiring::Boolean => Some(vec![Scalar::Bool(false), Scalar::Bool(true)]),
            Semiring::Modular(n) | Semiring::PrimeField(n) => {
                Some((0..*n).map(Scalar::Residue).collect())
            }
            Semiring::Table(t) => Some((0..t.size).map(Scalar::Element).collect()),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Semiring::Boolean => Scalar::Bool(false),
            Semiring::Modular(_) | Semiring::PrimeField(_) => Scalar::Residue(0),
            Semiring::Rationals => Scalar::Rational(rat_zero()),
            Semiring::DualRationals => Scalar::Dual(rat_zero(), rat_zero()),
            Semiring::MaxTimes => Scalar::MaxTimes(rat_zero()),
            Semiring::Table(_) => Scalar::Element(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Semiring::Boolean => Scalar::Bool(true),
            Semiring::Modular(_) | Semiring::PrimeField(_) => Scalar::Residue(1),
            Semiring::Rationals => Scalar::Rational(rat_one()),
            Semiring::DualRationals => Scalar::Dual(rat_one(), rat_zero()),
            Semiring::MaxTimes => Scalar::MaxTimes(rat_one()),
            Semiring::Table(_) => Scalar::Element(1),
        }
    }

    pub fn contains(&self, a: &Scalar) -> bool {
        match (self, a) {
            (Semiring::Boolean, Scalar::Bool(_)) => true,
            (Semiring::Modular(n) | Semiring::PrimeField(n), Scalar::Residue(r)) => r < n,
            (Semiring::Rationals, Scalar::Rational(_)) => true,
            (Semiring::DualRationals, Scalar::Dual(..)) => true,
            (Semiring::MaxTimes, Scalar::MaxTimes(q)) => !q.is_negative(),
            (Semiring::Table(t), Scalar::Element(id)) => *id < t.size,
            _ => false,
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        *a == self.zero()
    }

    fn foreign(&self, a: &Scalar) -> ! {
        panic!("scalar {a} does not belong to {}", self.name())
    }

    /// Semiring addition. Both operands must belong to `self`; see
    /// [`Semiring::try_add`] for the checked form.
    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Semiring::Boolean, Scalar::Bool(x), Scalar::Bool(y)) => Scalar::Bool(*x || *y),
            (Semiring::Modular(n) | Semiring::PrimeField(n), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(((*x as u128 + *y as u128) % *n as u128) as u64)
            }
            (Semiring::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Semiring::DualRationals, Scalar::Dual(a1, b1), Scalar::Dual(a2, b2)) => {
                Scalar::Dual(a1 + a2, b1 + b2)
            }
            (Semiring::MaxTimes, Scalar::MaxTimes(x), Scalar::MaxTimes(y)) => {
                Scalar::MaxTimes(if x >= y { x.clone() } else { y.clone() })
            }
            (Semiring::Table(t), Scalar::Element(x), Scalar::Element(y)) => Scalar::Element(t.add(*x, *y)),
            (_, x, y) => self.foreign(if self.contains(x) { y } else { x }),
        }
    }

    /// Semiring multiplication. Both operands must belong to `self`.
    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (Semiring::Boolean, Scalar::Bool(x), Scalar::Bool(y)) => Scalar::Bool(*x && *y),
            (Semiring::Modular(n) | Semiring::PrimeField(n), Scalar::Residue(x), Scalar::Residue(y)) => {
                Scalar::Residue(((*x as u128 * *y as u128) % *n as u128) as u64)
            }
            (Semiring::Rationals, Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Semiring::DualRationals, Scalar::Dual(a1, b1), Scalar::Dual(a2, b2)) => {
                Scalar::Dual(a1 * a2, a1 * b2 + b1 * a2)
            }
            (Semiring::MaxTimes, Scalar::MaxTimes(x), Scalar::MaxTimes(y)) => Scalar::MaxTimes(x * y),
            (Semiring::Table(t), Scalar::Element(x), Scalar::Element(y)) => Scalar::Element(t.mul(*x, *y)),
            (_, x, y) => self.foreign(if self.contains(x) { y } else { x }),
        }
    }

    fn check(&self, a: &Scalar) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::CrossSemiring {
                semiring: self.name(),
                value: a.to_string(),
            })
        }
    }

    pub fn try_add(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn try_mul(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// Additive inverse, when one exists.
    pub fn neg(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (Semiring::Boolean, Scalar::Bool(false)) => Some(Scalar::Bool(false)),
            (Semiring::Modular(n) | Semiring::PrimeField(n), Scalar::Residue(r)) => {
                Some(Scalar::Residue((n - r) % n))
            }
            (Semiring::Rationals, Scalar::Rational(q)) => Some(Scalar::Rational(-q)),
            (Semiring::DualRationals, Scalar::Dual(x, y)) => Some(Scalar::Dual(-x, -y)),
            (Semiring::MaxTimes, Scalar::MaxTimes(q)) if q.is_zero() => Some(a.clone()),
            (Semiring::Table(t), Scalar::Element(x)) => {
                (0..t.size).find(|&y| t.add(*x, y) == 0).map(Scalar::Element)
            }
            _ => None,
        }
    }

    /// Multiplicative inverse, when one exists.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (Semiring::Boolean, Scalar::Bool(true)) => Some(Scalar::Bool(true)),
            (Semiring::Modular(n) | Semiring::PrimeField(n), Scalar::Residue(r)) => {
                mod_inverse(*r, *n).map(Scalar::Residue)
            }
            (Semiring::Rationals, Scalar::Rational(q)) if !q.is_zero() => Some(Scalar::Rational(q.recip())),
            (Semiring::DualRationals, Scalar::Dual(x, y)) if !x.is_zero() => {
                // (x + y·e)^-1 = 1/x − (y/x²)·e
                let ix = x.recip();
                let iy = -(y * &ix * &ix);
                Some(Scalar::Dual(ix, iy))
            }
            (Semiring::MaxTimes, Scalar::MaxTimes(q)) if !q.is_zero() => Some(Scalar::MaxTimes(q.recip())),
            (Semiring::Table(t), Scalar::Element(x)) => {
                (0..t.size).find(|&y| t.mul(*x, y) == 1).map(Scalar::Element)
            }
            _ => None,
        }
    }

    /// Parses a scalar literal in this semiring's grammar.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let malformed = |reason: &str| Error::MalformedScalar {
            semiring: self.name(),
            literal: text.to_string(),
            reason: reason.to_string(),
        };
        match self {
            Semiring::Boolean => match text {
                "0" => Ok(Scalar::Bool(false)),
                "1" => Ok(Scalar::Bool(true)),
                _ => Err(malformed("expected 0 or 1")),
            },
            Semiring::Modular(n) | Semiring::PrimeField(n) => {
                let value = parse_integer(text).ok_or_else(|| malformed("expected a decimal integer"))?;
                let modulus = BigInt::from(*n);
                let r = ((value % &modulus) + &modulus) % &modulus;
                let r: u64 = r.try_into().map_err(|_| malformed("residue out of range"))?;
                Ok(Scalar::Residue(r))
            }
            Semiring::Rationals => parse_rational(text)
                .map(Scalar::Rational)
                .ok_or_else(|| malformed("expected [-]digits[/digits] with nonzero denominator")),
            Semiring::DualRationals => parse_dual(text)
                .ok_or_else(|| malformed("expected <rat>, <rat>x or <rat>+<rat>x")),
            Semiring::MaxTimes => {
                let q = parse_rational(text)
                    .ok_or_else(|| malformed("expected digits[/digits] with nonzero denominator"))?;
                if q.is_negative() {
                    return Err(Error::OutOfCarrier {
                        semiring: self.name(),
                        literal: text.to_string(),
                    });
                }
                Ok(Scalar::MaxTimes(q))
            }
            Semiring::Table(t) => {
                let digits = text.strip_prefix('#').ok_or_else(|| malformed("expected #<id>"))?;
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(malformed("expected #<id>"));
                }
                match digits.parse::<u32>() {
                    Ok(id) if id < t.size => Ok(Scalar::Element(id)),
                    _ => Err(Error::OutOfCarrier {
                        semiring: self.name(),
                        literal: text.to_string(),
                    }),
                }
            }
        }
    }

    /// Canonical literal; `parse(format(a)) == a`.
    pub fn format(&self, a: &Scalar) -> String {
        a.to_string()
    }
}

impl fmt::Display for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (n as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(n as i128) as u64)
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

fn parse_rational(text: &str) -> Option<BigRational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            (n, d.parse::<BigInt>().ok()?)
        }
        None => (text, BigInt::from(1)),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(parse_integer(num)?, den))
}

fn parse_dual(text: &str) -> Option<Scalar> {
    let Some(body) = text.strip_suffix('x') else {
        return Some(Scalar::Dual(parse_rational(text)?, rat_zero()));
    };
    // A '+' can only separate the two parts; rationals never contain one.
    match body.split_once('+') {
        Some((a, b)) => Some(Scalar::Dual(parse_rational(a)?, parse_rational(b)?)),
        None => Some(Scalar::Dual(rat_zero(), parse_rational(body)?)),
    }
}

/// The eight axioms checked by [`axiom_suite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    AdditiveAssociativity,
    AdditiveCommutativity,
    AdditiveIdentity,
    MultiplicativeAssociativity,
    MultiplicativeCommutativity,
    MultiplicativeIdentity,
    Distributivity,
    Absorption,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::AdditiveAssociativity => "associativity of +",
            Axiom::AdditiveCommutativity => "commutativity of +",
            Axiom::AdditiveIdentity => "identity 0 for +",
            Axiom::MultiplicativeAssociativity => "associativity of ·",
            Axiom::MultiplicativeCommutativity => "commutativity of ·",
            Axiom::MultiplicativeIdentity => "identity 1 for ·",
            Axiom::Distributivity => "distributivity",
            Axiom::Absorption => "absorption of 0",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    /// The operands that break the axiom (one, two or three scalars).
    pub witness: Vec<Scalar>,
}

impl AxiomViolation {
    pub fn witness_string(&self) -> String {
        self.witness
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    }
}

pub enum AxiomSamples {
    /// Every triple of the (finite) carrier.
    Exhaustive,
    /// Explicit sample triples.
    Triples(Vec<[Scalar; 3]>),
}

impl AxiomSamples {
    /// `count` random triples from a seeded generator.
    pub fn random(semiring: &Semiring, count: usize, seed: u64) -> AxiomSamples {
        let mut rng = StdRng::seed_from_u64(seed);
        let triples = (0..count)
            .map(|_| {
                [
                    random_scalar(semiring, &mut rng),
                    random_scalar(semiring, &mut rng),
                    random_scalar(semiring, &mut rng),
                ]
            })
            .collect();
        AxiomSamples::Triples(triples)
    }
}

/// Checks the commutative-semiring axioms. An empty report means no
/// sampled instance failed.
pub fn axiom_suite(semiring: &Semiring, samples: &AxiomSamples) -> Result<Vec<AxiomViolation>> {
    let mut report = Vec::new();
    match samples {
        AxiomSamples::Exhaustive => {
            let elements = semiring
                .elements()
                .ok_or_else(|| Error::InfiniteCarrier(semiring.name()))?;
            for a in &elements {
                check_unary(semiring, a, &mut report);
                for b in &elements {
                    check_binary(semiring, a, b, &mut report);
                    for c in &elements {
                        check_ternary(semiring, a, b, c, &mut report);
                    }
                }
            }
        }
        AxiomSamples::Triples(triples) => {
            for [a, b, c] in triples {
                for s in [a, b, c] {
                    semiring.check(s)?;
                }
                check_unary(semiring, a, &mut report);
                check_binary(semiring, a, b, &mut report);
                check_ternary(semiring, a, b, c, &mut report);
            }
        }
    }
    Ok(report)
}

fn check_unary(s: &Semiring, a: &Scalar, report: &mut Vec<AxiomViolation>) {
    let (zero, one) = (s.zero(), s.one());
    if s.add(a, &zero) != *a {
        report.push(AxiomViolation { axiom: Axiom::AdditiveIdentity, witness: vec![a.clone()] });
    }
    if s.mul(a, &one) != *a {
        report.push(AxiomViolation { axiom: Axiom::MultiplicativeIdentity, witness: vec![a.clone()] });
    }
    if s.mul(&zero, a) != zero || s.mul(a, &zero) != zero {
        report.push(AxiomViolation { axiom: Axiom::Absorption, witness: vec![a.clone()] });
    }
}

fn check_binary(s: &Semiring, a: &Scalar, b: &Scalar, report: &mut Vec<AxiomViolation>) {
    if s.add(a, b) != s.add(b, a) {
        report.push(AxiomViolation {
            axiom: Axiom::AdditiveCommutativity,
            witness: vec![a.clone(), b.clone()],
        });
    }
    if s.mul(a, b) != s.mul(b, a) {
        report.push(AxiomViolation {
            axiom: Axiom::MultiplicativeCommutativity,
            witness: vec![a.clone(), b.clone()],
        });
    }
}

fn check_ternary(s: &Semiring, a: &Scalar, b: &Scalar, c: &Scalar, report: &mut Vec<AxiomViolation>) {
    let witness = || vec![a.clone(), b.clone(), c.clone()];
    if s.add(&s.add(a, b), c) != s.add(a, &s.add(b, c)) {
        report.push(AxiomViolation { axiom: Axiom::AdditiveAssociativity, witness: witness() });
    }
    if s.mul(&s.mul(a, b), c) != s.mul(a, &s.mul(b, c)) {
        report.push(AxiomViolation { axiom: Axiom::MultiplicativeAssociativity, witness: witness() });
    }
    if s.mul(a, &s.add(b, c)) != s.add(&s.mul(a, b), &s.mul(a, c)) {
        report.push(AxiomViolation { axiom: Axiom::Distributivity, witness: witness() });
    }
}

/// Draws a random element. Infinite carriers are sampled from small
/// numerators and denominators, with 0 and 1 over-represented.
pub fn random_scalar<R: Rng + ?Sized>(semiring: &Semiring, rng: &mut R) -> Scalar {
    let small_rational = |rng: &mut R, signed: bool| -> BigRational {
        match rng.gen_range(0..8) {
            0 => rat_zero(),
            1 => rat_one(),
            _ => {
                let lo = if signed { -20 } else { 0 };
                let num: i64 = rng.gen_range(lo..=20);
                let den: i64 = rng.gen_range(1..=12);
                BigRational::new(num.into(), den.into())
            }
        }
    };
    match semiring {
        Semiring::Boolean => Scalar::Bool(rng.gen()),
        Semiring::Modular(n) | Semiring::PrimeField(n) => Scalar::Residue(rng.gen_range(0..*n)),
        Semiring::Rationals => Scalar::Rational(small_rational(rng, true)),
        Semiring::DualRationals => {
            let a = small_rational(rng, true);
            Scalar::Dual(a, small_rational(rng, true))
        }
        Semiring::MaxTimes => Scalar::MaxTimes(small_rational(rng, false)),
        Semiring::Table(t) => Scalar::Element(rng.gen_range(0..t.size)),
    }
}
