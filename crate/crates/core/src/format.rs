//! JSON automaton files.
//!
//! ```json
//! {
//!   "semiring": { "kind": "rationals" },
//!   "states": ["even", "odd"],
//!   "in": ["1", "0"],
//!   "out": ["1", "0"],
//!   "letters": { "a": [["0", "1"], ["1", "0"]] }
//! }
//! ```
//!
//! Scalars are strings in the semiring's literal grammar so that big
//! integers and fractions survive transport exactly.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linrep::{LinearRepresentation, Matrix};
use crate::scalars::{Scalar, Semiring, SemiringSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonFile {
    pub semiring: SemiringSpec,
    pub states: Vec<String>,
    #[serde(rename = "in")]
    pub input: Vec<String>,
    #[serde(rename = "out")]
    pub output: Vec<String>,
    pub letters: BTreeMap<String, Vec<Vec<String>>>,
}

impl AutomatonFile {
    pub fn from_json(text: &str) -> Result<AutomatonFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn from_representation(rep: &LinearRepresentation) -> AutomatonFile {
        let s = rep.semiring();
        let literals = |v: &[Scalar]| v.iter().map(|x| s.format(x)).collect::<Vec<_>>();
        AutomatonFile {
            semiring: s.spec(),
            states: rep.states().to_vec(),
            input: literals(rep.input()),
            output: literals(rep.output()),
            letters: rep
                .letters()
                .iter()
                .map(|(c, m)| (c.to_string(), m.to_rows().iter().map(|r| literals(r)).collect()))
                .collect(),
        }
    }

    pub fn to_representation(&self) -> Result<LinearRepresentation> {
        let s = Semiring::from_spec(&self.semiring)?;
        let parse = |v: &[String]| v.iter().map(|x| s.parse(x)).collect::<Result<Vec<_>>>();
        let mut mu = BTreeMap::new();
        for (key, rows) in &self.letters {
            let mut chars = key.chars();
            let letter = match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => {
                    return Err(Error::Format(format!(
                        "letter key {key:?} must be exactly one character"
                    )))
                }
            };
            let rows = rows.iter().map(|r| parse(r)).collect::<Result<Vec<_>>>()?;
            let n = self.states.len();
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                let cols = rows.first().map_or(0, Vec::len);
                return Err(Error::DimensionMismatch(format!(
                    "matrix for {letter:?} is {}x{cols}, expected {n}x{n}",
                    rows.len()
                )));
            }
            mu.insert(letter, Matrix::from_rows(&s, rows)?);
        }
        LinearRepresentation::new(
            &s,
            self.states.clone(),
            parse(&self.input)?,
            parse(&self.output)?,
            mu,
        )
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("automaton files always serialize");
        text.push('\n');
        text
    }
}

/// Parses an automaton document.
pub fn from_str(text: &str) -> Result<LinearRepresentation> {
    AutomatonFile::from_json(text)?.to_representation()
}

/// Canonical text of a representation.
pub fn to_canonical_string(rep: &LinearRepresentation) -> String {
    AutomatonFile::from_representation(rep).to_canonical_string()
}

pub fn load(path: impl AsRef<Path>) -> Result<LinearRepresentation> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    from_str(&text)
}

pub fn save(rep: &LinearRepresentation, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, to_canonical_string(rep)).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}
