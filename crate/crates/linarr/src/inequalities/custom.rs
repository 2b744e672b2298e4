//! Inequality specs loaded from JSON files.
//!
//! Format:
//! `{"name":"custom","alpha0":{"const":"3"},"alpha":[{"k":2,"v":"1"}],
//!   "alpha_tail":{"poly_in_k":["0","1","-1/4"],"from_k":5},
//!   "applicability":"m_le_two_thirds_n"}`
//!
//! alpha0 is either `{"const": rational}` or `{"coeff_n": rational}` (the
//! latter meaning alpha0 = coeff * n). alpha_k comes from the explicit
//! (k, v) pairs; from `from_k` on, missing k fall back to the polynomial
//! tail (coefficients in ascending degree). Explicit pairs win over the
//! tail. Anything still missing is 0. `assertable` defaults to true.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num::{BigInt, One};
use serde::{Deserialize, Serialize};

use super::{ApplicabilityGuard, Inequality};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
enum Alpha0Doc {
    #[serde(rename = "const")]
    Const(String),
    #[serde(rename = "coeff_n")]
    CoeffN(String),
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
struct PairDoc {
    k: u64,
    v: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
struct TailDoc {
    poly_in_k: Vec<String>,
    from_k: u64,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
struct CustomDoc {
    name: String,
    alpha0: Alpha0Doc,
    alpha: Vec<PairDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha_tail: Option<TailDoc>,
    applicability: ApplicabilityGuard,
    #[serde(skip_serializing_if = "Option::is_none")]
    assertable: Option<bool>,
}

enum Alpha0 {
    Const(Rational),
    CoeffN(Rational),
}

pub struct CustomInequality {
    doc: CustomDoc,
    alpha0: Alpha0,
    pairs: BTreeMap<u64, Rational>,
    tail: Option<(Vec<Rational>, u64)>,
}

impl CustomInequality {
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CustomDoc = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("inequality JSON: {e}")))?;
        if doc.name.is_empty() {
            return Err(Error::InvalidInput("inequality name is empty".into()));
        }
        let alpha0 = match &doc.alpha0 {
            Alpha0Doc::Const(s) => Alpha0::Const(parse_rational(s)?),
            Alpha0Doc::CoeffN(s) => Alpha0::CoeffN(parse_rational(s)?),
        };
        let mut pairs = BTreeMap::new();
        for pair in &doc.alpha {
            if pair.k < 2 {
                return Err(Error::InvalidInput(format!(
                    "alpha pair with k = {} (multiplicities start at 2)",
                    pair.k
                )));
            }
            if pairs.insert(pair.k, parse_rational(&pair.v)?).is_some() {
                return Err(Error::InvalidInput(format!(
                    "duplicate alpha pair for k = {}",
                    pair.k
                )));
            }
        }
        let tail = match &doc.alpha_tail {
            Some(t) => {
                let coeffs = t
                    .poly_in_k
                    .iter()
                    .map(|s| parse_rational(s))
                    .collect::<Result<Vec<_>>>()?;
                Some((coeffs, t.from_k))
            }
            None => None,
        };
        Ok(CustomInequality {
            doc,
            alpha0,
            pairs,
            tail,
        })
    }

    /// Canonical JSON, byte-stable: parse(to_json(x)) == x.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(&self.doc).expect("plain data serializes");
        out.push('\n');
        out
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            source: e,
        })?;
        Self::from_json(&text)
    }
}

impl Inequality for CustomInequality {
    fn name(&self) -> &str {
        &self.doc.name
    }

    fn alpha0(&self, n: u64) -> Rational {
        match &self.alpha0 {
            Alpha0::Const(c) => c.clone(),
            Alpha0::CoeffN(c) => c * Rational::from(BigInt::from(n)),
        }
    }

    fn alpha(&self, k: u64) -> Rational {
        if let Some(v) = self.pairs.get(&k) {
            return v.clone();
        }
        if let Some((coeffs, from_k)) = &self.tail {
            if k >= *from_k {
                let x = Rational::from(BigInt::from(k));
                let mut acc = Rational::from(BigInt::from(0));
                for c in coeffs.iter().rev() {
                    acc = acc * &x + c;
                }
                return acc;
            }
        }
        Rational::from(BigInt::from(0))
    }

    fn guard(&self) -> ApplicabilityGuard {
        self.doc.applicability
    }

    fn assertable(&self) -> bool {
        self.doc.assertable.unwrap_or(true)
    }

    fn alpha0_symbol(&self) -> String {
        match &self.alpha0 {
            Alpha0::Const(c) => c.to_string(),
            Alpha0::CoeffN(c) => {
                let numer = if c.numer().is_one() {
                    String::new()
                } else {
                    c.numer().to_string()
                };
                if c.denom().is_one() {
                    format!("{numer}n")
                } else {
                    format!("{numer}n/{}", c.denom())
                }
            }
        }
    }
}
