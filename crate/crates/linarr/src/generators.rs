//! Deterministic arrangement families used as fixtures and demo inputs,
//! plus JSON file I/O.
//!
//! Families:
//! - pencil: n lines through one point, the m = n extreme.
//! - near_pencil: n-1 concurrent lines plus one more; attains f = 2n - 2.
//! - generic: tangents of a parabola (y = i*x - i^2), no three concurrent,
//!   so t = {2: C(n,2)} by construction rather than by chance.
//! - random: small integer coefficients from a seeded PRNG, duplicates
//!   rejection-resampled.

use std::collections::HashSet;
use std::fmt;
use std::fs;
use std::path::Path;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::projective::{Arrangement, ProjLine};
use crate::rational::{parse_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Pencil,
    NearPencil,
    Generic,
    Random,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::Pencil => "pencil",
            Family::NearPencil => "near-pencil",
            Family::Generic => "generic",
            Family::Random => "random",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FamilySpec {
    pub family: Family,
    pub n: u64,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn generate(&self) -> Result<Arrangement> {
        match self.family {
            Family::Random => {
                let seed = self.seed.ok_or_else(|| {
                    Error::InvalidFamilySpec("random family requires a seed".into())
                })?;
                gen_random(self.n, seed)
            }
            family => {
                if self.seed.is_some() {
                    return Err(Error::InvalidFamilySpec(format!(
                        "seed only applies to the random family, not {family}"
                    )));
                }
                match family {
                    Family::Pencil => gen_pencil(self.n),
                    Family::NearPencil => gen_near_pencil(self.n),
                    Family::Generic => gen_generic(self.n),
                    Family::Random => unreachable!(),
                }
            }
        }
    }
}

fn pencil_lines(n: u64) -> Vec<ProjLine> {
    let mut lines = vec![ProjLine::from_ints(1, 0, 0).unwrap()];
    for i in 0..=(n as i64 - 2) {
        lines.push(ProjLine::from_ints(i, -1, 0).unwrap());
    }
    lines
}

/// n lines through (0, 0, 1): x = 0 together with y = i*x for i = 0..n-2.
pub fn gen_pencil(n: u64) -> Result<Arrangement> {
    if n < 2 {
        return Err(Error::InvalidFamilySpec(format!(
            "pencil requires n >= 2, got {n}"
        )));
    }
    Arrangement::new(pencil_lines(n), Some(format!("pencil-{n}")))
}

/// A pencil of n-1 lines plus z = 0, which misses the pencil center.
pub fn gen_near_pencil(n: u64) -> Result<Arrangement> {
    if n < 3 {
        return Err(Error::InvalidFamilySpec(format!(
            "near-pencil requires n >= 3, got {n}"
        )));
    }
    let mut lines = pencil_lines(n - 1);
    lines.push(ProjLine::from_ints(0, 0, 1).unwrap());
    Arrangement::new(lines, Some(format!("near-pencil-{n}")))
}

/// Lines y = i*x - i^2 for i = 1..n. Lines i and j meet at (i+j, ij), and
/// k(i+j) - ij - k^2 = -(k-i)(k-j) != 0 for k distinct from i, j, so no
/// third line passes through any crossing: the arrangement is generic.
pub fn gen_generic(n: u64) -> Result<Arrangement> {
    if n < 2 {
        return Err(Error::InvalidFamilySpec(format!(
            "generic requires n >= 2, got {n}"
        )));
    }
    let lines = (1..=n as i64)
        .map(|i| ProjLine::from_ints(i, -1, -i * i).unwrap())
        .collect();
    Arrangement::new(lines, Some(format!("generic-{n}")))
}

/// splitmix64: the 64-bit mixer with increment 0x9E3779B97F4A7C15 and
/// finalizer multipliers 0xBF58476D1CE4E5B9, 0x94D049BB133111EB, shifts
/// 30/27/31. Spelled out so independent implementations reproduce the same
/// arrangements bit for bit.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in [-range, range] via modulo; bias is irrelevant
    /// for fixture generation and keeps the recipe trivial to replicate.
    fn coeff(&mut self, range: i64) -> i64 {
        let span = (2 * range + 1) as u64;
        (self.next_u64() % span) as i64 - range
    }
}

/// n distinct random lines with coefficients drawn from [-9, 9], widening
/// to [-99, 99] then [-999, 999] if rejection sampling stalls. Three draws
/// per attempt (a, b, c), at most 64*n attempts per range; zero triples and
/// duplicates are rejected without consuming a slot.
pub fn gen_random(n: u64, seed: u64) -> Result<Arrangement> {
    if n < 2 {
        return Err(Error::InvalidFamilySpec(format!(
            "random requires n >= 2, got {n}"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut lines: Vec<ProjLine> = Vec::with_capacity(n as usize);
    let mut seen = HashSet::new();
    for range in [9i64, 99, 999] {
        let mut attempts = 0u64;
        while lines.len() < n as usize && attempts < 64 * n {
            attempts += 1;
            let raw = [rng.coeff(range), rng.coeff(range), rng.coeff(range)];
            let Ok(line) = ProjLine::from_ints(raw[0], raw[1], raw[2]) else {
                continue;
            };
            if seen.insert(line.clone()) {
                lines.push(line);
            }
        }
        if lines.len() == n as usize {
            return Arrangement::new(lines, Some(format!("random-{n}-{seed}")));
        }
    }
    Err(Error::ExhaustedRetries {
        needed: n,
        max_range: 999,
    })
}

#[derive(Serialize, Deserialize)]
struct ArrangementDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    lines: Vec<[String; 3]>,
}

/// Parse the arrangement JSON format. Non-canonical rationals are accepted
/// and canonicalized; duplicate lines are rejected.
pub fn parse_arrangement_json(text: &str) -> Result<Arrangement> {
    let doc: ArrangementDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("arrangement JSON: {e}")))?;
    let mut lines = Vec::with_capacity(doc.lines.len());
    for triple in &doc.lines {
        let raw: [Rational; 3] = [
            parse_rational(&triple[0])?,
            parse_rational(&triple[1])?,
            parse_rational(&triple[2])?,
        ];
        lines.push(ProjLine::new(raw)?);
    }
    Arrangement::new(lines, doc.label)
}

/// Canonical JSON for an arrangement: every coefficient triple in canonical
/// integer form, pretty-printed, trailing newline.
pub fn arrangement_to_json(arr: &Arrangement) -> String {
    let doc = ArrangementDoc {
        label: arr.label().map(str::to_string),
        lines: arr.lines().iter().map(ProjLine::coeff_strings).collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    out.push('\n');
    out
}

pub fn read_arrangement(path: impl AsRef<Path>) -> Result<Arrangement> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })?;
    parse_arrangement_json(&text)
}

pub fn write_arrangement(arr: &Arrangement, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, arrangement_to_json(arr)).map_err(|e| Error::Io {
        path: path.display().to_string(),
        source: e,
    })
}
