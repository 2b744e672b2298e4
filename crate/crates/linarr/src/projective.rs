//! Exact homogeneous-coordinate primitives for the real projective plane.
//!
//! Lines and points are stored as canonical integer triples: coprime entries
//! with the first nonzero entry positive. Canonical form makes equality and
//! hashing exact, so intersection points can be deduplicated without any
//! tolerance.

use std::collections::HashSet;
use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Reduce an integer triple to canonical form: divide by the gcd and flip
/// signs so the first nonzero entry is positive.
fn canonical_int_triple(v: [BigInt; 3]) -> Result<[BigInt; 3]> {
    let g = v[0].gcd(&v[1]).gcd(&v[2]);
    if g.is_zero() {
        return Err(Error::ZeroTriple);
    }
    let mut w = [&v[0] / &g, &v[1] / &g, &v[2] / &g];
    let lead_negative = w.iter().find(|x| !x.is_zero()).map(|x| x.is_negative());
    if lead_negative == Some(true) {
        for x in &mut w {
            *x = -std::mem::take(x);
        }
    }
    Ok(w)
}

/// Clear denominators of a rational triple, then reduce to canonical form.
fn canonical_triple(raw: &[Rational; 3]) -> Result<[BigInt; 3]> {
    let mut lcm = BigInt::one();
    for r in raw {
        lcm = lcm.lcm(r.denom());
    }
    let ints = [
        raw[0].numer() * (&lcm / raw[0].denom()),
        raw[1].numer() * (&lcm / raw[1].denom()),
        raw[2].numer() * (&lcm / raw[2].denom()),
    ];
    canonical_int_triple(ints)
}

fn fmt_triple(f: &mut fmt::Formatter<'_>, t: &[BigInt; 3]) -> fmt::Result {
    write!(f, "({} : {} : {})", t[0], t[1], t[2])
}

/// A line ax + by + cz = 0 in canonical homogeneous coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjLine {
    coeffs: [BigInt; 3],
}

/// A point in canonical homogeneous coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjPoint {
    coords: [BigInt; 3],
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_triple(f, &self.coeffs)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_triple(f, &self.coords)
    }
}

impl ProjLine {
    pub fn new(raw: [Rational; 3]) -> Result<Self> {
        Ok(ProjLine {
            coeffs: canonical_triple(&raw)?,
        })
    }

    /// Line from integer coefficients, canonicalized.
    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Ok(ProjLine {
            coeffs: canonical_int_triple([BigInt::from(a), BigInt::from(b), BigInt::from(c)])?,
        })
    }

    pub fn coeffs(&self) -> &[BigInt; 3] {
        &self.coeffs
    }

    /// Coefficients rendered as canonical rational strings, for file output.
    pub fn coeff_strings(&self) -> [String; 3] {
        [
            self.coeffs[0].to_string(),
            self.coeffs[1].to_string(),
            self.coeffs[2].to_string(),
        ]
    }
}

impl ProjPoint {
    pub fn new(raw: [Rational; 3]) -> Result<Self> {
        Ok(ProjPoint {
            coords: canonical_triple(&raw)?,
        })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
        Ok(ProjPoint {
            coords: canonical_int_triple([BigInt::from(x), BigInt::from(y), BigInt::from(z)])?,
        })
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.coords
    }
}

/// Canonical representative of the projective class of a rational triple.
pub fn canonicalize(raw: [Rational; 3]) -> Result<ProjLine> {
    ProjLine::new(raw)
}

/// The unique intersection point of two distinct lines (cross product).
pub fn intersect(l1: &ProjLine, l2: &ProjLine) -> Result<ProjPoint> {
    if l1 == l2 {
        return Err(Error::IdenticalLines(l1.to_string()));
    }
    let a = &l1.coeffs;
    let b = &l2.coeffs;
    let cross = [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ];
    Ok(ProjPoint {
        coords: canonical_int_triple(cross)?,
    })
}

/// Exact incidence test: a·x + b·y + c·z = 0.
pub fn incident(p: &ProjPoint, l: &ProjLine) -> bool {
    let dot =
        &p.coords[0] * &l.coeffs[0] + &p.coords[1] * &l.coeffs[1] + &p.coords[2] * &l.coeffs[2];
    dot.is_zero()
}

/// A 3x3 rational matrix, used for projectivities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix3 {
    rows: [[Rational; 3]; 3],
}

impl Matrix3 {
    pub fn new(rows: [[Rational; 3]; 3]) -> Self {
        Matrix3 { rows }
    }

    pub fn identity() -> Self {
        let o = Rational::one();
        let z = Rational::zero();
        Matrix3::new([
            [o.clone(), z.clone(), z.clone()],
            [z.clone(), o.clone(), z.clone()],
            [z.clone(), z, o],
        ])
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Matrix3::new(rows.map(|r| r.map(|v| Rational::from(BigInt::from(v)))))
    }

    pub fn det(&self) -> Rational {
        let r = &self.rows;
        &r[0][0] * (&r[1][1] * &r[2][2] - &r[1][2] * &r[2][1])
            - &r[0][1] * (&r[1][0] * &r[2][2] - &r[1][2] * &r[2][0])
            + &r[0][2] * (&r[1][0] * &r[2][1] - &r[1][1] * &r[2][0])
    }

    /// Adjugate (transposed cofactor matrix); proportional to the inverse.
    pub fn adjugate(&self) -> Matrix3 {
        let r = &self.rows;
        let minor = |i: usize, j: usize| -> Rational {
            let rows: Vec<usize> = (0..3).filter(|&x| x != i).collect();
            let cols: Vec<usize> = (0..3).filter(|&x| x != j).collect();
            &r[rows[0]][cols[0]] * &r[rows[1]][cols[1]]
                - &r[rows[0]][cols[1]] * &r[rows[1]][cols[0]]
        };
        let cof = |i: usize, j: usize| -> Rational {
            let m = minor(i, j);
            if (i + j).is_multiple_of(2) {
                m
            } else {
                -m
            }
        };
        let mut out = Matrix3::identity();
        for i in 0..3 {
            for j in 0..3 {
                out.rows[i][j] = cof(j, i);
            }
        }
        out
    }
}

/// A finite set of distinct lines, in insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    lines: Vec<ProjLine>,
    label: Option<String>,
}

impl Arrangement {
    /// Builds an arrangement, rejecting empty input and duplicate lines.
    pub fn new(lines: Vec<ProjLine>, label: Option<String>) -> Result<Self> {
        if lines.is_empty() {
            return Err(Error::EmptyArrangement);
        }
        let mut seen = HashSet::with_capacity(lines.len());
        for l in &lines {
            if !seen.insert(l.clone()) {
                return Err(Error::DuplicateLines(l.to_string()));
            }
        }
        Ok(Arrangement { lines, label })
    }

    pub fn lines(&self) -> &[ProjLine] {
        &self.lines
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn n(&self) -> usize {
        self.lines.len()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }
}

/// Transform every line of an arrangement by the projectivity with matrix A
/// acting on points. Line coefficients pick up the inverse-transpose, which
/// up to scale is the adjugate applied on the right: l' = l . adj(A).
pub fn apply_projectivity(a: &Matrix3, arr: &Arrangement) -> Result<Arrangement> {
    if a.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let adj = a.adjugate();
    let mut lines = Vec::with_capacity(arr.n());
    for l in arr.lines() {
        let coeffs: [Rational; 3] = std::array::from_fn(|j| {
            (0..3)
                .map(|i| Rational::from(l.coeffs[i].clone()) * &adj.rows[i][j])
                .sum()
        });
        lines.push(ProjLine::new(coeffs)?);
    }
    Arrangement::new(lines, arr.label.clone())
}
