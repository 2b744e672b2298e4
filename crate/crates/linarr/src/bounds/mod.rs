//! Lower bounds on the region count and the comparison analyses between
//! them.
//!
//! Every bound is a strategy object implementing [`LowerBound`]; the
//! catalogue evaluates all of them side by side for a given (n, m), and the
//! scan operations reproduce the dominance claims: the m = 6 equality, the
//! crossover against (m+1)(n-m), and strict dominance for 7 <= m <= n/5.

mod catalog;

pub use catalog::{catalogue, theorem1_formula};

use num::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::profile::MultiplicityProfile;
use crate::rational::{format_rational, int, round_half_up, serde_str, serde_str_opt, Rational};

/// One closed-form lower bound for f with its applicability regime.
pub trait LowerBound {
    fn name(&self) -> &'static str;
    fn guard_text(&self) -> &'static str;
    fn applicable(&self, n: u64, m: u64) -> bool;
    /// The bound value; callers must check `applicable` first.
    fn value(&self, n: u64, m: u64) -> Rational;
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundResult {
    pub name: String,
    #[serde(with = "serde_str_opt", skip_serializing_if = "Option::is_none")]
    pub value: Option<Rational>,
    pub applicable: bool,
    pub guard: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonReport {
    pub n: u64,
    pub m: u64,
    #[serde(rename = "bounds")]
    pub results: Vec<BoundResult>,
    pub best: Vec<String>,
}

/// Evaluate the whole catalogue at (n, m) and name the best applicable
/// value (all names on a tie, in catalogue order).
pub fn all_bounds(n: u64, m: u64) -> Result<ComparisonReport> {
    if n < 2 || m < 2 || m > n {
        return Err(Error::InvalidInput(format!(
            "bounds need n >= 2 and 2 <= m <= n, got n={n}, m={m}"
        )));
    }
    let mut results = Vec::new();
    for bound in catalogue() {
        let applicable = bound.applicable(n, m);
        results.push(BoundResult {
            name: bound.name().to_string(),
            value: applicable.then(|| bound.value(n, m)),
            applicable,
            guard: bound.guard_text().to_string(),
        });
    }
    let best_value = results.iter().filter_map(|r| r.value.as_ref()).max();
    let best = match best_value {
        Some(max) => results
            .iter()
            .filter(|r| r.value.as_ref() == Some(max))
            .map(|r| r.name.clone())
            .collect(),
        None => Vec::new(),
    };
    Ok(ComparisonReport {
        n,
        m,
        results,
        best,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossoverRow {
    pub p: String,
    pub m: u64,
    #[serde(with = "serde_str")]
    pub theorem1: Rational,
    #[serde(with = "serde_str")]
    pub arnold_purdy: Rational,
    pub dominant: String,
    /// Whether (n, m) also satisfies the 3m <= 2n window. The scan compares
    /// the raw closed form either way: the crossover claim is about the
    /// formulas as functions of m = n/p.
    pub within_window: bool,
}

/// For each p, set m = round(n/p) (half up, on the exact rational) and
/// report which of the quadratic bound and (m+1)(n-m) is larger.
pub fn crossover_scan(p_values: &[Rational], n: u64) -> Result<Vec<CrossoverRow>> {
    let mut rows = Vec::new();
    for p in p_values {
        if !p.is_positive() {
            return Err(Error::InvalidInput(format!(
                "crossover ratio p must be positive, got {p}"
            )));
        }
        let m_int = round_half_up(&(int(n as i64) / p));
        let m = u64::try_from(&m_int)
            .map_err(|_| Error::GuardViolation(format!("m = {m_int} out of range at p = {p}")))?;
        if m < 2 || m >= n {
            return Err(Error::GuardViolation(format!(
                "crossover needs 2 <= m < n; p = {p} gives m = {m} at n = {n}"
            )));
        }
        let theorem1 = theorem1_formula(n, m);
        let arnold_purdy = catalog::ArnoldPurdy.value(n, m);
        let dominant = match theorem1.cmp(&arnold_purdy) {
            std::cmp::Ordering::Greater => "theorem1",
            std::cmp::Ordering::Less => "arnold_purdy",
            std::cmp::Ordering::Equal => "tie",
        };
        rows.push(CrossoverRow {
            p: format_rational(p),
            m,
            theorem1,
            arnold_purdy,
            dominant: dominant.to_string(),
            within_window: 3 * m <= 2 * n,
        });
    }
    Ok(rows)
}

/// Rational brackets of the two crossover endpoints 3 -/+ sqrt(3), plus one
/// ratio inside the interval and one beyond it.
pub fn default_crossover_ratios() -> Vec<Rational> {
    [(5, 4), (32, 25), (3, 1), (47, 10), (19, 4), (5, 1)]
        .into_iter()
        .map(|(p, q)| crate::rational::ratio(p, q))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct DominanceRow {
    pub n: u64,
    pub m: u64,
    #[serde(with = "serde_str")]
    pub theorem1: Rational,
    pub strongest_rival: String,
    #[serde(with = "serde_str")]
    pub rival_value: Rational,
    pub strictly_dominant: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DominanceReport {
    pub rows: Vec<DominanceRow>,
    pub all_strictly_dominant: bool,
}

/// Check that the certified quadratic bound strictly exceeds every other
/// applicable catalogue bound at each grid point with 7 <= m <= n/5.
/// Failures are rows, not errors.
pub fn dominance_region_check(pairs: &[(u64, u64)]) -> Result<DominanceReport> {
    let mut rows = Vec::new();
    for &(n, m) in pairs {
        if m < 7 || 5 * m > n {
            return Err(Error::InvalidInput(format!(
                "dominance grid needs 7 <= m <= n/5, got n={n}, m={m}"
            )));
        }
        let theorem1 = theorem1_formula(n, m);
        let mut rival: Option<(String, Rational)> = None;
        for bound in catalogue() {
            if bound.name() == "theorem1" || !bound.applicable(n, m) {
                continue;
            }
            let value = bound.value(n, m);
            if rival.as_ref().is_none_or(|(_, v)| value > *v) {
                rival = Some((bound.name().to_string(), value));
            }
        }
        let (strongest_rival, rival_value) =
            rival.expect("the grid regime keeps several bounds applicable");
        rows.push(DominanceRow {
            n,
            m,
            strictly_dominant: theorem1 > rival_value,
            theorem1,
            strongest_rival,
            rival_value,
        });
    }
    let all_strictly_dominant = rows.iter().all(|r| r.strictly_dominant);
    Ok(DominanceReport {
        rows,
        all_strictly_dominant,
    })
}

/// n in {50, 100, 500} crossed with m in {7, 8, 10, n/5}.
pub fn default_dominance_grid() -> Vec<(u64, u64)> {
    let mut grid = Vec::new();
    for n in [50u64, 100, 500] {
        for m in [7u64, 8, 10, n / 5] {
            if !grid.contains(&(n, m)) {
                grid.push((n, m));
            }
        }
    }
    grid
}

#[derive(Clone, Debug, Serialize)]
pub struct M6Row {
    pub n: u64,
    #[serde(with = "serde_str")]
    pub theorem1: Rational,
    #[serde(with = "serde_str")]
    pub shnurnikov_quadratic: Rational,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct M6Report {
    pub rows: Vec<M6Row>,
    pub all_equal: bool,
}

/// At m = 6 both quadratic bounds reduce to (2n^2 + 3n)/9 + 1; verify the
/// exact equality over an n range.
pub fn m6_equality_scan(n_lo: u64, n_hi: u64) -> Result<M6Report> {
    if n_lo < 9 || n_hi < n_lo {
        return Err(Error::InvalidInput(format!(
            "m=6 scan needs 9 <= lo <= hi (both guards hold from n = 9), got {n_lo}:{n_hi}"
        )));
    }
    let quadratic = catalog::ShnurnikovQuadratic;
    let mut rows = Vec::new();
    for n in n_lo..=n_hi {
        let theorem1 = theorem1_formula(n, 6);
        let other = quadratic.value(n, 6);
        rows.push(M6Row {
            n,
            equal: theorem1 == other,
            theorem1,
            shnurnikov_quadratic: other,
        });
    }
    let all_equal = rows.iter().all(|r| r.equal);
    Ok(M6Report { rows, all_equal })
}

#[derive(Clone, Debug, Serialize)]
pub struct ProfileBoundRow {
    pub name: String,
    pub applicable: bool,
    #[serde(with = "serde_str_opt", skip_serializing_if = "Option::is_none")]
    pub value: Option<Rational>,
    #[serde(with = "serde_str_opt", skip_serializing_if = "Option::is_none")]
    pub gap: Option<Rational>,
    pub guard: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProfileBoundsReport {
    pub n: u64,
    pub m: u64,
    pub f: u64,
    pub rows: Vec<ProfileBoundRow>,
}

/// Join a measured profile against every applicable bound. A negative gap
/// is an error: the bounds are theorems, so a violation means a bug in the
/// profile computation or a mis-guarded bound.
pub fn profile_vs_bounds(profile: &MultiplicityProfile) -> Result<ProfileBoundsReport> {
    let (n, m) = (profile.n, profile.m);
    let f_rat = int(profile.f as i64);
    let mut rows = Vec::new();
    for bound in catalogue() {
        let applicable = bound.applicable(n, m);
        let value = applicable.then(|| bound.value(n, m));
        let gap = value.as_ref().map(|v| &f_rat - v);
        if let Some(g) = &gap {
            if g.is_negative() {
                return Err(Error::BoundViolation {
                    name: bound.name().to_string(),
                    bound: value.unwrap(),
                    f: profile.f,
                });
            }
        }
        rows.push(ProfileBoundRow {
            name: bound.name().to_string(),
            applicable,
            value,
            gap,
            guard: bound.guard_text().to_string(),
        });
    }
    Ok(ProfileBoundsReport {
        n,
        m,
        f: profile.f,
        rows,
    })
}
