//! Multiplicity profiles: for each k, the number t_k of points where exactly
//! k lines meet, plus the maximum multiplicity m and the region count f.
//!
//! f is computed two independent ways: the closed formula
//! f = 1 + sum (k-1) t_k over the profile, and an incremental insertion
//! oracle that never forms t_k. Tests hold the two equal on every fixture.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::projective::{intersect, Arrangement};

/// Sparse multiplicity profile of an arrangement.
///
/// Keys of `t` are multiplicities k >= 2; a missing key means t_k = 0.
/// Invariants (enforced by `compute_profile`):
/// sum k(k-1) t_k = n(n-1) and f = 1 + sum (k-1) t_k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityProfile {
    pub n: u64,
    pub m: u64,
    pub t: BTreeMap<u64, u64>,
    pub f: u64,
    #[serde(rename = "points")]
    pub total_points: u64,
}

impl MultiplicityProfile {
    /// True iff all n lines share one point (t = {n: 1}).
    pub fn is_pencil(&self) -> bool {
        self.t.len() == 1 && self.t.get(&self.n) == Some(&1)
    }

    /// Count for one multiplicity, treating absent keys as zero.
    pub fn t_k(&self, k: u64) -> u64 {
        self.t.get(&k).copied().unwrap_or(0)
    }

    #[cfg(test)]
    pub(crate) fn from_parts(n: u64, t: BTreeMap<u64, u64>) -> Self {
        let m = t.keys().last().copied().unwrap_or(0);
        let f = 1 + t.iter().map(|(k, c)| (k - 1) * c).sum::<u64>();
        let total_points = t.values().sum();
        MultiplicityProfile {
            n,
            m,
            t,
            f,
            total_points,
        }
    }
}

/// Group all pairwise intersection points by exact canonical equality and
/// count how many lines pass through each.
pub fn compute_profile(arr: &Arrangement) -> Result<MultiplicityProfile> {
    let lines = arr.lines();
    let n = lines.len();
    if n < 2 {
        return Err(Error::TooFewLines { needed: 2, got: n });
    }
    let mut through: HashMap<_, BTreeSet<usize>> = HashMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let p = intersect(&lines[i], &lines[j])?;
            let entry = through.entry(p).or_default();
            entry.insert(i);
            entry.insert(j);
        }
    }
    let mut t: BTreeMap<u64, u64> = BTreeMap::new();
    for members in through.values() {
        *t.entry(members.len() as u64).or_insert(0) += 1;
    }
    let n = n as u64;
    let pair_sum: u64 = t.iter().map(|(k, c)| k * (k - 1) * c).sum();
    if pair_sum != n * (n - 1) {
        return Err(Error::IdentityViolation {
            got: pair_sum,
            expected: n * (n - 1),
        });
    }
    let m = *t.keys().last().expect("n >= 2 yields at least one point");
    let f = 1 + t.iter().map(|(k, c)| (k - 1) * c).sum::<u64>();
    let total_points = t.values().sum();
    Ok(MultiplicityProfile {
        n,
        m,
        t,
        f,
        total_points,
    })
}

/// Region count by incremental insertion: each added line contributes one new
/// region per distinct intersection point with the lines before it, starting
/// from 1 for the first line. Independent of `compute_profile`.
pub fn region_count_oracle(arr: &Arrangement) -> Result<u64> {
    let lines = arr.lines();
    let mut f: u64 = 1;
    for i in 1..lines.len() {
        let mut crossings = HashSet::new();
        for j in 0..i {
            crossings.insert(intersect(&lines[i], &lines[j])?);
        }
        f += crossings.len() as u64;
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::{apply_projectivity, Matrix3, ProjLine};
    use proptest::prelude::*;

    fn arr(coeffs: &[(i64, i64, i64)]) -> Arrangement {
        let lines = coeffs
            .iter()
            .map(|&(a, b, c)| ProjLine::from_ints(a, b, c).unwrap())
            .collect();
        Arrangement::new(lines, None).unwrap()
    }

    fn pencil5() -> Arrangement {
        arr(&[(1, 0, 0), (0, 1, 0), (1, -1, 0), (2, -1, 0), (3, -1, 0)])
    }

    fn near_pencil5() -> Arrangement {
        arr(&[(1, 0, 0), (0, 1, 0), (1, -1, 0), (2, -1, 0), (0, 0, 1)])
    }

    fn generic(n: i64) -> Arrangement {
        let coeffs: Vec<_> = (1..=n).map(|i| (i, -1, -i * i)).collect();
        arr(&coeffs)
    }

    #[test]
    fn pencil_profile() {
        let p = compute_profile(&pencil5()).unwrap();
        assert_eq!(p.t, BTreeMap::from([(5, 1)]));
        assert_eq!((p.n, p.m, p.f, p.total_points), (5, 5, 5, 1));
        assert!(p.is_pencil());
    }

    #[test]
    fn near_pencil_profile() {
        let p = compute_profile(&near_pencil5()).unwrap();
        assert_eq!(p.t, BTreeMap::from([(2, 4), (4, 1)]));
        assert_eq!((p.m, p.f), (4, 8));
        assert!(!p.is_pencil());
        assert_eq!(region_count_oracle(&near_pencil5()).unwrap(), 8);
    }

    #[test]
    fn generic_profile() {
        let p = compute_profile(&generic(4)).unwrap();
        assert_eq!(p.t, BTreeMap::from([(2, 6)]));
        assert_eq!((p.m, p.f), (2, 7));
        assert!(!p.is_pencil());
        assert_eq!(region_count_oracle(&generic(4)).unwrap(), 7);
    }

    #[test]
    fn oracle_base_cases() {
        let one = arr(&[(1, 0, 0)]);
        assert_eq!(region_count_oracle(&one).unwrap(), 1);
        let two = arr(&[(1, 0, 0), (0, 1, 0)]);
        assert_eq!(region_count_oracle(&two).unwrap(), 2);
        assert!(matches!(
            compute_profile(&one),
            Err(Error::TooFewLines { needed: 2, got: 1 })
        ));
    }

    #[test]
    fn generic_closed_form() {
        for n in 2..=12 {
            let p = compute_profile(&generic(n)).unwrap();
            let choose2 = (n * (n - 1) / 2) as u64;
            assert_eq!(p.t, BTreeMap::from([(2, choose2)]));
            assert_eq!(p.f, 1 + choose2);
            assert_eq!(region_count_oracle(&generic(n)).unwrap(), p.f);
        }
    }

    #[test]
    fn profile_serializes_with_points_field() {
        let p = compute_profile(&near_pencil5()).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"n":5,"m":4,"t":{"2":4,"4":1},"f":8,"points":5}"#);
    }

    #[test]
    fn projectivity_preserves_profile() {
        let a = Matrix3::from_ints([[1, 2, 0], [0, 1, 5], [3, 0, 1]]);
        for fixture in [pencil5(), near_pencil5(), generic(6)] {
            let moved = apply_projectivity(&a, &fixture).unwrap();
            assert_eq!(
                compute_profile(&fixture).unwrap().t,
                compute_profile(&moved).unwrap().t
            );
        }
    }

    proptest! {
        #[test]
        fn permutation_invariance(perm in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle()) {
            let base = generic(8);
            let reordered = Arrangement::new(
                perm.iter().map(|&i| base.lines()[i].clone()).collect(),
                None,
            ).unwrap();
            prop_assert_eq!(
                compute_profile(&base).unwrap(),
                compute_profile(&reordered).unwrap()
            );
            prop_assert_eq!(
                region_count_oracle(&reordered).unwrap(),
                compute_profile(&base).unwrap().f
            );
        }

        #[test]
        fn pair_identity_on_random_integer_lines(seeds in proptest::collection::vec(0i64..50, 3..9)) {
            // Lines x = s and y = s*x + s^2 for drawn s values; dedup keeps
            // the arrangement legal, identity must hold regardless.
            let mut lines = Vec::new();
            for &s in &seeds {
                lines.push(ProjLine::from_ints(1, 0, -s).unwrap());
                lines.push(ProjLine::from_ints(s, -1, s * s).unwrap());
            }
            lines.sort();
            lines.dedup();
            if lines.len() >= 2 {
                let arrangement = Arrangement::new(lines, None).unwrap();
                let p = compute_profile(&arrangement).unwrap();
                let lhs: u64 = p.t.iter().map(|(k, c)| k * (k - 1) * c).sum();
                prop_assert_eq!(lhs, p.n * (p.n - 1));
                prop_assert_eq!(p.f, region_count_oracle(&arrangement).unwrap());
            }
        }
    }
}
