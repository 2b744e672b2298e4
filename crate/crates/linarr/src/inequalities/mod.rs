//! Incidence inequalities of the shape sum_k alpha_k t_k >= alpha0(n),
//! evaluated exactly against multiplicity profiles.
//!
//! Each inequality is a strategy object behind the [`Inequality`] trait,
//! looked up by name at runtime ([`find_builtin`]) or loaded from a JSON
//! spec file ([`custom::CustomInequality`]). Evaluation never errors on a
//! violated inequality: violations are data for the reports, and the test
//! suite asserts them only where the underlying theorem applies.

mod builtin;
pub mod custom;

pub use builtin::{builtin_inequalities, find_builtin, Bojanowski};

use serde::{Deserialize, Serialize};

use crate::profile::MultiplicityProfile;
use crate::rational::{serde_str, Rational};

/// Side condition under which an inequality is a theorem.
///
/// Guards come in two views: against a concrete profile (for evaluation)
/// and against a bare (n, m) pair (for certificate bounds, where only the
/// multiplicity cap is known).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ApplicabilityGuard {
    #[serde(rename = "always")]
    Always,
    /// Not all lines through one point.
    #[serde(rename = "not_pencil")]
    NotPencil,
    /// n >= 8; the pencil stays excluded, since an all-concurrent
    /// arrangement has t_2 = 0 and the bound presumes a genuine arrangement.
    #[serde(rename = "n_ge_8")]
    NGe8,
    /// t_{n-1} = t_{n-2} = 0 with the pencil excluded as well,
    /// i.e. every multiplicity is at most n - 3.
    #[serde(rename = "t_top_two_zero")]
    TopTwoZero,
    /// t_k = 0 for k > 2n/3, i.e. 3m <= 2n.
    #[serde(rename = "m_le_two_thirds_n")]
    MLeTwoThirdsN,
}

impl ApplicabilityGuard {
    pub fn name(&self) -> &'static str {
        match self {
            ApplicabilityGuard::Always => "always",
            ApplicabilityGuard::NotPencil => "not_pencil",
            ApplicabilityGuard::NGe8 => "n_ge_8",
            ApplicabilityGuard::TopTwoZero => "t_top_two_zero",
            ApplicabilityGuard::MLeTwoThirdsN => "m_le_two_thirds_n",
        }
    }

    pub fn describe(&self) -> &'static str {
        match self {
            ApplicabilityGuard::Always => "always",
            ApplicabilityGuard::NotPencil => "not a pencil",
            ApplicabilityGuard::NGe8 => "n >= 8, not a pencil",
            ApplicabilityGuard::TopTwoZero => "t_{n-1} = t_{n-2} = 0 (m <= n - 3)",
            ApplicabilityGuard::MLeTwoThirdsN => "t_k = 0 for k > 2n/3 (3m <= 2n)",
        }
    }

    pub fn holds_for_profile(&self, p: &MultiplicityProfile) -> bool {
        self.holds_for_cap(p.n, p.m)
            && !(matches!(
                self,
                ApplicabilityGuard::NotPencil | ApplicabilityGuard::NGe8
            ) && p.is_pencil())
    }

    /// Guard check knowing only the line count and the multiplicity cap.
    pub fn holds_for_cap(&self, n: u64, m: u64) -> bool {
        match self {
            ApplicabilityGuard::Always => true,
            ApplicabilityGuard::NotPencil => m < n,
            ApplicabilityGuard::NGe8 => n >= 8 && m < n,
            ApplicabilityGuard::TopTwoZero => m + 3 <= n,
            ApplicabilityGuard::MLeTwoThirdsN => 3 * m <= 2 * n,
        }
    }
}

/// One incidence inequality sum_k alpha_k t_k >= alpha0(n).
///
/// `assertable` is false for asymptotic statements that hold only for
/// sufficiently large n with no effective threshold; those are reported but
/// never asserted by tests.
pub trait Inequality {
    fn name(&self) -> &str;
    fn alpha0(&self, n: u64) -> Rational;
    fn alpha(&self, k: u64) -> Rational;
    fn guard(&self) -> ApplicabilityGuard;
    fn assertable(&self) -> bool {
        true
    }
    /// Human-readable alpha0, e.g. "3", "6n/13", "n".
    fn alpha0_symbol(&self) -> String;

    fn applicable(&self, profile: &MultiplicityProfile) -> bool {
        self.guard().holds_for_profile(profile)
    }
}

/// Exact evaluation of one inequality against one profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub name: String,
    pub applicable: bool,
    pub assertable: bool,
    #[serde(with = "serde_str")]
    pub lhs: Rational,
    #[serde(with = "serde_str")]
    pub rhs: Rational,
    #[serde(with = "serde_str")]
    pub slack: Rational,
    pub satisfied: bool,
}

pub fn evaluate(spec: &dyn Inequality, profile: &MultiplicityProfile) -> InequalityReport {
    let lhs: Rational = profile
        .t
        .iter()
        .map(|(&k, &count)| spec.alpha(k) * Rational::from(num::BigInt::from(count)))
        .sum();
    let rhs = spec.alpha0(profile.n);
    let slack = &lhs - &rhs;
    let satisfied = !num::Signed::is_negative(&slack);
    InequalityReport {
        name: spec.name().to_string(),
        applicable: spec.applicable(profile),
        assertable: spec.assertable(),
        lhs,
        rhs,
        slack,
        satisfied,
    }
}

/// Evaluate every builtin inequality; violations are reported, not raised.
pub fn check_all(profile: &MultiplicityProfile) -> Vec<InequalityReport> {
    builtin_inequalities()
        .iter()
        .map(|spec| evaluate(spec.as_ref(), profile))
        .collect()
}
