//! Certificates (c1, c2) combining the pair identity with an incidence
//! inequality to bound the region count from below.
//!
//! A certificate for multiplicity cap m is feasible when
//! c1 k(k-1) + c2 alpha_k <= k - 1 for every 2 <= k <= m; it then yields
//! f >= c1 n(n-1) + c2 alpha0(n) + 1 for arrangements within the
//! inequality's applicability regime. The optimizer solves this 2-variable
//! LP exactly by vertex enumeration.

use std::collections::BTreeMap;

use num::{Signed, Zero};
use serde::Serialize;

use crate::bounds::theorem1_formula;
use crate::error::{Error, Result};
use crate::inequalities::{Bojanowski, Inequality};
use crate::rational::{int, ratio, serde_str, serde_str_map, Rational};

/// A feasible multiplier pair with its per-k slack table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    #[serde(rename = "ineq")]
    pub ineq_name: String,
    pub m: u64,
    #[serde(with = "serde_str")]
    pub c1: Rational,
    #[serde(with = "serde_str")]
    pub c2: Rational,
    #[serde(with = "serde_str_map")]
    pub slacks: BTreeMap<u64, Rational>,
    pub bound: String,
}

impl Certificate {
    pub fn bound_expression<'a>(&self, spec: &'a dyn Inequality) -> BoundExpression<'a> {
        BoundExpression {
            quad: self.c1.clone(),
            c2: self.c2.clone(),
            spec,
        }
    }

    /// True when the incidence inequality is multiplied by zero and the
    /// certificate rests on the pair identity alone.
    pub fn inequality_unused(&self) -> bool {
        self.c2.is_zero()
    }
}

/// The derived lower bound c1 n(n-1) + c2 alpha0(n) + 1 as an object:
/// quadratic coefficient, alpha0 multiplier, and the constant 1.
pub struct BoundExpression<'a> {
    pub quad: Rational,
    pub c2: Rational,
    spec: &'a dyn Inequality,
}

impl BoundExpression<'_> {
    pub fn evaluate(&self, n: u64) -> Rational {
        let n_rat = int(n as i64);
        let pair = &n_rat * (&n_rat - int(1));
        &self.quad * pair + &self.c2 * self.spec.alpha0(n) + int(1)
    }

    pub fn symbol(&self) -> String {
        format!("c1*n*(n-1) + c2*{} + 1", self.spec.alpha0_symbol())
    }
}

fn constraint_slack(spec: &dyn Inequality, c1: &Rational, c2: &Rational, k: u64) -> Rational {
    let ki = k as i64;
    int(ki - 1) - c1 * int(ki * (ki - 1)) - c2 * spec.alpha(k)
}

/// Verify feasibility of (c1, c2) for every constraint 2 <= k <= m and
/// record the slack table.
pub fn check_certificate(
    c1: &Rational,
    c2: &Rational,
    spec: &dyn Inequality,
    m: u64,
) -> Result<Certificate> {
    if m < 2 {
        return Err(Error::InvalidInput(format!(
            "certificate cap must satisfy m >= 2, got {m}"
        )));
    }
    if !c1.is_positive() {
        return Err(Error::InvalidInput(format!(
            "c1 must be positive, got {c1}"
        )));
    }
    if c2.is_negative() {
        return Err(Error::InvalidInput(format!(
            "c2 must be nonnegative, got {c2}"
        )));
    }
    let mut slacks = BTreeMap::new();
    for k in 2..=m {
        let slack = constraint_slack(spec, c1, c2, k);
        if slack.is_negative() {
            return Err(Error::Infeasible { k, slack });
        }
        slacks.insert(k, slack);
    }
    let bound = BoundExpression {
        quad: c1.clone(),
        c2: c2.clone(),
        spec,
    }
    .symbol();
    Ok(Certificate {
        ineq_name: spec.name().to_string(),
        m,
        c1: c1.clone(),
        c2: c2.clone(),
        slacks,
        bound,
    })
}

/// The closed-form pair c1 = (m+2)/(6m), c2 = 2(m-1)/(3m), checked against
/// every constraint and against the slack identity
/// slack_k = (k-2)(m-k)/(2m) for 5 <= k <= m.
pub fn theorem1_certificate(m: u64) -> Result<Certificate> {
    if m < 2 {
        return Err(Error::InvalidInput(format!(
            "closed-form certificate needs m >= 2, got {m}"
        )));
    }
    let mi = m as i64;
    let c1 = ratio(mi + 2, 6 * mi);
    let c2 = ratio(2 * (mi - 1), 3 * mi);
    let cert = check_certificate(&c1, &c2, &Bojanowski, m)?;
    if !cert.slacks[&2].is_zero() {
        return Err(Error::Consistency(format!(
            "closed-form pair at m={m}: k=2 slack is {}, expected 0",
            cert.slacks[&2]
        )));
    }
    for k in 5..=m {
        let expected = ratio((k as i64 - 2) * (mi - k as i64), 2 * mi);
        if cert.slacks[&k] != expected {
            return Err(Error::Consistency(format!(
                "closed-form pair at m={m}: k={k} slack is {}, expected {expected}",
                cert.slacks[&k]
            )));
        }
    }
    Ok(cert)
}

/// Evaluate the certified lower bound at a concrete n, after checking the
/// inequality's regime for (n, cap).
pub fn derive_bound(cert: &Certificate, spec: &dyn Inequality, n: u64) -> Result<Rational> {
    if cert.ineq_name != spec.name() {
        return Err(Error::InvalidInput(format!(
            "certificate was issued for {}, not {}",
            cert.ineq_name,
            spec.name()
        )));
    }
    if !spec.guard().holds_for_cap(n, cert.m) {
        return Err(Error::ApplicabilityViolation(format!(
            "{} requires {}; violated at n={n}, m={}",
            spec.name(),
            spec.guard().describe(),
            cert.m
        )));
    }
    Ok(cert.bound_expression(spec).evaluate(n))
}

/// ((m+2)n^2 + (3m-6)n)/(6m) + 1, cross-checked against the certificate
/// route and against the n^2/6 floor.
pub fn theorem1_bound(n: u64, m: u64) -> Result<Rational> {
    if m < 2 {
        return Err(Error::InvalidInput(format!("m must be >= 2, got {m}")));
    }
    if 3 * m > 2 * n {
        return Err(Error::ApplicabilityViolation(format!(
            "the quadratic bound requires 3m <= 2n; violated at n={n}, m={m}"
        )));
    }
    let closed = theorem1_formula(n, m);
    let derived = derive_bound(&theorem1_certificate(m)?, &Bojanowski, n)?;
    if closed != derived {
        return Err(Error::Consistency(format!(
            "closed form {closed} != certificate bound {derived} at n={n}, m={m}"
        )));
    }
    let floor = ratio((n * n) as i64, 6);
    if closed < floor {
        return Err(Error::Consistency(format!(
            "bound {closed} fell below n^2/6 = {floor} at n={n}, m={m}"
        )));
    }
    Ok(closed)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    /// Max c1, then max c2.
    Lexicographic,
    /// Max c1 n0(n0-1) + c2 alpha0(n0); ties prefer larger c2, then c1.
    AtN(u64),
}

fn objective_prefers(
    objective: Objective,
    spec: &dyn Inequality,
    cand: (&Rational, &Rational),
    best: (&Rational, &Rational),
) -> bool {
    match objective {
        Objective::Lexicographic => cand > best,
        Objective::AtN(n0) => {
            let pair = int((n0 * (n0 - 1)) as i64);
            let alpha0 = spec.alpha0(n0);
            let value = |c: (&Rational, &Rational)| c.0 * &pair + c.1 * &alpha0;
            let (vc, vb) = (value(cand), value(best));
            vc > vb || (vc == vb && (cand.1, cand.0) > (best.1, best.0))
        }
    }
}

/// Solve the 2-variable LP over {c1 >= 0, c2 >= 0, feasibility for
/// 2 <= k <= m} exactly: enumerate intersections of all pairs of boundary
/// lines (constraints plus both axes), keep the feasible ones, and take the
/// objective's maximizer. Vertices with c1 = 0 are rejected, since the
/// bound needs a positive quadratic term.
///
/// Some alpha_k > 0 is required: if every alpha_k <= 0 on [2, m], the
/// region is unbounded in c2 (and with all alpha_k < 0 in c1 too) and no
/// finite optimum exists.
pub fn optimize_certificate(
    spec: &dyn Inequality,
    m: u64,
    objective: Objective,
) -> Result<Certificate> {
    if m < 2 {
        return Err(Error::InvalidInput(format!(
            "optimization needs m >= 2, got {m}"
        )));
    }
    if let Objective::AtN(n0) = objective {
        if n0 < 2 {
            return Err(Error::InvalidInput(format!(
                "at-n objective needs n >= 2, got {n0}"
            )));
        }
    }
    if (2..=m).all(|k| !spec.alpha(k).is_positive()) {
        return Err(Error::UnboundedObjective);
    }
    // Boundary lines a*c1 + b*c2 = r: the two axes, then one per k.
    let mut lines: Vec<(Rational, Rational, Rational)> =
        vec![(int(1), int(0), int(0)), (int(0), int(1), int(0))];
    for k in 2..=m {
        let ki = k as i64;
        lines.push((int(ki * (ki - 1)), spec.alpha(k), int(ki - 1)));
    }
    let feasible = |c1: &Rational, c2: &Rational| {
        !c1.is_negative()
            && !c2.is_negative()
            && (2..=m).all(|k| !constraint_slack(spec, c1, c2, k).is_negative())
    };
    let mut best: Option<(Rational, Rational)> = None;
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            let (a1, b1, r1) = &lines[i];
            let (a2, b2, r2) = &lines[j];
            let det = a1 * b2 - a2 * b1;
            if det.is_zero() {
                continue;
            }
            let c1 = (r1 * b2 - r2 * b1) / &det;
            let c2 = (a1 * r2 - a2 * r1) / &det;
            if !c1.is_positive() || !feasible(&c1, &c2) {
                continue;
            }
            let take = match &best {
                None => true,
                Some((b1, b2)) => objective_prefers(objective, spec, (&c1, &c2), (b1, b2)),
            };
            if take {
                best = Some((c1, c2));
            }
        }
    }
    match best {
        Some((c1, c2)) => check_certificate(&c1, &c2, spec, m),
        None => Err(Error::EmptyFeasibleRegion),
    }
}
