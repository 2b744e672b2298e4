//! Acceptance gate: one test per criterion, each printing a single
//! PASS/FAIL line. All checks are exact; there are no tolerances anywhere.

use std::collections::BTreeMap;
use std::process::Command;

use num::{One, Signed, Zero};

use linarr::bounds::{
    crossover_scan, default_dominance_grid, dominance_region_check, m6_equality_scan,
    profile_vs_bounds,
};
use linarr::certificates::{
    check_certificate, derive_bound, optimize_certificate, theorem1_certificate, Objective,
};
use linarr::generators::{gen_generic, gen_near_pencil, gen_pencil, gen_random, SplitMix64};
use linarr::inequalities::{check_all, Bojanowski};
use linarr::profile::{compute_profile, region_count_oracle};
use linarr::projective::apply_projectivity;
use linarr::rational::{int, parse_rational_or_decimal, ratio, Rational};
use linarr::{Arrangement, Matrix3};

/// Shared fixture corpus: the three deterministic families over small n,
/// plus 50 seeded random arrangements with n in [3, 12].
fn fixtures() -> Vec<Arrangement> {
    let mut all = Vec::new();
    for n in 2..=20 {
        all.push(gen_pencil(n).expect("pencil"));
    }
    for n in 3..=20 {
        all.push(gen_near_pencil(n).expect("near-pencil"));
    }
    for n in 2..=20 {
        all.push(gen_generic(n).expect("generic"));
    }
    for seed in 0..50u64 {
        let n = 3 + seed % 10;
        all.push(gen_random(n, seed).expect("random"));
    }
    all
}

#[test]
fn criterion_01_closed_form_certificate_feasible_with_exact_slack() {
    for m in 2..=200u64 {
        let mi = m as i64;
        let c1 = ratio(mi + 2, 6 * mi);
        let c2 = ratio(2 * (mi - 1), 3 * mi);
        let cert = check_certificate(&c1, &c2, &Bojanowski, m)
            .unwrap_or_else(|e| panic!("FAIL criterion 1: infeasible at m = {m}: {e}"));
        assert!(
            cert.slacks[&2].is_zero(),
            "FAIL criterion 1: slack at k = 2 nonzero for m = {m}"
        );
        if m >= 5 {
            for k in 5..=m {
                let ki = k as i64;
                let expected = -ratio(1, 2) * ratio((ki - 2) * (ki - mi), mi);
                assert_eq!(
                    cert.slacks[&k], expected,
                    "FAIL criterion 1: slack identity broken at m = {m}, k = {k}"
                );
            }
        }
        let reference = theorem1_certificate(m).expect("closed form");
        assert_eq!(reference.c1, c1);
        assert_eq!(reference.c2, c2);
    }
    println!(
        "PASS criterion 1: ((m+2)/(6m), 2(m-1)/(3m)) feasible for m in [2, 200] \
         with slack 0 at k = 2 and slack -(1/2)(k-2)(k-m)/m at 5 <= k <= m"
    );
}

#[test]
fn criterion_02_quadratic_formula_identity_and_sixth_of_n_squared() {
    let mut certs = BTreeMap::new();
    for m in 2..=200u64 {
        certs.insert(m, theorem1_certificate(m).expect("closed form"));
    }
    let mut pairs = 0u64;
    for n in 3..=300u64 {
        for m in 2..=(2 * n / 3) {
            let ni = n as i64;
            let mi = m as i64;
            let derived = derive_bound(&certs[&m], &Bojanowski, n)
                .unwrap_or_else(|e| panic!("FAIL criterion 2: bound failed at ({n}, {m}): {e}"));
            let expected = ratio((mi + 2) * ni * ni + (3 * mi - 6) * ni, 6 * mi) + Rational::one();
            assert_eq!(
                derived, expected,
                "FAIL criterion 2: formula identity broken at ({n}, {m})"
            );
            assert!(
                derived >= ratio(ni * ni, 6),
                "FAIL criterion 2: bound below n^2/6 at ({n}, {m})"
            );
            pairs += 1;
        }
    }
    println!(
        "PASS criterion 2: derived bound equals ((m+2)n^2 + (3m-6)n)/(6m) + 1 \
         and is >= n^2/6 on all {pairs} grid pairs (n in [3, 300], 2 <= m <= 2n/3)"
    );
}

#[test]
fn criterion_03_lp_optimizer_reproduces_closed_form_pair() {
    for m in 5..=40u64 {
        let lp = optimize_certificate(&Bojanowski, m, Objective::Lexicographic)
            .unwrap_or_else(|e| panic!("FAIL criterion 3: optimizer failed at m = {m}: {e}"));
        let reference = theorem1_certificate(m).expect("closed form");
        if lp.c1 != reference.c1 || lp.c2 != reference.c2 {
            println!(
                "criterion 3 divergence at m = {m}: optimizer ({}, {}) vs closed form ({}, {})",
                lp.c1, lp.c2, reference.c1, reference.c2
            );
            assert!(
                (&lp.c1, &lp.c2) >= (&reference.c1, &reference.c2),
                "FAIL criterion 3: optimizer found a strictly smaller bound at m = {m}"
            );
        }
    }
    println!(
        "PASS criterion 3: lexicographic optimizer returns the closed-form pair \
         for every m in [5, 40]"
    );
}

#[test]
fn criterion_04_region_count_formula_matches_insertion_oracle() {
    let all = fixtures();
    for arr in &all {
        let profile = compute_profile(arr).expect("profile");
        let oracle = region_count_oracle(arr).expect("oracle");
        assert_eq!(
            profile.f,
            oracle,
            "FAIL criterion 4: formula {} vs oracle {oracle} on {:?}",
            profile.f,
            arr.label()
        );
    }
    println!(
        "PASS criterion 4: region-count formula equals the incremental insertion \
         oracle on all {} fixtures",
        all.len()
    );
}

#[test]
fn criterion_05_pair_identity_on_every_fixture() {
    let all = fixtures();
    for arr in &all {
        let profile = compute_profile(arr).expect("profile");
        let lhs: u64 = profile.t.iter().map(|(k, c)| k * (k - 1) * c).sum();
        assert_eq!(
            lhs,
            profile.n * (profile.n - 1),
            "FAIL criterion 5: pair identity broken on {:?}",
            arr.label()
        );
    }
    println!(
        "PASS criterion 5: sum k(k-1) t_k = n(n-1) exactly on all {} fixtures",
        all.len()
    );
}

#[test]
fn criterion_06_inequality_soundness_with_guards() {
    let all = fixtures();
    for arr in &all {
        let profile = compute_profile(arr).expect("profile");
        let n = profile.n;
        let m = profile.m;
        let reports = check_all(&profile);
        for r in &reports {
            let expected_applicable = match r.name.as_str() {
                "melchior" => m < n,
                "csima_sawyer" => n >= 8 && m < n,
                "hirzebruch" => m + 3 <= n,
                "bojanowski" => 3 * m <= 2 * n,
                "green_tao" => true,
                other => panic!("unexpected inequality {other}"),
            };
            assert_eq!(
                r.applicable,
                expected_applicable,
                "FAIL criterion 6: guard mismatch for {} on {:?}",
                r.name,
                arr.label()
            );
            assert_eq!(r.name == "green_tao", !r.assertable);
            if r.applicable && r.assertable {
                assert!(
                    r.satisfied,
                    "FAIL criterion 6: {} violated on {:?}",
                    r.name,
                    arr.label()
                );
            }
        }
    }
    println!(
        "PASS criterion 6: melchior, csima_sawyer, hirzebruch, bojanowski hold under \
         their guards on all {} fixtures; green_tao reported but never asserted",
        all.len()
    );
}

#[test]
fn criterion_07_every_applicable_bound_below_measured_f() {
    let all = fixtures();
    let mut checked = 0u64;
    for arr in &all {
        let profile = compute_profile(arr).expect("profile");
        let report = profile_vs_bounds(&profile)
            .unwrap_or_else(|e| panic!("FAIL criterion 7: violation on {:?}: {e}", arr.label()));
        for row in &report.rows {
            if row.applicable {
                let gap = row.gap.as_ref().expect("applicable rows carry a gap");
                assert!(
                    !gap.is_negative(),
                    "FAIL criterion 7: {} exceeds f on {:?}",
                    row.name,
                    arr.label()
                );
                checked += 1;
            }
        }
    }
    println!(
        "PASS criterion 7: all {checked} applicable bound evaluations are <= measured f \
         across {} fixtures",
        all.len()
    );
}

#[test]
fn criterion_08_m6_equality_of_quadratic_and_shnurnikov_bounds() {
    let report = m6_equality_scan(9, 100).expect("scan");
    assert_eq!(report.rows.len(), 92);
    for row in &report.rows {
        let ni = row.n as i64;
        let expected = ratio(8 * ni * ni + 12 * ni, 36) + Rational::one();
        assert_eq!(row.theorem1, expected, "FAIL criterion 8 at n = {}", row.n);
        assert_eq!(
            row.shnurnikov_quadratic, expected,
            "FAIL criterion 8 at n = {}",
            row.n
        );
        assert!(row.equal);
    }
    assert!(
        report.all_equal,
        "FAIL criterion 8: scan reports inequality"
    );
    println!(
        "PASS criterion 8: quadratic bound equals the m = 6 specialization \
         (2n^2 + 3n)/9 + 1 of the Shnurnikov bound for every n in [9, 100]"
    );
}

#[test]
fn criterion_09_crossover_flips_across_both_brackets() {
    let ratios: Vec<Rational> = ["1.25", "1.28", "4.70", "4.75"]
        .iter()
        .map(|s| parse_rational_or_decimal(s).expect("ratio"))
        .collect();
    let rows = crossover_scan(&ratios, 6000).expect("scan");
    let dominants: Vec<&str> = rows.iter().map(|r| r.dominant.as_str()).collect();
    assert_eq!(
        dominants,
        ["theorem1", "arnold_purdy", "arnold_purdy", "theorem1"],
        "FAIL criterion 9: dominance pattern {dominants:?} does not flip across \
         the brackets of 3 - sqrt(3) and 3 + sqrt(3)"
    );
    println!(
        "PASS criterion 9: at n = 6000 dominance flips across p = 1.25 vs 1.28 \
         and p = 4.70 vs 4.75 (m = {:?})",
        rows.iter().map(|r| r.m).collect::<Vec<_>>()
    );
}

#[test]
fn criterion_10_strict_dominance_on_the_grid() {
    let grid = default_dominance_grid();
    for n in [50u64, 100, 500] {
        for m in [7u64, 8, 10, n / 5] {
            assert!(grid.contains(&(n, m)), "grid missing ({n}, {m})");
        }
    }
    let report = dominance_region_check(&grid).expect("grid check");
    for row in &report.rows {
        assert!(
            row.strictly_dominant,
            "FAIL criterion 10: not strictly dominant at ({}, {}): rival {} = {}",
            row.n, row.m, row.strongest_rival, row.rival_value
        );
    }
    assert!(report.all_strictly_dominant);
    println!(
        "PASS criterion 10: quadratic bound strictly exceeds every other applicable \
         bound on all {} grid points (n in {{50, 100, 500}}, m in {{7, 8, 10, n/5}})",
        report.rows.len()
    );
}

#[test]
fn criterion_11_profile_invariant_under_random_projectivities() {
    let mut checked = 0;
    for s in 0..20u64 {
        let arr = gen_random(6 + s % 7, 1000 + s).expect("random arrangement");
        let mut rng = SplitMix64::new(777 + s);
        let matrix = loop {
            let mut draw = || (rng.next_u64() % 19) as i64 - 9;
            let candidate = Matrix3::from_ints([
                [draw(), draw(), draw()],
                [draw(), draw(), draw()],
                [draw(), draw(), draw()],
            ]);
            if !candidate.det().is_zero() {
                break candidate;
            }
        };
        let mapped = apply_projectivity(&matrix, &arr).expect("projectivity");
        let before = compute_profile(&arr).expect("profile");
        let after = compute_profile(&mapped).expect("profile");
        assert_eq!(
            before, after,
            "FAIL criterion 11: profile changed under projectivity (seed {s})"
        );
        checked += 1;
    }
    println!(
        "PASS criterion 11: multiplicity profile unchanged under {checked} random \
         invertible projectivities"
    );
}

fn run_cli(args: &[&str]) -> (Vec<u8>, Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_linarr"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.stdout, out.stderr, out.status.code().unwrap_or(-1))
}

#[test]
fn criterion_12_byte_identical_reruns() {
    let arrangements_equal =
        |a: &Arrangement, b: &Arrangement| a.label() == b.label() && a.lines() == b.lines();
    let r1 = gen_random(9, 42).expect("random");
    let r2 = gen_random(9, 42).expect("random");
    assert!(
        arrangements_equal(&r1, &r2),
        "FAIL criterion 12: gen_random not deterministic"
    );

    let dir = tempfile::tempdir().expect("tempdir");
    let gen_path = dir.path().join("r.json");
    let gen_path_str = gen_path.to_str().expect("utf8 path");
    let mut file_bytes = Vec::new();
    let mut gen_stdout = Vec::new();
    for pass in 0..2 {
        let (stdout, stderr, code) = run_cli(&[
            "generate",
            "--family",
            "random",
            "--n",
            "9",
            "--seed",
            "42",
            "-o",
            gen_path_str,
        ]);
        assert_eq!(
            code,
            0,
            "generate failed: {}",
            String::from_utf8_lossy(&stderr)
        );
        let bytes = std::fs::read(&gen_path).expect("generated file");
        if pass == 0 {
            file_bytes = bytes;
            gen_stdout = stdout;
        } else {
            assert_eq!(
                file_bytes, bytes,
                "FAIL criterion 12: generate file bytes differ"
            );
            assert_eq!(
                gen_stdout, stdout,
                "FAIL criterion 12: generate stdout differs"
            );
        }
    }

    let analyze_path = gen_path_str;
    let cases: Vec<Vec<&str>> = vec![
        vec!["analyze", analyze_path],
        vec!["analyze", analyze_path, "--json"],
        vec!["analyze", analyze_path, "--decimal"],
        vec!["bounds", "--n", "30", "--m", "6"],
        vec!["bounds", "--n", "30", "--m", "6", "--json"],
        vec!["bounds", "--n", "30", "--m", "6", "--ceil", "--decimal"],
        vec!["certify", "--ineq", "bojanowski", "--m", "6", "--n", "30"],
        vec![
            "certify",
            "--ineq",
            "bojanowski",
            "--m",
            "6",
            "--n",
            "30",
            "--json",
        ],
        vec![
            "certify",
            "--ineq",
            "melchior",
            "--m",
            "7",
            "--objective",
            "at-n",
            "--n",
            "12",
        ],
        vec!["compare", "--mode", "m6-equality"],
        vec!["compare", "--mode", "m6-equality", "--json"],
        vec!["compare", "--mode", "crossover"],
        vec!["compare", "--mode", "crossover", "--json"],
        vec!["compare", "--mode", "dominance"],
        vec!["compare", "--mode", "dominance", "--json"],
    ];
    for args in &cases {
        let (out1, err1, code1) = run_cli(args);
        let (out2, err2, code2) = run_cli(args);
        assert_eq!(
            code1,
            0,
            "subcommand {args:?} failed: {}",
            String::from_utf8_lossy(&err1)
        );
        assert_eq!(code1, code2);
        assert_eq!(
            out1, out2,
            "FAIL criterion 12: stdout differs across reruns of {args:?}"
        );
        assert_eq!(err1, err2);
    }
    println!(
        "PASS criterion 12: gen_random, generate output files, and {} CLI invocations \
         are byte-identical across reruns",
        cases.len() + 1
    );
}

#[test]
fn acceptance_summary_numbers_match_between_human_and_json() {
    let (json_out, _, code) = run_cli(&["bounds", "--n", "30", "--m", "6", "--json"]);
    assert_eq!(code, 0);
    let parsed: serde_json::Value = serde_json::from_slice(&json_out).expect("valid json");
    assert_eq!(parsed["n"], 30);
    assert_eq!(
        parsed["best"],
        serde_json::json!(["shnurnikov_quadratic", "theorem1"])
    );
    let theorem1 = parsed["bounds"]
        .as_array()
        .expect("rows")
        .iter()
        .find(|r| r["name"] == "theorem1")
        .expect("theorem1 row");
    assert_eq!(theorem1["value"], "211");

    let (human_out, _, code) = run_cli(&["bounds", "--n", "30", "--m", "6"]);
    assert_eq!(code, 0);
    let text = String::from_utf8(human_out).expect("utf8");
    assert!(
        text.contains("211"),
        "human output missing the value JSON carries"
    );
    assert!(text.contains("best: shnurnikov_quadratic, theorem1"));

    let n_squared_over_six = int(900) / int(6);
    assert!(int(211) > n_squared_over_six);
    println!("PASS: human and JSON outputs carry identical numbers");
}
