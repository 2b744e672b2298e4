//! Command-line front end.
//!
//! Exit codes: 0 success, 2 usage or invalid input, 3 I/O failure,
//! 4 internal consistency failure, 5 infeasible or unbounded optimization.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num::Zero;
use serde::Serialize;

use crate::bounds::{
    all_bounds, crossover_scan, default_crossover_ratios, default_dominance_grid,
    dominance_region_check, m6_equality_scan, profile_vs_bounds, CrossoverRow, ProfileBoundsReport,
};
use crate::certificates::{
    derive_bound, optimize_certificate, theorem1_certificate, Certificate, Objective,
};
use crate::error::{Error, Result};
use crate::generators::{read_arrangement, write_arrangement, Family, FamilySpec};
use crate::inequalities::{
    check_all, custom::CustomInequality, find_builtin, Inequality, InequalityReport,
};
use crate::profile::{compute_profile, region_count_oracle, MultiplicityProfile};
use crate::rational::{decimal_approx, format_rational, parse_rational_or_decimal, Rational};

#[derive(Parser)]
#[command(
    name = "linarr",
    version,
    about = "Exact analysis of line arrangements in the real projective plane"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Show rational values as 6-significant-digit decimals (display only).
    #[arg(long, global = true)]
    decimal: bool,
    /// Emit machine-readable JSON (always exact rationals).
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Write an arrangement from one of the deterministic families.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: u64,
        /// PRNG seed; required for the random family, rejected otherwise.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Profile an arrangement file and evaluate inequalities and bounds.
    Analyze { input: PathBuf },
    /// Evaluate every lower bound at a given (n, m).
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
        /// Also display each bound rounded up to an integer.
        #[arg(long)]
        ceil: bool,
    },
    /// Find the optimal certificate for an inequality at cap m.
    Certify {
        /// Builtin inequality name or path to a JSON spec file.
        #[arg(long)]
        ineq: String,
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Lexicographic)]
        objective: ObjectiveArg,
        /// Evaluate the certified bound at this n (also the target of the
        /// at-n objective).
        #[arg(long)]
        n: Option<u64>,
    },
    /// Check the dominance claims between the quadratic bound and the rest
    /// of the catalogue.
    Compare {
        #[arg(long, value_enum)]
        mode: CompareMode,
        /// m6-equality: inclusive n range as LO:HI (default 9:100).
        #[arg(long)]
        n_range: Option<String>,
        /// crossover: the line count (default 6000).
        #[arg(long)]
        n: Option<u64>,
        /// crossover: comma-separated ratios p (rational or decimal).
        #[arg(long)]
        p: Option<String>,
        /// dominance: "default" or comma-separated n:m pairs.
        #[arg(long)]
        grid: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ObjectiveArg {
    Lexicographic,
    AtN,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CompareMode {
    M6Equality,
    Crossover,
    Dominance,
}

pub fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Generate {
            family,
            n,
            seed,
            output,
        } => cmd_generate(*family, *n, *seed, output, cli),
        Command::Analyze { input } => cmd_analyze(input, cli),
        Command::Bounds { n, m, ceil } => cmd_bounds(*n, *m, *ceil, cli),
        Command::Certify {
            ineq,
            m,
            objective,
            n,
        } => cmd_certify(ineq, *m, *objective, *n, cli),
        Command::Compare {
            mode,
            n_range,
            n,
            p,
            grid,
        } => cmd_compare(
            *mode,
            n_range.as_deref(),
            *n,
            p.as_deref(),
            grid.as_deref(),
            cli,
        ),
    }
}

fn show(r: &Rational, cli: &Cli) -> String {
    if cli.decimal {
        decimal_approx(r)
    } else {
        format_rational(r)
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

#[derive(Serialize)]
struct GenerateReport<'a> {
    family: String,
    n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<&'a str>,
    output: String,
}

#[derive(Serialize)]
struct AnalyzeReport<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<&'a str>,
    profile: &'a MultiplicityProfile,
    oracle_f: u64,
    inequalities: &'a [InequalityReport],
    bounds: &'a ProfileBoundsReport,
}

#[derive(Serialize)]
struct CertifyReport<'a> {
    certificate: &'a Certificate,
    objective: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    matches_closed_form: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bound_at_n: Option<String>,
}

#[derive(Serialize)]
struct CrossoverReport<'a> {
    n: u64,
    rows: &'a [CrossoverRow],
    #[serde(skip_serializing_if = "Option::is_none")]
    lower_bracket_flips: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    upper_bracket_flips: Option<bool>,
}

fn cmd_generate(family: Family, n: u64, seed: Option<u64>, output: &Path, cli: &Cli) -> Result<()> {
    let spec = FamilySpec { family, n, seed };
    let arr = spec.generate()?;
    write_arrangement(&arr, output)?;
    if cli.json {
        print_json(&GenerateReport {
            family: family.to_string(),
            n,
            seed,
            label: arr.label(),
            output: output.display().to_string(),
        });
    } else {
        println!(
            "generated {} (n = {}) -> {}",
            arr.label().unwrap_or("arrangement"),
            n,
            output.display()
        );
    }
    Ok(())
}

fn cmd_analyze(input: &Path, cli: &Cli) -> Result<()> {
    let arr = read_arrangement(input)?;
    let profile = compute_profile(&arr)?;
    let oracle = region_count_oracle(&arr)?;
    if profile.f != oracle {
        return Err(Error::Consistency(format!(
            "region count disagreement: formula gives {}, insertion oracle gives {oracle}",
            profile.f
        )));
    }
    let inequalities = check_all(&profile);
    let bounds = profile_vs_bounds(&profile)?;
    if cli.json {
        print_json(&AnalyzeReport {
            label: arr.label(),
            profile: &profile,
            oracle_f: oracle,
            inequalities: &inequalities,
            bounds: &bounds,
        });
        return Ok(());
    }
    println!(
        "arrangement: {} (n = {})",
        arr.label().unwrap_or("unlabeled"),
        profile.n
    );
    println!(
        "profile: m = {}, points = {}, f = {}",
        profile.m, profile.total_points, profile.f
    );
    for (k, count) in &profile.t {
        println!("  t_{k} = {count}");
    }
    println!(
        "region count: formula {} / oracle {oracle} (agree)",
        profile.f
    );
    let pair_sum: u64 = profile.t.iter().map(|(k, c)| k * (k - 1) * c).sum();
    println!("pair identity: sum k(k-1) t_k = {pair_sum} = n(n-1) (holds)");
    println!("inequalities:");
    println!(
        "  {:<14} {:>12} {:>12} {:>12}  status",
        "name", "lhs", "rhs", "slack"
    );
    for r in &inequalities {
        let status = if !r.applicable {
            "not applicable".to_string()
        } else if !r.assertable {
            format!(
                "{} (asymptotic, not asserted)",
                if r.satisfied { "holds" } else { "fails" }
            )
        } else if r.satisfied {
            "satisfied".to_string()
        } else {
            "VIOLATED".to_string()
        };
        println!(
            "  {:<14} {:>12} {:>12} {:>12}  {status}",
            r.name,
            show(&r.lhs, cli),
            show(&r.rhs, cli),
            show(&r.slack, cli),
        );
    }
    println!("lower bounds (measured f = {}):", profile.f);
    println!("  {:<22} {:>12} {:>12}  guard", "name", "value", "gap");
    for row in &bounds.rows {
        match (&row.value, &row.gap) {
            (Some(v), Some(g)) => println!(
                "  {:<22} {:>12} {:>12}  {}",
                row.name,
                show(v, cli),
                show(g, cli),
                row.guard
            ),
            _ => println!("  {:<22} {:>12} {:>12}  {}", row.name, "-", "-", row.guard),
        }
    }
    Ok(())
}

fn cmd_bounds(n: u64, m: u64, ceil: bool, cli: &Cli) -> Result<()> {
    let report = all_bounds(n, m)?;
    if cli.json {
        print_json(&report);
        return Ok(());
    }
    println!("lower bounds at n = {n}, m = {m}");
    if ceil {
        println!("  {:<22} {:>14} {:>10}  guard", "name", "value", "ceil");
    } else {
        println!("  {:<22} {:>14}  guard", "name", "value");
    }
    for r in &report.results {
        match &r.value {
            Some(v) => {
                if ceil {
                    println!(
                        "  {:<22} {:>14} {:>10}  {}",
                        r.name,
                        show(v, cli),
                        v.ceil().to_integer(),
                        r.guard
                    );
                } else {
                    println!("  {:<22} {:>14}  {}", r.name, show(v, cli), r.guard);
                }
            }
            None => {
                if ceil {
                    println!("  {:<22} {:>14} {:>10}  {}", r.name, "-", "-", r.guard);
                } else {
                    println!("  {:<22} {:>14}  {}", r.name, "-", r.guard);
                }
            }
        }
    }
    println!("best: {}", report.best.join(", "));
    Ok(())
}

fn resolve_inequality(ineq: &str) -> Result<Box<dyn Inequality>> {
    if let Some(builtin) = find_builtin(ineq) {
        return Ok(builtin);
    }
    if Path::new(ineq).exists() {
        return Ok(Box::new(CustomInequality::read(ineq)?));
    }
    Err(Error::InvalidInput(format!(
        "unknown inequality {ineq:?}: not a builtin (melchior, csima_sawyer, hirzebruch, \
         bojanowski, green_tao) and no such file"
    )))
}

fn cmd_certify(
    ineq: &str,
    m: u64,
    objective: ObjectiveArg,
    n: Option<u64>,
    cli: &Cli,
) -> Result<()> {
    let spec = resolve_inequality(ineq)?;
    let objective = match objective {
        ObjectiveArg::Lexicographic => Objective::Lexicographic,
        ObjectiveArg::AtN => {
            let n =
                n.ok_or_else(|| Error::InvalidInput("the at-n objective requires --n".into()))?;
            Objective::AtN(n)
        }
    };
    let cert = optimize_certificate(spec.as_ref(), m, objective)?;
    let closed_form = if spec.name() == "bojanowski" {
        Some(theorem1_certificate(m)?)
    } else {
        None
    };
    let matches_closed_form = closed_form
        .as_ref()
        .map(|p| p.c1 == cert.c1 && p.c2 == cert.c2);
    let bound_at_n = match n {
        Some(n) => Some(derive_bound(&cert, spec.as_ref(), n)?),
        None => None,
    };
    if cli.json {
        print_json(&CertifyReport {
            certificate: &cert,
            objective: match objective {
                Objective::Lexicographic => "lexicographic".to_string(),
                Objective::AtN(n0) => format!("at_n({n0})"),
            },
            matches_closed_form,
            n,
            bound_at_n: bound_at_n.as_ref().map(format_rational),
        });
        return Ok(());
    }
    println!(
        "optimal certificate for {} at m = {m} ({})",
        cert.ineq_name,
        match objective {
            Objective::Lexicographic => "lexicographic objective".to_string(),
            Objective::AtN(n0) => format!("objective at n = {n0}"),
        }
    );
    println!("  c1 = {}", show(&cert.c1, cli));
    println!("  c2 = {}", show(&cert.c2, cli));
    if cert.inequality_unused() {
        println!(
            "  incidence inequality unused (c2 = 0): the bound rests on the pair identity alone"
        );
    }
    println!("  slack by constraint:");
    for (k, slack) in &cert.slacks {
        let marker = if slack.is_zero() { "  (tight)" } else { "" };
        println!("    k = {k}: {}{marker}", show(slack, cli));
    }
    println!("  bound: f >= {}", cert.bound);
    if let Some(matches) = matches_closed_form {
        let pair = closed_form.expect("present when matches is");
        println!(
            "  matches the closed-form pair ((m+2)/(6m), 2(m-1)/(3m)) = ({}, {}): {}",
            show(&pair.c1, cli),
            show(&pair.c2, cli),
            if matches { "yes" } else { "no" }
        );
    }
    if !spec.assertable() {
        println!(
            "  note: asymptotic inequality; the derived bound holds only for sufficiently large n"
        );
    }
    if let Some(bound) = &bound_at_n {
        println!(
            "  bound at n = {}: {}",
            n.expect("checked"),
            show(bound, cli)
        );
    }
    Ok(())
}

fn parse_n_range(text: &str) -> Result<(u64, u64)> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() == 2 {
        if let (Ok(lo), Ok(hi)) = (parts[0].parse(), parts[1].parse()) {
            return Ok((lo, hi));
        }
    }
    Err(Error::InvalidInput(format!(
        "expected LO:HI with integers, got {text:?}"
    )))
}

fn parse_ratios(text: &str) -> Result<Vec<Rational>> {
    text.split(',')
        .map(|s| parse_rational_or_decimal(s.trim()))
        .collect()
}

fn parse_grid(text: &str) -> Result<Vec<(u64, u64)>> {
    if text == "default" {
        return Ok(default_dominance_grid());
    }
    text.split(',')
        .map(|pair| {
            let (n, m) = parse_n_range(pair.trim())?;
            Ok((n, m))
        })
        .collect()
}

fn reject_flag(present: bool, flag: &str, mode: &str) -> Result<()> {
    if present {
        return Err(Error::InvalidInput(format!(
            "--{flag} does not apply to mode {mode}"
        )));
    }
    Ok(())
}

fn cmd_compare(
    mode: CompareMode,
    n_range: Option<&str>,
    n: Option<u64>,
    p: Option<&str>,
    grid: Option<&str>,
    cli: &Cli,
) -> Result<()> {
    match mode {
        CompareMode::M6Equality => {
            reject_flag(n.is_some(), "n", "m6-equality")?;
            reject_flag(p.is_some(), "p", "m6-equality")?;
            reject_flag(grid.is_some(), "grid", "m6-equality")?;
            let (lo, hi) = match n_range {
                Some(text) => parse_n_range(text)?,
                None => (9, 100),
            };
            let report = m6_equality_scan(lo, hi)?;
            if cli.json {
                print_json(&report);
            } else {
                println!("m = 6 equality scan, n in [{lo}, {hi}]");
                for row in &report.rows {
                    println!(
                        "  n = {}: theorem1 = {} / shnurnikov_quadratic = {}: {}",
                        row.n,
                        show(&row.theorem1, cli),
                        show(&row.shnurnikov_quadratic, cli),
                        if row.equal { "pass" } else { "FAIL" }
                    );
                }
                println!("all equal: {}", if report.all_equal { "yes" } else { "NO" });
            }
            if !report.all_equal {
                return Err(Error::Consistency(
                    "the m = 6 equality failed at some n".into(),
                ));
            }
        }
        CompareMode::Crossover => {
            reject_flag(n_range.is_some(), "n-range", "crossover")?;
            reject_flag(grid.is_some(), "grid", "crossover")?;
            let n = n.unwrap_or(6000);
            let (ratios, check_brackets) = match p {
                Some(text) => (parse_ratios(text)?, false),
                None => (default_crossover_ratios(), true),
            };
            let rows = crossover_scan(&ratios, n)?;
            let row_by_p = |p: &str| rows.iter().find(|r| r.p == p);
            let flip = |below: Option<&CrossoverRow>,
                        above: Option<&CrossoverRow>,
                        low_side: &str| {
                match (below, above) {
                    (Some(b), Some(a)) => Some(b.dominant == low_side && a.dominant != low_side),
                    _ => None,
                }
            };
            let lower_flip = flip(row_by_p("5/4"), row_by_p("32/25"), "theorem1");
            let upper_flip = flip(row_by_p("47/10"), row_by_p("19/4"), "arnold_purdy");
            if cli.json {
                print_json(&CrossoverReport {
                    n,
                    rows: &rows,
                    lower_bracket_flips: lower_flip,
                    upper_bracket_flips: upper_flip,
                });
            } else {
                println!("crossover at n = {n}: quadratic bound vs (m+1)(n-m)");
                for row in &rows {
                    println!(
                        "  p = {:<6} m = {:<5} theorem1 = {:<14} arnold_purdy = {:<10} dominant = {}{}",
                        row.p,
                        row.m,
                        show(&row.theorem1, cli),
                        show(&row.arnold_purdy, cli),
                        row.dominant,
                        if row.within_window { "" } else { "  [outside 3m <= 2n]" }
                    );
                }
                if let Some(ok) = lower_flip {
                    println!(
                        "bracket 5/4 vs 32/25 (around 3 - sqrt(3)): dominance flips: {}",
                        if ok { "pass" } else { "FAIL" }
                    );
                }
                if let Some(ok) = upper_flip {
                    println!(
                        "bracket 47/10 vs 19/4 (around 3 + sqrt(3)): dominance flips: {}",
                        if ok { "pass" } else { "FAIL" }
                    );
                }
            }
            if check_brackets && (lower_flip != Some(true) || upper_flip != Some(true)) {
                return Err(Error::Consistency(
                    "a crossover bracket did not flip as claimed".into(),
                ));
            }
        }
        CompareMode::Dominance => {
            reject_flag(n_range.is_some(), "n-range", "dominance")?;
            reject_flag(n.is_some(), "n", "dominance")?;
            reject_flag(p.is_some(), "p", "dominance")?;
            let pairs = match grid {
                Some(text) => parse_grid(text)?,
                None => default_dominance_grid(),
            };
            let report = dominance_region_check(&pairs)?;
            if cli.json {
                print_json(&report);
            } else {
                println!("dominance grid (7 <= m <= n/5)");
                for row in &report.rows {
                    println!(
                        "  n = {:<4} m = {:<4} theorem1 = {:<12} strongest rival {} = {}: {}",
                        row.n,
                        row.m,
                        show(&row.theorem1, cli),
                        row.strongest_rival,
                        show(&row.rival_value, cli),
                        if row.strictly_dominant {
                            "pass"
                        } else {
                            "FAIL"
                        }
                    );
                }
                println!(
                    "all strictly dominant: {}",
                    if report.all_strictly_dominant {
                        "yes"
                    } else {
                        "NO"
                    }
                );
            }
            if !report.all_strictly_dominant {
                return Err(Error::Consistency(
                    "strict dominance failed at some grid point".into(),
                ));
            }
        }
    }
    Ok(())
}
