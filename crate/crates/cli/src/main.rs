//! `patterngf`: bijections, generating functions, censuses, self-checks and
//! asymptotic tables for pattern-avoiding permutations.
//!
//! Exit codes: 0 success, 1 bad input or out-of-hypothesis request,
//! 2 failed verification.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use patterngf::asymptotics::{theta_csv, theta_probe};
use patterngf::bijection::{convert_123_to_132, phi, phi_inverse, psi, psi_inverse};
use patterngf::oracle::{census_with, OracleConfig};
use patterngf::orthopoly::{
    gf_avoiders_12k, gf_avoiders_23k1, gf_avoiders_k1k, gf_exactly_r_12k, gf_exactly_r_23k1, gf_exactly_r_k1k,
    strip_gf,
};
use patterngf::series::{cf_motzkin, cf_peaked_dyck, gf_theorem1, gf_theorem8, marked_weights};
use patterngf::verify::{run_suite, Suite};
use patterngf::{Error, HeightWeights, LatticePath, Pattern, Permutation, PolySystem};

const SCHEMA: &str = "patterngf/1";

#[derive(Parser, Debug)]
#[command(name = "patterngf", version, about = "Exact generating functions for pattern-avoiding permutations")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Map a permutation to its Dyck path or back.
    Bijection {
        #[arg(long, value_enum)]
        map: MapKind,
        /// Permutation (`74352681` or `7 4 3 5 2 6 8 1`) or path over U/D.
        #[arg(long)]
        input: String,
    },
    /// Print an exact generating function to a given order.
    Series(SeriesArgs),
    /// Histogram of occurrence counts over pattern-avoiding permutations.
    Census {
        #[arg(long)]
        n: usize,
        /// Comma-separated patterns to avoid.
        #[arg(long, value_delimiter = ',')]
        avoid: Vec<String>,
        /// Pattern whose occurrences are counted.
        #[arg(long)]
        count: String,
    },
    /// Run the self-verification suites against exhaustive enumeration.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Largest permutation size enumerated.
        #[arg(long, default_value_t = patterngf::verify::DEFAULT_MAX_N)]
        max_n: usize,
    },
    /// Table of exact counts against the trigonometric estimate.
    Asymptotics {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long)]
        n_max: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapKind {
    /// 132-avoiding permutation to Dyck path.
    Phi,
    /// Dyck path to 132-avoiding permutation.
    PhiInv,
    /// 123-avoiding permutation to Dyck path.
    Psi,
    /// Dyck path to 123-avoiding permutation.
    PsiInv,
    /// 123-avoiding to 132-avoiding through the common path.
    Convert,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    Bijections,
    Series,
    Appendix,
    Asymptotics,
    All,
}

const THEOREM_HELP: &str = "\
1   132-avoiders by occurrences of 12..k, bivariate in y
2   132-avoiders also avoiding 12..k
3   132-avoiders with exactly r occurrences of 12..k
6   132-avoiders also avoiding 23..k1
7   132-avoiders with exactly r occurrences of 23..k1 (k >= 3, 1 <= r <= k-1)
8   123-avoiders by occurrences of (k-1)..1k, bivariate in y
9   123-avoiders also avoiding (k-1)..1k
10  123-avoiders with exactly r occurrences of (k-1)..1k (1 <= r <= k-1)
A1  weighted Motzkin paths from height 0 to 0, x per step (--b, --lambda)
A2  weighted Motzkin paths from --r to --s below height --k, x per step (--b, --lambda)
A5  Dyck paths with peak weights, x per down-step (--nu, --lambda)";

#[derive(clap::Args, Debug)]
#[command(after_help = THEOREM_HELP)]
struct SeriesArgs {
    /// Which generating function; see the list below.
    #[arg(long)]
    theorem: String,
    /// Pattern length, or the strip height for A2.
    #[arg(long)]
    k: Option<usize>,
    /// Occurrence count, or the start height for A2.
    #[arg(long)]
    r: Option<usize>,
    /// End height for A2.
    #[arg(long)]
    s: Option<usize>,
    /// Truncation order N (coefficients x^0..x^N).
    #[arg(long, allow_hyphen_values = true)]
    order: i64,
    /// Substitute a rational value for y in the bivariate series.
    #[arg(long)]
    y_at: Option<String>,
    /// Level weights b_0, b_1, ... by height; the last value repeats.
    #[arg(long)]
    b: Option<String>,
    /// Down-step weights lambda_1, lambda_2, ... by height; the last value repeats.
    #[arg(long)]
    lambda: Option<String>,
    /// Peak weights nu_1, nu_2, ... by height; the last value repeats.
    #[arg(long)]
    nu: Option<String>,
}

/// Failure categories mapped to exit codes.
enum Failure {
    Domain(String),
    Verification(Vec<String>),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn domain(msg: impl Into<String>) -> Failure {
    Failure::Domain(msg.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(lines)) => {
            eprintln!("verification failed:");
            for l in lines {
                eprintln!("  {l}");
            }
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Bijection { map, input } => bijection(*map, input, cli.json),
        Command::Series(args) => series(args, cli.json),
        Command::Census { n, avoid, count } => census_cmd(*n, avoid, count, cli.json),
        Command::Verify { suite, max_n } => verify(*suite, *max_n, cli.json),
        Command::Asymptotics { k, r, n_max } => asymptotics(*k, *r, *n_max, cli.json),
    }
}

fn with_schema(mut v: Value) -> String {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), SCHEMA.into());
    }
    let mut s = serde_json::to_string_pretty(&v).expect("json");
    s.push('\n');
    s
}

fn bijection(map: MapKind, input: &str, as_json: bool) -> Outcome {
    let path = || LatticePath::from_str(input.trim());
    let perm = || Permutation::from_str(input);
    let (name, out) = match map {
        MapKind::Phi => ("phi", phi(&perm()?)?.to_string()),
        MapKind::PhiInv => ("phi-inv", phi_inverse(&path()?)?.to_string()),
        MapKind::Psi => ("psi", psi(&perm()?)?.to_string()),
        MapKind::PsiInv => ("psi-inv", psi_inverse(&path()?)?.to_string()),
        MapKind::Convert => ("convert", convert_123_to_132(&perm()?)?.to_string()),
    };
    Ok(if as_json {
        with_schema(json!({ "map": name, "input": input, "output": out }))
    } else {
        out
    })
}

fn parse_rational(s: &str) -> Result<BigRational, Failure> {
    BigRational::from_str(s.trim()).map_err(|_| domain(format!("{s:?} is not a rational number")))
}

/// `v_0, v_1, …` assigned to heights `offset, offset + 1, …`; the last value
/// fills every height up to `top`.
fn weights_flag(flag: &str, raw: Option<&String>, offset: usize, top: usize) -> Result<HeightWeights, Failure> {
    let raw = raw.ok_or_else(|| domain(format!("--{flag} is required for this series")))?;
    let mut values = raw.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
    let last = values.last().cloned().ok_or_else(|| domain(format!("--{flag} is empty")))?;
    while offset + values.len() <= top {
        values.push(last.clone());
    }
    Ok(HeightWeights::from_values(offset, values))
}

fn need(v: Option<usize>, flag: &str, theorem: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| domain(format!("--{flag} is required for series {theorem}")))
}

fn series(a: &SeriesArgs, as_json: bool) -> Outcome {
    if a.order < 0 {
        return Err(domain(format!("series order must be nonnegative, got {}", a.order)));
    }
    let n = a.order as usize;
    let t = a.theorem.trim().to_ascii_uppercase();
    let y = a.y_at.as_deref().map(parse_rational).transpose()?;
    let k = || need(a.k, "k", &t);
    let r = || need(a.r, "r", &t);

    let (coeffs, text) = match t.as_str() {
        "1" | "8" => {
            let s = if t == "1" { gf_theorem1(k()?, n)? } else { gf_theorem8(k()?, n)? };
            match &y {
                Some(v) => {
                    let s = s.eval_y(v);
                    (s.to_json(), s.to_list_string())
                }
                None => (s.to_json(), s.to_list_string()),
            }
        }
        _ => {
            if y.is_some() {
                return Err(domain(format!("--y-at applies only to the bivariate series 1 and 8, not {t}")));
            }
            let s = match t.as_str() {
                "2" => gf_avoiders_12k(k()?, n)?,
                "3" => gf_exactly_r_12k(k()?, r()?, n)?,
                "6" => gf_avoiders_23k1(k()?, n)?,
                "7" => gf_exactly_r_23k1(k()?, a.r.unwrap_or(1), n)?,
                "9" => gf_avoiders_k1k(k()?, n)?,
                "10" => gf_exactly_r_k1k(k()?, r()?, n)?,
                "A1" => {
                    let b = weights_flag("b", a.b.as_ref(), 0, n + 1)?;
                    let l = weights_flag("lambda", a.lambda.as_ref(), 1, n + 1)?;
                    cf_motzkin(None, marked_weights(&b, "level", 1, n), marked_weights(&l, "down", 2, n), n)?
                }
                "A2" => {
                    let kk = k()?;
                    let b = weights_flag("b", a.b.as_ref(), 0, kk + 1)?;
                    let l = weights_flag("lambda", a.lambda.as_ref(), 1, kk + 1)?;
                    strip_gf(&PolySystem::new(b, l), kk, a.r.unwrap_or(0), a.s.unwrap_or(0), n)?
                }
                "A5" => {
                    let nu = weights_flag("nu", a.nu.as_ref(), 1, n + 1)?;
                    let l = weights_flag("lambda", a.lambda.as_ref(), 1, n + 1)?;
                    cf_peaked_dyck(None, marked_weights(&nu, "peak", 1, n), marked_weights(&l, "down", 1, n), n)?
                }
                other => {
                    return Err(domain(format!(
                        "unknown series {other:?}; expected one of 1, 2, 3, 6, 7, 8, 9, 10, A1, A2, A5"
                    )))
                }
            };
            (s.to_json(), s.to_list_string())
        }
    };
    Ok(if as_json {
        with_schema(json!({
            "theorem": t,
            "k": a.k,
            "r": a.r,
            "order": n,
            "y_at": a.y_at,
            "coefficients": coeffs,
        }))
    } else {
        text
    })
}

fn census_cmd(n: usize, avoid: &[String], count: &str, as_json: bool) -> Outcome {
    let avoid = avoid
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| Pattern::from_str(s.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    let stat = Pattern::from_str(count.trim())?;
    let c = census_with(&OracleConfig::from_env()?, n, &avoid, &stat)?;
    Ok(if as_json { with_schema(c.to_json()) } else { c.to_csv() })
}

fn verify(suite: SuiteArg, max_n: usize, as_json: bool) -> Outcome {
    let bound = OracleConfig::from_env()?.max_n;
    if max_n > bound {
        return Err(Error::BoundExceeded {
            what: "permutation size",
            requested: max_n,
            bound,
        }
        .into());
    }
    let suite = match suite {
        SuiteArg::Bijections => Suite::Bijections,
        SuiteArg::Series => Suite::Series,
        SuiteArg::Appendix => Suite::Appendix,
        SuiteArg::Asymptotics => Suite::Asymptotics,
        SuiteArg::All => Suite::All,
    };
    let checks = run_suite(suite, max_n);
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed()).map(|c| c.to_string()).collect();
    let out = if as_json {
        with_schema(json!({
            "max_n": max_n,
            "checks": checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed(),
                "failure": c.failure,
            })).collect::<Vec<_>>(),
        }))
    } else {
        checks.iter().map(|c| format!("{c}\n")).collect()
    };
    if failed.is_empty() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Verification(failed))
    }
}

fn asymptotics(k: usize, r: usize, n_max: usize, as_json: bool) -> Outcome {
    let rows = theta_probe(k, r, n_max)?;
    if !as_json {
        return Ok(theta_csv(&rows));
    }
    let csv = theta_csv(&rows);
    let table: Vec<Value> = csv
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            json!({ "n": f[0].parse::<u64>().unwrap_or(0), "exact": f[1], "estimate": f[2], "ratio": f[3] })
        })
        .collect();
    Ok(with_schema(json!({ "k": k, "r": r, "n_max": n_max, "rows": table })))
}
