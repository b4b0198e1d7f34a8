//! Command-line front end: parse polynomials, pick a coefficient ring, run
//! one operation and print a self-checking JSON report.
//!
//! Exit codes: 0 success, 1 parse or configuration error, 2 precondition
//! violated (for instance an assumption on values fails), 3 budget or scan
//! cap exhausted, or the run was interrupted.

pub mod commands;
pub mod output;
pub mod parse;
pub mod rings;
pub mod selftest;

use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use commands::{Failure, OracleBox, Reply};
use rings::RingSel;
use schinzel::{Error, Limits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Parser, Debug)]
#[command(name = "schinzel", version, about = "Coprime values, Bézout denominators and irreducible specializations")]
pub struct Cli {
    /// Coefficient ring: Z, Q[u], Fp[u]:p or Z[u].
    #[arg(long, global = true, default_value = "Z", value_parser = |s: &str| s.parse::<RingSel>())]
    pub ring: RingSel,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for randomized checks (selftest).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Pollard rho iterations per integer factorization.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub factor_budget: Option<u64>,
    /// Candidates tried by constant scans and specialization scans.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub scan_cap: Option<u64>,
    /// Candidates m(u) tried over Z[u], per search phase.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub lambda_bound: Option<u64>,
    /// Largest degree handed to Kronecker factorization.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub kronecker_degree_cap: Option<u64>,
    /// Largest residue period enumerated by profile and dstar.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub period_cap: Option<u64>,
    /// Candidates examined per prime-in-progression search.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub prime_cap: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bézout denominator with cofactors.
    Delta {
        #[arg(required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Smallest denominator reachable with bounded cofactor degree.
    MinDelta {
        #[arg(long)]
        bound: Option<usize>,
        #[arg(required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Local obstructions for the product (AV1) and the family (AV2).
    AvCheck {
        #[arg(required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// An m with coprime values.
    FindCoprime {
        #[arg(required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Brute-force search for coprime values over a box of candidates.
    Oracle {
        /// Integers in [-range, range] (Z, Q[u]).
        #[arg(long, default_value_t = 1000)]
        range: i64,
        /// Degree bound for polynomial candidates (Fp[u], Z[u]).
        #[arg(long, default_value_t = 3)]
        max_deg: usize,
        /// Coefficient height for Z[u] candidates.
        #[arg(long, default_value_t = 3)]
        height: i64,
        #[arg(required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Gcd of values over one period.
    Profile {
        #[arg(required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Distinct value gcds and their gcd.
    Dstar {
        #[arg(required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Exact proportion of m in [lo, hi) with coprime values.
    Density {
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        lo: i64,
        /// Defaults to one period past lo.
        #[arg(long, allow_hyphen_values = true)]
        hi: Option<i64>,
        #[arg(required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Progression of t values giving primitive specializations.
    HilbertProgression {
        #[arg(required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Scan the progression for irreducible specializations.
    HilbertScan {
        #[arg(long, default_value_t = 10)]
        want: usize,
        #[arg(long, default_value_t = 100)]
        cap: usize,
        #[arg(required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Substitute m(u) for t in P(u, t, y) and test irreducibility.
    PolyringScan {
        #[arg(long, default_value_t = 5)]
        want: usize,
        #[arg(long, default_value_t = 2)]
        max_deg: usize,
        #[arg(long, default_value_t = 3)]
        height: i64,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// m with every value congruent mod N to a prime.
    ModN {
        #[arg(long = "mod")]
        modulus: i64,
        #[arg(long, default_value_t = 1)]
        want: usize,
        #[arg(required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Primes p, q with p + q congruent to 2n mod N.
    GoldbachModN {
        #[arg(long, allow_hyphen_values = true)]
        two_n: i64,
        #[arg(long = "mod")]
        modulus: i64,
        #[arg(long, default_value_t = 1)]
        want: usize,
    },
    /// Run the bundled fixtures and a parser round trip.
    Selftest,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Delta { .. } => "delta",
            Command::MinDelta { .. } => "min-delta",
            Command::AvCheck { .. } => "av-check",
            Command::FindCoprime { .. } => "find-coprime",
            Command::Oracle { .. } => "oracle",
            Command::Profile { .. } => "profile",
            Command::Dstar { .. } => "dstar",
            Command::Density { .. } => "density",
            Command::HilbertProgression { .. } => "hilbert-progression",
            Command::HilbertScan { .. } => "hilbert-scan",
            Command::PolyringScan { .. } => "polyring-scan",
            Command::ModN { .. } => "mod-n",
            Command::GoldbachModN { .. } => "goldbach-mod-n",
            Command::Selftest => "selftest",
        }
    }

    fn raw_inputs(&self) -> Vec<String> {
        match self {
            Command::Delta { polys }
            | Command::MinDelta { polys, .. }
            | Command::AvCheck { polys }
            | Command::FindCoprime { polys }
            | Command::Oracle { polys, .. }
            | Command::Profile { polys }
            | Command::Dstar { polys }
            | Command::Density { polys, .. }
            | Command::HilbertProgression { polys }
            | Command::HilbertScan { polys, .. }
            | Command::ModN { polys, .. } => polys.clone(),
            Command::PolyringScan { poly, .. } => vec![poly.clone()],
            Command::GoldbachModN { .. } | Command::Selftest => Vec::new(),
        }
    }
}

/// Budget multiplier from `SCHINZEL_BUDGET_SCALE`: an integer, `a/b` or a
/// decimal, strictly positive.
pub fn parse_scale(s: &str) -> Result<(u64, u64), String> {
    let bad = || format!("SCHINZEL_BUDGET_SCALE must be a positive rational, got '{s}'");
    let s = s.trim();
    let (num, den) = if let Some((a, b)) = s.split_once('/') {
        (a.trim().parse::<u64>().map_err(|_| bad())?, b.trim().parse::<u64>().map_err(|_| bad())?)
    } else if let Some((int, frac)) = s.split_once('.') {
        if frac.len() > 9 || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let den = 10u64.pow(frac.len() as u32);
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
        (int.checked_mul(den).and_then(|v| v.checked_add(frac)).ok_or_else(bad)?, den)
    } else {
        (s.parse::<u64>().map_err(|_| bad())?, 1)
    };
    if num == 0 || den == 0 {
        return Err(bad());
    }
    Ok((num, den))
}

fn limits_for(cli: &Cli, scale: (u64, u64)) -> Limits {
    let mut l = Limits::default().scaled(scale.0, scale.1);
    if let Some(v) = cli.factor_budget {
        l.factor.rho_iterations = v;
    }
    if let Some(v) = cli.scan_cap {
        l.scan_candidates = v;
    }
    if let Some(v) = cli.lambda_bound {
        l.polyring_candidates = v;
    }
    if let Some(v) = cli.kronecker_degree_cap {
        l.kronecker.degree_cap = v as usize;
    }
    if let Some(v) = cli.period_cap {
        l.integer_period_cap = v;
        l.poly_period_cap = v;
    }
    if let Some(v) = cli.prime_cap {
        l.prime_candidates = v;
    }
    l
}

fn limits_json(l: &Limits) -> Value {
    json!({
        "factor_trial_limit": l.factor.trial_limit,
        "factor_rho_iterations": l.factor.rho_iterations,
        "fp_factor_candidates": l.fp_factor_candidates,
        "kronecker_degree_cap": l.kronecker.degree_cap,
        "kronecker_node_budget": l.kronecker.node_budget,
        "integer_period_cap": l.integer_period_cap,
        "poly_period_cap": l.poly_period_cap,
        "polyring_candidates": l.polyring_candidates,
        "scan_candidates": l.scan_candidates,
        "prime_candidates": l.prime_candidates,
        "density_window_cap": l.density_window_cap,
    })
}

fn dispatch(cli: &Cli, limits: &Limits) -> Result<Reply, Failure> {
    let sel = cli.ring;
    match &cli.command {
        Command::Delta { polys } => commands::delta(sel, polys),
        Command::MinDelta { bound, polys } => commands::min_delta(sel, polys, *bound),
        Command::AvCheck { polys } => commands::av_check(sel, polys, limits),
        Command::FindCoprime { polys } => commands::find_coprime(sel, polys, limits),
        Command::Oracle { range, max_deg, height, polys } => {
            if *range < 0 || *height < 1 {
                return Err(Failure::Config("range must be nonnegative and height positive".into()));
            }
            commands::oracle(sel, polys, &OracleBox { range: *range, max_deg: *max_deg, height: *height })
        }
        Command::Profile { polys } => commands::profile(sel, polys, limits),
        Command::Dstar { polys } => commands::dstar_cmd(sel, polys, limits),
        Command::Density { lo, hi, polys } => commands::density(sel, polys, *lo, *hi, limits),
        Command::HilbertProgression { polys } => commands::hilbert_progression(sel, polys, limits),
        Command::HilbertScan { want, cap, polys } => commands::hilbert_scan(sel, polys, *want, *cap, limits),
        Command::PolyringScan { want, max_deg, height, poly } => {
            commands::polyring_scan(sel, poly, *want, *max_deg, *height, limits)
        }
        Command::ModN { modulus, want, polys } => commands::mod_n(sel, polys, *modulus, *want, limits),
        Command::GoldbachModN { two_n, modulus, want } => commands::goldbach(*two_n, *modulus, *want, limits),
        Command::Selftest => Ok(selftest::run(cli.seed.unwrap_or(0))),
    }
}

/// Name of the polynomial ring a command works in, as the reports print it.
fn ring_label(sel: RingSel, cmd: &Command) -> String {
    let base = match sel {
        RingSel::Z => "Z".to_string(),
        RingSel::Qu => "Q[u]".to_string(),
        RingSel::Fpu(p) => format!("F{p}[u]"),
        RingSel::Zu => "Z[u]".to_string(),
    };
    match cmd {
        Command::HilbertProgression { .. } | Command::HilbertScan { .. } | Command::PolyringScan { .. } => {
            format!("{base}[t][y]")
        }
        Command::Selftest => "-".into(),
        _ => format!("{base}[y]"),
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Incompatible(_) => "Incompatible",
        Error::BudgetExceeded(_) => "BudgetExceeded",
        Error::CapExceeded(_) => "CapExceeded",
        Error::Precondition(_) => "Precondition",
        Error::CommonFactor(_) => "CommonFactor",
        Error::ZeroInput => "ZeroInput",
        Error::RingMismatch(_) => "RingMismatch",
        Error::Av1Violation { .. } => "Av1Violation",
        Error::Av2Violation { .. } => "Av2Violation",
        Error::Av3Violation { .. } => "Av3Violation",
    }
}

fn failure_json(f: &Failure) -> (Value, i32) {
    match f {
        Failure::Parse { input, error } => (
            json!({"kind": error.kind(), "message": error.to_string(), "input": input, "position": error.position()}),
            1,
        ),
        Failure::Config(msg) => (json!({"kind": "Config", "message": msg}), 1),
        Failure::Core(e) => {
            let code = match e {
                _ if e.is_budget() => 3,
                Error::RingMismatch(_) => 1,
                _ => 2,
            };
            let mut v = json!({"kind": error_kind(e), "message": e.to_string()});
            if let Some(p) = e.failing_prime() {
                v["failing_prime"] = output::failing_prime_value(p);
            }
            (v, code)
        }
    }
}

pub struct Outcome {
    pub code: i32,
    /// The report, when the arguments parsed.
    pub doc: Option<Value>,
    pub stdout: String,
    pub stderr: String,
}

/// Run one invocation. `scale` is the raw `SCHINZEL_BUDGET_SCALE` value.
pub fn execute<I: IntoIterator<Item = String>>(argv: I, scale: Option<&str>) -> Outcome {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let text = e.render().to_string();
            return if shown {
                Outcome { code: 0, doc: None, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 1, doc: None, stdout: String::new(), stderr: text }
            };
        }
    };
    let command = cli.command.name();
    let started = Instant::now();
    let scale_pair = scale.map(parse_scale).transpose();
    let (outcome, scale_text, limits) = match scale_pair {
        Ok(pair) => {
            let pair = pair.unwrap_or((1, 1));
            let limits = limits_for(&cli, pair);
            let text = if pair.1 == 1 { pair.0.to_string() } else { format!("{}/{}", pair.0, pair.1) };
            (dispatch(&cli, &limits), text, limits)
        }
        Err(msg) => (Err(Failure::Config(msg)), scale.unwrap_or_default().to_string(), Limits::default()),
    };
    let budget = json!({
        "scale": scale_text,
        "limits": limits_json(&limits),
        "seed": cli.seed,
        "elapsed_ms": started.elapsed().as_millis() as u64,
    });
    let (doc, code) = match outcome {
        Ok(r) => (
            json!({
                "schema": output::SCHEMA,
                "command": command,
                "ring": r.ring,
                "inputs": r.inputs,
                "result": r.result,
                "verification": r.verification,
                "budget_report": budget,
            }),
            r.code,
        ),
        Err(f) => {
            let (err, code) = failure_json(&f);
            (
                json!({
                    "schema": output::SCHEMA,
                    "command": command,
                    "ring": ring_label(cli.ring, &cli.command),
                    "inputs": cli.command.raw_inputs(),
                    "result": Value::Null,
                    "error": err,
                    "verification": Value::Null,
                    "budget_report": budget,
                }),
                code,
            )
        }
    };
    let stdout = match cli.format {
        Format::Json => serde_json::to_string_pretty(&doc).expect("serializable"),
        Format::Table => output::table(&doc),
    };
    Outcome { code, doc: Some(doc), stdout, stderr: String::new() }
}
