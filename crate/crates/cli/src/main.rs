//! Command-line front end for the exact transform and moment engine.
//!
//! Exit codes: 0 on success, 1 on usage or domain errors, 2 when a
//! verification run (or a route comparison) records failures, 3 when
//! quadrature fails to converge.

use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use motzkin_core::moments::{
    enumerate_paths, mu_all_routes, mu_cfrac, mu_closed, mu_gf_series, mu_lagrange,
    mu_paths, mu_recur, MomentRequest, MotzkinPath, DEFAULT_PATH_BOUND,
};
use motzkin_core::recurrence::{w_generate, RecParams};
use motzkin_core::transform::{binomial_interp, epsilon, eta, invert_interp, UnitSequence};
use motzkin_core::verify::{self, Grid};
use motzkin_core::weight::{quad_moment, weight_csv, WeightSpec};
use motzkin_core::{Error, ExactScalar};
use num_traits::ToPrimitive;

#[derive(Parser)]
#[command(
    name = "motzkin",
    version,
    about = "Exact sequence transforms, recurrent sequences, and generalized Motzkin moments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print terms of the recurrence w[n] = h*w[n-1] - k*w[n-2] seeded by 1, b
    Seq {
        /// Second term of the sequence (the first is always 1)
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        b: ExactScalar,
        /// Recurrence coefficient on w[n-1]
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        h: ExactScalar,
        /// Recurrence coefficient on w[n-2], with a minus sign
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        k: ExactScalar,
        /// How many terms to print
        #[arg(long)]
        terms: usize,
    },
    /// Apply a pipeline of transforms to a comma-separated sequence
    Transform {
        /// Input sequence, comma separated, starting with 1
        #[arg(long)]
        input: String,
        /// Steps joined by '|': invert:X, binomial:Y, eta, epsilon
        #[arg(long)]
        pipe: String,
    },
    /// Compute the moments mu_0 .. mu_n of the (h, k) weight
    Moments {
        /// Center of the weight
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        h: ExactScalar,
        /// Scale of the weight, nonzero
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        k: ExactScalar,
        /// Largest moment index
        #[arg(long)]
        n: usize,
        /// One route, or all of them with a cross-check
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Enumerate weighted lattice paths of one length
    Paths {
        /// Path length
        #[arg(long)]
        n: usize,
        /// Weight per east step
        #[arg(long, value_parser = parse_rational, default_value = "1", allow_hyphen_values = true)]
        h: ExactScalar,
        /// Weight per southeast step
        #[arg(long, value_parser = parse_rational, default_value = "1", allow_hyphen_values = true)]
        k: ExactScalar,
        /// Print one line per path before the totals
        #[arg(long)]
        list: bool,
    },
    /// Run a verification suite and print its tallies
    Verify {
        /// Which suite to run
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Grid size: small for a quick pass, full for the acceptance sweep
        #[arg(long, value_enum, default_value_t = GridArg::Small)]
        grid: GridArg,
    },
    /// Sample the weight density as CSV, optionally checking quadrature
    Weight {
        /// Center of the weight
        #[arg(long, allow_negative_numbers = true)]
        h: f64,
        /// Scale of the weight, positive
        #[arg(long, allow_negative_numbers = true)]
        k: f64,
        /// Number of sample points across the support
        #[arg(long)]
        samples: usize,
        /// Also integrate moments 0..=N numerically and compare
        #[arg(long, value_name = "N")]
        quad: Option<usize>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Gf,
    Cfrac,
    Closed,
    Recur,
    Lagrange,
    Paths,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Group,
    Recurrence,
    Moments,
    Orthogonality,
    Catalan,
    Weight,
    All,
}

impl SuiteArg {
    fn name(self) -> &'static str {
        match self {
            SuiteArg::Group => "group",
            SuiteArg::Recurrence => "recurrence",
            SuiteArg::Moments => "moments",
            SuiteArg::Orthogonality => "orthogonality",
            SuiteArg::Catalan => "catalan",
            SuiteArg::Weight => "weight",
            SuiteArg::All => "all",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GridArg {
    Small,
    Full,
}

enum Failure {
    Usage(String),
    Verification,
    NonConvergence(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::QuadratureNonConvergence { .. } => Failure::NonConvergence(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn parse_rational(s: &str) -> Result<ExactScalar, String> {
    ExactScalar::from_str(s.trim()).map_err(|e| format!("{e} in {s:?}"))
}

fn join(values: &[ExactScalar]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0u8,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(2),
        Err(Failure::NonConvergence(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Seq { b, h, k, terms } => run_seq(b, h, k, terms),
        Command::Transform { input, pipe } => run_transform(&input, &pipe),
        Command::Moments { h, k, n, method } => run_moments(h, k, n, method),
        Command::Paths { n, h, k, list } => run_paths(n, &h, &k, list),
        Command::Verify { suite, grid } => run_verify(suite, grid),
        Command::Weight {
            h,
            k,
            samples,
            quad,
        } => run_weight(h, k, samples, quad),
    }
}

fn run_seq(b: ExactScalar, h: ExactScalar, k: ExactScalar, terms: usize) -> Result<(), Failure> {
    if terms == 0 {
        return Err(Failure::Usage("terms must be at least 1".into()));
    }
    let p = RecParams::new(b, h, k);
    println!("{}", w_generate(&p, terms));
    Ok(())
}

fn run_transform(input: &str, pipe: &str) -> Result<(), Failure> {
    let terms = input
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>, _>>()
        .map_err(Failure::Usage)?;
    let mut seq = UnitSequence::new(terms)?;
    for raw in pipe.split('|') {
        let step = raw.trim();
        let (name, arg) = match step.split_once(':') {
            Some((n, a)) => (n.trim(), Some(a.trim())),
            None => (step, None),
        };
        seq = match (name, arg) {
            ("invert", Some(a)) => {
                invert_interp(&seq, &parse_rational(a).map_err(Failure::Usage)?)
            }
            ("binomial", Some(a)) => {
                binomial_interp(&seq, &parse_rational(a).map_err(Failure::Usage)?)
            }
            ("eta", None) => eta(&seq),
            ("epsilon", None) => epsilon(&seq),
            ("invert" | "binomial", None) => {
                return Err(Failure::Usage(format!(
                    "step {name:?} needs a parameter, as in {name}:2"
                )))
            }
            ("eta" | "epsilon", Some(_)) => {
                return Err(Failure::Usage(format!("step {name:?} takes no parameter")))
            }
            _ => return Err(Failure::Usage(format!("unknown transform step {step:?}"))),
        };
    }
    println!("{seq}");
    Ok(())
}

fn run_moments(h: ExactScalar, k: ExactScalar, n: usize, method: Method) -> Result<(), Failure> {
    let req = MomentRequest::new(h.clone(), k.clone(), n)?;
    if method == Method::All {
        let mut rows: Vec<(&str, Option<Vec<ExactScalar>>)> = mu_all_routes(&req)
            .into_iter()
            .map(|(name, values)| (name, Some(values)))
            .collect();
        let by_paths = if n <= DEFAULT_PATH_BOUND {
            Some(
                (0..=n)
                    .map(|m| mu_paths(m, &h, &k, DEFAULT_PATH_BOUND).expect("within bound"))
                    .collect(),
            )
        } else {
            None
        };
        rows.push(("paths", by_paths));
        let reference = rows[0].1.clone().expect("first route always runs");
        let mut all_agree = true;
        for (name, values) in &rows {
            match values {
                Some(v) => {
                    let agrees = *v == reference;
                    all_agree &= agrees;
                    let verdict = if agrees { "AGREE" } else { "DISAGREE" };
                    println!("{name}\t{}\t{verdict}", join(v));
                }
                None => println!("{name}\t-\tSKIPPED"),
            }
        }
        if !all_agree {
            return Err(Failure::Verification);
        }
        return Ok(());
    }
    let values: Vec<ExactScalar> = match method {
        Method::Gf => mu_gf_series(&req),
        Method::Cfrac => mu_cfrac(&req, n / 2 + 1)?,
        Method::Closed => (0..=n)
            .map(|m| mu_closed(m, &h, &k))
            .collect::<Result<_, _>>()?,
        Method::Recur => mu_recur(&req),
        Method::Lagrange => (0..=n)
            .map(|m| mu_lagrange(m, &h, &k))
            .collect::<Result<_, _>>()?,
        Method::Paths => (0..=n)
            .map(|m| mu_paths(m, &h, &k, DEFAULT_PATH_BOUND))
            .collect::<Result<_, _>>()?,
        Method::All => unreachable!("handled above"),
    };
    println!("{}", join(&values));
    Ok(())
}

fn monomial(path: &MotzkinPath) -> String {
    let mut parts = Vec::new();
    match path.east_count() {
        0 => {}
        1 => parts.push("h".to_string()),
        e => parts.push(format!("h^{e}")),
    }
    match path.fall_count() {
        0 => {}
        1 => parts.push("k".to_string()),
        s => parts.push(format!("k^{s}")),
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn run_paths(n: usize, h: &ExactScalar, k: &ExactScalar, list: bool) -> Result<(), Failure> {
    let paths = enumerate_paths(n, DEFAULT_PATH_BOUND)?;
    if list {
        for path in &paths {
            println!("{path}\t{}\t{}", monomial(path), path.weight(h, k));
        }
    }
    println!("count\t{}", paths.len());
    let total: ExactScalar = paths.iter().map(|p| p.weight(h, k)).sum();
    println!("total\t{total}");
    Ok(())
}

fn run_verify(suite: SuiteArg, grid: GridArg) -> Result<(), Failure> {
    let grid = match grid {
        GridArg::Small => Grid::Small,
        GridArg::Full => Grid::Full,
    };
    let reports = match suite {
        SuiteArg::All => verify::all_suites(grid),
        one => vec![verify::suite_by_name(one.name(), grid).expect("known suite name")],
    };
    let mut pass = 0;
    let mut fail = 0;
    for report in &reports {
        println!("suite {}", report.suite);
        for check in &report.checks {
            println!("  {}: {} pass, {} fail", check.name, check.pass, check.fail);
        }
        pass += report.passed();
        fail += report.failed();
    }
    println!("overall: {pass} pass, {fail} fail");
    if fail > 0 {
        return Err(Failure::Verification);
    }
    Ok(())
}

fn run_weight(h: f64, k: f64, samples: usize, quad: Option<usize>) -> Result<(), Failure> {
    let spec = WeightSpec::new(h, k)?;
    print!("{}", weight_csv(&spec, samples)?);
    if let Some(n_max) = quad {
        // The exact reference uses the same binary values of h and k that
        // the quadrature integrates, so the comparison has no decimal slop.
        let hq = ExactScalar::from_float(h).expect("validated finite");
        let kq = ExactScalar::from_float(k).expect("validated finite");
        let req = MomentRequest::new(hq, kq, n_max).expect("validated positive");
        let exact = mu_recur(&req);
        println!();
        println!("n,quad,exact,rel_err");
        for (m, value) in exact.iter().enumerate() {
            let q = quad_moment(m, &spec, 1e-10)?;
            let e = value.to_f64().unwrap_or(f64::NAN);
            let rel = (q - e).abs() / e.abs().max(1.0);
            println!("{m},{q:.11e},{e:.11e},{rel:.3e}");
        }
    }
    Ok(())
}
