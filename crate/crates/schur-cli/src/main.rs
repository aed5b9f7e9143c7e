//! `schur` — exact computations in affine Schur algebras from the shell.
//!
//! Every invocation fixes an algebra by `--n`, `--r`, and `--field`, then
//! runs one subcommand: evaluate a product, canonicalize a pair of tuples,
//! expand a central element, compute a Laurent or rewrite normal form,
//! print the identity, or run a deterministic property suite.
//!
//! Exit codes: 0 success, 1 usage, 2 input parse error, 3 domain error,
//! 4 property or oracle mismatch.

mod commands;
mod suites;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use schur_core::{AlgebraContext, BigRational, FieldDescriptor, Fp, SchurError};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "schur",
    version,
    about = "Exact computations in affine Schur algebras",
    disable_help_subcommand = true
)]
struct Cli {
    /// Top-tuple entries take values in 1..=n (required).
    #[arg(long, global = true)]
    n: Option<i64>,

    /// Tuple length: the algebra acts on r-tuples (required).
    #[arg(long, global = true)]
    r: Option<usize>,

    /// Coefficient field: "rational" or "gf:p" for a prime p.
    #[arg(long, global = true, default_value = "rational")]
    field: String,

    /// Seed for the deterministic random generator used by suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Number of random cases per suite check.
    #[arg(long, global = true, default_value_t = 500)]
    cases: u64,

    /// Bottom entries are sampled and enumerated in [1-bound, n+bound];
    /// defaults to 3n.
    #[arg(long, global = true)]
    bound: Option<i64>,

    /// Output form for computed values: "text" or "json".
    #[arg(long, global = true, default_value = "text")]
    output: String,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Multiply two elements (expression text, JSON, or "-" for stdin).
    Mul {
        a: String,
        b: String,
        /// Also run the independent counting oracle and fail on mismatch.
        #[arg(long)]
        oracle: bool,
    },
    /// Canonicalize a pair of comma-separated integer r-tuples.
    Canon { top: String, bottom: String },
    /// Expand the central element attached to a shift tuple.
    Center {
        /// Comma-separated shift r-tuple, e.g. "1,0".
        #[arg(long)]
        eps: String,
    },
    /// Laurent normal form of an element of the all-ones corner.
    Nf { expr: String },
    /// Rewrite one basis symbol over the diagonal subalgebra of its top.
    Rewrite { symbol: String },
    /// Print the identity element of the configured algebra.
    One,
    /// Run a property suite: associativity | oracle | center | laurent |
    /// schur-weyl | rewrite | cosets | all.
    Suite { name: String },
}

/// A failed invocation: what to print on stderr and the process exit code.
pub(crate) struct Failure {
    pub code: u8,
    pub message: String,
}

pub(crate) fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

pub(crate) fn mismatch(message: impl Into<String>) -> Failure {
    Failure {
        code: 4,
        message: message.into(),
    }
}

impl From<SchurError> for Failure {
    fn from(err: SchurError) -> Self {
        let code = match &err {
            SchurError::Syntax { .. }
            | SchurError::Json(_)
            | SchurError::InvalidCoefficient(_) => 2,
            _ => 3,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

/// Validated invocation settings shared by every subcommand.
pub(crate) struct Settings {
    pub n: i64,
    pub r: usize,
    pub seed: u64,
    pub cases: u64,
    pub bound: i64,
    /// Canonical flag text for reproduction lines: "rational" or "gf:p".
    pub field_text: String,
    pub json: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let n = cli.n.ok_or_else(|| usage("--n is required"))?;
    let r = cli.r.ok_or_else(|| usage("--r is required"))?;
    if n < 1 {
        return Err(usage("--n must be a positive integer"));
    }
    if r < 1 {
        return Err(usage("--r must be a positive integer"));
    }
    if cli.cases < 1 {
        return Err(usage("--cases must be a positive integer"));
    }
    let bound = cli.bound.unwrap_or(3 * n);
    if bound < 0 {
        return Err(usage("--bound must be nonnegative"));
    }
    let field = FieldDescriptor::parse(&cli.field).map_err(|err| usage(err.to_string()))?;
    let json = match cli.output.as_str() {
        "text" => false,
        "json" => true,
        other => {
            return Err(usage(format!(
                "unknown output mode \"{other}\" (expected \"text\" or \"json\")"
            )))
        }
    };
    let field_text = match field {
        FieldDescriptor::Rational => "rational".to_string(),
        FieldDescriptor::Gf(p) => format!("gf:{p}"),
    };
    let settings = Settings {
        n,
        r,
        seed: cli.seed,
        cases: cli.cases,
        bound,
        field_text,
        json,
    };
    match field {
        FieldDescriptor::Rational => {
            let ctx = AlgebraContext::<BigRational>::rational(n, r)?;
            dispatch(&ctx, &settings, cli.cmd)
        }
        FieldDescriptor::Gf(p) => {
            let ctx = AlgebraContext::<Fp>::gf(n, r, p)?;
            dispatch(&ctx, &settings, cli.cmd)
        }
    }
}

fn dispatch<F>(ctx: &AlgebraContext<F>, settings: &Settings, cmd: Cmd) -> Result<(), Failure>
where
    F: schur_core::CoeffField,
    F::Config: schur_core::DescribeField,
{
    let payload = match cmd {
        Cmd::Mul { a, b, oracle } => commands::cmd_mul(ctx, settings, &a, &b, oracle)?,
        Cmd::Canon { top, bottom } => commands::cmd_canon(ctx, settings, &top, &bottom)?,
        Cmd::Center { eps } => commands::cmd_center(ctx, settings, &eps)?,
        Cmd::Nf { expr } => commands::cmd_nf(ctx, settings, &expr)?,
        Cmd::Rewrite { symbol } => commands::cmd_rewrite(ctx, settings, &symbol)?,
        Cmd::One => commands::cmd_one(ctx, settings),
        Cmd::Suite { name } => return suites::cmd_suite(ctx, settings, &name),
    };
    println!("{payload}");
    Ok(())
}
