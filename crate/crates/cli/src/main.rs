use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use forcing_lab::exponent::{AnalyticConstants, Rational};
use forcing_lab::group::DEFAULT_ORDER_CAP;
use forcing_lab::Error;

mod checks;
mod commands;

/// Forcing sequences of finite p-groups and exact saving exponents.
#[derive(Parser, Debug)]
#[command(name = "forcing-lab", version)]
struct Cli {
    /// Largest group order that will be enumerated.
    #[arg(long, global = true, env = "FORCING_LAB_CAP", default_value_t = DEFAULT_ORDER_CAP)]
    cap: usize,

    /// Machine-readable canonical JSON on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Suppress the timestamped header line.
    #[arg(long, global = true)]
    no_header: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the built-in groups with order, rank and p-class.
    Catalog,
    /// Profile a group: invariants, series, conjugacy classes.
    Analyze { spec: String },
    /// Build, verify and write a forcing-sequence certificate.
    ForcingSeq {
        spec: String,
        /// Output file, conventionally `*.fcert.json`.
        #[arg(long)]
        out: PathBuf,
        /// Also attach the exponent report for this ell.
        #[arg(long)]
        ell: Option<u64>,
        #[command(flatten)]
        consts: ConstArgs,
    },
    /// Exact saving exponent of a nilpotent group.
    Delta {
        spec: String,
        #[arg(long)]
        ell: u64,
        #[command(flatten)]
        consts: ConstArgs,
    },
    /// Re-verify a certificate file from scratch.
    Verify { path: PathBuf },
    /// Run the inequality grids and structural sweeps.
    PaperChecks {
        #[command(flatten)]
        consts: ConstArgs,
    },
}

#[derive(Args, Debug, Clone)]
struct ConstArgs {
    #[arg(long, default_value = "35")]
    beta: String,
    #[arg(long, default_value = "19")]
    gamma: String,
    #[arg(long = "eps-delta", default_value = "0")]
    eps_delta: String,
    /// JSON object mapping primes to base exponents, e.g. {"2": "1/100"}.
    #[arg(long = "base-override")]
    base_override: Option<PathBuf>,
}

impl ConstArgs {
    fn constants(&self) -> forcing_lab::Result<AnalyticConstants> {
        AnalyticConstants::new(
            self.beta.parse::<Rational>()?,
            self.gamma.parse::<Rational>()?,
            self.eps_delta.parse::<Rational>()?,
        )
    }

    fn overrides(&self) -> forcing_lab::Result<forcing_lab::exponent::BaseOverrides> {
        match &self.base_override {
            None => Ok(Default::default()),
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
                forcing_lab::exponent::parse_base_overrides(&text)
            }
        }
    }
}

/// Process outcome: success, a failed check, or an error.
pub enum Failure {
    /// Verification or a check reported failures; already printed.
    Check,
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

pub const EXIT_CHECK_FAILED: u8 = 7;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CyclicGroup { .. } => 2,
        Error::QuaternionGroup { .. } => 3,
        Error::NotAPGroup { .. } => 4,
        Error::SylowHypothesisViolated { .. } => 5,
        Error::EvenPrimeBase => 6,
        Error::DigestMismatch { .. }
        | Error::SchemaVersionUnknown(_)
        | Error::Malformed { .. }
        | Error::MalformedCertificate(_) => EXIT_CHECK_FAILED,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !cli.no_header && !cli.json {
        println!(
            "# forcing-lab {} {}",
            env!("CARGO_PKG_VERSION"),
            chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true)
        );
    }
    let out = commands::Output { json: cli.json };
    let result = match &cli.command {
        Command::Catalog => commands::catalog(&out, cli.cap),
        Command::Analyze { spec } => commands::analyze(&out, spec, cli.cap),
        Command::ForcingSeq {
            spec,
            out: path,
            ell,
            consts,
        } => commands::forcing_seq(&out, spec, path, *ell, consts, cli.cap),
        Command::Delta { spec, ell, consts } => commands::delta(&out, spec, *ell, consts, cli.cap),
        Command::Verify { path } => commands::verify(&out, path, cli.cap),
        Command::PaperChecks { consts } => checks::run(&out, consts),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(EXIT_CHECK_FAILED),
        Err(Failure::Error(e)) => {
            let code = exit_code(&e);
            if cli.json {
                let v = serde_json::json!({
                    "error": { "kind": e.kind(), "message": e.to_string(), "exit_code": code }
                });
                eprintln!("{v}");
            } else {
                eprintln!("error[{}]: {e}", e.kind());
            }
            ExitCode::from(code)
        }
    }
}
