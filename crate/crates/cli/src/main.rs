//! `preadm`: command-line front end for the `preadm` library.
//!
//! Every command prints one JSON report envelope on stdout. Errors print a
//! single JSON line on stderr. Exit codes: 0 pass, 1 verification failure,
//! 2 input error, 3 resource cap.

mod commands;
mod report;
mod suite;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{CliError, Envelope, Outcome};

#[derive(Parser, Debug)]
#[command(name = "preadm", version, about = "Checks equivalence by preadmissibility on permutation groups")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest group order to materialize (default: $PREADM_ORDER_CAP or 2000000).
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Output format; text is rendered from the JSON report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Leave the wall-clock timing out of the report.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sylow l-subgroup of S_{l^n} as an iterated wreath product.
    Sylow {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        n: u32,
        /// Write the generators as a group file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Checks Core_G(H) = 1 and S(D,H) > 1 for every metacyclic D.
    VerifyEquivalence {
        /// Group file.
        #[arg(long)]
        group: PathBuf,
        /// Generators of H, separated by ';'.
        #[arg(long)]
        subgroup: String,
        /// metacyclic-only or all-subgroups.
        #[arg(long, default_value = "metacyclic-only")]
        scope: String,
        /// Only start from one cyclic subgroup per conjugacy class.
        #[arg(long)]
        conjugacy_reps: bool,
    },
    /// Gassmann equivalence and conjugacy of two subgroups.
    Gassmann {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        h: String,
        #[arg(long)]
        h2: String,
    },
    /// 2-adic computations.
    Padic {
        #[command(subcommand)]
        command: PadicCommand,
    },
    /// Runs every reproducible claim and reports pass/fail per claim.
    PaperSuite {
        /// Only run claims whose id or tags contain this text.
        #[arg(long)]
        filter: Option<String>,
        /// Perturb one check so that the suite must fail.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Subcommand, Debug)]
enum PadicCommand {
    /// 32nd root of m, both factorizations and the realizability comparison.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        m: i128,
        #[arg(long, default_value_t = preadm::padic::DEFAULT_PRECISION)]
        precision: u32,
        /// JSON list of {label, degree, roots_of_unity} for the first field.
        #[arg(long)]
        k_data: Option<PathBuf>,
        /// JSON list of {label, degree, roots_of_unity} for the second field.
        #[arg(long)]
        l_data: Option<PathBuf>,
        /// Exponent e of the abelian quotients.
        #[arg(long, default_value_t = 16)]
        exponent: u64,
        /// Target group as cyclic factor orders, e.g. "16^10" or "16,16,2".
        #[arg(long, default_value = "16^10")]
        target: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let first = e.to_string().lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            return report::fail(&CliError::Usage(first));
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => report::fail(&e),
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    if let Some(jobs) = cli.global.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let cap = cli.global.cap.unwrap_or_else(preadm::group::order_cap_from_env);
    let start = Instant::now();
    let (name, outcome) = match cli.command {
        Command::Sylow { l, n, out } => ("sylow", commands::sylow(l, n, out.as_deref(), cap)?),
        Command::VerifyEquivalence {
            group,
            subgroup,
            scope,
            conjugacy_reps,
        } => (
            "verify-equivalence",
            commands::verify_equivalence(&group, &subgroup, &scope, conjugacy_reps, cap)?,
        ),
        Command::Gassmann { group, h, h2 } => ("gassmann", commands::gassmann(&group, &h, &h2, cap)?),
        Command::Padic {
            command:
                PadicCommand::Verify {
                    m,
                    precision,
                    k_data,
                    l_data,
                    exponent,
                    target,
                },
        } => (
            "padic verify",
            commands::padic_verify(m, precision, k_data.as_deref(), l_data.as_deref(), exponent, &target)?,
        ),
        Command::PaperSuite { filter, inject_fault } => {
            ("paper-suite", suite::run(filter.as_deref(), inject_fault, cap)?)
        }
    };
    let timing = (!cli.global.no_timing).then(|| start.elapsed().as_millis() as u64);
    let Outcome { inputs, result, pass, text } = outcome;
    let envelope = Envelope::new(name, inputs, result, timing);
    let rendered = match cli.global.format {
        Format::Json => envelope.to_json() + "\n",
        Format::Text => text.unwrap_or_else(|| envelope.to_text()),
    };
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(rendered.as_bytes());
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
