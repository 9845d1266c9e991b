//! `quasibraid`: command-line front end to the exact verification kernel.
//!
//! Exit codes: 0 when every identity holds, 1 when one fails, 2 for
//! unreadable or malformed input, 3 when a precondition is violated.

mod ambient;
mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use quasibraid::report::Report;
use quasibraid::Error;

#[derive(Parser)]
#[command(name = "quasibraid", version, about = "Exact checks for Hopf quasigroups and their Yetter-Drinfeld quasimodules")]
struct Cli {
    /// Also write the report as JSON to this file.
    #[arg(long, global = true, value_name = "OUT")]
    json: Option<PathBuf>,

    /// Refuse ambients of larger dimension.
    #[arg(long, global = true, default_value_t = 16, value_name = "N")]
    max_dim: usize,

    /// Seed for sampled morphisms; overrides a config's own seed.
    #[arg(long, global = true, value_name = "K")]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Input {
    /// A loop file or structure-constant file.
    path: Option<PathBuf>,

    /// A built-in loop: cyclic(n), s3 or octonion16.
    #[arg(long, conflicts_with = "path")]
    builtin: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a loop table and classify it.
    CheckLoop(Input),

    /// Check the Hopf quasigroup axioms, or with --dual the coquasigroup axioms
    /// of the dual.
    CheckHopf {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        dual: bool,
    },

    /// Check that a map is a Hopf quasigroup automorphism.
    CheckAut {
        #[command(flatten)]
        input: Input,
        /// id, inner:K, perm:LIST or matrix:FILE
        #[arg(long, value_name = "SPEC")]
        map: String,
    },

    /// Build the canonical (α, β)-module on H and check it, or check an
    /// existing module file with --module.
    BuildYdq {
        #[command(flatten)]
        input: Input,
        /// id, inner:K, perm:LIST or matrix:FILE
        #[arg(long, default_value = "id", value_name = "SPEC")]
        alpha: String,
        #[arg(long, default_value = "id", value_name = "SPEC")]
        beta: String,
        /// Write the module to this file.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Check this module file instead of building one.
        #[arg(long, value_name = "FILE", conflicts_with_all = ["path", "builtin", "out"])]
        module: Option<PathBuf>,
        /// Also check the untwisted quasi-comodule conditions.
        #[arg(long)]
        strict: bool,
    },

    /// Run the braided crossed category suites described by a config file.
    VerifyTcategory {
        config: PathBuf,
    },
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let max_dim = cli.max_dim;
    match &cli.command {
        Command::CheckLoop(input) => commands::check_loop(input.builtin.as_deref(), input.path.as_deref()),
        Command::CheckHopf { input, dual } => {
            commands::check_hopf(input.builtin.as_deref(), input.path.as_deref(), *dual, max_dim)
        }
        Command::CheckAut { input, map } => {
            commands::check_aut(input.builtin.as_deref(), input.path.as_deref(), map, max_dim)
        }
        Command::BuildYdq {
            input,
            alpha,
            beta,
            out,
            module,
            strict,
        } => match module {
            Some(file) => commands::check_module(file, *strict, max_dim),
            None => commands::build_ydq(&commands::BuildYdq {
                builtin: input.builtin.as_deref(),
                path: input.path.as_deref(),
                alpha,
                beta,
                out: out.as_deref(),
                strict: *strict,
                max_dim,
            }),
        },
        Command::VerifyTcategory { config } => commands::verify_tcategory(config, max_dim, cli.seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if e.is_precondition() { 3 } else { 2 });
        }
    };
    println!("{report}");
    if let Some(out) = &cli.json {
        let mut text = report.to_json();
        text.push('\n');
        if let Err(e) = std::fs::write(out, text) {
            eprintln!("error: {}: {e}", out.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(if report.passed { 0 } else { 1 })
}
