//! Command-line front end.
//!
//! Exit codes: 0 success or universal, 1 internal error or failed verification,
//! 2 rejected input, 3 not universal.

mod commands;
mod config;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{family_arg, partition_arg, CmdResult, RepnRequest, EXIT_INTERNAL, EXIT_REJECTED};
use config::{CliConfig, OutputFormat, DEFAULT_PRECISION, DEFAULT_SEED, DEFAULT_TIME_BUDGET_MS, DEFAULT_TOLERANCE};
use exuniv::lr::DEFAULT_LR_CAP;
use exuniv::tableau::DEFAULT_ENUMERATION_CAP;

#[derive(Parser, Debug)]
#[command(name = "exuniv", version, about = "Partitions, tableaux and exchange-only universality")]
struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Numerical tolerance, in (0, 1e-3).
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    /// Largest shape, in cells, for tableau enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_CAP)]
    enumeration_cap: usize,
    /// Largest total size, in cells, for LR products.
    #[arg(long, global = true, default_value_t = DEFAULT_LR_CAP)]
    lr_cap: usize,
    /// Time budget for the minimal-family search.
    #[arg(long, global = true, default_value_t = DEFAULT_TIME_BUDGET_MS)]
    time_budget_ms: u64,
    /// Decimals in printed matrices and amplitudes.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    precision: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of standard tableaux.
    Dim { partition: String },
    /// Conjugate partition.
    Conj { partition: String },
    /// Trivial, hook or proper; self-conjugacy and diagonal length.
    Classify { partition: String },
    /// LR coefficient, or the full expansion when ν is omitted.
    Lr { lambda: String, mu: String, nu: Option<String> },
    /// Partitions with at most d rows in the product of a family.
    ProductSet {
        #[arg(long)]
        family: String,
        #[arg(long)]
        d: usize,
    },
    /// Universality verdict with its rule trace.
    Universal {
        #[arg(long)]
        family: String,
        /// Defaults to the largest member row count.
        #[arg(long)]
        d: Option<usize>,
    },
    /// Minimal universal families of self-conjugate partitions.
    MinimalFamilies {
        #[arg(long)]
        d: usize,
    },
    /// Largest universal encoding per size and row bound.
    EfficiencyTable {
        #[arg(long, default_value_t = 13)]
        n_max: usize,
        #[arg(long, value_delimiter = ',', default_values_t = vec![2, 3, 4])]
        d: Vec<usize>,
    },
    /// Orthogonal-form matrices.
    Repn {
        partition: String,
        /// Permutation in cycle notation, e.g. "(1 3)(2 4)".
        #[arg(long)]
        perm: Option<String>,
        /// Jucys–Murphy element X_k.
        #[arg(long)]
        jm: Option<usize>,
        /// Alternating intertwiner M.
        #[arg(long)]
        intertwiner: bool,
    },
    /// Tableau basis in terms of two-state kets.
    BasisMap { partition: String },
    /// Structural and cross-validation checks.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Partition that makes a family universal when appended.
    Ancilla {
        #[arg(long)]
        family: String,
        #[arg(long)]
        d: usize,
    },
    /// Part-wise sum of a family and its verdict.
    Cartan {
        #[arg(long)]
        family: String,
    },
}

fn dispatch(cmd: &Command, cfg: &CliConfig) -> CmdResult {
    match cmd {
        Command::Dim { partition } => commands::dim(&partition_arg(partition)?),
        Command::Conj { partition } => commands::conj(&partition_arg(partition)?),
        Command::Classify { partition } => commands::classify(&partition_arg(partition)?),
        Command::Lr { lambda, mu, nu } => {
            let nu = nu.as_deref().map(partition_arg).transpose()?;
            commands::lr(&partition_arg(lambda)?, &partition_arg(mu)?, nu.as_ref(), cfg)
        }
        Command::ProductSet { family, d } => commands::product_set_cmd(&family_arg(family, Some(*d))?, cfg),
        Command::Universal { family, d } => commands::universal(&family_arg(family, *d)?),
        Command::MinimalFamilies { d } => commands::minimal_families(*d, cfg),
        Command::EfficiencyTable { n_max, d } => commands::efficiency(*n_max, d),
        Command::Repn { partition, perm, jm, intertwiner } => {
            let req = RepnRequest { perm: perm.as_deref(), jm: *jm, intertwiner: *intertwiner };
            commands::repn(&partition_arg(partition)?, &req, cfg)
        }
        Command::BasisMap { partition } => commands::basis_map(&partition_arg(partition)?, cfg),
        Command::Verify { max_n } => verify::verify(*max_n, cfg),
        Command::Ancilla { family, d } => commands::ancilla(&family_arg(family, Some(*d))?),
        Command::Cartan { family } => commands::cartan(&family_arg(family, None)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = CliConfig {
        tolerance: cli.tolerance,
        enumeration_cap: cli.enumeration_cap,
        lr_cap: cli.lr_cap,
        output: if cli.json { OutputFormat::Json } else { OutputFormat::Text },
        time_budget_ms: cli.time_budget_ms,
        seed: cli.seed,
        precision: cli.precision,
    };
    if let Err(msg) = cfg.validate() {
        eprintln!("error: {msg}");
        return ExitCode::from(EXIT_REJECTED as u8);
    }
    match dispatch(&cli.command, &cfg) {
        Ok(out) => {
            if cfg.json() {
                match serde_json::to_string_pretty(&out.json) {
                    Ok(s) => println!("{s}"),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(EXIT_INTERNAL as u8);
                    }
                }
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code() as u8)
        }
    }
}
