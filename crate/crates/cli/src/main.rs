use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use strong_atoms::krull::Bounds;
use strong_atoms_cli::commands::{self, Options};
use strong_atoms_cli::{suite, CliError, LoadedSpec, Outcome, EXIT_MISMATCH, EXIT_OK};

#[derive(Parser)]
#[command(name = "strong-atoms", version, about = "Atoms, factorizations and absolute irreducibility in block monoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print the canonical JSON report instead of tables.
    #[arg(long, global = true)]
    machine: bool,
    /// Split factorization searches across threads.
    #[arg(long, global = true)]
    parallel: bool,
    /// Largest family size tried by the existence search.
    #[arg(long, global = true, default_value_t = Bounds::default().support_bound)]
    bound: usize,
    /// Largest power tried by brute-force searches.
    #[arg(long, global = true, default_value_t = Bounds::default().n_max)]
    nmax: u32,
    /// Node budget for every search.
    #[arg(long, global = true, default_value_t = Bounds::default().budget)]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// List the atoms of B(G0) with their absolute-irreducibility verdicts.
    Atoms {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Every factorization of a zero-sum sequence.
    Factor {
        #[arg(long)]
        spec: PathBuf,
        /// Exponent list `1,0,2` or label product `e1*e2^2*-f`.
        #[arg(long)]
        sequence: String,
    },
    /// Length set and elasticity of a zero-sum sequence.
    Lengths {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        sequence: String,
    },
    /// Compare the absolute-irreducibility criteria on every atom.
    Absirred {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Which kinds of irreducible elements exist.
    Classify {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Run the bundled example suite.
    Verify,
}

fn load(path: &PathBuf) -> Result<LoadedSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    LoadedSpec::from_toml(&text).map_err(|e| match e {
        CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let opts = Options {
        bounds: Bounds { support_bound: cli.bound, budget: cli.budget, n_max: cli.nmax },
        parallel: cli.parallel,
    };
    match &cli.command {
        Command::Atoms { spec } => commands::cmd_atoms(&load(spec)?, &opts),
        Command::Factor { spec, sequence } => commands::cmd_factor(&load(spec)?, sequence, &opts),
        Command::Lengths { spec, sequence } => commands::cmd_lengths(&load(spec)?, sequence, &opts),
        Command::Absirred { spec } => commands::cmd_absirred(&load(spec)?, &opts),
        Command::Classify { spec } => commands::cmd_classify(&load(spec)?, &opts),
        Command::Verify => Ok(suite::cmd_verify()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(outcome) => {
            if cli.machine {
                print!("{}", outcome.machine());
            } else {
                print!("{}", outcome.human);
                println!("({} ms)", start.elapsed().as_millis());
            }
            ExitCode::from(if outcome.mismatch { EXIT_MISMATCH } else { EXIT_OK } as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
