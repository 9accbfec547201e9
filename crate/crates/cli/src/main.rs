//! `malcheck` — batch checker for graded anticommutative algebras with a
//! twisting map. Reads algebras as JSON, prints reports as JSON, and signals
//! results through exit codes: 0 all checks pass, 1 a checked property fails,
//! 2 input or usage error.

use clap::{Parser, Subcommand};

mod commands;

use commands::ScanArgs;
use malcheck_core::DEFAULT_VIOLATION_CAP;

#[derive(Parser)]
#[command(
    name = "malcheck",
    version,
    about = "Exact identity checks for graded algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Check selected identities on an algebra file and print a report
    Check {
        /// Algebra file, or "-" for standard input
        file: String,
        /// Identity name, "all", or "premises"; repeat to select several
        #[arg(long = "identity", default_value = "all")]
        identity: Vec<String>,
        /// Fill products below the diagonal by graded antisymmetry first
        #[arg(long)]
        assume_skew: bool,
        /// Cap on violations listed per check
        #[arg(long, default_value_t = DEFAULT_VIOLATION_CAP)]
        max_violations: usize,
    },
    /// Print the structure flags of an algebra file
    Classify {
        /// Algebra file, or "-" for standard input
        file: String,
    },
    /// Twist an algebra by a morphism and print the result
    Twist {
        /// Algebra file, or "-" for standard input
        file: String,
        /// "identity", "diag:a,b,...", or a JSON file with matrix rows
        #[arg(long)]
        map: String,
    },
    /// Generate seeded algebras and compare the three equivalent identities
    Scan {
        /// Dimension of the generated algebras
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// Number of seeded trials
        #[arg(long, default_value_t = 200)]
        trials: u64,
        /// Base seed; trial t uses seed + t
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Parity bits, one 0/1 per basis vector (default: all even)
        #[arg(long)]
        parities: Option<String>,
        /// Scalar applied by the twisting map
        #[arg(long, default_value = "2")]
        lambda: String,
        /// Scan the built-in catalog and its twists instead of seeded trials
        #[arg(long)]
        catalog: bool,
        /// Worker thread count (default: one per CPU)
        #[arg(long)]
        workers: Option<usize>,
    },
    /// List or emit the built-in example algebras
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Print the available keys, one per line
    List,
    /// Print one catalog algebra as an algebra file
    Emit { key: String },
}

fn run(command: Commands) -> Result<i32, String> {
    match command {
        Commands::Check {
            file,
            identity,
            assume_skew,
            max_violations,
        } => commands::cmd_check(&file, &identity, assume_skew, max_violations),
        Commands::Classify { file } => commands::cmd_classify(&file),
        Commands::Twist { file, map } => commands::cmd_twist(&file, &map),
        Commands::Scan {
            dim,
            trials,
            seed,
            parities,
            lambda,
            catalog,
            workers,
        } => commands::cmd_scan(&ScanArgs {
            dim,
            trials,
            seed,
            parities,
            lambda,
            catalog,
            workers,
        }),
        Commands::Catalog { action } => match action {
            CatalogAction::List => Ok(commands::cmd_catalog_list()),
            CatalogAction::Emit { key } => commands::cmd_catalog_emit(&key),
        },
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            eprintln!("error: {message}");
            std::process::exit(2);
        }
    }
}
