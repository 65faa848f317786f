use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

use arclab_cli::{
    cmd_analyze, cmd_bound, cmd_conjecture, cmd_cosecants, cmd_hypersurface, cmd_search, load_arc, parse_modulus,
    ConjectureArgs, Report, DEFAULT_BUDGET, DEFAULT_SEED,
};

#[derive(Parser)]
#[command(
    name = "arclab",
    version,
    about = "Extendability certificates for arcs over finite fields"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Emit::Text, global = true)]
    emit: Emit,
    /// Field modulus coefficients, leading first (e.g. 1,2,0,0,2); overrides the file.
    #[arg(long, global = true)]
    modulus: Option<String>,
    /// Worker threads (defaults to all cores).
    #[arg(long, env = "ARCLAB_THREADS", global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Cmd {
    /// Rank and weight-one test for M_n.
    Analyze {
        file: String,
        #[arg(long, default_value_t = 0)]
        n: usize,
    },
    /// Smallest n with a weight-one vector, and the resulting size bound.
    Bound { file: String },
    /// Property W and the co-secants it determines.
    #[command(name = "property-w", alias = "cosecants")]
    PropertyW {
        file: String,
        #[arg(long, default_value_t = 0)]
        n: usize,
    },
    /// Dual hypersurface checks for a (full) arc.
    Hypersurface { file: String },
    /// Exhaustive extension search.
    Search {
        file: String,
        /// Look for one arc of this size; without it, list complete-arc sizes.
        #[arg(long)]
        target: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Weight-one certificates on arcs of size 2k - 3 + n.
    #[command(name = "conjecture-scan")]
    ConjectureScan {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 1)]
        h: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        n: usize,
        /// Random arcs to draw when exhaustive enumeration exceeds the budget.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 5000)]
        budget: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn run(cli: Cli) -> Result<Report> {
    let modulus = cli.modulus.as_deref().map(parse_modulus).transpose()?;
    let m = modulus.as_deref();
    match cli.cmd {
        Cmd::Analyze { file, n } => cmd_analyze(&file, &load_arc(&file, m)?, n),
        Cmd::Bound { file } => cmd_bound(&file, &load_arc(&file, m)?),
        Cmd::PropertyW { file, n } => cmd_cosecants(&file, &load_arc(&file, m)?, n),
        Cmd::Hypersurface { file } => cmd_hypersurface(&file, &load_arc(&file, m)?),
        Cmd::Search { file, target, budget } => cmd_search(&file, &load_arc(&file, m)?, target, budget),
        Cmd::ConjectureScan {
            p,
            h,
            k,
            n,
            samples,
            budget,
            seed,
        } => cmd_conjecture(ConjectureArgs {
            p,
            h,
            k,
            n,
            samples,
            budget,
            seed,
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads.filter(|&t| t > 0) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .expect("thread pool is configured once");
    }
    let emit = cli.emit;
    match run(cli) {
        Ok(report) => {
            match emit {
                Emit::Text => print!("{}", report.text()),
                Emit::Structured => println!("{}", report.to_json()),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
