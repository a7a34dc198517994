use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Exact Schubert calculus on Grassmannians G(k,n).
///
/// Partitions are comma-separated with trailing zeros optional; symbols are
/// comma-separated 1-based indices. Set SCHUBERT_THREADS to bound the worker
/// pool used by the exhaustive scans.
#[derive(Debug, Parser)]
#[command(name = "schubert", version)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Report elapsed_ms as 0, making search output byte-reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    /// Dimension partition of the Schubert variety.
    Dim,
    /// Codimension partition, the index of its class.
    Codim,
}

#[derive(Debug, Args)]
pub struct Space {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert between a Schubert symbol and its partitions, with the dual.
    Convert {
        #[command(flatten)]
        space: Space,
        #[arg(long, value_delimiter = ',', conflicts_with = "partition", required_unless_present = "partition")]
        symbol: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        partition: Option<Vec<usize>>,
        /// How to read --partition.
        #[arg(long, value_enum, default_value_t = Convention::Dim)]
        convention: Convention,
    },
    /// Draw a Young diagram in the (k+1) x (n-k) box.
    Render {
        #[command(flatten)]
        space: Space,
        #[arg(long, value_delimiter = ',')]
        partition: Vec<usize>,
        /// Second diagram drawn with '*' on top of the first.
        #[arg(long, value_delimiter = ',')]
        overlay: Option<Vec<usize>>,
    },
    /// Multiply two Schubert classes given by codimension partitions.
    Product {
        #[command(flatten)]
        space: Space,
        #[arg(long, value_delimiter = ',')]
        a: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        b: Vec<usize>,
    },
    /// Decide whether [X_I]·[X_J] vanishes.
    Vanishes {
        #[command(flatten)]
        space: Space,
        #[arg(long, value_delimiter = ',', requires = "symbol_b", required_unless_present = "a")]
        symbol_a: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',', requires = "symbol_a")]
        symbol_b: Option<Vec<usize>>,
        /// Codimension partition instead of --symbol-a.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["symbol_a", "symbol_b"], requires = "b")]
        a: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',', requires = "a")]
        b: Option<Vec<usize>>,
        /// Also compute the full product and compare.
        #[arg(long)]
        cross_validate: bool,
    },
    /// Zero-product pairs, md-pairs and egd of G(k,n).
    Mdpairs {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        cross_validate: bool,
        /// List zero pairs up to this codimension sum (default egd+1).
        #[arg(long)]
        max_codim_sum: Option<usize>,
    },
    /// Effective good divisibility of G(k,n).
    Egd {
        #[command(flatten)]
        space: Space,
        #[arg(long)]
        cross_validate: bool,
    },
    /// Exhaustively check a classification claim.
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        /// Single Grassmannian; needs --n as well.
        #[arg(long, requires = "n", conflicts_with = "max_n")]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        n: Option<usize>,
        /// Sweep every G(k,n) with n up to this bound (default 10, or 8 with --cross-validate).
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        cross_validate: bool,
    },
    /// Can a nonconstant morphism G(l,n) -> G(k,n) exist?
    Classify {
        #[arg(long, required_unless_present = "table", requires = "k")]
        l: Option<usize>,
        #[arg(long, requires = "l")]
        k: Option<usize>,
        #[arg(long)]
        n: usize,
        /// Classify every (l,k) for this n.
        #[arg(long, conflicts_with_all = ["l", "k"])]
        table: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Claim {
    /// Unique zero pair with codim sum <= n+1 is {hyperplane, point}.
    ThmMd,
    /// Containment criterion for the cohomology-class products.
    PropComp,
    /// egd(G(k,n)) = n for all n <= max_n.
    EgdSweep,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let msg = e.to_string();
            let msg = msg.strip_prefix("error: ").unwrap_or(&msg);
            eprint!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    commands::run(&cli)
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("SCHUBERT_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("SCHUBERT_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}
