//! `relsim` command-line interface.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use relsim_core::index::HitMode;
use relsim_core::sweep::SweepGrid;
use relsim_core::taxonomy::Granularity;
use relsim_core::tiebreak::TieBreakKind;

/// Relational similarity between word pairs from corpus phrase counts.
#[derive(Debug, Parser)]
#[command(name = "relsim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Corpus index management.
    Index {
        #[command(subcommand)]
        command: IndexCommand,
    },
    /// Compute relation vectors for word pairs and store their raw counts.
    Vectors(VectorsArgs),
    /// Multiple-choice analogy questions.
    Sat {
        #[command(subcommand)]
        command: SatCommand,
    },
    /// Noun-modifier relation classification.
    Nounmod {
        #[command(subcommand)]
        command: NounmodCommand,
    },
}

#[derive(Debug, Subcommand)]
enum IndexCommand {
    /// Build a positional index from a directory of text files or a
    /// `%%`-separated file.
    Build {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
}

/// Settings that determine what a vector cache's counts mean.
#[derive(Debug, Args)]
struct VectorConfig {
    /// Joining-term file: 64 double-quoted terms, one per line.
    #[arg(long)]
    terms: Option<PathBuf>,
    /// Hit semantics: document (matching documents) or occurrence.
    #[arg(long, default_value = "document")]
    mode: HitMode,
}

#[derive(Debug, Args)]
struct VectorsArgs {
    #[arg(long)]
    index: PathBuf,
    /// Cache file; created if missing, reused entries are not recomputed.
    #[arg(long)]
    cache: PathBuf,
    /// Analogy question file(s).
    #[arg(long)]
    questions: Vec<PathBuf>,
    /// Noun-modifier data file(s).
    #[arg(long)]
    nounmod: Vec<PathBuf>,
    /// Plain pair list(s), one x:y per line.
    #[arg(long)]
    pairs: Vec<PathBuf>,
    #[command(flatten)]
    config: VectorConfig,
}

#[derive(Debug, Args)]
struct CacheArgs {
    #[arg(long)]
    cache: PathBuf,
    /// Check the cache was built from this index (and --terms/--mode).
    #[arg(long)]
    index: Option<PathBuf>,
    #[command(flatten)]
    config: VectorConfig,
}

#[derive(Debug, Args)]
struct DecisionArgs {
    /// Margin threshold for a single evaluation.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    threshold: f64,
    /// Sweep thresholds instead, as lo:hi:step (default grid if no value).
    #[arg(long, num_args = 0..=1, allow_negative_numbers = true)]
    sweep: Option<Option<SweepGrid>>,
    /// Write sweep rows here instead of stdout.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Seed for tie-breaking.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// random (seeded) or first (lowest index).
    #[arg(long, default_value = "random")]
    tie_break: TieBreakKind,
}

#[derive(Debug, Subcommand)]
enum SatCommand {
    /// Answer questions at a threshold, or sweep thresholds.
    Solve {
        #[arg(long)]
        questions: PathBuf,
        #[command(flatten)]
        cache: CacheArgs,
        #[command(flatten)]
        decision: DecisionArgs,
    },
    /// Rank every question's correct pair among all correct pairs.
    Rank {
        #[arg(long)]
        questions: PathBuf,
        #[command(flatten)]
        cache: CacheArgs,
        /// Deepest rank to report.
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
}

#[derive(Debug, Subcommand)]
enum NounmodCommand {
    /// Leave-one-out nearest-neighbour evaluation.
    Eval {
        #[arg(long)]
        data: PathBuf,
        #[command(flatten)]
        cache: CacheArgs,
        /// 30 (relation classes) or 5 (groups).
        #[arg(long, default_value = "30")]
        granularity: Granularity,
        #[command(flatten)]
        decision: DecisionArgs,
    },
}

/// Failure classes mapped to exit codes.
#[derive(Debug)]
pub enum Failure {
    Input(anyhow::Error),
    Internal(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.into())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Index {
            command: IndexCommand::Build { corpus, output },
        } => commands::index_build(&corpus, &output),
        Command::Vectors(args) => commands::vectors(args),
        Command::Sat {
            command: SatCommand::Solve { questions, cache, decision },
        } => commands::sat_solve(&questions, cache, decision),
        Command::Sat {
            command: SatCommand::Rank { questions, cache, top },
        } => commands::sat_rank(&questions, cache, top),
        Command::Nounmod {
            command: NounmodCommand::Eval { data, cache, granularity, decision },
        } => commands::nounmod_eval(&data, cache, granularity, decision),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(e)) => {
            eprintln!("internal error: {e:#}");
            ExitCode::from(2)
        }
    }
}
