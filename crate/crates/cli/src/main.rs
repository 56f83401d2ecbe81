mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Recognise and certify cover-incomparability graphs.
///
/// Exit status: 0 when the graph is recognised (or a check passes), 1 for a
/// rejection or a failed check, 2 for usage, input or internal errors.
#[derive(Debug, Parser)]
#[command(name = "cigraph", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a graph is a cover-incomparability graph.
    Recognize(RecognizeArgs),
    /// Print a poset whose cover-incomparability graph is the input.
    Certify(RecognizeArgs),
    /// Check that a poset document certifies a graph.
    Verify(VerifyArgs),
    /// Decide membership by exhaustive search over labelled posets.
    Oracle(OracleArgs),
    /// Write a generated graph.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Pipeline {
    /// Chordal pipeline, then the cograph pipeline when it also applies.
    Auto,
    Chordal,
    Cograph,
    /// Exhaustive search; small graphs only.
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    EdgeList,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Args)]
pub struct GraphInput {
    /// Graph file, or `-` for standard input.
    pub input: PathBuf,
    /// Input format; defaults to graph6 for `.g6` files, edge list otherwise.
    #[arg(long, value_enum)]
    pub input_format: Option<InputFormat>,
}

#[derive(Debug, Args)]
pub struct OracleLimits {
    /// Largest graph the exhaustive search accepts (at most 7).
    #[arg(long, default_value_t = cigraph::oracle::DEFAULT_ORACLE_MAX_N)]
    pub oracle_max_n: usize,
    /// Threads for the exhaustive search.
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// JSON file memoising exhaustive-search answers.
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RecognizeArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[arg(long, value_enum, default_value_t = Pipeline::Auto)]
    pub pipeline: Pipeline,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Write to this file instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Use maximum cardinality search instead of lexicographic BFS.
    #[arg(long)]
    pub mcs: bool,
    /// Largest graph handed to the exact SAT search in the chordal pipeline.
    #[arg(long, default_value_t = cigraph::exact::DEFAULT_MAX_N)]
    pub exact_max_n: usize,
    #[command(flatten)]
    pub oracle: OracleLimits,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    /// Poset document, in the line format or JSON.
    pub poset: PathBuf,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub graph: GraphInput,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[command(flatten)]
    pub limits: OracleLimits,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenKind {
    /// Path on N vertices.
    Path,
    /// Complete graph on N vertices.
    Complete,
    /// Path on N vertices joined with one hub vertex.
    Fan,
    /// N bowties glued in a row.
    BowtieChain,
    /// Graph of a random poset on N elements.
    RandomCi,
    /// Random chordal cover-incomparability graph on N vertices.
    RandomChordalCi,
    /// Random connected chordal graph on N vertices.
    RandomChordal,
    /// Random cover-incomparability cograph on N vertices.
    RandomCiCograph,
    /// Random connected cograph on N vertices.
    RandomCograph,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    /// Size parameter.
    pub size: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = InputFormat::EdgeList)]
    pub graph_format: InputFormat,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Also write the generating poset as JSON, for kinds that have one.
    #[arg(long)]
    pub poset_out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::EXIT_ERROR)
        }
    }
}
