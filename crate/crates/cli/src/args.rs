use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use evenset_core::EvenSetParity;

#[derive(Debug, Parser)]
#[command(
    name = "evenset",
    version,
    about = "Binary codes of even sets of nodes on nodal surfaces"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze a generator matrix file.
    #[command(subcommand)]
    Code(CodeCommand),
    /// Griesmer bound: minimal length for (k, d) or maximal dimension for (n, d).
    Griesmer(GriesmerArgs),
    /// Exact Euler characteristic for a degree, twist and weight.
    Chi(ChiArgs),
    /// Minimal weight of a nonzero even set.
    Emin(EminArgs),
    /// Certificate for the minimal weight and weight gaps.
    Gaps(GapsArgs),
    /// Constraints on a nodal surface.
    #[command(subcommand)]
    Surface(SurfaceCommand),
    /// Run the built-in verification suite.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Subcommand)]
pub enum CodeCommand {
    /// Length, dimension, minimum distance, weight distribution, parity and dual.
    Analyze {
        file: PathBuf,
        /// Refuse to enumerate codes above this dimension.
        #[arg(long, default_value_t = evenset_core::gf2::DEFAULT_MAX_DIMENSION)]
        max_dimension: usize,
    },
    /// Project the code onto the support of a codeword.
    Project {
        file: PathBuf,
        /// Codeword as a 0/1 string; coordinate 0 is the first character.
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = evenset_core::gf2::DEFAULT_MAX_DIMENSION)]
        max_dimension: usize,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("size").required(true).args(["n", "k"])))]
pub struct GriesmerArgs {
    /// Code length; reports the largest dimension.
    #[arg(long)]
    pub n: Option<u64>,
    /// Code dimension; reports the smallest length.
    #[arg(long)]
    pub k: Option<usize>,
    /// Minimum distance.
    #[arg(long)]
    pub d: u64,
}

#[derive(Debug, Args)]
pub struct ChiArgs {
    #[arg(long)]
    pub degree: i64,
    #[arg(long, allow_negative_numbers = true)]
    pub twist: i64,
    #[arg(long)]
    pub weight: i64,
}

#[derive(Debug, Args)]
pub struct EminArgs {
    #[arg(long)]
    pub degree: i64,
    /// Weakly even sets instead of strictly even ones.
    #[arg(long)]
    pub weak: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ParityArg {
    Strict,
    Weak,
}

impl From<ParityArg> for EvenSetParity {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Strict => EvenSetParity::Strict,
            ParityArg::Weak => EvenSetParity::Weak,
        }
    }
}

#[derive(Debug, Args)]
pub struct GapsArgs {
    #[arg(long)]
    pub degree: i64,
    #[arg(long, value_enum)]
    pub parity: ParityArg,
}

#[derive(Debug, Subcommand)]
pub enum SurfaceCommand {
    /// Betti number, dimension bounds and weight divisibility.
    Bounds {
        #[arg(long)]
        degree: i64,
        #[arg(long)]
        nodes: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Every tabulated value: example codes, bounds, formulas, certificates.
    Paper,
}
