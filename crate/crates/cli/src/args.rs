use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "circdom", version, about = "Dominating sets in circulant graphs C_n(S)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build and verify a dominating set, emitting a JSON report.
    Construct(ConstructArgs),
    /// Run a numerical audit over a parameter grid, one JSON line per point.
    Audit(AuditArgs),
    /// Time constructions over a grid and write CSV rows.
    Bench(BenchArgs),
    /// Exact domination number by exhaustive search (n <= 24).
    Gamma(GammaArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["chords_file", "random_chords"])))]
pub struct ChordArgs {
    /// Number of vertices.
    #[arg(long)]
    pub n: u64,
    /// Chord file: one residue per line, '#' comments.
    #[arg(long)]
    pub chords_file: Option<PathBuf>,
    /// Draw this many distinct chords at random (requires --seed).
    #[arg(long)]
    pub random_chords: Option<usize>,
    /// Seed for random chords and for the randomized method.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Close the random chord set under negation.
    #[arg(long, requires = "random_chords")]
    pub symmetric: bool,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ConstantArgs {
    /// Scale of L for the universal 2-dominating set.
    #[arg(long, default_value_t = 1.0)]
    pub c: f64,
    /// Chord-count hypothesis constant of the universal 2-dominating set.
    #[arg(long = "big-c", default_value_t = 1.0)]
    pub big_c: f64,
    /// Prime-count check constant of the universal 2-dominating set.
    #[arg(long, default_value_t = 1.0)]
    pub c0: f64,
    /// Size budget multiplier of the almost-dominating set.
    #[arg(long, default_value_t = 1.0)]
    pub psi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Paper,
    Greedy,
    Random,
    Universal2,
    AlmostW,
}

impl From<MethodArg> for circdom_core::Method {
    fn from(m: MethodArg) -> Self {
        use circdom_core::Method;
        match m {
            MethodArg::Paper => Method::Paper,
            MethodArg::Greedy => Method::Greedy,
            MethodArg::Random => Method::Random,
            MethodArg::Universal2 => Method::Universal2,
            MethodArg::AlmostW => Method::AlmostW,
        }
    }
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub chords: ChordArgs,
    #[arg(long, value_enum)]
    pub method: MethodArg,
    /// Verification radius; defaults to 2 for universal2 and 1 otherwise.
    #[arg(long)]
    pub r: Option<u32>,
    /// Chord-count threshold for universal2 / almost-w (defaults to |S|).
    #[arg(long)]
    pub k_threshold: Option<usize>,
    #[command(flatten)]
    pub constants: ConstantArgs,
    /// Output path (default stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Emit null wall times so output is byte-reproducible.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Card,
    Expsum,
    Exceptional,
    Nu,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(long, value_enum)]
    pub check: Check,
    #[arg(long, value_delimiter = ',', required = true)]
    pub n_list: Vec<u64>,
    /// Window parameters L (card, expsum).
    #[arg(long, value_delimiter = ',')]
    pub l_list: Vec<u64>,
    /// Chord counts (exceptional, nu).
    #[arg(long, value_delimiter = ',')]
    pub k_list: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest n the exponential-sum scan accepts.
    #[arg(long, default_value_t = circdom_core::expsum::DEFAULT_AUDIT_CAP)]
    pub audit_cap: u64,
    #[command(flatten)]
    pub constants: ConstantArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub n_list: Vec<u64>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub k_list: Vec<usize>,
    #[arg(long, value_delimiter = ',', value_enum, default_value = "paper")]
    pub methods: Vec<MethodArg>,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub seeds: Vec<u64>,
    /// CSV path; rows are appended when the file already exists.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Grid points run concurrently.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[command(flatten)]
    pub constants: ConstantArgs,
    /// Leave the wall_ms column empty so output is byte-reproducible.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Args)]
pub struct GammaArgs {
    #[command(flatten)]
    pub chords: ChordArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
