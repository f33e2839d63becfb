use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use capbound_core::oracle::DEFAULT_BUDGET;
use capbound_core::Tolerances;

#[derive(Debug, Parser)]
#[command(name = "capbound", version, about = "Eigenvalue bounds on k-independence numbers and Shannon capacity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute bounds for each input, power and method.
    Bounds(BoundsArgs),
    /// Regenerate a reference table and diff it against the stored values.
    Table(TableArgs),
    /// Sandwich the capacity of G^k between alpha_k and the upper bounds.
    Verdict(VerdictArgs),
    /// Write the Lovasz theta SDP of G^k in SDPA sparse format.
    ExportTheta(ExportArgs),
    /// Read an SDPA solver report and check it against alpha_k and the ratio bound.
    ImportTheta(ImportArgs),
    /// Print the distinct eigenvalues and multiplicities of each input.
    Spectrum(SpectrumArgs),
}

/// Graph or spectrum sources; processed in the order catalog, g6, fixture,
/// srg, spectrum, and in command-line order within each kind.
#[derive(Debug, Clone, Default, Args)]
pub struct InputArgs {
    /// Built-in family, e.g. `cycle:15`, `kneser:7,3`, `petersen`.
    #[arg(long, value_name = "NAME[:P,..]")]
    pub catalog: Vec<String>,
    /// graph6 file; every graph in it is an input.
    #[arg(long, value_name = "FILE")]
    pub g6: Vec<PathBuf>,
    /// Named graph from the fixture manifest.
    #[arg(long, value_name = "NAME")]
    pub fixture: Vec<String>,
    /// Strongly regular parameters; bounds use the spectrum only.
    #[arg(long, value_name = "N,K,A,C")]
    pub srg: Vec<String>,
    /// Spectrum CSV with lines `theta,mult`.
    #[arg(long, value_name = "FILE")]
    pub spectrum: Vec<PathBuf>,
    /// Fixture directory [default: $CAPBOUND_FIXTURES, else the bundled fixtures].
    #[arg(long, value_name = "DIR")]
    pub fixtures: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct TolArgs {
    /// Eigensolver tolerance, relative to the spectral radius.
    #[arg(long, default_value_t = Tolerances::default().eig)]
    pub tol: f64,
    /// Eigenvalue clustering gap.
    #[arg(long, default_value_t = Tolerances::default().cluster)]
    pub cluster_tol: f64,
    /// Simplex tolerance.
    #[arg(long, default_value_t = Tolerances::default().lp)]
    pub lp_tol: f64,
}

impl TolArgs {
    pub fn tolerances(&self) -> Tolerances {
        Tolerances { eig: self.tol, cluster: self.cluster_tol, lp: self.lp_tol, ..Tolerances::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum MethodArg {
    /// Minor-polynomial LP.
    Ratio,
    /// Shannon polynomial, greedy search.
    Rank,
    /// Shannon polynomial, exhaustive search.
    RankExhaustive,
    /// Closed forms H1, H2, H3.
    #[value(name = "H", alias = "h")]
    H,
    /// LP trace read as an upper bound on theta.
    ThetaEigen,
    /// Haemers rank bound (k = 1).
    Haemers,
    /// General ratio bound for the polynomial given with --poly.
    General,
    /// Exact alpha_k by branch and bound.
    Oracle,
}

impl MethodArg {
    pub fn name(self) -> &'static str {
        match self {
            MethodArg::Ratio => "ratio",
            MethodArg::Rank => "rank",
            MethodArg::RankExhaustive => "rank-exhaustive",
            MethodArg::H => "H",
            MethodArg::ThetaEigen => "theta-eigen",
            MethodArg::Haemers => "haemers",
            MethodArg::General => "general",
            MethodArg::Oracle => "oracle",
        }
    }
}

/// `3` or an inclusive range `1-4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KSpec(pub usize, pub usize);

impl FromStr for KSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad power '{t}'"));
        let (lo, hi) = match s.split_once('-') {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => (parse(s)?, parse(s)?),
        };
        if lo == 0 || hi < lo {
            return Err(format!("powers must satisfy 1 <= lo <= hi, got '{s}'"));
        }
        Ok(KSpec(lo, hi))
    }
}

/// Flattens, sorts and dedups a list of power specs.
pub fn powers(specs: &[KSpec]) -> Vec<usize> {
    let mut ks: Vec<usize> = specs.iter().flat_map(|s| s.0..=s.1).collect();
    ks.sort_unstable();
    ks.dedup();
    ks
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Powers, comma separated; ranges like `1-4` allowed.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub k: Vec<KSpec>,
    #[arg(long, value_delimiter = ',', ignore_case = true, default_value = "ratio,rank")]
    pub methods: Vec<MethodArg>,
    /// Coefficients `c0,c1,...` for the general method.
    #[arg(long, value_name = "C0,C1,..", allow_hyphen_values = true)]
    pub poly: Option<String>,
    #[command(flatten)]
    pub tol: TolArgs,
    /// Branch-and-bound node limit for the oracle.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: Format,
    /// Add a wall-clock column in milliseconds.
    #[arg(long)]
    pub timing: bool,
    /// Add the witness polynomial coefficients.
    #[arg(long)]
    pub witness: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableName {
    Coxeter,
    Srg,
    CyclesK4,
    CyclesK5,
    NamedK2,
    NamedK3,
    NamedK4,
    NamedK5,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub name: TableName,
    /// Only rows with at most this many vertices (srg table).
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Include fixtures marked slow.
    #[arg(long)]
    pub slow: bool,
    #[arg(long, value_name = "DIR")]
    pub fixtures: Option<PathBuf>,
    /// Write the table here instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[command(flatten)]
    pub tol: TolArgs,
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerdictArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub k: Vec<KSpec>,
    /// Strong powers of G^k used for the lower bound (1 or 2).
    #[arg(long, default_value_t = 1)]
    pub levels: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[command(flatten)]
    pub tol: TolArgs,
    #[arg(long, value_enum, default_value = "tsv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Export the theta problem of G^k.
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ImportArgs {
    /// SDPA-style report with objValPrimal and objValDual lines.
    pub file: PathBuf,
    /// Graph the report belongs to; enables the alpha/ratio check.
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[command(flatten)]
    pub tol: TolArgs,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub tol: TolArgs,
}
