//! Argument parsing and dispatch for the `rookery` binary.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rookery::combinatorics::{Partition, SkewShape, TableauKind};
use rookery::functor::Variant;
use rookery::monoid::MonoidKind;
use rookery::report::{Report, Status};

pub mod commands;
pub mod fixtures;
pub mod output;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "rookery", version, about = "Tableau modules over rook and transformation monoids")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Directory for cached module bases.
    #[arg(long, global = true, env = "ROOKERY_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

/// `--kind` for the Cauchy commands: a monoid or `none` for the whole ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdealKind(pub Option<MonoidKind>);

impl FromStr for IdealKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("none") {
            return Ok(IdealKind(None));
        }
        match MonoidKind::from_str(s)? {
            MonoidKind::Sym => Err("the ideals are defined for is, pt and t (or none)".into()),
            k => Ok(IdealKind(Some(k))),
        }
    }
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ShapeArgs {
    /// Outer partition, e.g. `2,1`.
    #[arg(long)]
    pub lambda: Partition,
    /// Inner partition; empty by default.
    #[arg(long)]
    pub mu: Option<Partition>,
}

impl ShapeArgs {
    pub fn shape(&self) -> rookery::Result<SkewShape> {
        Ok(SkewShape::new(self.lambda.clone(), self.mu.clone().unwrap_or_else(Partition::empty))?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VariantArg {
    Upper,
    Lower,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Upper => Variant::Upper,
            VariantArg::Lower => Variant::Lower,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleWhich {
    /// `R(n)^{λ/μ}`.
    Upper,
    /// `R(n)_{λ/μ}`.
    Lower,
    /// `L_{λ/μ}(V_n)`.
    Schur,
    /// `K_{λ/μ}(V_n)`.
    Weyl,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List tableaux of a (skew) shape.
    Tableaux(TableauxArgs),
    /// Dimensions of R(n)^{λ/μ}, R(n)_{λ/μ}, L and K against the closed form.
    Dims(DimsArgs),
    /// Enumerate a monoid and check its cardinality.
    Monoid(MonoidArgs),
    /// Build a module and dump the generator action matrices.
    Module(ModuleArgs),
    /// Restriction of R(n)^λ and R(n)_λ to the symmetric group.
    Branch1(Branch1Args),
    /// Restriction to the block submonoid M(s) × M(n−s).
    Branch2(Branch2Args),
    /// Restriction to M(n−1).
    Branch3(Branch3Args),
    /// Pairwise non-isomorphism table.
    Distinct(DistinctArgs),
    /// Norton irreducibility test.
    Irreducible(IrreducibleArgs),
    /// Quotient dimension and filtration of the polynomial ring modulo J.
    Cauchy(CauchyArgs),
    /// The same for the skew-commuting ring, with the membership checks.
    SkewCauchy(SkewCauchyArgs),
    /// Associated graded ideal of a monoid as a point locus.
    Harmonics(HarmonicsArgs),
    /// Run the acceptance suite.
    VerifyAll(VerifyArgs),
    /// Write the golden JSON fixtures.
    Fixtures(FixturesArgs),
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct TableauxArgs {
    /// Shape `λ` or `λ/μ`, e.g. `3,2/1`.
    #[arg(long)]
    pub shape: SkewShape,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "semistandard")]
    pub kind: TableauKind,
    /// Print only the count.
    #[arg(long)]
    pub count_only: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DimsArgs {
    #[arg(long, default_value = "is")]
    pub kind: MonoidKind,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub shape: ShapeArgs,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct MonoidArgs {
    #[arg(long)]
    pub kind: MonoidKind,
    #[arg(long)]
    pub n: usize,
    /// Include every element.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct ModuleArgs {
    #[arg(long)]
    pub kind: MonoidKind,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub shape: ShapeArgs,
    #[arg(long, value_enum, default_value_t = ModuleWhich::Upper)]
    pub which: ModuleWhich,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Branch1Args {
    #[arg(long)]
    pub lambda: Partition,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Branch2Args {
    #[arg(long)]
    pub kind: MonoidKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub s: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub shape: ShapeArgs,
    #[arg(long, value_enum, default_value_t = VariantArg::Upper)]
    pub variant: VariantArg,
    /// Also build the chain of invariant subspaces (upper variant only).
    #[arg(long)]
    pub structural: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Branch3Args {
    #[arg(long)]
    pub kind: MonoidKind,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub shape: ShapeArgs,
    #[arg(long, value_enum, default_value_t = VariantArg::Upper)]
    pub variant: VariantArg,
    #[arg(long)]
    pub structural: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DistinctArgs {
    #[arg(long)]
    pub kind: MonoidKind,
    #[arg(long)]
    pub n: usize,
    /// Largest `|λ|` in the table; defaults to `n`.
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct IrreducibleArgs {
    #[arg(long)]
    pub kind: MonoidKind,
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    #[serde(flatten)]
    pub shape: ShapeArgs,
    #[arg(long, value_enum, default_value_t = VariantArg::Upper)]
    pub variant: VariantArg,
    #[arg(long, default_value_t = rookery::meataxe::DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = rookery::meataxe::DEFAULT_ROUNDS)]
    pub rounds: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CauchyArgs {
    /// `is`, `pt`, `t`, or `none` for the ring itself.
    #[arg(long, default_value = "is")]
    pub kind: IdealKind,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    /// Skip the invariance and trace checks.
    #[arg(long)]
    pub dims_only: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SkewCauchyArgs {
    #[arg(long, default_value = "is")]
    pub kind: IdealKind,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub dims_only: bool,
    /// Samples per membership check.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[arg(long, default_value_t = rookery::meataxe::DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct HarmonicsArgs {
    #[arg(long)]
    pub kind: MonoidKind,
    #[arg(long)]
    pub n: usize,
    /// Highest degree examined; defaults to max(n², n + 1).
    #[arg(long)]
    pub dmax: Option<usize>,
    /// Compare the degree components as subspaces, not only by dimension.
    #[arg(long)]
    pub explicit: bool,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    /// Include the n = 4 orbit harmonics.
    #[arg(long, conflicts_with = "fast")]
    pub slow: bool,
    /// The default suite.
    #[arg(long)]
    pub fast: bool,
    #[arg(long, default_value_t = rookery::meataxe::DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Run only these criteria, e.g. `--only 1,9`.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<u8>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct FixturesArgs {
    /// Root directory; files go under `<out>/<version>/`.
    #[arg(long)]
    pub out: PathBuf,
}

/// Process exit codes.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

pub fn exit_code(status: Status) -> i32 {
    if status == Status::Pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Errors caused by the request rather than by a computation.
pub fn is_config_error(e: &rookery::Error) -> bool {
    use rookery::Error::*;
    matches!(e, Invalid(_) | Shape(_) | Tableau(_) | Monoid(_))
}

/// Runs one parsed command, writing to stdout (and progress to stderr).
/// Returns the exit code.
pub fn run(cli: Cli) -> i32 {
    if let Some(dir) = &cli.cache_dir {
        rookery::cache::ModuleCache::global().set_dir(Some(dir.clone()));
    }
    // The bool marks reports whose lines were already streamed to stdout.
    let result: rookery::Result<Option<(Report, bool)>> = match &cli.command {
        Command::VerifyAll(a) => commands::verify_all(a, cli.format).map(Some),
        Command::Fixtures(a) => fixtures::write_fixtures(&a.out).map(|paths| {
            for p in &paths {
                println!("{}", p.display());
            }
            None
        }),
        other => commands::execute(other).map(|r| Some((r, false))),
    };
    match result {
        Ok(Some((report, true))) => exit_code(report.status),
        Ok(Some((report, false))) => match output::render(&report, cli.format) {
            Ok(text) => {
                print!("{text}");
                exit_code(report.status)
            }
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_FAIL
            }
        },
        Ok(None) => EXIT_PASS,
        Err(e) => {
            eprintln!("error: {e}");
            if is_config_error(&e) {
                EXIT_CONFIG
            } else {
                EXIT_FAIL
            }
        }
    }
}

/// Parses `argv` (without the program name) and returns the report, for tests
/// and the fixture generator.
pub fn report_for(args: &[&str]) -> rookery::Result<Report> {
    let argv = std::iter::once("rookery").chain(args.iter().copied());
    let cli = Cli::try_parse_from(argv).map_err(|e| rookery::Error::Invalid(e.to_string()))?;
    commands::execute(&cli.command)
}
