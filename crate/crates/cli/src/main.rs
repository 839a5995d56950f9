//! `tsumset`: representation functions, exceptional sets and structure of
//! t-representable sumsets from the command line.

mod commands;
mod output;
mod repro;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;
use tsumset::Caps;

#[derive(Parser, Debug)]
#[command(name = "tsumset", version, about = "Exact counts and structure of t-representable sumsets")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Output format; each command picks a default (json except compare-bounds).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Largest h*m for one representation table.
    #[arg(long, global = true, env = "TSUMSET_MAX_HM", default_value_t = 10_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_hm: u64,
    /// Largest multiplicity threshold t.
    #[arg(long, global = true, env = "TSUMSET_MAX_T", default_value_t = 1_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_t: u64,
    /// Largest number of lattice points enumerated in one region.
    #[arg(long, global = true, env = "TSUMSET_MAX_POINTS", default_value_t = 2_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_points: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "TSUMSET_THREADS")]
    pub threads: Option<usize>,
    /// Witness lists in reports are cut to this length.
    #[arg(long, global = true, default_value_t = 32)]
    pub witness_limit: usize,
}

impl RunConfig {
    pub fn caps(&self) -> Caps {
        Caps {
            max_hm: self.max_hm,
            max_t: self.max_t,
            max_lattice_points: self.max_points,
            witness_limit: self.witness_limit,
            ..Caps::default()
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct SetArg {
    /// Set literal such as `0,3,5`; normalized (shifted and scaled) before use.
    #[arg(long)]
    pub set: String,
}

#[derive(Args, Debug, Clone)]
pub struct PointsArg {
    /// Points such as `0,0;1,0;0,1`.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    pub points: Option<String>,
    /// File with one point per line.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// rho_{A,h}(n), rho_A(n), or the table of rho_{A,h} over [0, hm].
    Rho {
        #[command(flatten)]
        set: SetArg,
        #[arg(long)]
        h: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Fr_t(A) with its brackets.
    Frobenius {
        #[command(flatten)]
        set: SetArg,
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
    /// E_t(A).
    Exceptional {
        #[command(flatten)]
        set: SetArg,
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
    /// (hA)^(t).
    Sumset {
        #[command(flatten)]
        set: SetArg,
        #[arg(long)]
        h: u64,
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
    /// Compare (hA)^(t) with its structured form.
    Structure {
        #[command(flatten)]
        set: SetArg,
        #[arg(long)]
        h: u64,
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
    /// Exact h_t by scanning up to the guaranteed bound.
    Ht {
        #[command(flatten)]
        set: SetArg,
        #[arg(long, default_value_t = 1)]
        t: u64,
        /// Also scan this many h beyond the bound.
        #[arg(long, default_value_t = 0)]
        extra: u64,
    },
    /// Every bound for h_t.
    Bounds {
        #[command(flatten)]
        set: SetArg,
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
    /// One row per (A, t): ht_exact, mt1, mt2, yang_zhou.
    CompareBounds {
        /// Set literals (repeatable).
        #[arg(long = "set")]
        sets: Vec<String>,
        /// File with one set literal per line.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Values of t (comma separated).
        #[arg(long, value_delimiter = ',', default_value = "1")]
        t: Vec<u64>,
    },
    /// The extremal family.
    Extremal {
        #[command(subcommand)]
        action: ExtremalCmd,
    },
    /// Closed forms for three-element sets {0, a, m}.
    Threeset {
        #[command(subcommand)]
        action: ThreesetCmd,
    },
    /// Point sets in Z^d.
    Lattice {
        #[command(subcommand)]
        action: LatticeCmd,
    },
    /// Regenerate every worked example and diff against the golden files.
    Repro {
        /// Directory holding `<case>.json` files.
        #[arg(long)]
        golden_dir: Option<PathBuf>,
        /// Overwrite the golden files instead of comparing.
        #[arg(long)]
        bless: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum ExtremalCmd {
    /// Build and verify one instance.
    Verify {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        ell: u64,
        #[arg(long = "r")]
        r: u64,
    },
    /// Verify every `m,ell,R` line of a file.
    Batch {
        #[arg(long)]
        file: PathBuf,
    },
    /// Finite-m asymptotic record.
    Asymptotic {
        #[arg(long, value_delimiter = ',')]
        m: Vec<u64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ThreesetCmd {
    /// Closed-form rho_A(n) for A = {0, a, m}.
    Rho {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// Closed forms against enumeration for every coprime a < m <= max-m.
    Batch {
        #[arg(long)]
        max_m: u64,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
        t: Vec<u64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum LatticeCmd {
    /// Hull vertices.
    Extremal {
        #[command(flatten)]
        points: PointsArg,
    },
    /// Basis of the integer span.
    Span {
        #[command(flatten)]
        points: PointsArg,
        /// Also test membership of this point.
        #[arg(long)]
        member: Option<String>,
    },
    /// rho_{A,h}(p) or rho_A(p).
    Rho {
        #[command(flatten)]
        points: PointsArg,
        #[arg(long)]
        p: String,
        #[arg(long)]
        h: Option<u64>,
    },
    /// Best-found Delta/delta direction.
    Delta {
        #[command(flatten)]
        points: PointsArg,
    },
    /// Structure predicate at one h.
    Structure {
        #[command(flatten)]
        points: PointsArg,
        #[arg(long)]
        h: u64,
        #[arg(long, default_value_t = 1)]
        t: u64,
    },
    /// Empirical structure index up to a cap.
    Index {
        #[command(flatten)]
        points: PointsArg,
        #[arg(long, default_value_t = 1)]
        t: u64,
        #[arg(long)]
        h_cap: u64,
    },
    /// Bound formula over supplied phi values.
    Bound {
        #[command(flatten)]
        points: PointsArg,
        #[arg(long, default_value_t = 1)]
        t: u64,
        /// `vertex=value` pairs separated by `;`, e.g. `0,0=1;1,0=3/2;0,1=1`.
        #[arg(long, conflicts_with = "phi_from_frobenius")]
        phi: Option<String>,
        /// d = 1 only: phi = (Fr_t + m) / m at each end.
        #[arg(long)]
        phi_from_frobenius: bool,
    },
    /// Cover of lambda H(A) by simplices on vertex subsets.
    Caratheodory {
        #[command(flatten)]
        points: PointsArg,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 100_000)]
        sample_cap: usize,
    },
    /// Finite-difference test for polynomial growth.
    Poly {
        #[command(flatten)]
        points: PointsArg,
        #[arg(long, default_value_t = 1)]
        t: u64,
        #[arg(long, default_value_t = 0)]
        h_lo: u64,
        #[arg(long)]
        h_hi: u64,
    },
}

#[derive(Debug)]
pub enum CliError {
    Core(tsumset::Error),
    Io(String),
    Mismatch(String),
}

impl From<tsumset::Error> for CliError {
    fn from(e: tsumset::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use tsumset::Error::*;
        match self {
            CliError::Core(ResourceLimit { .. }) => 3,
            CliError::Core(Inconsistency(_)) | CliError::Mismatch(_) => 1,
            CliError::Core(_) | CliError::Io(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Mismatch(e) => write!(f, "golden mismatch: {e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.config.threads {
        // the global pool can only be configured once; later calls are harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let result = if let Command::Repro { golden_dir, bless } = &cli.command {
        repro::run(golden_dir.clone(), *bless).map(|summary| {
            print!("{summary}");
        })
    } else {
        commands::run(&cli.command, &cli.config).and_then(|(report, default)| {
            print!("{}", report.render(cli.config.format.unwrap_or(default))?);
            Ok(())
        })
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
