//! `pointfree`: command-line front end for finite frames, sublocales,
//! separation axioms, finite spaces and the rational regular-open calculus.
//!
//! Exit status: 0 when the checked property holds, 1 when it fails with a
//! witness, 2 on an internal theorem violation, 3 on unreadable input or
//! bad usage.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pointfree::Budget;

pub const EXIT_HOLDS: u8 = 0;
pub const EXIT_FAILS: u8 = 1;
pub const EXIT_VIOLATION: u8 = 2;
pub const EXIT_INPUT: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "pointfree",
    version,
    about = "Finite point-free topology checks"
)]
pub struct Cli {
    /// Cap on carrier sizes for loading and enumeration
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// Seed for sampled checks and campaigns
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Emit line-oriented key=value records
    #[arg(long, global = true)]
    pub machine: bool,
    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn budget(&self) -> Budget {
        match self.budget {
            Some(cap) => Budget::default().with_carrier_cap(cap),
            None => Budget::default(),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a lattice file as a frame
    CheckFrame { file: PathBuf },
    /// Enumerate all sublocales of a frame
    Sublocales { file: PathBuf },
    /// Build S_c(L), the joins of closed sublocales
    Sc { file: PathBuf },
    /// Decide a separation axiom or check a theorem instance
    Separation {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = AxiomArg::Subfit)]
        axiom: AxiomArg,
    },
    /// Regular-open calculus on finite unions of rational intervals
    Realline {
        #[command(subcommand)]
        command: RealCommand,
    },
    /// Finite topological spaces
    Spaces {
        #[command(subcommand)]
        command: SpaceCommand,
    },
    /// Run checks over generated corpora
    Campaign(CampaignArgs),
    /// Print a Graphviz diagram
    ExportDot {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = DotTarget::Hasse)]
        target: DotTarget,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomArg {
    Subfit,
    Weak,
    Symmetric,
    Ppt,
    Pcformula,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum DotTarget {
    Hasse,
    Sublocales,
    Sc,
    Specialization,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum WhichArg {
    First,
    Second,
}

#[derive(Subcommand, Debug)]
pub enum RealCommand {
    /// The n-th term int(cl U ∪ [-1/n,1/n])
    Lemma1 {
        #[arg(long)]
        set: String,
        #[arg(long)]
        n: u64,
    },
    /// Obstruction certificate for a point outside U ∪ {0}
    Obstruct {
        #[arg(long)]
        set: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Witness pair (U_n, V_n), or a convergence certificate with --x
    Prop2 {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, default_value_t = 1)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, value_enum, default_value_t = WhichArg::First)]
        which: WhichArg,
    },
    /// Forcing step for a candidate pair
    Prop1 {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum SpaceCommand {
    /// Symmetry, U_c(X) and the equivalent conditions for one space
    Check { file: PathBuf },
    /// Enumerate all topologies on n labeled points
    Enumerate {
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Keep only T0 spaces
        #[arg(long)]
        t0: bool,
        /// Check every enumerated space
        #[arg(long)]
        report: bool,
    },
}

#[derive(Args, Debug)]
pub struct CampaignArgs {
    /// Largest distributive lattice in the corpus
    #[arg(long, default_value_t = 6)]
    pub max_size: usize,
    /// Largest point count for exhaustive topologies
    #[arg(long, default_value_t = 4)]
    pub points: usize,
    /// Random five-point spaces
    #[arg(long, default_value_t = 100)]
    pub random_spaces: usize,
    /// Fuzzed regular opens
    #[arg(long, default_value_t = 200)]
    pub intervals: usize,
    /// Fuzzed pairs (U, V)
    #[arg(long, default_value_t = 100)]
    pub pairs: usize,
    /// Comma-separated check names; all checks by default
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<String>,
    /// Leave out the curated named frames
    #[arg(long)]
    pub no_curated: bool,
    /// Skip frame laws over all labelings
    #[arg(long)]
    pub no_labelings: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INPUT
            } else {
                EXIT_HOLDS
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
