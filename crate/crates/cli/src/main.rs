//! `edfun`: exact edit distance functions from the command line.

mod commands;
mod input;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use edfun::limits::{self, Limits};
use edfun::Rational;

use crate::output::Format;

#[derive(Parser, Debug)]
#[command(name = "edfun", version, about = "Exact edit distance functions of hereditary graph properties")]
struct Cli {
    /// Worker threads for grid evaluation and enumeration (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,

    /// Output format.
    #[arg(long = "out", global = true, value_enum, default_value_t = Format::Text)]
    out: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// g_K(p) with optimal weights, support and components.
    Gval(CrgAtP),
    /// f_K(p), the objective at uniform weights.
    Fval(CrgAtP),
    /// Whether a graph maps into a CRG, with a witness.
    Embed {
        /// `GRAPH CRG`, or just `CRG` with `--input`. Graphs are preset names,
        /// `n:u-v,...`, or JSON `{"n":..,"edges":[..]}`; CRGs use the text
        /// form, e.g. `WWB;ggg`, or a preset name (K1..K4, C6STAR).
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
        /// Read the graph from a file.
        #[arg(long)]
        input: Option<String>,
    },
    /// Whether a CRG belongs to K(Forb(F)).
    FamilyCheck {
        crg: String,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Enumerate CRGs up to isomorphism.
    Enum {
        #[arg(long)]
        max_k: usize,
        /// Restrict to the p-core edge structure for the side of 1/2 that p is on.
        #[arg(long, value_parser = input::parse_p)]
        p: Option<Rational>,
        /// Keep only members of K(Forb(F)).
        #[arg(long = "forb")]
        forb: Vec<String>,
        #[arg(long)]
        input: Option<String>,
    },
    /// Minimum of g over enumerated members of K(Forb(F)).
    MinG {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        max_k: usize,
        #[command(flatten)]
        points: Points,
    },
    /// p-core test and the weighted-degree audit.
    Pcore(CrgAtP),
    /// Envelope of g over enumerated members of K(Forb(F)) on a grid.
    Edf {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        max_k: usize,
        #[command(flatten)]
        points: Points,
    },
    /// Maximizer of a closed-form envelope.
    Maxpoint {
        /// `h9`, `c6star`, `split(a,w)`, `complete(w)`, `empty(a)`, or pieces
        /// `a,b,c,d;...` meaning the minimum of (a·p+b)/(c·p+d).
        envelope: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Check the split-graph edit distance function by enumeration.
    VerifySplit {
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        omega: usize,
        #[arg(long)]
        max_k: usize,
        #[command(flatten)]
        points: Points,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Check the edit distance function of Forb(H9).
    VerifyH9 {
        #[arg(long, default_value_t = 5)]
        max_k: usize,
        #[command(flatten)]
        points: Points,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

#[derive(Args, Debug)]
struct CrgAtP {
    /// CRG text form, e.g. `WWW;ggg`, or a preset name (K1..K4, C6STAR).
    crg: String,
    #[arg(long, value_parser = input::parse_p)]
    p: Rational,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// Forbidden graph (repeatable): preset, `n:u-v,...`, or JSON.
    #[arg(long = "forb")]
    forb: Vec<String>,
    /// File with forbidden graphs: a JSON array, or one graph per line.
    #[arg(long)]
    input: Option<String>,
}

#[derive(Args, Debug)]
struct Points {
    /// A single probability `a/b`.
    #[arg(long, value_parser = input::parse_p, conflicts_with = "grid")]
    p: Option<Rational>,
    /// Dyadic grid i/n for i = 1..n-1.
    #[arg(long)]
    grid: Option<u32>,
}

impl Points {
    fn resolve(&self) -> anyhow::Result<Vec<Rational>> {
        input::points(self.p.as_ref(), self.grid)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    limits::install(Limits::from_env());
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
