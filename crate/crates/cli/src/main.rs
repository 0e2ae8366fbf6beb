//! `sympow`: command-line front end for the symbolic-power toolkit.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sympow_core::MonomialOrder;

#[derive(Parser, Debug)]
#[command(name = "sympow", version, about = "Exact computations with symbolic powers of primes")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Inline ring, e.g. "char=5; vars=x,y,z,u; rel=x*y*(z+u)-u^3*z"
    #[arg(long, global = true)]
    pub ring: Option<String>,
    /// Monomial order: lex, degrevlex or block(k)
    #[arg(long, global = true, default_value = "degrevlex")]
    pub order: MonomialOrder,
    /// Print a JSON report instead of plain text
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Degree cap for Hilbert-function stabilization
    #[arg(long, global = true)]
    pub cap_degree: Option<usize>,
    /// Cap on the size of any Gröbner basis
    #[arg(long, global = true)]
    pub cap_basis: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Gröbner basis of an ideal
    Gb {
        #[arg(long)]
        gens: String,
    },
    /// Ideal membership of f
    Member {
        #[arg(long)]
        f: String,
        #[arg(long)]
        gens: String,
    },
    /// Krull dimension of R/I
    Dim {
        #[arg(long)]
        gens: String,
    },
    /// Intersection of two ideals
    Intersect {
        #[arg(long)]
        i: String,
        #[arg(long)]
        j: String,
    },
    /// Saturation (I : f^∞)
    Saturate {
        #[arg(long)]
        gens: String,
        #[arg(long)]
        f: String,
    },
    /// Symbolic order of f along an asserted prime
    Symorder {
        #[arg(long)]
        p: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Membership of f in the m-th symbolic power of an asserted prime
    SympowMember {
        #[arg(long)]
        p: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        m: u32,
    },
    /// Check an instance file, or every *.json file in a directory
    Check { path: PathBuf },
    /// Reproduce the hypersurface counterexample
    KrExample {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        q: u32,
        #[arg(long = "char")]
        characteristic: u64,
    },
    /// Tight-closure non-membership probe for z against I with multiplier c
    ProbeTc {
        #[arg(long)]
        z: String,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        c: String,
        #[arg(long, default_value_t = 2)]
        e: u32,
    },
    /// Generate (and optionally check) instances of a built-in family
    Family {
        name: String,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, default_value_t = 4)]
        nvars: usize,
        #[arg(long, default_value_t = 0)]
        split: usize,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long, default_value_t = 3)]
        s: u32,
        #[arg(long, default_value_t = 2)]
        q: u32,
        /// Check the generated instances and print their reports
        #[arg(long)]
        run: bool,
        /// Write one instance file per instance into this directory
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("sympow: {e}");
            ExitCode::from(commands::error_code(&e))
        }
    }
}
