//! `df`: prime sieves, factorization, the Smarandache function, primality
//! criteria, Diophantine solvers and η-equation searches from the shell.
//!
//! Exit status is 0 on success, 1 for usage and domain errors and 2 for
//! I/O failures. Results go to standard output and diagnostics to
//! standard error.

mod cache;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use df_core::Error;

#[derive(Parser, Debug)]
#[command(name = "df", version, about = "Computational number theory and η-equation searches")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

/// Flags accepted by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Directory holding cached value tables.
    #[arg(long, global = true, env = "DF_TABLES_DIR", default_value = ".df-tables")]
    pub tables_dir: PathBuf,
    /// Seed for randomized methods (Miller–Rabin bases, rho start).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for searches and table builds; defaults to all cores.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    /// Print results as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Rebuild cached tables instead of reusing them.
    #[arg(long, global = true)]
    pub regen: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate the primes up to a limit.
    Sieve {
        #[arg(long)]
        limit: u64,
        /// pritchard, pritchard_odd, pritchard_minmem, batched,
        /// batched_minmem, sundaram, atkin or atkin_opt.
        #[arg(long, default_value = "pritchard")]
        algo: String,
        /// Print `algo,zero_assignments,memory_cells,elapsed_ms`.
        #[arg(long)]
        stats: bool,
    },
    /// Count the primes up to x.
    Pi {
        #[arg(long)]
        x: u64,
        #[arg(long, value_enum, default_value = "table")]
        method: PiMethod,
    },
    /// Factor an integer.
    Factor {
        n: u64,
        #[arg(long, value_enum, default_value = "trial")]
        method: FactorMethod,
        /// Smoothness bound for p1, search bound for ps.
        #[arg(long)]
        bound: Option<u64>,
    },
    /// The Smarandache function η.
    Eta(EtaArgs),
    /// Generate or verify value table files.
    Tables {
        #[command(subcommand)]
        action: TablesAction,
    },
    /// Run one primality criterion.
    Primality {
        n: u64,
        #[arg(long, value_enum)]
        test: PrimalityTest,
    },
    /// The generalized Euler theorem: the pair (s, m_s) for a and m.
    EulerGen {
        a: u64,
        m: u64,
        /// Also check a^(φ(m_s)+s) ≡ a^s (mod m).
        #[arg(long)]
        verify: bool,
    },
    /// Analytical Diophantine solvers.
    Solve {
        #[command(subcommand)]
        kind: SolveKind,
    },
    /// Exhaustive search for solutions of a registered η-equation.
    Search(SearchArgs),
    /// Searches outside the equation registry.
    Aux {
        #[command(subcommand)]
        kind: AuxKind,
    },
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
pub enum PiMethod {
    /// Binary search in a sieved prime table.
    Table,
    /// The summation over ⌊η(k)/k⌋.
    Eta,
    /// Lower and upper bounds.
    Bounds,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorMethod {
    Trial,
    Fermat,
    Rho,
    P1,
    Ps,
}

#[derive(Args, Debug)]
#[group(skip)]
#[command(group(clap::ArgGroup::new("mode").required(true).args(["value", "factored", "table"])))]
pub struct EtaArgs {
    /// η(n) for one n.
    #[arg(long)]
    pub value: Option<u64>,
    /// η of a number given as prime powers, e.g. "2^1000,5^1000".
    #[arg(long)]
    pub factored: Option<String>,
    /// Write η(1..=N) to the file given by --out.
    #[arg(long, requires = "out")]
    pub table: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum TablesAction {
    /// Write f(1..=limit) to a file.
    Gen {
        #[arg(long = "fn")]
        func: String,
        #[arg(long)]
        limit: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Read a file back and check it is a table of the named function.
    Verify {
        file: PathBuf,
        #[arg(long = "fn")]
        func: String,
    },
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
pub enum PrimalityTest {
    Eta,
    Csp1,
    Csp2,
    Csp3,
    Csp4,
    Mr,
    /// Lucas–Lehmer on the Mersenne number 2^n − 1.
    Ll,
    Bsearch,
}

#[derive(Subcommand, Debug)]
pub enum SolveKind {
    /// a·x − b·y = c.
    Linear2 {
        #[arg(allow_negative_numbers = true)]
        a: String,
        #[arg(allow_negative_numbers = true)]
        b: String,
        #[arg(allow_negative_numbers = true)]
        c: String,
        /// How many natural solutions to list.
        #[arg(long, default_value_t = 5)]
        terms: usize,
    },
    /// A·x = b from a CSV file whose last column is b.
    Linsys {
        #[arg(long)]
        file: PathBuf,
    },
    /// Rational roots of a0 + a1·x + a2·x² + ...
    Poly {
        /// Coefficients from the constant term up, e.g. "1469,-490,29".
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, default_value = "rational")]
        mode: String,
    },
    /// a·x² − b·y² + c = 0.
    Quad {
        a: u64,
        b: u64,
        #[arg(allow_negative_numbers = true)]
        c: i64,
        /// Solutions n = 0..terms are listed.
        #[arg(long, default_value_t = 10)]
        terms: u64,
        #[arg(long, value_enum, default_value = "s0")]
        branch: BranchArg,
        /// Search bound for the basis matrix and the minimal solution.
        #[arg(long, default_value_t = df_core::dioph_quad::DEFAULT_BOUND)]
        bound: u64,
    },
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
pub enum BranchArg {
    S0,
    S1,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    /// Equation id such as 2069, 2172k0 or guy15.
    #[arg(required_unless_present = "list")]
    pub id: Option<String>,
    /// List the registered equations.
    #[arg(long)]
    pub list: bool,
    /// Bounds replacing the defaults of the named variables,
    /// e.g. "m=2..10;n=1..10;x=1..16" or "x=2..1e6:113".
    #[arg(long)]
    pub domain: Option<String>,
    /// Extra filter such as "coprime(m,n)" or "bound(m*x+n, eta)".
    #[arg(long = "filter")]
    pub filters: Vec<String>,
    /// Drop the equation's default filters.
    #[arg(long)]
    pub no_default_filters: bool,
    /// Set a parameter, e.g. "k=1".
    #[arg(long = "param")]
    pub params: Vec<String>,
    /// Table directory for this run, overriding --tables-dir.
    #[arg(long)]
    pub tables: Option<PathBuf>,
    /// Print every solution in text mode instead of the first 50.
    #[arg(long)]
    pub all: bool,
}

#[derive(Subcommand, Debug)]
pub enum AuxKind {
    /// Triples x ≤ y ≤ z with 4/n = 1/x + 1/y + 1/z.
    ErdosStraus {
        n: u64,
        #[arg(long, default_value_t = df_core::search::ERDOS_STRAUS_CAP)]
        cap: u64,
    },
    /// Primes p ≤ limit for which p plus its digit reversal is prime.
    R229 {
        #[arg(long)]
        limit: u64,
    },
    /// Numbers of `len` digits in `base` equal to their digit power sum.
    Narcissistic {
        #[arg(long, default_value_t = 10)]
        base: u64,
        #[arg(long)]
        len: u32,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io { .. } => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(w) = cli.global.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w as usize).build_global() {
            eprintln!("df: cannot start {w} workers: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("df: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
