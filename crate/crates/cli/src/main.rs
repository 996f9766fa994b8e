mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::RunReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NONE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "fdel", version, about = "F-Deletion kernelization, approximation and exact solving")]
struct Cli {
    /// Repeat for more log output on stderr.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Graph in edge-list format.
    #[arg(long)]
    pub input: PathBuf,
    /// vc, fvs, tw2 or custom:<file>.
    #[arg(long, default_value = "fvs")]
    pub family: String,
    /// Override the family's treewidth constant.
    #[arg(long)]
    pub eta: Option<usize>,
    /// Print a JSON report instead of text.
    #[arg(long)]
    pub json: bool,
    /// Leave timings out of the report.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ParamArgs {
    /// Boundary and width bound (default 2(eta+1)).
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub min_size: Option<usize>,
    #[arg(long)]
    pub max_interior: Option<usize>,
    #[arg(long)]
    pub test_size: Option<usize>,
    #[arg(long)]
    pub rep_size: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Naive,
    Fast,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    Chain,
    Grid,
    Gnp,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact solve: smallest deletion set of size at most k.
    Solve {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        params: ParamArgs,
        /// Size bound; defaults to the vertex count.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        no_kernel: bool,
        #[arg(long, value_enum, default_value = "fast")]
        mode: Mode,
    },
    /// Replace protrusions until none shrinks.
    Kernelize {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "fast")]
        mode: Mode,
        /// Prebuilt representative table; may be repeated.
        #[arg(long)]
        table: Vec<PathBuf>,
        /// Where to write the kernel graph.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where to write the replacement traces (JSON).
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Model-hitting approximation.
    Approx {
        #[command(flatten)]
        common: Common,
        /// Compare against the brute-force optimum (small inputs only).
        #[arg(long)]
        oracle_check: bool,
    },
    /// Build a representative table for one boundary size.
    Table {
        #[arg(long)]
        boundary: usize,
        #[arg(long, default_value = "fvs")]
        family: String,
        #[arg(long)]
        eta: Option<usize>,
        #[arg(long, default_value_t = 4)]
        test_size: usize,
        #[arg(long, default_value_t = 3)]
        rep_size: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        no_timing: bool,
    },
    /// Check a claimed solution (text or a solve JSON report).
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        solution: PathBuf,
        /// Claimed size bound; defaults to the size stated in the file.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Kernel size and solve time over generated families, as CSV.
    Bench {
        #[arg(long, default_value = "fvs")]
        family: String,
        #[arg(long, value_enum, default_values_t = [Generator::Chain])]
        generator: Vec<Generator>,
        #[arg(long, default_value_t = 2)]
        min_k: usize,
        #[arg(long, default_value_t = 8)]
        max_k: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Skip the solve without kernelization.
        #[arg(long)]
        no_plain: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        no_timing: bool,
    },
}

/// Error carrying its exit status.
#[derive(Debug)]
pub struct Failure {
    pub exit: i32,
    pub msg: String,
}

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Self {
        Failure { exit: EXIT_USAGE, msg: msg.into() }
    }
}

impl From<fdel_core::Error> for Failure {
    fn from(e: fdel_core::Error) -> Self {
        let exit = if e.is_resource() { EXIT_RESOURCE } else { EXIT_USAGE };
        Failure { exit, msg: format!("{}: {e}", e.code()) }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let report = RunReport::new(argv);
    let result = match cli.command {
        Command::Solve { common, params, k, no_kernel, mode } => {
            commands::solve(report, &common, &params, k, no_kernel, mode)
        }
        Command::Kernelize { common, params, mode, table, out, trace } => {
            commands::kernelize(report, &common, &params, mode, &table, out.as_deref(), trace.as_deref())
        }
        Command::Approx { common, oracle_check } => commands::approx(report, &common, oracle_check),
        Command::Table { boundary, family, eta, test_size, rep_size, out, json, no_timing } => {
            commands::table(report, boundary, &family, eta, test_size, rep_size, out.as_deref(), json, no_timing)
        }
        Command::Verify { common, solution, k } => commands::verify(report, &common, &solution, k),
        Command::Bench { family, generator, min_k, max_k, seed, no_plain, out, json, no_timing } => {
            commands::bench(report, &family, &generator, min_k, max_k, seed, !no_plain, out.as_deref(), json, no_timing)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.exit as u8)
        }
    }
}
