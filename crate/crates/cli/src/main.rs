use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use walkreg_cli::commands::{self, AnalyzeOptions, Io, SolveOptions};
use walkreg_cli::EXIT_USAGE;

/// Decide and explore strong walk-regularity of graphs.
#[derive(Parser)]
#[command(name = "walkreg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze every graph6 record of a file (`-` reads stdin).
    Analyze {
        path: PathBuf,
        /// Walk lengths for the parameter table.
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,5",
              value_parser = clap::value_parser!(u32).range(2..))]
        ell_list: Vec<u32>,
        /// Largest odd length searched for a single admissible length.
        #[arg(long, default_value_t = walkreg_core::swr::DEFAULT_SCAN_BOUND)]
        scan_bound: u32,
        /// One JSON object per line.
        #[arg(long)]
        json: bool,
    },
    /// Check strong walk-regularity at one length, with both decision routes.
    Verify {
        path: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        ell: u32,
        #[arg(long)]
        json: bool,
    },
    /// Print a named graph as graph6, e.g. `clique-ext paley 5 3`.
    Construct {
        /// One of: empty N, complete N, complete-bipartite A B, cycle N, path N,
        /// paley Q, hamming D Q, kmm-km M, complement-kmm-km M, petersen,
        /// heawood, line-graph F.., complement F.., clique-ext F.. S
        #[arg(required = true)]
        family: Vec<String>,
        /// Write to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List integer eigenvalue triples meeting the condition at odd length.
    Search {
        #[arg(long)]
        ell: u32,
        #[arg(long, allow_hyphen_values = true)]
        min: i64,
        #[arg(long, allow_hyphen_values = true)]
        max: i64,
        /// Also consider triples without a negative eigenvalue.
        #[arg(long)]
        all_signs: bool,
        #[arg(long)]
        json: bool,
    },
    /// Solve the condition for the largest eigenvalue given the other two.
    SolveThird {
        #[arg(long)]
        ell: u32,
        #[arg(long, allow_hyphen_values = true)]
        theta2: String,
        #[arg(long, allow_hyphen_values = true)]
        theta3: String,
        #[arg(long, default_value = "1e-9")]
        tol: String,
        /// Largest denominator tried when recognising a rational root.
        #[arg(long, default_value_t = walkreg_core::search::DEFAULT_MAX_DENOMINATOR)]
        max_denominator: u32,
        #[arg(long)]
        json: bool,
    },
    /// Eigenvalue multiplicities for a candidate four-eigenvalue spectrum.
    Feasible {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        k: usize,
        /// Three decreasing eigenvalues, e.g. `3 0 -3` or `"1+sqrt(2)" "1-sqrt(2)" -2`.
        #[arg(long, num_args = 3, allow_hyphen_values = true, required = true)]
        thetas: Vec<String>,
        #[arg(long)]
        json: bool,
    },
}

fn run(cli: Cli, io: &mut Io) -> io::Result<u8> {
    match cli.command {
        Command::Analyze { path, ell_list, scan_bound, json } => {
            commands::analyze(io, &path, &AnalyzeOptions { ells: ell_list, scan_bound, json })
        }
        Command::Verify { path, ell, json } => commands::verify(io, &path, ell, json),
        Command::Construct { family, output } => commands::construct(io, &family, output.as_deref()),
        Command::Search { ell, min, max, all_signs, json } => commands::search(io, ell, min, max, !all_signs, json),
        Command::SolveThird { ell, theta2, theta3, tol, max_denominator, json } => commands::solve_third(
            io,
            &SolveOptions { ell, theta2, theta3, tol, max_denominator, json },
        ),
        Command::Feasible { v, k, thetas, json } => commands::feasible(io, v, k, &thetas, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let (stdout, stderr) = (io::stdout(), io::stderr());
    let (mut out, mut err) = (stdout.lock(), stderr.lock());
    let mut io = Io { out: &mut out, err: &mut err };
    match run(cli, &mut io) {
        Ok(code) => ExitCode::from(code),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
