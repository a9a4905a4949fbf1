//! `p3c`: hulls, independence checks and convexly independent set sizes in
//! the P3 convexity.

mod commands;
mod error;
mod input;
mod report;
mod suites;

use clap::{Parser, Subcommand};
use commands::{Mode, Solver};
use error::CliError;
use input::Format;
use report::RunReport;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "p3c", version, about = "P3-convexity toolkit")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct InputArgs {
    /// Instance file, or `-` for stdin.
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Hull of a vertex set, with the infection order.
    Hull {
        #[command(flatten)]
        input: InputArgs,
        /// Comma-separated 1-based vertex ids.
        #[arg(long)]
        set: String,
    },
    /// Whether a vertex set is convexly independent.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        set: String,
    },
    /// Vertices of the hull that no proper subset reaches.
    Boundary {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        set: String,
    },
    /// Largest convexly independent set.
    BetaC {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Solver::Auto)]
        solver: Solver,
        #[arg(long, value_enum, default_value_t = Mode::State)]
        mode: Mode,
    },
    /// Largest irredundant set, by exhaustive search.
    Caratheodory {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Print a generated instance.
    Gen {
        /// path, cycle, ladder, spider, random-perm, random-cograph or random-tree
        kind: String,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit diagrams as edge lists.
        #[arg(long)]
        edges: bool,
    },
    /// Compare a solver with the oracle for every size up to --max-n.
    Validate {
        /// path, cycle, tree, cograph or permutation
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Instances per size for seeded suites.
        #[arg(long, default_value_t = 50)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where counterexamples are written.
        #[arg(long, default_value = "fixtures")]
        fixtures: PathBuf,
    },
    /// Time a solver on generated instances.
    Bench {
        /// random-perm, ladder, random-tree or random-cograph
        kind: String,
        /// Comma-separated sizes.
        #[arg(value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(command: &Command) -> Result<(RunReport, i32), CliError> {
    match command {
        Command::Hull { input, set } => commands::cmd_hull(&input.input, input.format, set),
        Command::Check { input, set } => commands::cmd_check(&input.input, input.format, set),
        Command::Boundary { input, set } => commands::cmd_boundary(&input.input, input.format, set),
        Command::BetaC { input, solver, mode } => commands::cmd_beta_c(&input.input, input.format, *solver, *mode),
        Command::Caratheodory { input } => commands::cmd_caratheodory(&input.input, input.format),
        Command::Gen {
            kind,
            params,
            seed,
            edges,
        } => suites::cmd_gen(kind, params, *seed, *edges),
        Command::Validate {
            suite,
            max_n,
            count,
            seed,
            fixtures,
        } => suites::cmd_validate(suite, *max_n, *count, *seed, fixtures),
        Command::Bench { kind, sizes, seed } => suites::cmd_bench(kind, sizes, *seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli.command) {
        Ok((mut report, code)) => {
            report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize"));
            } else {
                let text = report.to_text();
                print!("{text}");
                if !text.ends_with('\n') {
                    println!();
                }
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("p3c: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
