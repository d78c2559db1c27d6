use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use interval_coloring::cli::{self, Mode, SearchAction, StatKind};

#[derive(Parser)]
#[command(
    name = "interval-coloring",
    version,
    about = "Construct, verify, bound, and exhaustively search interval edge-colorings of product graph families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Realize a graph family and emit its edge-list text
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "")]
        params: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run a coloring construction and emit its certificate
    Construct {
        #[arg(long)]
        family: String,
        #[arg(long)]
        params: String,
        #[arg(long, default_value = "widest")]
        mode: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Also export the colored graph as DOT
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Record the run manifest
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Re-verify a certificate file; exit 0 iff valid
    Verify { path: PathBuf },
    /// Exact search: decide one t, compute w or W, or profile a range
    Search {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        params: Option<String>,
        /// Edge-list file as the graph source
        #[arg(long)]
        input: Option<PathBuf>,
        /// Decide a single t
        #[arg(long)]
        t: Option<u32>,
        /// Compute an extreme value: w or W
        #[arg(long)]
        stat: Option<String>,
        /// Profile an inclusive t-range, e.g. 2..5
        #[arg(long)]
        profile: Option<String>,
        #[arg(long)]
        max_nodes: Option<u64>,
        #[arg(long)]
        time_budget_secs: Option<f64>,
        /// Write the found coloring as a certificate
        #[arg(long)]
        cert_out: Option<PathBuf>,
        /// Write the machine-readable outcome record
        #[arg(long)]
        record_out: Option<PathBuf>,
    },
    /// Closed-form bounds and exact values for a family instance
    Bounds {
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        record_out: Option<PathBuf>,
    },
    /// Construct + verify + bound-check a parameter grid, one row per instance
    Matrix {
        #[arg(long)]
        family: String,
        /// Comma-separated ranges, e.g. 2..12,2..12 or 3..9,3..11:2
        #[arg(long)]
        params: String,
        #[arg(long, default_value = "widest")]
        mode: String,
        #[arg(long)]
        record_out: Option<PathBuf>,
    },
    /// Export a certificate as DOT with edge labels equal to colors
    ExportDot {
        cert: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn run(command: Command) -> interval_coloring::Result<i32> {
    match command {
        Command::Gen {
            family,
            params,
            out,
        } => cli::run_gen(&family, &params, out.as_deref()),
        Command::Construct {
            family,
            params,
            mode,
            out,
            dot,
            manifest,
        } => cli::run_construct(
            &family,
            &params,
            mode.parse::<Mode>()?,
            out.as_deref(),
            dot.as_deref(),
            manifest.as_deref(),
        ),
        Command::Verify { path } => cli::run_verify(&path),
        Command::Search {
            family,
            params,
            input,
            t,
            stat,
            profile,
            max_nodes,
            time_budget_secs,
            cert_out,
            record_out,
        } => {
            let action = match (t, stat, profile) {
                (Some(t), None, None) => SearchAction::Exists(t),
                (None, Some(stat), None) => SearchAction::Stat(stat.parse::<StatKind>()?),
                (None, None, Some(range)) => {
                    let values = cli::parse_range(&range)?;
                    match (values.first(), values.last()) {
                        (Some(&lo), Some(&hi)) => SearchAction::Profile(lo as u32, hi as u32),
                        _ => {
                            return Err(interval_coloring::Error::Unsupported(
                                "empty profile range".into(),
                            ))
                        }
                    }
                }
                _ => {
                    return Err(interval_coloring::Error::Unsupported(
                        "choose exactly one of --t, --stat, --profile".into(),
                    ))
                }
            };
            let source = cli::load_graph(family.as_deref(), params.as_deref(), input.as_deref())?;
            let cfg = cli::search_config(max_nodes, time_budget_secs);
            cli::run_search(
                source,
                action,
                &cfg,
                cert_out.as_deref(),
                record_out.as_deref(),
            )
        }
        Command::Bounds {
            family,
            params,
            record_out,
        } => cli::run_bounds(&family, &params, record_out.as_deref()),
        Command::Matrix {
            family,
            params,
            mode,
            record_out,
        } => cli::run_matrix(
            &family,
            mode.parse::<Mode>()?,
            &params,
            record_out.as_deref(),
        ),
        Command::ExportDot { cert, out } => cli::run_export_dot(&cert, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap handles --help/--version with success; everything else is
            // a usage error under the exit-code contract.
            if err.use_stderr() {
                eprint!("{err}");
                return ExitCode::from(cli::EXIT_USAGE as u8);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(cli::EXIT_USAGE as u8)
        }
    }
}
