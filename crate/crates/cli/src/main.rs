use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mdcolor::FamilySpec;
use mdcolor_cli::input::GraphFormat;
use mdcolor_cli::{run, Command, GraphSource, OutputFormat, RunConfig, Status, Suite};

/// Majority dominator colorings: exact solver, verifier and bound checks.
#[derive(Parser)]
#[command(name = "mdcolor", version)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Search node budget per solve (unlimited when absent).
    #[arg(long, env = "MDCOLOR_BUDGET", global = true)]
    budget: Option<u64>,
    /// Seed for random populations.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Dimacs,
    Edgelist,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Graph file (DIMACS .col or edge list).
    input: Option<PathBuf>,
    /// Family instance such as `path:13` or `bipartite:3,5`.
    #[arg(long)]
    family: Option<FamilySpec>,
}

#[derive(Args)]
struct SourceArgs {
    #[command(flatten)]
    source: Source,
    /// Input format; guessed from the extension when absent.
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
}

impl SourceArgs {
    fn into_source(self) -> GraphSource {
        match (self.source.input, self.source.family) {
            (Some(path), _) => {
                let format = match self.input_format {
                    Some(InputFormat::Dimacs) => GraphFormat::Dimacs,
                    Some(InputFormat::Edgelist) => GraphFormat::Edgelist,
                    None => GraphFormat::from_path(&path),
                };
                GraphSource::File { path, format }
            }
            (None, Some(spec)) => GraphSource::Family(spec),
            (None, None) => unreachable!("clap requires one source"),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute χ_md with a witness and the classical bounds.
    Solve(SourceArgs),
    /// Check a coloring file (one color per vertex).
    Verify {
        #[command(flatten)]
        graph: SourceArgs,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Closed-form value and explicit witness for a family instance.
    Family { spec: FamilySpec },
    /// Run bound and characterization suites.
    Check {
        /// Suite to run (repeatable); all suites when absent.
        #[arg(long = "suite", value_parser = parse_suite)]
        suites: Vec<Suite>,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Random graphs per (order 7..12, p in {0.2, 0.5, 0.8}).
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
    /// List graphs with χ_md = χ_d.
    Explore {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    Suite::from_name(s).ok_or_else(|| {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite {s:?}; expected one of {}", names.join(", "))
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                Status::InputError as u8
            } else {
                0
            });
        }
    };
    let command = match cli.command {
        Cmd::Solve(src) => Command::Solve(src.into_source()),
        Cmd::Verify { graph, coloring } => Command::Verify {
            graph: graph.into_source(),
            coloring,
        },
        Cmd::Family { spec } => Command::Family(spec),
        Cmd::Check {
            suites,
            max_n,
            samples,
        } => Command::Check {
            suites,
            max_n,
            samples,
        },
        Cmd::Explore { max_n } => Command::Explore { max_n },
    };
    let config = RunConfig {
        command,
        format: match cli.format {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        },
        budget: cli.budget,
        seed: cli.seed,
    };
    let report = run(&config);
    for d in &report.diagnostics {
        eprintln!("{d}");
    }
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, &report.body) {
                eprintln!("error: writing {}: {e}", path.display());
                return ExitCode::from(Status::InputError as u8);
            }
        }
        None => print!("{}", report.body),
    }
    ExitCode::from(report.status as u8)
}
