//! Command-line front end: run `.prox` scripts and print law reports.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use proxdual::dsl::{self, RunOptions};
use proxdual::laws::CATALOG;
use proxdual::{CheckOptions, LawReport, Strategy};

/// Exit code for parse and configuration errors.
const CONFIG_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "proxdual", version, about = "Check proximity and set-algebra laws on symbolic universes")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a script and emit one report per checked law.
    Run(RunArgs),
    /// Parse and evaluate a script's declarations without running commands.
    Parse { file: PathBuf },
    /// Print a script in canonical form.
    Fmt { file: PathBuf },
    /// List law ids and their argument kinds.
    Laws,
}

#[derive(clap::Args)]
struct RunArgs {
    file: PathBuf,
    /// Seed for sampled probe families (used with --samples).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Levels probed for chains no rule decides.
    #[arg(long, default_value_t = 16)]
    depth: usize,
    /// Probe with this many seeded random sets instead of the default family.
    #[arg(long)]
    samples: Option<usize>,
    /// Worker threads for case scanning.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Stop each check at its first violation.
    #[arg(long)]
    first_counterexample: bool,
    /// Write reports here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record wall-clock time in elapsed_ms.
    #[arg(long)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(CONFIG_ERROR)
        }
    }
}

fn load(file: &PathBuf) -> Result<dsl::Program> {
    let src = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    dsl::parse(&src).with_context(|| file.display().to_string())
}

fn execute(cli: Cli) -> Result<u8> {
    match cli.command {
        Cmd::Laws => {
            for law in CATALOG {
                println!("{:<20} {:<16} {}", law.id, law.signature(), law.summary);
            }
            Ok(0)
        }
        Cmd::Fmt { file } => {
            print!("{}", dsl::render(&load(&file)?));
            Ok(0)
        }
        Cmd::Parse { file } => {
            let program = load(&file)?;
            dsl::elaborate(&program).with_context(|| file.display().to_string())?;
            println!(
                "{} declarations, {} commands",
                program.declarations().count(),
                program.commands().count()
            );
            Ok(0)
        }
        Cmd::Run(args) => run(args),
    }
}

fn run(args: RunArgs) -> Result<u8> {
    let program = load(&args.file)?;
    let check = CheckOptions {
        strategy: args.samples.map(|n| Strategy::Sampled { seed: args.seed, n }),
        depth: args.depth,
        first_counterexample: args.first_counterexample,
    };
    let opts = RunOptions { check, timings: args.timings };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = args.jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = pool.build().context("starting worker threads")?;
    let output = pool
        .install(|| dsl::run(&program, &opts))
        .with_context(|| args.file.display().to_string())?;
    for (path, dot) in &output.dots {
        fs::write(path, dot).with_context(|| format!("writing {path}"))?;
    }
    let rendered = render(&output.reports, args.format)?;
    match &args.out {
        Some(path) => fs::write(path, rendered).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(output.exit_code() as u8)
}

fn render(reports: &[LawReport], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(reports)? + "\n",
        Format::Text => reports.iter().map(|r| format!("{r}\n")).collect(),
    })
}
