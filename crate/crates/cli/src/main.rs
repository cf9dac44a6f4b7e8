//! `cevian`: construct, check and fuzz cevian configurations.

mod config;
mod error;
mod render;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cevian::suite::{self, run_checks, run_suite, Filter, Status, MAX_COUNT};
use clap::{Parser, Subcommand};

use crate::config::ConfigFile;
use crate::error::CliError;
use crate::report::{to_json, FuzzReport, Report};

#[derive(Debug, Parser)]
#[command(name = "cevian", version, about = "Exact cevian-configuration geometry: reports, checks and figures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Derive every named object of a configuration and write the report.
    Construct {
        #[arg(long)]
        input: PathBuf,
        /// Report path; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run theorem checks on one configuration.
    Check {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated glob patterns over check ids.
        #[arg(long, default_value = "")]
        theorems: String,
        /// Also write the full report with check results.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the checks over seeded random configurations.
    Fuzz {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Coordinate bound N: rationals n/d with |n| <= N, 1 <= d <= N.
        #[arg(long, default_value_t = suite::sampler::DEFAULT_BOUND)]
        bound: i64,
        #[arg(long, default_value = "")]
        theorems: String,
        /// Aggregate report path; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn filter(patterns: &str) -> Result<Filter, CliError> {
    let f = Filter::parse(patterns).map_err(|e| CliError::Usage(e.to_string()))?;
    f.select().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(f)
}

fn load(path: &Path) -> Result<(ConfigFile, cevian::CevianConfig), CliError> {
    let file = ConfigFile::from_json(&read(path)?)?;
    let cfg = file.build()?;
    Ok((file, cfg))
}

fn verdict(fails: usize) -> ExitCode {
    if fails == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Construct { input, output, svg } => {
            let (file, cfg) = load(&input)?;
            emit(output.as_deref(), &to_json(&Report::build(&file, &cfg, None)))?;
            if let Some(svg) = svg {
                write(&svg, &render::render(&cfg))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { input, theorems, output } => {
            let f = filter(&theorems)?;
            let (file, cfg) = load(&input)?;
            let results = run_checks(&cfg, &f).map_err(|e| CliError::Usage(e.to_string()))?;
            let mut fails = 0;
            let (mut pass, mut skipped) = (0, 0);
            for r in &results {
                match &r.status {
                    Status::Pass => pass += 1,
                    Status::Skipped(why) => {
                        skipped += 1;
                        println!("SKIP {} ({why})", r.id);
                    }
                    Status::Fail(w) => {
                        fails += 1;
                        println!("FAIL {}: {w}", r.id);
                    }
                }
            }
            println!("{pass} passed, {skipped} skipped, {fails} failed");
            if let Some(out) = output {
                write(&out, &to_json(&Report::build(&file, &cfg, Some(&results))))?;
            }
            Ok(verdict(fails))
        }
        Command::Fuzz { seed, count, bound, theorems, output } => {
            if count == 0 || count > MAX_COUNT {
                return Err(CliError::Usage(format!("--count must be in 1..={MAX_COUNT}, got {count}")));
            }
            let f = filter(&theorems)?;
            let rep = run_suite(seed, count, bound, &f).map_err(|e| CliError::Usage(e.to_string()))?;
            for (i, r) in rep.failures() {
                if let Status::Fail(w) = &r.status {
                    eprintln!("FAIL config {i} {}: {w}", r.id);
                }
            }
            let t = rep.total();
            eprintln!(
                "seed {seed}, {count} configs, {} checks: {} passed, {} skipped, {} failed",
                rep.summary.len(),
                t.pass,
                t.skipped,
                t.fail
            );
            emit(output.as_deref(), &to_json(&FuzzReport::build(&rep)))?;
            Ok(verdict(t.fail))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
