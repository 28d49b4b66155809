//! `isk4`: command-line front end for recognition, decomposition and
//! 3-coloring.
//!
//! Exit codes: 0 success, 1 negative verdict, 2 malformed input, 3 budget
//! exceeded or undecided, 4 classification failure.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use isk4_core::coloring::{chi_exact, DEFAULT_ORACLE_BUDGET};
use isk4_core::cutsets::build_clique_tree;
use isk4_core::generators::{generate, GeneratorKind};
use isk4_core::io::{coloring_lines, read_graph, write_dimacs, Format};
use isk4_core::patterns::{verify_membership, Verdict, DEFAULT_EXACT_BUDGET};
use isk4_core::pipeline::{color_class_member_with, verify_certificate, ColoringCertificate, PipelineOptions};
use isk4_core::recognition::{classify_basic, Branch};
use isk4_core::{Error, Graph};

#[derive(Parser)]
#[command(name = "isk4", version, about = "Recognize, decompose and 3-color {ISK4, diamond, bowtie}-free graphs")]
struct Cli {
    /// Input format; by default `.json` files are JSON and anything else DIMACS.
    #[arg(long, global = true, value_enum)]
    format: Option<InputFormat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Dimacs,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a basic graph.
    Recognize { file: PathBuf },
    /// Print the clique-cutset decomposition tree.
    Decompose { file: PathBuf },
    /// Color a class member and print its certificate.
    Color {
        file: PathBuf,
        /// Threads for coloring independent leaves.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Run the membership oracle first and refuse non-members.
        #[arg(long)]
        verify_membership: bool,
        /// Exact-search vertex bound for --verify-membership.
        #[arg(long, env = "ISK4_ORACLE_BUDGET", default_value_t = DEFAULT_EXACT_BUDGET)]
        budget: usize,
        /// Print `v <vertex> <color>` lines instead of the certificate.
        #[arg(long)]
        dimacs: bool,
    },
    /// Check a certificate against a graph.
    Verify { graph: PathBuf, certificate: PathBuf },
    /// Exact chromatic number.
    Chi {
        file: PathBuf,
        #[arg(long, env = "ISK4_ORACLE_BUDGET", default_value_t = DEFAULT_ORACLE_BUDGET)]
        budget: usize,
    },
    /// Write a generated graph in DIMACS format.
    Generate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        size: usize,
    },
    /// Decide membership, with a witness for non-members.
    Membership {
        file: PathBuf,
        #[arg(long, env = "ISK4_ORACLE_BUDGET", default_value_t = DEFAULT_EXACT_BUDGET)]
        budget: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Sp,
    Line,
    Glue,
    Diamond,
    Bowtie,
    Isk4,
}

impl From<Kind> for GeneratorKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Sp => GeneratorKind::SeriesParallel,
            Kind::Line => GeneratorKind::LineOfSubdividedCubic,
            Kind::Glue => GeneratorKind::Glue,
            Kind::Diamond => GeneratorKind::Diamond,
            Kind::Bowtie => GeneratorKind::Bowtie,
            Kind::Isk4 => GeneratorKind::Isk4,
        }
    }
}

const EXIT_NEGATIVE: u8 = 1;
const EXIT_MALFORMED: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_CLASSIFICATION: u8 = 4;

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Malformed(_) | Error::Io(_) | Error::Json(_)) => EXIT_MALFORMED,
        Some(Error::Budget(_)) => EXIT_BUDGET,
        Some(Error::Classification { .. } | Error::Contract(_) | Error::Generation(_)) => EXIT_CLASSIFICATION,
        None => EXIT_MALFORMED,
    }
}

fn load(path: &Path, format: Option<InputFormat>) -> anyhow::Result<Graph> {
    let format = format.map(|f| match f {
        InputFormat::Dimacs => Format::Dimacs,
        InputFormat::Json => Format::Json,
    });
    read_graph(path, format).with_context(|| format!("reading {}", path.display()))
}

/// Writes to stdout; a closed pipe (e.g. `| head`) ends the process quietly.
fn emit(text: &str) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        other => Ok(other?),
    }
}

fn print_json(value: &impl serde::Serialize) -> anyhow::Result<()> {
    emit(&(serde_json::to_string_pretty(value)? + "\n"))
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Recognize { file } => {
            let g = load(&file, cli.format)?;
            let verdict = classify_basic(&g);
            print_json(&verdict)?;
            Ok(if verdict.branch() == Branch::Unclassified { EXIT_NEGATIVE } else { 0 })
        }
        Command::Decompose { file } => {
            let g = load(&file, cli.format)?;
            print_json(&build_clique_tree(&g))?;
            Ok(0)
        }
        Command::Color { file, jobs, verify_membership: check, budget, dimacs } => {
            let g = load(&file, cli.format)?;
            if check {
                let report = verify_membership(&g, budget);
                match report.verdict {
                    Verdict::Member => {}
                    Verdict::Nonmember => {
                        print_json(&report)?;
                        return Ok(EXIT_NEGATIVE);
                    }
                    Verdict::Unknown => {
                        log::error!("membership undecided within budget {budget}");
                        print_json(&report)?;
                        return Ok(EXIT_BUDGET);
                    }
                }
            }
            let opts = PipelineOptions { jobs: jobs.max(1), ..PipelineOptions::default() };
            let cert = color_class_member_with(&g, &opts)?;
            if dimacs {
                emit(&coloring_lines(&cert.coloring))?;
            } else {
                print_json(&cert)?;
            }
            Ok(0)
        }
        Command::Verify { graph, certificate } => {
            let g = load(&graph, cli.format)?;
            let text = std::fs::read_to_string(&certificate)
                .map_err(Error::Io)
                .with_context(|| format!("reading {}", certificate.display()))?;
            let cert: ColoringCertificate = serde_json::from_str(&text)
                .map_err(|e| Error::Malformed(format!("certificate: {e}")))?;
            let valid = verify_certificate(&g, &cert);
            print_json(&json!({ "valid": valid }))?;
            Ok(if valid { 0 } else { EXIT_NEGATIVE })
        }
        Command::Chi { file, budget } => {
            let g = load(&file, cli.format)?;
            let (k, _) = chi_exact(&g, budget)?;
            emit(&format!("{k}\n"))?;
            Ok(0)
        }
        Command::Generate { kind, seed, size } => {
            let g = generate(kind.into(), seed, size)?;
            emit(&write_dimacs(&g)?)?;
            Ok(0)
        }
        Command::Membership { file, budget } => {
            let g = load(&file, cli.format)?;
            let report = verify_membership(&g, budget);
            print_json(&report)?;
            Ok(match report.verdict {
                Verdict::Member => 0,
                Verdict::Nonmember => EXIT_NEGATIVE,
                Verdict::Unknown => EXIT_BUDGET,
            })
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_MALFORMED } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            if let Some(Error::Classification { subgraph, .. }) = e.downcast_ref::<Error>() {
                eprintln!("offending subgraph: {subgraph}");
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
