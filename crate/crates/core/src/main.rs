//! Command-line driver: single-digraph analysis, the exhaustive
//! verification harnesses, and filtered digraph enumeration.
//!
//! Exit codes: 0 on success with zero violations, 1 when a harness finds
//! violations, 2 on bad input, 3 on internal or budget errors.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use braid_deform::digraph::{enumerate_digraphs, Digraph};
use braid_deform::signed_graph::sign_map;
use braid_deform::verify;
use braid_deform::Error;

/// Environment variable fixing the worker-thread count (default: all cores).
const WORKERS_ENV: &str = "BRAID_DEFORM_WORKERS";

#[derive(Parser)]
#[command(
    name = "braid-deform",
    about = "Digraph-indexed braid arrangement deformations: analysis and exhaustive verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a single digraph at level k and print the full report.
    Analyze(AnalyzeArgs),
    /// Run an exhaustive verification harness.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Stream all digraphs on n vertices in the text format.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Input digraph: a file path, or inline JSON like {"n":3,"edges":[[0,1]]}.
    #[arg(long)]
    input: String,
    /// Deformation level.
    #[arg(long, default_value_t = 0)]
    k: u32,
    /// Emit the report as JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// (A1)/(A2) numbering exists ⟺ signed eliminable and no forbidden triple,
    /// over all digraphs on n vertices.
    PropChar {
        #[arg(long)]
        n: usize,
    },
    /// Characteristic polynomials of the three obstruction patterns match
    /// their closed forms for k ≤ k-max, with irreducible quadratic factors.
    Lemma {
        #[arg(long = "k-max", default_value_t = 2)]
        k_max: u32,
    },
    /// Every (A1)/(A2)-satisfying digraph has a coned characteristic
    /// polynomial splitting over the nonnegative integers.
    Factorization {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: u32,
    },
    /// Localizing the cone at a triple matches the coned induced subgraph,
    /// as hyperplane sets and characteristic polynomials.
    Localization {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        k: u32,
        /// Check every digraph even for n = 5 (default: stride sample).
        #[arg(long)]
        exhaustive: bool,
    },
    /// Ten-case classification of liftings of signed graphs on 3 vertices.
    TenCases,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Keep only digraphs matching the predicate.
    #[arg(long, value_enum)]
    filter: Option<EnumerateFilter>,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateFilter {
    /// Some numbering satisfies (A1)/(A2).
    A1a2,
    /// Contains a forbidden triple.
    Forbidden,
    /// The signed graph is signed eliminable.
    Eliminable,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(workers) = std::env::var(WORKERS_ENV) {
        match workers.parse::<usize>() {
            Ok(count) if count > 0 => {
                if let Err(e) = rayon::ThreadPoolBuilder::new()
                    .num_threads(count)
                    .build_global()
                {
                    eprintln!("warning: could not configure {count} workers: {e}");
                }
            }
            _ => eprintln!("warning: ignoring invalid {WORKERS_ENV}={workers}"),
        }
    }
    match run(cli) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidInput(_) | Error::Parse(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn run(cli: Cli) -> Result<usize, Error> {
    match cli.command {
        Command::Analyze(args) => {
            let g = read_digraph(&args.input)?;
            let report = verify::analyze(&g, args.k)?;
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report)
                        .map_err(|e| Error::Internal(e.to_string()))?
                );
            } else {
                println!("{report}");
            }
            Ok(0)
        }
        Command::Verify(cmd) => run_verify(cmd),
        Command::Enumerate(args) => {
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            let mut first = true;
            for g in enumerate_digraphs(args.n)? {
                let keep = match args.filter {
                    None => true,
                    Some(EnumerateFilter::A1a2) => g.find_a1_a2_ordering().is_some(),
                    Some(EnumerateFilter::Forbidden) => g.find_forbidden_triple().is_some(),
                    Some(EnumerateFilter::Eliminable) => {
                        sign_map(&g).find_elimination_ordering().is_some()
                    }
                };
                if keep {
                    if !first {
                        writeln!(out).map_err(|e| Error::Internal(e.to_string()))?;
                    }
                    write!(out, "{}", g.to_text_format())
                        .map_err(|e| Error::Internal(e.to_string()))?;
                    first = false;
                }
            }
            Ok(0)
        }
    }
}

fn run_verify(cmd: VerifyCommand) -> Result<usize, Error> {
    match cmd {
        VerifyCommand::PropChar { n } => {
            let progress = |done: u64, total: u64| {
                eprintln!("prop-char: {done}/{total} digraphs checked");
            };
            let callback: Option<&(dyn Fn(u64, u64) + Sync)> =
                if n >= 5 { Some(&progress) } else { None };
            let summary = verify::verify_proposition_char(n, callback)?;
            report(&summary.to_string(), &summary.violations)
        }
        VerifyCommand::Lemma { k_max } => {
            let summary = verify::verify_lemma_vectors(k_max)?;
            report(&summary.to_string(), &summary.violations)
        }
        VerifyCommand::Factorization { n, k } => {
            let summary = verify::verify_factorization(n, k)?;
            report(&summary.to_string(), &summary.violations)
        }
        VerifyCommand::Localization { n, k, exhaustive } => {
            let summary = verify::verify_localization(n, k, exhaustive)?;
            report(&summary.to_string(), &summary.violations)
        }
        VerifyCommand::TenCases => {
            let summary = verify::verify_ten_cases()?;
            report(&summary.to_string(), &summary.violations)
        }
    }
}

fn report(summary: &str, violations: &[String]) -> Result<usize, Error> {
    println!("{summary}");
    for v in violations {
        println!("VIOLATION: {v}");
    }
    Ok(violations.len())
}

/// Accepts inline JSON (starting with `{`), a path to a JSON file, or a
/// path to the text format.
fn read_digraph(input: &str) -> Result<Digraph, Error> {
    let trimmed = input.trim_start();
    let content = if trimmed.starts_with('{') {
        trimmed.to_string()
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| Error::InvalidInput(format!("cannot read {input}: {e}")))?
    };
    let body = content.trim_start();
    if body.starts_with('{') {
        serde_json::from_str(body).map_err(|e| Error::Parse(format!("bad digraph JSON: {e}")))
    } else {
        Digraph::from_text_format(&content)
    }
}
