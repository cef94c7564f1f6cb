use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use heckechar::applications::{bitrace, BitraceMethod, BitraceQuery};
use heckechar::arith::LaurentPoly;
use heckechar::characters::{character, char_table, Algorithm, CharQuery, CharTable, TableEntry};
use heckechar::combinatorics::{Composition, Partition};
use heckechar::verify::{parse_suites, run_suite};
use heckechar::Error;

#[derive(Parser)]
#[command(name = "heckechar", version, about = "Exact character values of type-A Hecke algebras")]
struct Cli {
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// One character value χ^λ_μ(q).
    Char {
        #[arg(long)]
        lambda: String,
        /// Parts in any order.
        #[arg(long)]
        mu: String,
        #[arg(long, default_value = "auto")]
        algorithm: String,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// The full character table for one n.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "auto")]
        algorithm: String,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        /// Cache directory; overrides HECKECHAR_CACHE.
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long, conflicts_with = "cache")]
        no_cache: bool,
    },
    /// The bitrace btr(λ, μ)(q); both arguments may be compositions.
    Bitrace {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, default_value = "matrices")]
        method: String,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Runs the self-verification suites.
    Verify {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        /// Comma-separated: golden, cross, classical, apps or all.
        #[arg(long, default_value = "all")]
        suites: String,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Times full-table computation per algorithm.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "mn,strips,oracle")]
        algorithms: String,
        #[arg(long, default_value_t = 3)]
        repetitions: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
}

/// Failure classes mapped to exit statuses.
enum Outcome {
    Usage(anyhow::Error),
    Failed(anyhow::Error),
}

impl From<anyhow::Error> for Outcome {
    fn from(e: anyhow::Error) -> Self {
        let usage = e.chain().any(|c| {
            matches!(
                c.downcast_ref::<Error>(),
                Some(
                    Error::WeightMismatch { .. }
                        | Error::Parse(_)
                        | Error::OutOfRange(_)
                        | Error::NotApplicable { .. }
                        | Error::NotContained { .. }
                )
            )
        });
        if usage {
            Outcome::Usage(e)
        } else {
            Outcome::Failed(e)
        }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

fn poly_text(p: &LaurentPoly, format: Format) -> String {
    match format {
        Format::Latex => p.to_latex("q"),
        _ => p.to_plain("q"),
    }
}

fn latex_partition(p: &Partition) -> String {
    format!("({})", p.to_text())
}

fn default_cache_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os("HECKECHAR_CACHE") {
        return Some(PathBuf::from(dir));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("heckechar"))
}

fn parse_lambda(s: &str) -> Result<Partition> {
    s.parse::<Partition>().with_context(|| format!("--lambda {s:?} must be a weakly decreasing partition"))
}

fn parse_composition(s: &str, flag: &str) -> Result<Composition> {
    s.parse::<Composition>().with_context(|| format!("{flag} {s:?}"))
}

fn run(cli: Cli) -> std::result::Result<(), Outcome> {
    match cli.command {
        Command::Char {
            lambda,
            mu,
            algorithm,
            format,
        } => {
            let lambda = parse_lambda(&lambda)?;
            let mu = parse_composition(&mu, "--mu")?.to_partition();
            let algorithm: Algorithm = algorithm.parse()?;
            let query = CharQuery::new(lambda.clone(), mu.clone(), algorithm)?;
            let value = character(&query)?;
            match format {
                Format::Json => {
                    let entry = TableEntry {
                        algorithm: algorithm.resolve(&lambda),
                        lambda,
                        mu,
                        poly: value,
                    };
                    println!("{}", serde_json::to_string_pretty(&entry).context("serializing")?);
                }
                Format::Latex => println!(
                    "\\chi^{{{}}}_{{{}}}(q) = {}",
                    latex_partition(&lambda),
                    latex_partition(&mu),
                    value.to_latex("q")
                ),
                Format::Plain => println!("{}", value.to_plain("q")),
            }
        }
        Command::Table {
            n,
            algorithm,
            format,
            cache,
            no_cache,
        } => {
            let algorithm: Algorithm = algorithm.parse()?;
            let dir = if no_cache { None } else { cache.or_else(default_cache_dir) };
            let table = match dir {
                Some(dir) => CharTable::cached(n, algorithm, &dir)?,
                None => char_table(n, algorithm)?,
            };
            match format {
                Format::Json => print!("{}", table.to_json()),
                Format::Latex => {
                    for (l, m, v) in table.iter() {
                        println!("\\chi^{{{}}}_{{{}}}(q) = {}", latex_partition(l), latex_partition(m), v.to_latex("q"));
                    }
                }
                Format::Plain => {
                    for (l, m, v) in table.iter() {
                        println!("{l}\t{m}\t{}", v.to_plain("q"));
                    }
                }
            }
        }
        Command::Bitrace {
            lambda,
            mu,
            method,
            format,
        } => {
            let method: BitraceMethod = method.parse()?;
            let query = BitraceQuery::new(
                parse_composition(&lambda, "--lambda")?,
                parse_composition(&mu, "--mu")?,
            )?;
            let value = bitrace(&query, method)?;
            match format {
                Format::Json => {
                    let doc = json!({
                        "lambda": query.lambda.parts(),
                        "mu": query.mu.parts(),
                        "method": method.name(),
                        "poly": value,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).context("serializing")?);
                }
                f => println!("{}", poly_text(&value, f)),
            }
        }
        Command::Verify { n_max, suites, format } => {
            let suites = parse_suites(&suites)?;
            let reports: Vec<_> = suites.iter().map(|&s| run_suite(s, n_max)).collect();
            let ok = reports.iter().all(|r| r.passed());
            if matches!(format, Format::Json) || !ok {
                let doc = json!({ "passed": ok, "suites": reports });
                println!("{}", serde_json::to_string_pretty(&doc).context("serializing")?);
            } else {
                for r in &reports {
                    println!("{}: PASS ({} checks, n <= {})", r.suite, r.checks, r.n_max);
                }
            }
            if !ok {
                for r in reports.iter().filter(|r| !r.passed()) {
                    eprintln!("{}: FAIL ({} of {} checks)", r.suite, r.failures.len(), r.checks);
                }
                return Err(Outcome::Failed(anyhow::anyhow!("verification failed")));
            }
        }
        Command::Bench {
            n,
            algorithms,
            repetitions,
            format,
        } => {
            let algorithms: Vec<Algorithm> = algorithms
                .split(',')
                .map(|a| a.trim().parse())
                .collect::<std::result::Result<_, _>>()?;
            let mut rows = Vec::new();
            for a in algorithms {
                let mut times = Vec::new();
                for _ in 0..repetitions.max(1) {
                    heckechar::clear_caches();
                    let start = Instant::now();
                    char_table(n, a)?;
                    times.push(start.elapsed().as_secs_f64() * 1e3);
                }
                let best = times.iter().copied().fold(f64::INFINITY, f64::min);
                let mean = times.iter().sum::<f64>() / times.len() as f64;
                rows.push((a, best, mean));
            }
            match format {
                Format::Json => {
                    let doc: Vec<_> = rows
                        .iter()
                        .map(|(a, best, mean)| json!({ "algorithm": a.name(), "n": n, "best_ms": best, "mean_ms": mean }))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&doc).context("serializing")?);
                }
                _ => {
                    for (a, best, mean) in rows {
                        println!("{a}\tn={n}\tbest {best:.3} ms\tmean {mean:.3} ms");
                    }
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("warning: {e}");
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Outcome::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Outcome::Failed(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
