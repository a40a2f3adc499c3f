//! `tww`: generate graphs, compute and verify twin-width certificates, run
//! the exact solver, and drive Monte-Carlo sweeps.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 search budget exhausted.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use twinwidth::constructions::{
    best_upper_bound, lower_bound_min_symdiff, paley_sequence, theorem1_bound, theorem1_sequence,
    theorem2_bound, theorem2_sequence,
};
use twinwidth::exact::{exact_twinwidth, ExactResult, DEFAULT_NODE_BUDGET};
use twinwidth::generators::GraphFamilySpec;
use twinwidth::lattice::{
    binomial, count_crossing_paths, crossing_probability, crossing_probability_bound, LatticeQuery,
};
use twinwidth::sequence::apply_sequence;
use twinwidth::trigraph::Trigraph;
use twinwidth::DEFAULT_SEED;

use twinwidth_cli::experiment::{
    run_experiment, to_csv, ExperimentConfig, ExperimentKind, ProbabilityRule,
};
use twinwidth_cli::formats;

const EXIT_VERIFICATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "tww",
    version,
    about = "Twin-width certificates, bounds, and experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph file for a family spec (e.g. paley:13, gnp:50:0.5:42).
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the pair lower bound, each construction's verified width, and
    /// the bound formula values.
    Bound {
        #[command(flatten)]
        input: GraphInput,
        /// Seed for the randomized construction.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Write the best certificate found.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact twin-width by branch and bound.
    Exact {
        #[command(flatten)]
        input: GraphInput,
        /// Search-node budget.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Write the certificate.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a certificate against a graph and print the achieved width.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        seq: PathBuf,
        /// Fail (exit 1) when the replayed width exceeds this.
        #[arg(long)]
        expect_width: Option<u32>,
    },
    /// Build the optimal Paley certificate and confirm width (q-1)/2.
    Paley {
        #[arg(long)]
        q: u64,
        /// Write the certificate.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lattice-path crossing count, exact probability, and closed bound.
    Lattice {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        t: i64,
    },
    /// Run a Monte-Carlo sweep and emit CSV.
    Experiment {
        /// theorem3 | regimes | bound-scan | paley-table
        #[arg(long)]
        kind: ExperimentKind,
        /// Comma-separated sizes (field orders for paley-table).
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        /// Edge probability rule: a constant, n^gamma, or c/n.
        #[arg(long, default_value = "0.5")]
        p: ProbabilityRule,
        #[arg(long, default_value_t = 0.1)]
        epsilon: f64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Edge-list graph file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Family spec built in memory.
    #[arg(long)]
    family: Option<String>,
}

impl GraphInput {
    fn load(&self) -> Result<Trigraph, CliFailure> {
        if let Some(path) = &self.graph {
            return Ok(formats::read_graph(path)?);
        }
        let spec: GraphFamilySpec = self
            .family
            .as_deref()
            .expect("clap enforces one input")
            .parse()
            .map_err(|e| CliFailure::usage(format!("{e}")))?;
        spec.build().map_err(|e| CliFailure::usage(format!("{e}")))
    }
}

struct CliFailure {
    code: u8,
    message: String,
}

impl CliFailure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn verification(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_VERIFICATION,
            message: message.into(),
        }
    }

    fn budget(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_BUDGET,
            message: message.into(),
        }
    }
}

impl From<formats::FormatError> for CliFailure {
    fn from(e: formats::FormatError) -> Self {
        CliFailure::usage(e.to_string())
    }
}

impl From<twinwidth::constructions::ConstructionError> for CliFailure {
    fn from(e: twinwidth::constructions::ConstructionError) -> Self {
        CliFailure::usage(e.to_string())
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), CliFailure> {
    match out {
        Some(path) => formats::write_text(path, text).map_err(Into::into),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("TWW_THREADS") {
        if let Ok(threads) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.max(1))
                .build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliFailure> {
    match cli.command {
        Command::Gen { family, out } => {
            let spec: GraphFamilySpec = family
                .parse()
                .map_err(|e| CliFailure::usage(format!("{e}")))?;
            let g = spec
                .build()
                .map_err(|e| CliFailure::usage(format!("{e}")))?;
            emit(&out, &formats::format_graph(&g))
        }
        Command::Bound { input, seed, out } => {
            let g = input.load()?;
            let (n, m) = (g.vertex_count(), g.edge_count());
            println!("graph: n={n} m={m}");
            if n >= 2 {
                println!(
                    "lower bound (min pair symmetric difference): {}",
                    lower_bound_min_symdiff(&g)?
                );
            }
            let t1 = theorem1_sequence(&g, seed, 50)?;
            println!(
                "theorem1: width {} vs bound {:.4}{}",
                t1.width,
                theorem1_bound(n),
                if t1.bound_met { "" } else { "  [bound missed]" }
            );
            let t2 = theorem2_sequence(&g)?;
            if m > 0 {
                println!(
                    "theorem2: width {} vs bound {:.4}{}",
                    t2.width,
                    theorem2_bound(m),
                    if t2.bound_met { "" } else { "  [bound missed]" }
                );
            } else {
                println!("theorem2: width {} (no edges)", t2.width);
            }
            let best = best_upper_bound(&g)?;
            println!("best construction: width {}", best.width);
            if let Some(path) = out {
                formats::write_text(&path, &formats::format_certificate(&best.sequence))?;
            }
            Ok(())
        }
        Command::Exact { input, budget, out } => {
            let g = input.load()?;
            match exact_twinwidth(&g, budget)? {
                ExactResult::Exact { width, certificate } => {
                    println!("twin-width: {width}");
                    if let Some(path) = out {
                        formats::write_text(&path, &formats::format_certificate(&certificate))?;
                    }
                    Ok(())
                }
                ExactResult::Unknown {
                    lower,
                    upper,
                    certificate,
                } => {
                    println!("unknown: twin-width in [{lower}, {upper}]");
                    if let Some(path) = out {
                        formats::write_text(&path, &formats::format_certificate(&certificate))?;
                    }
                    Err(CliFailure::budget(format!(
                        "search budget exhausted; best bracket [{lower}, {upper}]"
                    )))
                }
            }
        }
        Command::Verify {
            graph,
            seq,
            expect_width,
        } => {
            let g = formats::read_graph(&graph)?;
            let sequence = formats::read_certificate(&seq)?;
            let report = apply_sequence(&g, &sequence)
                .map_err(|e| CliFailure::verification(e.to_string()))?;
            println!(
                "width: {} over {} steps (surviving vertices: {})",
                report.width,
                sequence.len(),
                report.preimage_sizes.len()
            );
            if let Some(cap) = expect_width {
                if report.width > cap {
                    return Err(CliFailure::verification(format!(
                        "replayed width {} exceeds expected {cap}",
                        report.width
                    )));
                }
            }
            Ok(())
        }
        Command::Paley { q, out } => {
            let bs = paley_sequence(q)?;
            let paley_graph =
                twinwidth::generators::paley(q).map_err(|e| CliFailure::usage(e.to_string()))?;
            let lower = lower_bound_min_symdiff(&paley_graph)?;
            let target = (q - 1) / 2;
            println!(
                "paley({q}): width {} = lower bound {lower} = (q-1)/2 = {target}",
                bs.width
            );
            if let Some(path) = out {
                formats::write_text(&path, &formats::format_certificate(&bs.sequence))?;
            }
            if bs.width as u64 != target || lower as u64 != target {
                return Err(CliFailure::verification(format!(
                    "width {} and lower bound {lower} must both equal {target}",
                    bs.width
                )));
            }
            Ok(())
        }
        Command::Lattice { a, b, t } => {
            let query = LatticeQuery::new(a, b, t);
            println!("paths to ({a},{b}): {}", binomial(a + b, a as i64));
            println!("crossing y = x + {t}: {}", count_crossing_paths(query));
            if t >= 1 {
                let exact = crossing_probability(query);
                println!("exact probability: {}/{}", exact.numer(), exact.denom());
                println!("closed bound: {}", crossing_probability_bound(query));
            }
            Ok(())
        }
        Command::Experiment {
            kind,
            n,
            p,
            epsilon,
            samples,
            seed,
            out,
        } => {
            let config = ExperimentConfig {
                kind,
                n_values: n,
                p_rule: p,
                epsilon,
                samples,
                master_seed: seed,
            };
            let records = run_experiment(&config).map_err(|e| CliFailure::usage(e.to_string()))?;
            emit(&out, &to_csv(&records))
        }
    }
}
