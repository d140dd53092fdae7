use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand};

use spin_weights::bijection::{verify_all, verify_block, BlockLabel};
use spin_weights::local_reps::{reps_check, PresentationParams};
use spin_weights::partitions::p_bar_core;
use spin_weights::report::ReportDocument;
use spin_weights::signs::{mu_lambda, n_lambda};
use spin_weights::{BarPartition, Error, Sign, SpinContext};

/// Largest `e` accepted by `reps-check`; matrices have size `2^{⌊e/2⌋}`.
const MAX_E: usize = 7;
const MAX_R: usize = 4;

#[derive(Parser)]
#[command(
    name = "spinweights",
    version,
    about = "Spin block labels, signs and weight verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the p-bar-core and weight of a bar partition.
    Core {
        /// Comma-separated strictly decreasing parts.
        #[arg(long)]
        parts: String,
        #[arg(long)]
        p: u64,
    },
    /// Print N_λ^η and μ_λ = (N_λ^η / p).
    Sign {
        #[arg(long)]
        parts: String,
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        eta: Sign,
    },
    /// Verify every spin block at n, or a single one.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        eta: Sign,
        /// p-bar-core of the block to check; empty for the empty core.
        #[arg(long)]
        block: Option<String>,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Add wall-clock time to the JSON report.
        #[arg(long)]
        timing: bool,
    },
    /// Build the local representations for one parameter tuple and check them.
    RepsCheck {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        eta: Sign,
        /// |c|, the norm of the sequence.
        #[arg(long)]
        c: usize,
        #[arg(long)]
        e: usize,
        /// Length of the sequence.
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Pass,
    Fail,
}

fn parse_parts(text: &str) -> anyhow::Result<BarPartition> {
    let parts = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .with_context(|| format!("bad part {s:?}"))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(BarPartition::new(parts)?)
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Core { parts, p } => {
            let lambda = parse_parts(&parts)?;
            let p = spin_weights::OddPrime::new(p)?;
            let (core, w) = p_bar_core(&lambda, p);
            println!("core={core} w={w}");
            Ok(Outcome::Pass)
        }
        Command::Sign { parts, p, eta } => {
            let lambda = parse_parts(&parts)?;
            let ctx = SpinContext::new(p, eta)?;
            println!(
                "N={} mu={}",
                n_lambda(&lambda, ctx),
                mu_lambda(&lambda, ctx)
            );
            Ok(Outcome::Pass)
        }
        Command::Verify {
            n,
            p,
            eta,
            block,
            json,
            jobs,
            timing,
        } => {
            let ctx = SpinContext::new(p, eta)?;
            let start = Instant::now();
            let reports = match block {
                Some(text) => {
                    let kappa = parse_parts(&text)?;
                    vec![verify_block(&BlockLabel::new(kappa, n, ctx)?)?]
                }
                None => verify_all(n, ctx, jobs)?,
            };
            for r in &reports {
                let verdict = if r.passed() { "PASS" } else { "FAIL" };
                let ibr = 2 * r.ibr_nonself + r.ibr_self;
                let weights = 2 * r.weights_sym_minus + r.weights_sym_plus;
                println!(
                    "{} w={} ibr={ibr} weights={weights} {verdict}",
                    r.block, r.w
                );
                if let Some(f) = &r.failure {
                    println!("  first failure: {f}");
                }
                if let Some(note) = &r.note {
                    println!("  note: {note}");
                }
            }
            let mut doc = ReportDocument::new(n, ctx, &reports);
            if timing {
                doc.timing_ms = Some(start.elapsed().as_millis());
            }
            if let Some(path) = json {
                std::fs::write(&path, doc.to_json())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            println!("verdict={}", doc.verdict);
            Ok(if doc.passed() {
                Outcome::Pass
            } else {
                Outcome::Fail
            })
        }
        Command::RepsCheck { p, eta, c, e, r } => {
            if e > MAX_E || r > MAX_R {
                return Err(Error::SizeGuard(format!("need e ≤ {MAX_E} and r ≤ {MAX_R}")).into());
            }
            let ctx = SpinContext::new(p, eta)?;
            let params = PresentationParams::new(ctx, c, r, e)?;
            let summary = match reps_check(&params) {
                Ok(s) => s,
                Err(Error::InconsistentCase(msg)) => {
                    println!("FAIL: {msg}");
                    return Ok(Outcome::Fail);
                }
                Err(other) => return Err(other.into()),
            };
            println!("alphas={}", summary.alphas_checked);
            println!("mu'={}", summary.mu_prime);
            if let Some(mu) = summary.mu_double_prime {
                println!("mu''={mu}");
            }
            println!("mu_psi={}", summary.mu_psi);
            if let Some(cc) = &summary.class_count {
                let degree = cc
                    .nonlinear_degree
                    .map_or("none".to_string(), |d| d.to_string());
                println!(
                    "order={} classes={} linear={} nonlinear={} degree={degree}",
                    cc.order, cc.classes, cc.linear, cc.nonlinear
                );
            }
            let agrees = if e % 2 == 1 {
                summary.mu_prime
            } else {
                summary.mu_double_prime.unwrap_or(-summary.mu_psi)
            } == summary.mu_psi;
            println!("{}", if agrees { "PASS" } else { "FAIL" });
            Ok(if agrees { Outcome::Pass } else { Outcome::Fail })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
