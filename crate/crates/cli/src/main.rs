use std::fs::{self, File, OpenOptions};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use vizdom::family::FamilySpec;
use vizdom::io::{parse_arc_list, write_arc_list};
use vizdom::product::{cartesian_product, direct_product};
use vizdom::record::Verdict;
use vizdom::solve::{compute_invariants, SolveConfig};
use vizdom::verify::{default_suite, run_suite, search_acyclic_problem, CheckConfig, RunOptions, SuiteConfig};
use vizdom::Digraph;

#[derive(Parser)]
#[command(name = "vizdom", version, about = "Domination and packing in digraphs and their products")]
struct Cli {
    /// Per-solve wall-clock limit in milliseconds (0 = unbounded).
    #[arg(long, global = true)]
    timeout_ms: Option<u64>,
    /// Base seed for random instances.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for `verify` (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Write output here instead of stdout. Record streams are appended.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Omit wall-clock timings so output is byte-stable.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute γ, γ_t, ρ and ρ° with witnesses, as JSON.
    Invariants {
        /// Arc-list file or family spec.
        input: Option<String>,
        /// Family spec such as `Gm:3` or `cycle:5`.
        #[arg(long, conflicts_with = "input")]
        family: Option<String>,
    },
    /// Build a Cartesian or direct product and write it as an arc list.
    Product {
        #[arg(value_enum)]
        op: ProductOp,
        /// Left factor: arc-list file or family spec.
        lhs: String,
        /// Right factor: arc-list file or family spec.
        rhs: String,
    },
    /// Write a family member as an arc list.
    Family {
        /// Family spec such as `Hm:3`, `C4:0202` or `ditree:n=6,seed=42,w=1/1/1`.
        spec: String,
    },
    /// Run a verification suite and emit one JSON record per line.
    Verify {
        /// Suite config file; the built-in suite is used when omitted.
        config: Option<PathBuf>,
        /// Print the built-in suite config and exit.
        #[arg(long)]
        print_default: bool,
    },
    /// Compare ρ and γ on acyclic digraphs: exhaustive for small n, then random.
    SearchAcyclic {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Number of random DAGs after the exhaustive pass.
        #[arg(long, default_value_t = 1000)]
        budget: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductOp {
    Cart,
    Direct,
}

fn timeout(ms: Option<u64>) -> Option<Option<Duration>> {
    ms.map(|ms| (ms > 0).then(|| Duration::from_millis(ms)))
}

/// An existing file is read as an arc list; anything else is a family spec.
fn load(input: &str) -> Result<(String, Digraph)> {
    let path = Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        let d = parse_arc_list(&text).with_context(|| format!("parsing {input}"))?;
        let id = path.file_stem().map_or(input.to_string(), |s| s.to_string_lossy().into_owned());
        return Ok((id, d));
    }
    let spec: FamilySpec = input
        .parse()
        .with_context(|| format!("{input} is neither a readable file nor a family spec"))?;
    Ok((spec.to_string(), spec.build()?))
}

fn output(out: &Option<PathBuf>, append: bool) -> Result<Box<dyn Write>> {
    Ok(match out {
        None => Box::new(BufWriter::new(io::stdout().lock())),
        Some(path) => {
            let file = if append {
                OpenOptions::new().create(true).append(true).open(path)
            } else {
                File::create(path)
            };
            Box::new(BufWriter::new(file.with_context(|| format!("opening {}", path.display()))?))
        }
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let mut solve = SolveConfig::default();
    if let Some(t) = timeout(cli.timeout_ms) {
        solve.timeout = t;
    }
    match cli.command {
        Command::Invariants { input, family } => {
            let Some(input) = family.or(input) else {
                bail!("give an arc-list file or --family SPEC");
            };
            let (id, d) = load(&input)?;
            let report = compute_invariants(&id, &d, &solve, !cli.no_timing);
            let mut out = output(&cli.out, false)?;
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
            out.flush()?;
        }
        Command::Product { op, lhs, rhs } => {
            let (_, g) = load(&lhs)?;
            let (_, h) = load(&rhs)?;
            let (p, _) = match op {
                ProductOp::Cart => cartesian_product(&g, &h)?,
                ProductOp::Direct => direct_product(&g, &h)?,
            };
            let mut out = output(&cli.out, false)?;
            out.write_all(write_arc_list(&p).as_bytes())?;
            out.flush()?;
        }
        Command::Family { spec } => {
            let spec: FamilySpec = spec.parse()?;
            let mut out = output(&cli.out, false)?;
            out.write_all(write_arc_list(&spec.build()?).as_bytes())?;
            out.flush()?;
        }
        Command::Verify { config, print_default } => {
            if print_default {
                print!("{}", vizdom::verify::DEFAULT_SUITE);
                return Ok(ExitCode::SUCCESS);
            }
            let mut suite = match &config {
                None => default_suite(),
                Some(path) => fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?
                    .parse::<SuiteConfig>()
                    .with_context(|| format!("in {}", path.display()))?,
            };
            if let Some(seed) = cli.seed {
                suite.seed = seed;
            }
            if let Some(ms) = cli.timeout_ms {
                suite.timeout_ms = (ms > 0).then_some(ms);
            }
            let opts = RunOptions {
                jobs: cli.jobs,
                timing: !cli.no_timing,
            };
            let mut out = output(&cli.out, true)?;
            let summary = run_suite(&suite, opts, &mut out)?;
            out.flush()?;
            eprintln!("{summary}");
            if summary.has_violations() {
                for v in &summary.violations {
                    eprintln!("violation: {v}");
                }
                return Ok(ExitCode::from(1));
            }
        }
        Command::SearchAcyclic { max_n, budget } => {
            let cfg = CheckConfig {
                solve,
                timing: !cli.no_timing,
                ..CheckConfig::default()
            };
            let mut out = output(&cli.out, true)?;
            let (mut total, mut gaps, mut open) = (0usize, 0usize, 0usize);
            for rec in search_acyclic_problem(max_n, budget, cli.seed.unwrap_or(0), &cfg) {
                total += 1;
                match rec.verdict {
                    Verdict::Fails => gaps += 1,
                    Verdict::Holds | Verdict::HypothesisNotMet => {}
                    Verdict::Timeout | Verdict::Inconclusive => open += 1,
                }
                serde_json::to_writer(&mut out, &rec)?;
                writeln!(out)?;
            }
            out.flush()?;
            eprintln!("{total} acyclic digraphs, {gaps} with rho < gamma, {open} unresolved");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
