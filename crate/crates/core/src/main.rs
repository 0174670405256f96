use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use schurcone::cone::{count_extreme, count_without_lp, is_extreme, ConeConfig, SolverOptions};
use schurcone::harness::table::{compute_table, reference_table};
use schurcone::harness::{run_suite, Suite, SuiteConfig};
use schurcone::nested::nested_report;
use schurcone::schur::{lr_multi, lr_multi_sorted, SchurEngine};
use schurcone::{Partition, PartitionMultiset};

/// Largest table size computed without `--long`.
const SHORT_TABLE_MAX: u32 = 8;
const TIMEOUT_EXIT: i32 = 124;

#[derive(Parser)]
#[command(
    name = "schurcone",
    version,
    about = "Schur products and the cones they span"
)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Seed recorded in suite configurations.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Abort with exit code 124 after this many seconds.
    #[arg(long = "timeout-secs", global = true)]
    timeout_secs: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Lp,
    Nested,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    /// Entries concatenated in canonical order (exact multiplicity).
    Concatenated,
    /// Merged content phi(A) with the default tie-break.
    Merged,
}

#[derive(Subcommand)]
enum Command {
    /// Schur expansion of a product, as JSON.
    Expand {
        #[arg(long)]
        multiset: PartitionMultiset,
    },
    /// A single coefficient c_A^lambda.
    Lr {
        #[arg(long)]
        multiset: PartitionMultiset,
        #[arg(long)]
        target: Partition,
        #[arg(long, value_enum, default_value_t = Rule::Concatenated)]
        rule: Rule,
    },
    /// Bad-pair report for a multiset of partitions with at most two parts.
    Nested {
        #[arg(long)]
        multiset: PartitionMultiset,
    },
    /// Extremality with a certificate; exit 0 extreme, 10 not extreme.
    Extreme {
        #[arg(long)]
        multiset: PartitionMultiset,
        #[arg(long)]
        k: usize,
        /// Override the default degree bound.
        #[arg(long = "max-degree")]
        max_degree: Option<u32>,
        /// Solve over all rows and columns.
        #[arg(long = "no-prune")]
        no_prune: bool,
    },
    /// Number of extreme rays of C_N^k.
    Count {
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Method::Lp)]
        method: Method,
    },
    /// The matrix of extreme-ray counts.
    Table {
        #[arg(long = "max-N", default_value_t = SHORT_TABLE_MAX)]
        max_n: u32,
        #[arg(long)]
        tsv: bool,
        /// Compare with the published counts; exit 1 on any difference.
        #[arg(long = "diff-paper")]
        diff_paper: bool,
        /// Allow rows beyond N = 8 (minutes to hours).
        #[arg(long)]
        long: bool,
    },
    /// Run a verification suite; exit 0 pass, 20 findings, 1 failure.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        bound: Option<u32>,
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();

    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {}", e);
            return ExitCode::from(1);
        }
    }
    if let Some(secs) = cli.timeout_secs {
        std::thread::spawn(move || {
            std::thread::sleep(Duration::from_secs(secs));
            eprintln!("error: timed out after {}s", secs);
            std::process::exit(TIMEOUT_EXIT);
        });
    }

    match run(cli.command, cli.seed) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(1)
        }
    }
}

/// Writes to stdout, ignoring a closed pipe (`schurcone ... | head`).
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout(), $($arg)*);
    }};
}

fn to_json<T: serde::Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

fn run(command: Command, seed: u64) -> anyhow::Result<u8> {
    let engine = SchurEngine::global();
    match command {
        Command::Expand { multiset } => {
            out!("{}\n", to_json(&*engine.expand_product(&multiset))?);
        }
        Command::Lr {
            multiset,
            target,
            rule,
        } => {
            let c = match rule {
                Rule::Concatenated => lr_multi(&multiset, &target)?,
                Rule::Merged => lr_multi_sorted(&multiset, &target)?,
            };
            out!("{}\n", c);
        }
        Command::Nested { multiset } => {
            out!("{}\n", to_json(&nested_report(&multiset)?)?);
        }
        Command::Extreme {
            multiset,
            k,
            max_degree,
            no_prune,
        } => {
            let config = ConeConfig {
                max_degree,
                solver: SolverOptions { prune: !no_prune },
            };
            let result = is_extreme(engine, &multiset, k, &config)?;
            out!("{}\n", to_json(&result)?);
            return Ok(if result.extreme { 0 } else { 10 });
        }
        Command::Count { n, k, method } => {
            let count = match method {
                Method::Lp => count_extreme(engine, n, k, &ConeConfig::default())?,
                Method::Nested => count_without_lp(n, k)
                    .ok_or_else(|| anyhow::anyhow!("--method nested supports k = 1 and k = 2"))?,
            };
            out!("{}\n", count);
        }
        Command::Table {
            max_n,
            tsv,
            diff_paper,
            long,
        } => {
            if max_n > SHORT_TABLE_MAX && !long {
                anyhow::bail!("--max-N above {} needs --long", SHORT_TABLE_MAX);
            }
            let table = compute_table(engine, max_n)?;
            if tsv {
                out!("{}", table.to_tsv());
            } else {
                out!("{}", table.to_matrix());
            }
            if diff_paper {
                let diff = table.diff(reference_table());
                for d in &diff {
                    eprintln!(
                        "mismatch at N={} k={}: published {}, computed {}",
                        d.n,
                        d.k,
                        d.expected.map_or("-".to_string(), |e| e.to_string()),
                        d.actual
                    );
                }
                if !diff.is_empty() {
                    return Ok(1);
                }
                eprintln!("all {} entries match", table.len());
            }
        }
        Command::Verify {
            suite,
            bound,
            report,
        } => {
            let suite: Suite = suite.parse()?;
            let result = run_suite(suite, &SuiteConfig { bound, seed })?;
            let json = to_json(&result)?;
            if let Some(path) = report {
                std::fs::write(path, &json)?;
            }
            out!("{}\n", json);
            return Ok(result.exit_code() as u8);
        }
    }
    Ok(0)
}
