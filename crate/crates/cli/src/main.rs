use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kschur::cache::{KostkaCache, LoadStatus};
use kschur::kbernstein::{collect_sequences, kschur_by_recursion, strip_sequences};
use kschur::kpieri::multiply_h;
use kschur::ktableaux::{count_on_core, enumerate_on_core, oracle_kschur_h_with};
use kschur::verify::{self, Suite};
use kschur::{Core, Error, LinComb, Partition};

#[derive(Parser)]
#[command(name = "kschur", version, about = "Exact k-Schur function computations")]
struct Cli {
    /// Optional k-Kostka matrix cache file (created if missing).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between k-bounded partitions and (k+1)-cores.
    Core {
        #[arg(value_enum)]
        direction: Direction,
        #[arg(long)]
        k: usize,
        partition: Partition,
    },
    /// Expand s^(k)_lambda.
    Expand {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_enum, default_value_t = Method::Corollary)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also run the other methods and fail unless all agree.
        #[arg(long)]
        check: bool,
    },
    /// h_ell times s^(k)_lambda.
    Pieri {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List or count k-tableaux.
    Tableaux {
        #[arg(long)]
        k: usize,
        /// Shape given as a (k+1)-core.
        #[arg(long, conflicts_with = "shape", required_unless_present = "shape")]
        shape_core: Option<Partition>,
        /// Shape given as the k-bounded partition mu, i.e. the core c(mu).
        #[arg(long)]
        shape: Option<Partition>,
        #[arg(long, value_delimiter = ',', required = true)]
        weight: Vec<usize>,
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run consistency suites over every k-bounded partition up to a degree.
    Verify {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    ToCore,
    ToPartition,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Recursion,
    Corollary,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Failure with its exit status: 1 for a failed check, 2 for bad input.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Invariant(_) | Error::NoChangeableCell => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn mismatch(message: String) -> Failure {
    Failure { code: 1, message }
}

fn render(f: &LinComb, format: Format) -> String {
    match format {
        Format::Text => f.to_text(),
        Format::Json => f.to_json(),
    }
}

fn open_cache(path: &Option<PathBuf>) -> KostkaCache {
    let Some(path) = path else { return KostkaCache::in_memory() };
    let (cache, status) = KostkaCache::open(path);
    match status {
        LoadStatus::Rejected(why) => eprintln!("ignoring cache {}: {why}", path.display()),
        LoadStatus::Loaded(n) => eprintln!("loaded {n} matrices from {}", path.display()),
        LoadStatus::Missing => {}
    }
    cache
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cache = open_cache(&cli.cache);
    match cli.command {
        Command::Core { direction, k, partition } => {
            let out = match direction {
                Direction::ToCore => Core::from_bounded(&partition, k)?.shape().clone(),
                Direction::ToPartition => Core::new(partition, k)?.p_map(),
            };
            println!("{out}");
        }
        Command::Expand { k, lambda, method, format, check } => {
            let corollary = || -> Result<LinComb, Failure> {
                let seqs = strip_sequences(&lambda, k)?;
                eprintln!("{} strip sequences", seqs.len());
                Ok(collect_sequences(&seqs)?)
            };
            let result = match method {
                Method::Recursion => kschur_by_recursion(&lambda, k)?,
                Method::Corollary => corollary()?,
                Method::Oracle => oracle_kschur_h_with(&lambda, k, &cache)?,
            };
            println!("{}", render(&result, format));
            if check {
                let rec = kschur_by_recursion(&lambda, k)?;
                if !rec.is_unit_at(&lambda) {
                    return Err(mismatch(format!("recursion gives {rec}")));
                }
                let (a, b) = (corollary()?, oracle_kschur_h_with(&lambda, k, &cache)?);
                if a != b {
                    return Err(mismatch(format!("corollary {a} differs from oracle {b}")));
                }
                eprintln!("check passed");
            }
        }
        Command::Pieri { k, ell, lambda, format } => {
            println!("{}", render(&multiply_h(ell, &lambda, k)?, format));
        }
        Command::Tableaux { k, shape_core, shape, weight, count, format } => {
            let core = match (shape_core, shape) {
                (Some(c), _) => Core::new(c, k)?,
                (None, Some(mu)) => Core::from_bounded(&mu, k)?,
                (None, None) => unreachable!("clap requires one shape"),
            };
            if count {
                let n = count_on_core(&core, &weight)?;
                match format {
                    Format::Text => println!("{n}"),
                    Format::Json => println!("{}", serde_json::json!({ "count": n.to_string().parse::<u64>().unwrap_or(u64::MAX) })),
                }
            } else {
                let tabs = enumerate_on_core(&core, &weight)?;
                match format {
                    Format::Text => {
                        let blocks: Vec<String> = tabs.iter().map(|t| t.to_string()).collect();
                        println!("{}", blocks.join("\n\n"));
                    }
                    Format::Json => {
                        let rows: Vec<&[Vec<usize>]> = tabs.iter().map(|t| t.rows()).collect();
                        println!("{}", serde_json::json!({ "count": tabs.len(), "tableaux": rows }));
                    }
                }
            }
        }
        Command::Verify { k, max_degree, suite, jobs } => {
            let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
            let reports = verify::run(&suites, k, max_degree, jobs, &cache)?;
            let mut failed = 0;
            for r in &reports {
                println!("{}: {} passed, {} failed", r.suite, r.passed, r.failures.len());
                for f in &r.failures {
                    eprintln!("{}: {f}", r.suite);
                }
                failed += r.failures.len();
            }
            if failed > 0 {
                save_cache(&cache);
                return Err(mismatch(format!("{failed} cases failed")));
            }
        }
    }
    save_cache(&cache);
    Ok(())
}

fn save_cache(cache: &KostkaCache) {
    if let Err(e) = cache.save() {
        eprintln!("could not write cache: {e}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
