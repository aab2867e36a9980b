use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;

use liftlab::demo::walkthrough;
use liftlab::instance::{find_safe_prime, SafePrimePair};
use liftlab::report::Format;
use liftlab::suite::{parse_checks, verify_pair, SuiteOptions};
use liftlab::sweep::{run_sweep, SweepOptions};

const EXIT_FAIL: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "liftlab",
    version,
    about = "Safe-prime discrete-log lifting toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SeedArg {
    /// RNG seed; falls back to LIFTLAB_SEED, then 0.
    #[arg(long, env = "LIFTLAB_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a safe-prime pair p = 2q + 1 with q of the given bit length.
    Gen {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        bits: u64,
        #[command(flatten)]
        seed: SeedArg,
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Run verification suites on one pair.
    Verify {
        #[arg(short)]
        p: BigUint,
        #[arg(short)]
        q: BigUint,
        /// Base; defaults to the smallest dual primitive root.
        #[arg(long)]
        a0: Option<BigUint>,
        /// Comma-separated suite names, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        check: Vec<String>,
        /// Offsets per exponent.
        #[arg(long)]
        samples: Option<u64>,
        /// Try every offset (only when q <= 50).
        #[arg(long)]
        exhaustive: bool,
        #[command(flatten)]
        seed: SeedArg,
        #[arg(long, default_value = "json")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the suites over every safe-prime pair with q <= q-max.
    Sweep {
        #[arg(long)]
        q_max: u64,
        #[arg(long, value_delimiter = ',', default_value = "all")]
        checks: Vec<String>,
        #[command(flatten)]
        seed: SeedArg,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long)]
        samples: Option<u64>,
        /// Record per-suite wall time in the summary.
        #[arg(long)]
        timings: bool,
        /// Directory for per-pair JSON and summary.csv.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Walk through one lift-and-recover example.
    Demo {
        #[arg(short)]
        p: BigUint,
        #[arg(short)]
        q: BigUint,
        #[arg(short)]
        n: BigUint,
        #[arg(short)]
        k: BigUint,
        #[arg(long, default_value = "text")]
        format: Format,
    },
}

fn invalid(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(EXIT_INVALID)
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn verdict(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Gen { bits, seed, format } => {
            let pair = match find_safe_prime(bits, seed.seed) {
                Ok(pair) => pair,
                Err(e) => return invalid(e),
            };
            match format {
                Format::Text => println!("p={} q={}", pair.p(), pair.q()),
                Format::Json => {
                    let doc = serde_json::json!({
                        "p": pair.p().to_string(),
                        "q": pair.q().to_string(),
                        "bits": bits,
                        "seed": seed.seed.to_string(),
                    });
                    println!("{doc}");
                }
                Format::Csv => println!("p,q\n{},{}", pair.p(), pair.q()),
            }
            ExitCode::SUCCESS
        }
        Command::Verify {
            p,
            q,
            a0,
            check,
            samples,
            exhaustive,
            seed,
            format,
            out,
        } => {
            let checks = match parse_checks(&check) {
                Ok(c) => c,
                Err(e) => return usage(&e),
            };
            let pair = match SafePrimePair::new(&p, &q) {
                Ok(pair) => pair,
                Err(e) => return invalid(e),
            };
            let opts = SuiteOptions {
                seed: seed.seed,
                samples,
                exhaustive,
            };
            let report = match verify_pair(&pair, a0.as_ref(), &checks, &opts) {
                Ok(r) => r,
                Err(e) => return invalid(e),
            };
            let rendered = report.render(format);
            match out {
                Some(path) => {
                    if let Err(e) = fs::write(&path, rendered) {
                        return invalid(format!("{}: {e}", path.display()));
                    }
                }
                None => print!("{rendered}"),
            }
            verdict(report.all_passed())
        }
        Command::Sweep {
            q_max,
            checks,
            seed,
            jobs,
            samples,
            timings,
            out,
        } => {
            let checks = match parse_checks(&checks) {
                Ok(c) => c,
                Err(e) => return usage(&e),
            };
            let opts = SweepOptions {
                q_max,
                checks,
                suite: SuiteOptions {
                    seed: seed.seed,
                    samples,
                    exhaustive: false,
                },
                jobs,
                timings,
            };
            let result = match run_sweep(&opts) {
                Ok(r) => r,
                Err(e) => return invalid(e),
            };
            if let Some(dir) = out {
                if let Err(e) = result.write_to(&dir) {
                    return invalid(format!("{}: {e}", dir.display()));
                }
            }
            print!("{}", result.summary_csv());
            verdict(result.all_passed())
        }
        Command::Demo { p, q, n, k, format } => {
            let pair = match SafePrimePair::new(&p, &q) {
                Ok(pair) => pair,
                Err(e) => return invalid(e),
            };
            let w = match walkthrough(&pair, &n, &k) {
                Ok(w) => w,
                Err(e) => return invalid(e),
            };
            match format {
                Format::Json => print!("{}", w.to_json()),
                Format::Text => print!("{}", w.to_text()),
                Format::Csv => return usage("demo supports --format json or text"),
            }
            verdict(w.all_passed())
        }
    }
}
