//! Runs the verification suites over every safe-prime pair up to a bound.

use std::fs;
use std::path::Path;
use std::time::Instant;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::{safe_prime_pairs, SafePrimePair};
use crate::report::VerificationReport;
use crate::suite::{run_check, Check, PairContext, SuiteOptions};

/// Largest accepted `q_max`.
pub const Q_MAX_CAP: u64 = 1000;

#[derive(Debug, Clone)]
pub struct SweepOptions {
    pub q_max: u64,
    pub checks: Vec<Check>,
    pub suite: SuiteOptions,
    /// Worker threads; `0` lets rayon decide.
    pub jobs: usize,
    /// Fill the `millis` column. Off by default so output is reproducible.
    pub timings: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            q_max: 50,
            checks: Check::ALL.to_vec(),
            suite: SuiteOptions::default(),
            jobs: 0,
            timings: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SummaryRow {
    pub p: u64,
    pub q: u64,
    pub check: String,
    pub instances: u64,
    pub failures: u64,
    pub millis: Option<u128>,
}

#[derive(Debug, Clone)]
pub struct PairOutcome {
    pub pair: SafePrimePair,
    pub report: VerificationReport,
    pub rows: Vec<SummaryRow>,
}

#[derive(Debug, Clone)]
pub struct SweepResult {
    pub pairs: Vec<PairOutcome>,
}

impl SweepResult {
    pub fn rows(&self) -> impl Iterator<Item = &SummaryRow> {
        self.pairs.iter().flat_map(|o| o.rows.iter())
    }

    pub fn all_passed(&self) -> bool {
        self.pairs.iter().all(|o| o.report.all_passed())
    }

    pub fn summary_csv(&self) -> String {
        let mut writer = csv::WriterBuilder::new()
            .has_headers(false)
            .from_writer(Vec::new());
        writer
            .write_record(["p", "q", "check", "instances", "failures", "millis"])
            .expect("in-memory write");
        for row in self.rows() {
            writer.serialize(row).expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("flush")).expect("csv is utf-8")
    }

    /// Writes `pair_q{q}_p{p}.json` for each pair and `summary.csv`.
    pub fn write_to(&self, dir: &Path) -> std::io::Result<()> {
        fs::create_dir_all(dir)?;
        for o in &self.pairs {
            let name = format!("pair_q{}_p{}.json", o.pair.q(), o.pair.p());
            fs::write(dir.join(name), o.report.to_json())?;
        }
        fs::write(dir.join("summary.csv"), self.summary_csv())
    }
}

fn run_pair(pair: &SafePrimePair, opts: &SweepOptions) -> Result<PairOutcome> {
    let ctx = PairContext::new(pair, None)?;
    let mut checks = Vec::new();
    let mut rows = Vec::new();
    let p = pair.p().get().to_u64().expect("p below the cap");
    let q = pair.q().get().to_u64().expect("q below the cap");
    for &check in &opts.checks {
        let start = Instant::now();
        let results = run_check(&ctx, check, &opts.suite)?;
        let millis = opts.timings.then(|| start.elapsed().as_millis());
        rows.push(SummaryRow {
            p,
            q,
            check: check.name().to_string(),
            instances: results.len() as u64,
            failures: results.iter().filter(|r| !r.pass).count() as u64,
            millis,
        });
        checks.extend(results);
    }
    let report = VerificationReport::new(pair, ctx.a0().value(), opts.suite.seed, checks);
    Ok(PairOutcome {
        pair: pair.clone(),
        report,
        rows,
    })
}

/// Runs every pair with `q ≤ q_max`. Results are ordered by `q` and then by
/// check regardless of the thread count.
pub fn run_sweep(opts: &SweepOptions) -> Result<SweepResult> {
    if opts.q_max > Q_MAX_CAP {
        return Err(Error::BoundExceeded {
            bound: opts.q_max.into(),
            cap: Q_MAX_CAP.into(),
        });
    }
    let mut checks = opts.checks.clone();
    checks.sort();
    checks.dedup();
    let opts = SweepOptions {
        checks,
        ..opts.clone()
    };
    let pairs = safe_prime_pairs(opts.q_max);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .expect("thread pool");
    let outcomes = pool.install(|| {
        pairs
            .par_iter()
            .map(|pair| run_pair(pair, &opts))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(SweepResult { pairs: outcomes })
}
