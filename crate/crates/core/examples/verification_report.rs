//! Runs a few suites on one pair and prints the report in each format.

use liftlab::instance::SafePrimePair;
use liftlab::report::Format;
use liftlab::suite::{verify_pair, Check, SuiteOptions};

pub fn run_example() -> liftlab::Result<()> {
    let pair = SafePrimePair::from_u64(23, 11)?;
    let opts = SuiteOptions {
        seed: 7,
        samples: Some(12),
        exhaustive: false,
    };
    let report = verify_pair(&pair, None, &[Check::Orders, Check::Smart], &opts)?;
    for format in [Format::Text, Format::Csv] {
        println!("{}", report.render(format));
    }
    println!("all passed: {}", report.all_passed());
    Ok(())
}

fn main() -> liftlab::Result<()> {
    run_example()
}
