//! Every example under examples/ must run to completion.

#[allow(dead_code)]
#[path = "../examples/safe_prime_pairs.rs"]
mod safe_prime_pairs;

#[test]
fn example_safe_prime_pairs() {
    safe_prime_pairs::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/dlog_extension.rs"]
mod dlog_extension;

#[test]
fn example_dlog_extension() {
    dlog_extension::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/canonical_lift.rs"]
mod canonical_lift;

#[test]
fn example_canonical_lift() {
    canonical_lift::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/prime_square_lift.rs"]
mod prime_square_lift;

#[test]
fn example_prime_square_lift() {
    prime_square_lift::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/noncanonical_recovery.rs"]
mod noncanonical_recovery;

#[test]
fn example_noncanonical_recovery() {
    noncanonical_recovery::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/smart_route.rs"]
mod smart_route;

#[test]
fn example_smart_route() {
    smart_route::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/relaxed_base.rs"]
mod relaxed_base;

#[test]
fn example_relaxed_base() {
    relaxed_base::run_example().unwrap();
}

#[allow(dead_code)]
#[path = "../examples/verification_report.rs"]
mod verification_report;

#[test]
fn example_verification_report() {
    verification_report::run_example().unwrap();
}
