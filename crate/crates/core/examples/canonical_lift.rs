//! Composite Fermat quotients, canonical lifts and the carry digit for the
//! smallest pair.

use num_bigint::BigUint;

use liftlab::instance::SafePrimePair;
use liftlab::lifts::{
    canonical_lift, carry, check_canonical_orders, fermat_quotient_pq, verify_carry_relation,
};

pub fn run_example() -> liftlab::Result<()> {
    let pair = SafePrimePair::from_u64(7, 3)?;
    let (a0, n) = (BigUint::from(5u32), BigUint::from(2u32));
    let b0 = a0.modpow(&n, pair.pq().get());

    for x in [&a0, &b0] {
        let fq = fermat_quotient_pq(&pair, x)?;
        let lift = canonical_lift(&pair, x)?;
        println!(
            "x0={x}: q(x0)={} digit={} lifted={}",
            fq.value().value(),
            lift.digit().value(),
            lift.lifted().value()
        );
    }

    let base = canonical_lift(&pair, &a0)?;
    let target = canonical_lift(&pair, &b0)?;
    let beta = carry(&pair, &a0, &n, &b0)?;
    println!("carry beta={}", beta.beta().value());
    assert!(verify_carry_relation(&pair, &base, &target, &n, &beta));

    let orders = check_canonical_orders(&pair, &base)?;
    println!("order of lifted base: {}", orders.order);
    Ok(())
}

fn main() -> liftlab::Result<()> {
    run_example()
}
