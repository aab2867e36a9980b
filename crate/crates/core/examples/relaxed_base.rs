//! Recovery when the base is a primitive root modulo `p` only. Raising to
//! `φ(q)` moves the instance into the subgroup where lifting applies.

use num_bigint::BigUint;

use liftlab::instance::{DlogInstance, SafePrimePair};
use liftlab::lifts::canonical_lift;
use liftlab::noncanonical::{construct_noncanonical, relaxed_recover, OffsetCase, RecoveryMode};

pub fn run_example() -> liftlab::Result<()> {
    let pair = SafePrimePair::from_u64(11, 5)?;
    let a0 = BigUint::from(6u32);
    let n = BigUint::from(7u32);
    let b0 = a0.modpow(&n, pair.p().get());

    let powered = DlogInstance::relaxed_powered(&pair, &a0, &b0, &n)?;
    println!("A0={} B0={}", powered.a0().value(), powered.b0().value());
    let base = canonical_lift(&pair, powered.a0().value())?;
    let target = canonical_lift(&pair, powered.b0().value())?;

    for k in [3u32, 22] {
        let lift = construct_noncanonical(&powered, &base, &target, &BigUint::from(k))?;
        let got = match lift.case()? {
            OffsetCase::SubgroupPreserving { k1, l1 } => {
                relaxed_recover(&pair, &a0, &b0, k1.value(), l1.value(), RecoveryMode::ModQ)?
            }
            _ => relaxed_recover(
                &pair,
                &a0,
                &b0,
                &BigUint::from(k),
                lift.l().value(),
                RecoveryMode::ModPq,
            )?,
        };
        println!("k={k}: n = {got}");
    }
    Ok(())
}

fn main() -> liftlab::Result<()> {
    run_example()
}
