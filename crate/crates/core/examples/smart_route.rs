//! Solves for `n` by raising both shifted lifts to the group exponent, so
//! the unknown appears linearly in the next digit.

use num_bigint::BigUint;

use liftlab::instance::{find_dual_primitive_root, DlogInstance, SafePrimePair};
use liftlab::lifts::canonical_lift;
use liftlab::noncanonical::{construct_noncanonical, recover_mod_pq, smart_recover};

pub fn run_example() -> liftlab::Result<()> {
    let pair = SafePrimePair::from_u64(59, 29)?;
    let a0 = find_dual_primitive_root(&pair)?;
    let base = canonical_lift(&pair, a0.value())?;
    for n in [0u32, 1, 400, 811] {
        let n = BigUint::from(n);
        let inst = DlogInstance::from_exponent(&pair, a0.value(), &n)?;
        let target = canonical_lift(&pair, inst.b0().value())?;
        let k = BigUint::from(100u32);
        let lift = construct_noncanonical(&inst, &base, &target, &k)?;
        let smart = smart_recover(&pair, &base, &target, &k, lift.l().value())?;
        let closed = recover_mod_pq(&pair, a0.value(), inst.b0().value(), &k, lift.l().value())?;
        println!("n={n}: smart={smart} closed-form={closed}");
        assert_eq!(smart, closed);
    }
    Ok(())
}

fn main() -> liftlab::Result<()> {
    run_example()
}
