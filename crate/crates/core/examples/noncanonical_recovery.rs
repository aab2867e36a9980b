//! Recovers `n` from the offsets of a non-canonical lift, for each kind of
//! offset, then lifts the answer to `n mod p − 1`.

use num_bigint::BigUint;

use liftlab::instance::{find_dual_primitive_root, DlogInstance, SafePrimePair};
use liftlab::lifts::canonical_lift;
use liftlab::noncanonical::{
    check_noncanonical_order, construct_noncanonical, lift_to_p_minus_1, recover_mod_pq,
    recover_mod_q, OffsetCase,
};

pub fn run_example() -> liftlab::Result<()> {
    let pair = SafePrimePair::from_u64(23, 11)?;
    let a0 = find_dual_primitive_root(&pair)?;
    let n = BigUint::from(37u32);
    let inst = DlogInstance::from_exponent(&pair, a0.value(), &n)?;
    let base = canonical_lift(&pair, a0.value())?;
    let target = canonical_lift(&pair, inst.b0().value())?;

    // coprime to pq, a multiple of p, a multiple of q
    for k in [5u32, 46, 33] {
        let k = BigUint::from(k);
        let lift = construct_noncanonical(&inst, &base, &target, &k)?;
        let case = lift.case()?;
        let order = check_noncanonical_order(&pair, &base, &k)?;
        let n_pq = recover_mod_pq(&pair, a0.value(), inst.b0().value(), &k, lift.l().value())?;
        println!(
            "k={k} l={} case={} order={order} n={}",
            lift.l().value(),
            case.name(),
            n_pq
        );
        if let OffsetCase::SubgroupPreserving { k1, l1 } = &case {
            let n_q = recover_mod_q(&pair, a0.value(), inst.b0().value(), k1.value(), l1.value())?;
            let n_p = lift_to_p_minus_1(
                &pair,
                &(a0.value() % pair.p().get()),
                &(inst.b0().value() % pair.p().get()),
                n_q.value(),
            )?;
            println!("  n mod q = {}, n mod p-1 = {}", n_q.value(), n_p.value());
        }
    }
    Ok(())
}

fn main() -> liftlab::Result<()> {
    run_example()
}
