//! Extends a discrete log modulo `p` to one modulo `pq`.
//!
//! A target is extendable exactly when its Legendre symbols modulo `p` and
//! `q` agree; the exponent modulo `qφ(q)` is then glued together by CRT.

use num_bigint::BigUint;

use liftlab::instance::{
    extend_dlog, find_dual_primitive_root, is_extendable, normalize_shift, SafePrimePair,
};
use liftlab::oracle::dlog_bruteforce;

pub fn run_example() -> liftlab::Result<()> {
    let pair = SafePrimePair::from_u64(23, 11)?;
    let a0 = find_dual_primitive_root(&pair)?;
    let b0 = BigUint::from(13u32);

    println!("{b0} extendable: {}", is_extendable(&pair, &b0)?);
    let shifted = normalize_shift(&pair, &b0)?;
    println!(
        "shifted to {} after {} steps",
        shifted.b0.value(),
        shifted.steps
    );

    let b0 = shifted.b0.value();
    let n_p = dlog_bruteforce(&(a0.value() % pair.p().get()), b0, pair.p(), 22)?
        .into_n()
        .expect("a0 generates mod p");
    let n_q = dlog_bruteforce(&(a0.value() % pair.q().get()), b0, pair.q(), 10)?
        .into_n()
        .expect("a0 generates mod q");
    let n = extend_dlog(&pair, &n_p, &n_q)?;
    println!("n_p={n_p} n_q={n_q} => n={}", n);
    assert_eq!(&a0.pow(n.value()), &shifted.b0);
    Ok(())
}

fn main() -> liftlab::Result<()> {
    run_example()
}
