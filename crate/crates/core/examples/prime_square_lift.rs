//! The single-prime analogue: lift modulo `p²` with `x ↦ x^p` and read the
//! index back from the digits.

use num_bigint::BigUint;

use liftlab::arith::Modulus;
use liftlab::lifts::{formula4_check, teichmuller_p2};
use liftlab::Error;

pub fn run_example() -> liftlab::Result<()> {
    let p = Modulus::from_u64(7)?;
    let a0 = BigUint::from(5u32);
    for x in [5u32, 4] {
        let lift = teichmuller_p2(&p, &BigUint::from(x))?;
        println!(
            "{x}: digit={} lifted={}",
            lift.digit.value(),
            lift.lifted.value()
        );
    }
    for n_p in 0u32..6 {
        let b0 = a0.modpow(&BigUint::from(n_p), p.get());
        let got = formula4_check(&p, &a0, &b0, &BigUint::from(n_p))?;
        println!("n_p={n_p} b0={b0} recovered={}", got.value());
    }

    // 14 is a primitive root of 29 that is already its own lift
    let p29 = Modulus::from_u64(29)?;
    let degenerate = formula4_check(
        &p29,
        &BigUint::from(14u32),
        &BigUint::from(14u32),
        &BigUint::from(1u32),
    );
    assert!(matches!(degenerate, Err(Error::NotInvertible { .. })));
    println!("p=29, a0=14: digit vanishes, formula undefined");
    Ok(())
}

fn main() -> liftlab::Result<()> {
    run_example()
}
