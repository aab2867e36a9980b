//! Lists small safe-prime pairs with their dual primitive roots, then draws
//! a larger pair from a seed.

use liftlab::instance::{find_dual_primitive_root, find_safe_prime, safe_prime_pairs};

pub fn run_example() -> liftlab::Result<()> {
    for pair in safe_prime_pairs(100) {
        let a0 = find_dual_primitive_root(&pair)?;
        println!("{:>4} {:>4}  a0={}", pair.p(), pair.q(), a0.value());
    }
    let big = find_safe_prime(64, 2024)?;
    println!("64-bit q: {}", big.describe());
    Ok(())
}

fn main() -> liftlab::Result<()> {
    run_example()
}
