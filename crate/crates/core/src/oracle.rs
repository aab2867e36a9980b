//! Ground-truth discrete logarithms and subgroup enumeration.
//!
//! Nothing here touches the lift machinery; these routines only multiply and
//! compare residues, so property tests can use them as an independent oracle.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{invmod, Modulus};
use crate::error::{Error, Result};

/// Largest `order_bound` accepted by [`dlog_bruteforce`].
pub const BRUTEFORCE_CAP: u64 = 10_000_000;
/// Largest baby-step table built by [`dlog_bsgs`].
pub const BSGS_TABLE_CAP: u64 = 1 << 24;
/// Largest subgroup listed by [`subgroup_elements`].
pub const SUBGROUP_CAP: u64 = 1_000_000;

/// Outcome of a discrete-log search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DlogAnswer {
    n: Option<BigUint>,
}

impl DlogAnswer {
    pub fn found(&self) -> bool {
        self.n.is_some()
    }

    pub fn n(&self) -> Option<&BigUint> {
        self.n.as_ref()
    }

    pub fn into_n(self) -> Option<BigUint> {
        self.n
    }
}

fn require_unit(g: &BigUint, m: &Modulus) -> Result<()> {
    let d = g.gcd(m.get());
    if d.is_one() {
        Ok(())
    } else {
        Err(Error::NotInvertible {
            value: g.clone(),
            gcd: d,
        })
    }
}

/// Least `n < order_bound` with `g^n ≡ h (mod m)`, by linear scan.
pub fn dlog_bruteforce(
    g: &BigUint,
    h: &BigUint,
    m: &Modulus,
    order_bound: u64,
) -> Result<DlogAnswer> {
    require_unit(g, m)?;
    if order_bound > BRUTEFORCE_CAP {
        return Err(Error::BoundExceeded {
            bound: BigUint::from(order_bound),
            cap: BigUint::from(BRUTEFORCE_CAP),
        });
    }
    let g = g % m.get();
    let h = h % m.get();
    let mut acc = BigUint::one() % m.get();
    for n in 0..order_bound {
        if acc == h {
            return Ok(DlogAnswer {
                n: Some(BigUint::from(n)),
            });
        }
        acc = acc * &g % m.get();
    }
    Ok(DlogAnswer { n: None })
}

/// Baby-step giant-step over exponents `[0, order)`; returns the least
/// solution, matching [`dlog_bruteforce`].
pub fn dlog_bsgs(g: &BigUint, h: &BigUint, m: &Modulus, order: &BigUint) -> Result<DlogAnswer> {
    require_unit(g, m)?;
    if order.is_zero() {
        return Ok(DlogAnswer { n: None });
    }
    let mut width = order.sqrt();
    if &width * &width < *order {
        width += 1u32;
    }
    let steps = width
        .to_u64()
        .filter(|&w| w <= BSGS_TABLE_CAP)
        .ok_or_else(|| Error::BoundExceeded {
            bound: width.clone(),
            cap: BigUint::from(BSGS_TABLE_CAP),
        })?;
    let g = g % m.get();
    let h = h % m.get();

    let mut baby: HashMap<BigUint, u64> = HashMap::with_capacity(steps as usize);
    let mut acc = BigUint::one() % m.get();
    for j in 0..steps {
        baby.entry(acc.clone()).or_insert(j);
        acc = acc * &g % m.get();
    }
    // acc = g^steps
    let giant = invmod(&acc, m)?.into_value();
    let mut gamma = h;
    for i in 0..steps {
        if let Some(&j) = baby.get(&gamma) {
            let n = BigUint::from(i) * steps + j;
            return Ok(DlogAnswer {
                n: (n < *order).then_some(n),
            });
        }
        gamma = gamma * &giant % m.get();
    }
    Ok(DlogAnswer { n: None })
}

/// `[g⁰, g¹, …, g^(order−1)]` modulo `m`, checking `g^order ≡ 1`.
pub fn subgroup_elements(g: &BigUint, m: &Modulus, order: u64) -> Result<Vec<BigUint>> {
    require_unit(g, m)?;
    if order > SUBGROUP_CAP {
        return Err(Error::BoundExceeded {
            bound: BigUint::from(order),
            cap: BigUint::from(SUBGROUP_CAP),
        });
    }
    let g = g % m.get();
    let mut elements = Vec::with_capacity(order as usize);
    let mut acc = BigUint::one();
    for _ in 0..order {
        elements.push(acc.clone());
        acc = acc * &g % m.get();
    }
    if !acc.is_one() {
        return Err(Error::NotClosed {
            g,
            order: BigUint::from(order),
            modulus: m.get().clone(),
        });
    }
    Ok(elements)
}
