//! Fermat quotients, canonical lifts to `p²q²`, carries, and the prime-square
//! (`p²`) construction they generalize.
//!
//! For a unit `x` modulo `pq` the composite Fermat quotient `q(x)` is defined
//! by `x^(pqφ(q)) ≡ 1 + q(x)·p²q² (mod p³q³)`; the exponent is
//! `λ(p²q²) = pqφ(q)`, not `φ(p²q²)`. It behaves like a logarithm:
//! `q(xy) ≡ q(x) + q(y)`. The canonical lift of `x0` is
//! `x0 + x1·pq` with `x1 ≡ −q(x0)·x0/φ(q) (mod pq)`, the unique lift whose
//! Fermat quotient vanishes.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{
    euler_phi, invmod, multiplicative_order, powmod, Factorization, Modulus, Residue,
};
use crate::error::{Error, Result};
use crate::instance::SafePrimePair;

fn require_coprime(x: &BigUint, m: &BigUint) -> Result<()> {
    if x.gcd(m).is_one() {
        Ok(())
    } else {
        Err(Error::NotCoprime {
            value: x.clone(),
            modulus: m.clone(),
        })
    }
}

/// Lerch's Fermat quotient modulo `n`: the `w` with
/// `x^φ(n) ≡ 1 + w·n (mod n²)`. `f` factors `n`.
pub fn fermat_quotient_lerch(x: &BigUint, f: &Factorization) -> Result<Residue> {
    let n = Modulus::new(f.value())?;
    require_coprime(x, n.get())?;
    let n2 = Modulus::new(n.get() * n.get())?;
    let power = powmod(x, &euler_phi(f), &n2);
    let w = (power.value() + n2.get() - 1u32) / n.get();
    Ok(Residue::new(&w, &n))
}

/// The composite Fermat quotient of a unit, with its base kept modulo `p²q²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FermatQuotient {
    base: Residue,
    value: Residue,
}

impl FermatQuotient {
    pub fn base(&self) -> &Residue {
        &self.base
    }

    pub fn value(&self) -> &Residue {
        &self.value
    }
}

/// `q(x)` with `x^(pqφ(q)) ≡ 1 + q(x)·p²q² (mod p³q³)`.
pub fn fermat_quotient_pq(pair: &SafePrimePair, x: &BigUint) -> Result<FermatQuotient> {
    require_coprime(x, pair.pq().get())?;
    let base = Residue::new(x, pair.p2q2());
    let power = powmod(base.value(), pair.full_lift_order(), pair.p3q3());
    // power ≡ 1 mod p²q² by Carmichael's theorem
    let (w, r) = (power.value() + pair.p3q3().get() - 1u32).div_rem(pair.p2q2().get());
    debug_assert!(r.is_zero());
    Ok(FermatQuotient {
        base,
        value: Residue::new(&w, pair.pq()),
    })
}

/// `x0 + digit·pq`, the canonical lift of `x0` to `p²q²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalLift {
    x0: Residue,
    digit: Residue,
    lifted: Residue,
}

impl CanonicalLift {
    pub fn x0(&self) -> &Residue {
        &self.x0
    }

    /// The first `pq`-adic digit (`a1` for the base, `b1` for the target).
    pub fn digit(&self) -> &Residue {
        &self.digit
    }

    pub fn lifted(&self) -> &Residue {
        &self.lifted
    }
}

/// The canonical lift: digit `−q(x0)·x0·φ(q)⁻¹ mod pq`.
pub fn canonical_lift(pair: &SafePrimePair, x0: &BigUint) -> Result<CanonicalLift> {
    let x0 = Residue::new(x0, pair.pq());
    let fq = fermat_quotient_pq(pair, x0.value())?;
    // gcd(q - 1, pq) = 1 for every safe pair, so this never fails in practice
    let inv_phi = invmod(pair.phi_q().get(), pair.pq())?;
    let digit = -&(&(fq.value() * &x0) * &inv_phi);
    let lifted = Residue::new(&(x0.value() + digit.value() * pair.pq().get()), pair.p2q2());
    Ok(CanonicalLift { x0, digit, lifted })
}

/// The digit `β_n` in `a0^n ≡ b0 + β_n·pq (mod p²q²)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Carry {
    n: BigUint,
    beta: Residue,
}

impl Carry {
    pub fn n(&self) -> &BigUint {
        &self.n
    }

    pub fn beta(&self) -> &Residue {
        &self.beta
    }
}

/// Computes the carry of `a0^n` over `b0`, using the representatives of
/// `a0` and `b0` in `[0, pq)`.
pub fn carry(pair: &SafePrimePair, a0: &BigUint, n: &BigUint, b0: &BigUint) -> Result<Carry> {
    let a0 = a0 % pair.pq().get();
    let b0 = b0 % pair.pq().get();
    let power = powmod(&a0, n, pair.p2q2());
    let low = power.value() % pair.pq().get();
    if low != b0 {
        return Err(Error::NotCongruent {
            base: a0,
            exponent: n.clone(),
            target: b0,
            modulus: pair.pq().get().clone(),
        });
    }
    let beta = (power.value() - &b0) / pair.pq().get();
    Ok(Carry {
        n: n.clone(),
        beta: Residue::new(&beta, pair.pq()),
    })
}

/// Checks `β + n·(b0/a0)·a1 ≡ b1 (mod pq)` for the canonical lifts of `a0`
/// and `b0`.
pub fn verify_carry_relation(
    pair: &SafePrimePair,
    base: &CanonicalLift,
    target: &CanonicalLift,
    n: &BigUint,
    carry: &Carry,
) -> bool {
    let Ok(ratio) = target.x0().try_div(base.x0()) else {
        return false;
    };
    let n = Residue::new(n, pair.pq());
    let lhs = carry.beta() + &(&(&n * &ratio) * base.digit());
    lhs == *target.digit()
}

/// Checks `n·q(a0) ≡ q(b0) + (β/b0)·φ(q) (mod pq)`.
pub fn verify_fermat_carry_relation(
    pair: &SafePrimePair,
    a0: &BigUint,
    b0: &BigUint,
    n: &BigUint,
    carry: &Carry,
) -> Result<bool> {
    let qa = fermat_quotient_pq(pair, a0)?;
    let qb = fermat_quotient_pq(pair, b0)?;
    let pq = pair.pq();
    let n = Residue::new(n, pq);
    let b0 = Residue::new(b0, pq);
    let phi = Residue::new(pair.phi_q().get(), pq);
    let rhs = qb.value() + &(&carry.beta().try_div(&b0)? * &phi);
    Ok(&n * qa.value() == rhs)
}

/// Result of [`check_canonical_orders`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalOrders {
    /// Multiplicative order of the lift modulo `p²q²`.
    pub order: BigUint,
    /// Whether `lift^(qφ(q)) ≡ 1 (mod p²q³)`.
    pub trivial_mod_p2q3: bool,
}

/// The canonical lift of a dual primitive root keeps order `qφ(q)` modulo
/// `p²q²`, and its `qφ(q)`-th power is `1` even modulo `p²q³`.
pub fn check_canonical_orders(
    pair: &SafePrimePair,
    lift: &CanonicalLift,
) -> Result<CanonicalOrders> {
    let f = pair.full_lift_order_factorization()?;
    let order = multiplicative_order(
        lift.lifted().value(),
        pair.p2q2(),
        pair.full_lift_order(),
        &f,
    )?;
    let expected = pair.subgroup_order().get();
    if order != *expected {
        return Err(Error::OrderMismatch {
            element: lift.lifted().value().clone(),
            expected: expected.clone(),
            actual: order,
        });
    }
    let trivial_mod_p2q3 = powmod(lift.lifted().value(), expected, pair.p2q3()).is_one();
    if !trivial_mod_p2q3 {
        return Err(Error::ExponentInvalid {
            base: lift.lifted().value().clone(),
            exponent: expected.clone(),
            modulus: pair.p2q3().get().clone(),
        });
    }
    Ok(CanonicalOrders {
        order,
        trivial_mod_p2q3,
    })
}

/// `x0^p mod p²` and its digit over `x0` modulo `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSquareLift {
    pub digit: Residue,
    pub lifted: Residue,
}

/// Lifts `x0 mod p` to `x0^p mod p²`, which has the same order as `x0`.
pub fn teichmuller_p2(p: &Modulus, x0: &BigUint) -> Result<PrimeSquareLift> {
    require_coprime(x0, p.get())?;
    let x0 = x0 % p.get();
    let p2 = Modulus::new(p.get() * p.get())?;
    let lifted = powmod(&x0, p.get(), &p2);
    let digit = (lifted.value() + p2.get() - &x0) % p2.get() / p.get();
    Ok(PrimeSquareLift {
        digit: Residue::new(&digit, p),
        lifted,
    })
}

/// The prime-square index formula
/// `n_p ≡ ((b1 − β)/b0) / (a1/a0) (mod p)` where `a0^n_p ≡ b0 + β·p (mod p²)`
/// and `a1`, `b1` are the digits of [`teichmuller_p2`]. The result should
/// reproduce `n_p mod p`.
pub fn formula4_check(p: &Modulus, a0: &BigUint, b0: &BigUint, n_p: &BigUint) -> Result<Residue> {
    let a0 = a0 % p.get();
    let b0 = b0 % p.get();
    let p2 = Modulus::new(p.get() * p.get())?;
    let power = powmod(&a0, n_p, &p2);
    if power.value() % p.get() != b0 {
        return Err(Error::NotCongruent {
            base: a0,
            exponent: n_p.clone(),
            target: b0,
            modulus: p.get().clone(),
        });
    }
    let beta = Residue::new(&((power.value() - &b0) / p.get()), p);
    let a1 = teichmuller_p2(p, &a0)?.digit;
    let b1 = teichmuller_p2(p, &b0)?.digit;
    let a0 = Residue::new(&a0, p);
    let b0 = Residue::new(&b0, p);
    let numerator = (&b1 - &beta).try_div(&b0)?;
    let denominator = a1.try_div(&a0)?;
    numerator.try_div(&denominator)
}
