//! Named verification suites run against one safe-prime pair.
//!
//! Each suite produces one [`CheckResult`] per instance (a target `b0`, an
//! exponent `n`, or a base `a0`). Offsets for the non-canonical suites are
//! drawn from a ChaCha stream seeded by `(seed, q, suite, n)`, so results do
//! not depend on how pairs are scheduled across threads.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{
    big, carmichael_lambda, euler_phi, factorize, is_primitive_root, Modulus, Residue,
};
use crate::error::{Error, Result};
use crate::instance::{
    find_dual_primitive_root, is_dual_primitive_root, is_extendable, DlogInstance, SafePrimePair,
};
use crate::lifts::{
    canonical_lift, carry, check_canonical_orders, formula4_check, verify_carry_relation,
    verify_fermat_carry_relation, CanonicalLift,
};
use crate::noncanonical::{
    check_noncanonical_order, construct_noncanonical, lift_to_p_minus_1, recover_mod_pq,
    recover_mod_q, relaxed_recover, smart_recover, OffsetCase, RecoveryMode,
};
use crate::oracle::{dlog_bruteforce, subgroup_elements};
use crate::report::{CheckResult, VerificationReport};

/// Offsets per exponent when no sample count is given: `min(qφ(q), 200)`.
pub const DEFAULT_SAMPLE_CAP: u64 = 200;
/// `--exhaustive` is honoured only up to this `q`.
pub const EXHAUSTIVE_Q_LIMIT: u64 = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Extendability,
    LiftPower,
    Carry,
    FermatCarry,
    Orders,
    Formula4,
    Recovery,
    Smart,
    Relaxed,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Extendability,
        Check::LiftPower,
        Check::Carry,
        Check::FermatCarry,
        Check::Orders,
        Check::Formula4,
        Check::Recovery,
        Check::Smart,
        Check::Relaxed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Extendability => "lemma1",
            Check::LiftPower => "lemma2",
            Check::Carry => "carry",
            Check::FermatCarry => "fermat-carry",
            Check::Orders => "orders",
            Check::Formula4 => "formula4",
            Check::Recovery => "recovery",
            Check::Smart => "smart",
            Check::Relaxed => "relaxed",
        }
    }

    fn tag(self) -> u64 {
        self as u64 + 1
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check `{s}`"))
    }
}

/// Parses check names, expanding `all`. Duplicates are dropped and the
/// result is in canonical order.
pub fn parse_checks<S: AsRef<str>>(names: &[S]) -> std::result::Result<Vec<Check>, String> {
    let mut out = Vec::new();
    for name in names {
        let name = name.as_ref();
        if name == "all" {
            out.extend(Check::ALL);
        } else {
            out.push(name.parse()?);
        }
    }
    if out.is_empty() {
        out.extend(Check::ALL);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Offsets per exponent; `None` means `min(qφ(q), 200)`.
    pub samples: Option<u64>,
    /// Use every offset `k ∈ [1, pq)` when `q ≤ 50`.
    pub exhaustive: bool,
}

/// A pair, its base, and the canonical lift of the base.
#[derive(Debug, Clone)]
pub struct PairContext {
    pair: SafePrimePair,
    a0: Residue,
    base: CanonicalLift,
    order: u64,
}

impl PairContext {
    /// Uses `a0` if given (it must be a dual primitive root), else the
    /// smallest one.
    pub fn new(pair: &SafePrimePair, a0: Option<&BigUint>) -> Result<Self> {
        let a0 = match a0 {
            Some(a0) => {
                if !a0.gcd(pair.pq().get()).is_one() || !is_dual_primitive_root(pair, a0)? {
                    return Err(Error::NotDualPrimitiveRoot(a0.clone()));
                }
                Residue::new(a0, pair.pq())
            }
            None => find_dual_primitive_root(pair)?,
        };
        let order = pair
            .subgroup_order()
            .get()
            .to_u64()
            .filter(|&o| o <= crate::oracle::SUBGROUP_CAP)
            .ok_or_else(|| Error::BoundExceeded {
                bound: pair.subgroup_order().get().clone(),
                cap: BigUint::from(crate::oracle::SUBGROUP_CAP),
            })?;
        let base = canonical_lift(pair, a0.value())?;
        Ok(PairContext {
            pair: pair.clone(),
            a0,
            base,
            order,
        })
    }

    pub fn pair(&self) -> &SafePrimePair {
        &self.pair
    }

    pub fn a0(&self) -> &Residue {
        &self.a0
    }

    fn q_u64(&self) -> u64 {
        self.pair
            .q()
            .get()
            .to_u64()
            .expect("q fits once the order does")
    }

    fn p_u64(&self) -> u64 {
        self.pair
            .p()
            .get()
            .to_u64()
            .expect("p fits once the order does")
    }

    fn pq_u64(&self) -> u64 {
        self.p_u64() * self.q_u64()
    }

    /// `(n, a0^n mod pq)` for every `n ∈ [0, qφ(q))`.
    fn powers(&self) -> impl Iterator<Item = (u64, Residue)> + '_ {
        let mut acc = Residue::one(self.pair.pq());
        (0..self.order).map(move |n| {
            let current = acc.clone();
            acc = &acc * &self.a0;
            (n, current)
        })
    }

    fn rng(&self, seed: u64, check: Check, n: u64) -> ChaCha8Rng {
        let mixed = splitmix(splitmix(splitmix(seed) ^ self.q_u64()) ^ check.tag()) ^ n;
        ChaCha8Rng::seed_from_u64(splitmix(mixed))
    }

    /// Offsets for one exponent: an even mix of `k` coprime to `pq`,
    /// `k = k1·p` and `k = j·q`, or every `k` when exhaustive.
    fn offsets(&self, opts: &SuiteOptions, check: Check, n: u64) -> Vec<u64> {
        let (p, q, pq) = (self.p_u64(), self.q_u64(), self.pq_u64());
        if opts.exhaustive && q <= EXHAUSTIVE_Q_LIMIT {
            return (1..pq).collect();
        }
        let count = opts.samples.unwrap_or(self.order.min(DEFAULT_SAMPLE_CAP));
        let mut rng = self.rng(opts.seed, check, n);
        (0..count)
            .map(|i| match i % 3 {
                0 => loop {
                    let k = rng.gen_range(1..pq);
                    if k.gcd(&pq) == 1 {
                        break k;
                    }
                },
                1 => rng.gen_range(1..q) * p,
                _ => rng.gen_range(1..p) * q,
            })
            .collect()
    }
}

fn splitmix(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Runs `checks` on one pair and assembles the report.
pub fn verify_pair(
    pair: &SafePrimePair,
    a0: Option<&BigUint>,
    checks: &[Check],
    opts: &SuiteOptions,
) -> Result<VerificationReport> {
    let ctx = PairContext::new(pair, a0)?;
    let mut results = Vec::new();
    for &check in checks {
        results.extend(run_check(&ctx, check, opts)?);
    }
    Ok(VerificationReport::new(
        pair,
        ctx.a0.value(),
        opts.seed,
        results,
    ))
}

/// Runs a single suite.
pub fn run_check(ctx: &PairContext, check: Check, opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    match check {
        Check::Extendability => extendability(ctx),
        Check::LiftPower => Ok(per_exponent(ctx, check, |n, b0| lift_power_one(ctx, n, b0))),
        Check::Carry => Ok(per_exponent(ctx, check, |n, b0| carry_one(ctx, n, b0))),
        Check::FermatCarry => Ok(per_exponent(ctx, check, |n, b0| {
            fermat_carry_one(ctx, n, b0)
        })),
        Check::Orders => orders(ctx, opts),
        Check::Formula4 => formula4(ctx),
        Check::Recovery => Ok(per_exponent(ctx, check, |n, b0| {
            recovery_one(ctx, opts, n, b0)
        })),
        Check::Smart => Ok(per_exponent(ctx, check, |n, b0| {
            smart_one(ctx, opts, n, b0)
        })),
        Check::Relaxed => relaxed(ctx, opts),
    }
}

fn per_exponent<F>(ctx: &PairContext, check: Check, mut f: F) -> Vec<CheckResult>
where
    F: FnMut(u64, &Residue) -> Result<String>,
{
    ctx.powers()
        .map(|(n, b0)| {
            CheckResult::from_outcome(check.name(), format!("n={n} b0={}", b0.value()), f(n, &b0))
        })
        .collect()
}

fn extendability(ctx: &PairContext) -> Result<Vec<CheckResult>> {
    let members: HashSet<BigUint> = subgroup_elements(ctx.a0.value(), ctx.pair.pq(), ctx.order)?
        .into_iter()
        .collect();
    let pq = ctx.pq_u64();
    let mut out = Vec::new();
    for b0 in (1..pq).filter(|b| b.gcd(&pq) == 1) {
        let b0 = big(b0);
        let extendable = is_extendable(&ctx.pair, &b0)?;
        let member = members.contains(&b0);
        out.push(CheckResult::new(
            Check::Extendability.name(),
            format!("b0={b0}"),
            extendable == member,
            format!("extendable={extendable} in_subgroup={member}"),
        ));
    }
    Ok(out)
}

fn lift_power_one(ctx: &PairContext, n: u64, b0: &Residue) -> Result<String> {
    let target = canonical_lift(&ctx.pair, b0.value())?;
    let lhs = ctx.base.lifted().pow(&big(n));
    if lhs != *target.lifted() {
        return Err(Error::NotCongruent {
            base: ctx.base.lifted().value().clone(),
            exponent: big(n),
            target: target.lifted().value().clone(),
            modulus: ctx.pair.p2q2().get().clone(),
        });
    }
    Ok(format!(
        "lift(a0)^n = {} = lift(b0) mod {}",
        lhs.value(),
        ctx.pair.p2q2()
    ))
}

fn carry_one(ctx: &PairContext, n: u64, b0: &Residue) -> Result<String> {
    let target = canonical_lift(&ctx.pair, b0.value())?;
    let beta = carry(&ctx.pair, ctx.a0.value(), &big(n), b0.value())?;
    let details = format!(
        "beta={} a1={} b1={}",
        beta.beta().value(),
        ctx.base.digit().value(),
        target.digit().value()
    );
    if verify_carry_relation(&ctx.pair, &ctx.base, &target, &big(n), &beta) {
        Ok(details)
    } else {
        Err(Error::NotCongruent {
            base: ctx.a0.value().clone(),
            exponent: big(n),
            target: b0.value().clone(),
            modulus: ctx.pair.pq().get().clone(),
        })
    }
}

fn fermat_carry_one(ctx: &PairContext, n: u64, b0: &Residue) -> Result<String> {
    let beta = carry(&ctx.pair, ctx.a0.value(), &big(n), b0.value())?;
    if verify_fermat_carry_relation(&ctx.pair, ctx.a0.value(), b0.value(), &big(n), &beta)? {
        Ok(format!("beta={}", beta.beta().value()))
    } else {
        Err(Error::NotCongruent {
            base: ctx.a0.value().clone(),
            exponent: big(n),
            target: b0.value().clone(),
            modulus: ctx.pair.pq().get().clone(),
        })
    }
}

fn orders(ctx: &PairContext, opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let name = Check::Orders.name();
    let pair = &ctx.pair;
    let mut out = Vec::new();

    let f = factorize(pair.p2q2().get())?;
    let lambda = carmichael_lambda(&f);
    let phi = euler_phi(&f);
    let (p, q, phi_q) = (pair.p().get(), pair.q().get(), pair.phi_q().get());
    let lambda_expected = p * q * phi_q;
    let phi_expected = p * q * q * phi_q * 2u32;
    out.push(CheckResult::new(
        name,
        "lambda-phi",
        lambda == lambda_expected && phi == phi_expected && (&phi % &lambda).is_zero(),
        format!("lambda(p2q2)={lambda} phi(p2q2)={phi}"),
    ));

    out.push(CheckResult::from_outcome(
        name,
        format!("canonical a0={}", ctx.a0.value()),
        check_canonical_orders(pair, &ctx.base)
            .map(|o| format!("order={} lift^(q*phi(q)) = 1 mod {}", o.order, pair.p2q3())),
    ));

    // n = 1, so every offset k yields a valid non-canonical lift of a0 to itself
    let inst = DlogInstance::from_exponent(pair, ctx.a0.value(), &BigUint::one())?;
    for k in ctx.offsets(opts, Check::Orders, 1) {
        let outcome =
            construct_noncanonical(&inst, &ctx.base, &ctx.base, &big(k)).and_then(|lift| {
                let case = lift.case()?;
                let order = check_noncanonical_order(pair, &ctx.base, &big(k))?;
                let predicted = case.predicted_order(pair);
                if order == predicted {
                    Ok(format!("{} order={order}", case.name()))
                } else {
                    Err(Error::OrderMismatch {
                        element: lift.base_element().into_value(),
                        expected: predicted,
                        actual: order,
                    })
                }
            });
        out.push(CheckResult::from_outcome(name, format!("k={k}"), outcome));
    }
    Ok(out)
}

fn formula4(ctx: &PairContext) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for r in [ctx.p_u64(), ctx.q_u64()] {
        out.extend(formula4_prime(r)?);
    }
    Ok(out)
}

/// Runs the prime-square index formula for every primitive root of `r` and
/// every exponent in `[0, r − 1)`.
pub fn formula4_prime(r: u64) -> Result<Vec<CheckResult>> {
    let name = Check::Formula4.name();
    let modulus = Modulus::from_u64(r)?;
    let f = factorize(&big(r - 1))?;
    let mut out = Vec::new();
    for a0 in (1..r).filter(|&a| is_primitive_root(&big(a), &modulus, &f)) {
        let instance = format!("p={r} a0={a0}");
        let mut outcome = Ok(format!("{} exponents reproduced", r - 1));
        let mut b0 = 1u64;
        for n_p in 0..r - 1 {
            match formula4_check(&modulus, &big(a0), &big(b0), &big(n_p)) {
                Ok(got) if got.value() == &big(n_p % r) => {}
                Ok(got) => {
                    outcome = Err(Error::NotCongruent {
                        base: big(a0),
                        exponent: big(n_p),
                        target: got.into_value(),
                        modulus: big(r),
                    });
                    break;
                }
                Err(Error::NotInvertible { .. }) => {
                    outcome = Ok("excluded: a1 = 0 mod p (a0 is its own lift)".to_string());
                    break;
                }
                Err(e) => {
                    outcome = Err(e);
                    break;
                }
            }
            b0 = b0 * a0 % r;
        }
        out.push(CheckResult::from_outcome(name, instance, outcome));
    }
    Ok(out)
}

fn recovery_one(ctx: &PairContext, opts: &SuiteOptions, n: u64, b0: &Residue) -> Result<String> {
    let pair = &ctx.pair;
    let inst = DlogInstance::from_exponent(pair, ctx.a0.value(), &big(n))?;
    let target = canonical_lift(pair, b0.value())?;
    let n_big = big(n);
    let a0_p = ctx.a0.value() % pair.p().get();
    let b0_p = b0.value() % pair.p().get();
    let truth = dlog_bruteforce(&a0_p, &b0_p, pair.p(), ctx.p_u64() - 1)?
        .into_n()
        .ok_or(Error::NoCandidate)?;

    let (mut coprime, mut p_multiple, mut q_multiple) = (0u32, 0u32, 0u32);
    let mut n_mod_q: Option<BigUint> = None;
    for k in ctx.offsets(opts, Check::Recovery, n) {
        let k = big(k);
        let lift = construct_noncanonical(&inst, &ctx.base, &target, &k)?;
        let case = lift.case()?;
        let got = recover_mod_pq(pair, ctx.a0.value(), b0.value(), &k, lift.l().value())?;
        if got != Residue::new(&n_big, got.modulus()) {
            return Err(mismatch(&n_big, &got, &k));
        }
        let g = k.gcd(pair.pq().get());
        if g.is_one() {
            coprime += 1;
        } else if &g == pair.p().get() {
            p_multiple += 1;
        } else {
            q_multiple += 1;
        }
        if (got.modulus().get() % pair.q().get()).is_zero() {
            n_mod_q = Some(got.value() % pair.q().get());
        }
        if let OffsetCase::SubgroupPreserving { k1, l1 } = case {
            let r = recover_mod_q(pair, ctx.a0.value(), b0.value(), k1.value(), l1.value())?;
            if r != Residue::new(&n_big, pair.q()) {
                return Err(mismatch(&n_big, &r, &k));
            }
            n_mod_q = Some(r.into_value());
        }
    }
    let n_mod_q = n_mod_q.ok_or(Error::NoCandidate)?;
    let n_p = lift_to_p_minus_1(pair, &a0_p, &b0_p, &n_mod_q)?;
    if n_p.value() != &truth {
        return Err(mismatch(&truth, &n_p, &BigUint::zero()));
    }
    Ok(format!(
        "offsets coprime={coprime} p*k1={p_multiple} q*j={q_multiple}; n_p={} matches brute force",
        n_p.value()
    ))
}

fn smart_one(ctx: &PairContext, opts: &SuiteOptions, n: u64, b0: &Residue) -> Result<String> {
    let pair = &ctx.pair;
    let inst = DlogInstance::from_exponent(pair, ctx.a0.value(), &big(n))?;
    let target = canonical_lift(pair, b0.value())?;
    let offsets = ctx.offsets(opts, Check::Smart, n);
    for &k in &offsets {
        let k = big(k);
        let lift = construct_noncanonical(&inst, &ctx.base, &target, &k)?;
        let closed = recover_mod_pq(pair, ctx.a0.value(), b0.value(), &k, lift.l().value())?;
        let smart = smart_recover(pair, &ctx.base, &target, &k, lift.l().value())?;
        if closed != smart {
            return Err(mismatch(closed.value(), &smart, &k));
        }
    }
    Ok(format!("{} offsets agree", offsets.len()))
}

/// Smallest primitive root of `p` coprime to `q` that is not a primitive
/// root of `q`, falling back to the dual root when none exists below `p`.
fn relaxed_base(ctx: &PairContext) -> Result<u64> {
    let f = ctx.pair.p_minus_1_factorization();
    let fq = factorize(ctx.pair.phi_q().get())?;
    let q = ctx.q_u64();
    let candidate = (2..ctx.p_u64()).find(|&a| {
        a % q != 0
            && is_primitive_root(&big(a), ctx.pair.p(), &f)
            && !is_primitive_root(&big(a), ctx.pair.q(), &fq)
    });
    Ok(candidate.unwrap_or_else(|| ctx.a0.to_u64().expect("small pair")))
}

fn relaxed(ctx: &PairContext, opts: &SuiteOptions) -> Result<Vec<CheckResult>> {
    let name = Check::Relaxed.name();
    let (p, q) = (ctx.p_u64(), ctx.q_u64());
    let a0 = relaxed_base(ctx)?;
    let mut out = Vec::new();
    let mut b0 = 1u64;
    for n in 0..p - 1 {
        // b0 ≡ a0^n mod p, moved off multiples of q
        let target = if b0.is_multiple_of(q) { b0 + p } else { b0 };
        let outcome = relaxed_one(ctx, opts, a0, target, n);
        out.push(CheckResult::from_outcome(
            name,
            format!("a0={a0} n={n} b0={target}"),
            outcome,
        ));
        b0 = b0 * a0 % p;
    }
    Ok(out)
}

fn relaxed_one(ctx: &PairContext, opts: &SuiteOptions, a0: u64, b0: u64, n: u64) -> Result<String> {
    let pair = &ctx.pair;
    let (a0, b0, n_big) = (big(a0), big(b0), big(n));
    let powered = DlogInstance::relaxed_powered(pair, &a0, &b0, &n_big)?;
    let base = canonical_lift(pair, powered.a0().value())?;
    let target = canonical_lift(pair, powered.b0().value())?;
    let mut checked = 0u32;
    for k in ctx.offsets(opts, Check::Relaxed, n) {
        let k = big(k);
        let lift = construct_noncanonical(&powered, &base, &target, &k)?;
        let got = match lift.case()? {
            OffsetCase::SubgroupPreserving { k1, l1 } => {
                relaxed_recover(pair, &a0, &b0, k1.value(), l1.value(), RecoveryMode::ModQ)?
            }
            _ => relaxed_recover(pair, &a0, &b0, &k, lift.l().value(), RecoveryMode::ModPq)?,
        };
        if got != Residue::new(&n_big, got.modulus()) {
            return Err(mismatch(&n_big, &got, &k));
        }
        checked += 1;
    }
    Ok(format!(
        "A0={} B0={}; {checked} offsets recovered n",
        powered.a0().value(),
        powered.b0().value()
    ))
}

fn mismatch(expected: &BigUint, got: &Residue, k: &BigUint) -> Error {
    Error::NotCongruent {
        base: k.clone(),
        exponent: expected.clone(),
        target: got.value().clone(),
        modulus: got.modulus().get().clone(),
    }
}
