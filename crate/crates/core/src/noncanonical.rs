//! Non-canonical lifts and the recovery of `n` as a logarithmic derivative.
//!
//! Shifting the canonical digits by offsets `(k, l)` gives
//! `(a0 + (a1 + k)pq)^n ≡ b0 + (b1 + l)pq (mod p²q²)` exactly when
//! `l ≡ n·(b0/a0)·k (mod pq)`. Knowing a valid pair therefore yields
//! `n ≡ (l/b0)/(k/a0)`. Building such a pair needs `n` in the first place,
//! which is why [`construct_noncanonical`] insists on a known exponent.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{is_primitive_root, powmod, solve_linear, Modulus, Residue};
use crate::error::{Error, Result};
use crate::instance::{DlogInstance, SafePrimePair};
use crate::lifts::{fermat_quotient_pq, CanonicalLift};

/// How an offset `k` relates to the subgroup generated by the base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OffsetCase {
    /// `k ≡ 0 (mod pq)`: the canonical lift itself.
    Canonical,
    /// `k = k1·p` with `k1 ≢ 0 (mod q)`, and then `l = l1·p`. The lifted
    /// base keeps order `qφ(q)`.
    SubgroupPreserving { k1: Residue, l1: Residue },
    /// Every other `k`; the lifted base has order `pqφ(q)`.
    FullOrder,
}

impl OffsetCase {
    pub fn name(&self) -> &'static str {
        match self {
            OffsetCase::Canonical => "canonical",
            OffsetCase::SubgroupPreserving { .. } => "subgroup-preserving",
            OffsetCase::FullOrder => "full-order",
        }
    }

    /// Order of `a0 + (a1 + k)pq` modulo `p²q²` implied by the case.
    pub fn predicted_order(&self, pair: &SafePrimePair) -> BigUint {
        match self {
            OffsetCase::FullOrder => pair.full_lift_order().clone(),
            _ => pair.subgroup_order().get().clone(),
        }
    }
}

/// Offsets `(k, l)` labelling a lift of `a0^n ≡ b0 (mod pq)` to `p²q²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonCanonicalLift {
    pair: SafePrimePair,
    base: CanonicalLift,
    target: CanonicalLift,
    k: Residue,
    l: Residue,
}

impl NonCanonicalLift {
    pub fn pair(&self) -> &SafePrimePair {
        &self.pair
    }

    pub fn k(&self) -> &Residue {
        &self.k
    }

    pub fn l(&self) -> &Residue {
        &self.l
    }

    pub fn base(&self) -> &CanonicalLift {
        &self.base
    }

    pub fn target(&self) -> &CanonicalLift {
        &self.target
    }

    /// `a0 + (a1 + k)pq mod p²q²`.
    pub fn base_element(&self) -> Residue {
        shifted(&self.pair, &self.base, self.k.value())
    }

    /// `b0 + (b1 + l)pq mod p²q²`.
    pub fn target_element(&self) -> Residue {
        shifted(&self.pair, &self.target, self.l.value())
    }

    pub fn case(&self) -> Result<OffsetCase> {
        classify_offset(&self.pair, self.k.value(), self.l.value())
    }
}

fn shifted(pair: &SafePrimePair, lift: &CanonicalLift, offset: &BigUint) -> Residue {
    let step = Residue::new(&(offset * pair.pq().get()), pair.p2q2());
    lift.lifted() + &step
}

/// Builds the offset `l ≡ n·(b0/a0)·k (mod pq)` and checks the lifted
/// congruence by direct exponentiation.
pub fn construct_noncanonical(
    inst: &DlogInstance,
    base: &CanonicalLift,
    target: &CanonicalLift,
    k: &BigUint,
) -> Result<NonCanonicalLift> {
    let n = inst.known_n().ok_or(Error::MissingKnownN)?;
    let pair = inst.pair();
    let k = Residue::new(k, pair.pq());
    let ratio = inst.b0().try_div(inst.a0())?;
    let l = &(&Residue::new(n, pair.pq()) * &ratio) * &k;
    let lift = NonCanonicalLift {
        pair: pair.clone(),
        base: base.clone(),
        target: target.clone(),
        k,
        l,
    };
    if lift.base_element().pow(n) != lift.target_element() {
        return Err(Error::ConstructionFailed {
            k: lift.k.into_value(),
        });
    }
    Ok(lift)
}

/// Classifies offsets by their divisibility by `p`.
pub fn classify_offset(pair: &SafePrimePair, k: &BigUint, l: &BigUint) -> Result<OffsetCase> {
    let k = k % pair.pq().get();
    let l = l % pair.pq().get();
    let p = pair.p().get();
    let inconsistent = || Error::InconsistentPair {
        k: k.clone(),
        l: l.clone(),
    };
    if k.is_zero() {
        return if l.is_zero() {
            Ok(OffsetCase::Canonical)
        } else {
            Err(inconsistent())
        };
    }
    if !(&k % p).is_zero() {
        return Ok(OffsetCase::FullOrder);
    }
    if !(&l % p).is_zero() {
        return Err(inconsistent());
    }
    Ok(OffsetCase::SubgroupPreserving {
        k1: Residue::new(&(&k / p), pair.q()),
        l1: Residue::new(&(&l / p), pair.q()),
    })
}

/// Multiplicative order of `a0 + (a1 + k)pq` modulo `p²q²`.
pub fn check_noncanonical_order(
    pair: &SafePrimePair,
    base: &CanonicalLift,
    k: &BigUint,
) -> Result<BigUint> {
    let element = shifted(pair, base, k);
    let f = pair.full_lift_order_factorization()?;
    crate::arith::multiplicative_order(element.value(), pair.p2q2(), pair.full_lift_order(), &f)
}

/// `n ≡ (l1/b0)/(k1/a0) (mod q)` from subgroup-preserving offsets.
pub fn recover_mod_q(
    pair: &SafePrimePair,
    a0: &BigUint,
    b0: &BigUint,
    k1: &BigUint,
    l1: &BigUint,
) -> Result<Residue> {
    let q = pair.q();
    let a0 = Residue::new(a0, q);
    let b0 = Residue::new(b0, q);
    let k1 = Residue::new(k1, q);
    let l1 = Residue::new(l1, q);
    l1.try_div(&b0)?.try_div(&k1.try_div(&a0)?)
}

/// `n ≡ (l/b0)/(k/a0) (mod pq)`. When `g = gcd(k, pq)` is `p` or `q` the
/// linear congruence `n·k·b0 ≡ l·a0` is solved instead, and the answer is
/// unique only modulo `pq/g`.
pub fn recover_mod_pq(
    pair: &SafePrimePair,
    a0: &BigUint,
    b0: &BigUint,
    k: &BigUint,
    l: &BigUint,
) -> Result<Residue> {
    let pq = pair.pq();
    let k = Residue::new(k, pq);
    if k.is_zero() {
        return Err(Error::ZeroOffset);
    }
    let a0 = Residue::new(a0, pq);
    let b0 = Residue::new(b0, pq);
    let l = Residue::new(l, pq);
    let b0_inv = b0.inverse()?;
    let coefficient = &k * &b0;
    let rhs = &l * &a0;
    // g | l·a0/b0 iff g | l·a0 since b0 is a unit; report the former
    solve_linear(&coefficient, &rhs).map_err(|e| match e {
        Error::Unsolvable { .. } => Error::Unsolvable {
            coefficient: k.value().clone(),
            rhs: (&(&l * &a0) * &b0_inv).into_value(),
            modulus: pq.get().clone(),
        },
        other => other,
    })
}

/// The `n`-coefficient `q(a0) + ((a1 + k)/a0)·φ(q)` obtained by expanding
/// the `pqφ(q)`-th power of the shifted base.
pub fn expanded_coefficient(
    pair: &SafePrimePair,
    lift: &CanonicalLift,
    offset: &BigUint,
) -> Result<Residue> {
    let pq = pair.pq();
    let q_x0 = fermat_quotient_pq(pair, lift.x0().value())?;
    let digit = lift.digit() + &Residue::new(offset, pq);
    let phi = Residue::new(pair.phi_q().get(), pq);
    Ok(q_x0.value() + &(&digit.try_div(lift.x0())? * &phi))
}

/// Recovers `n` by raising both sides of the lifted congruence to the power
/// `pqφ(q)` modulo `p³q³`, so that `n` appears linearly in the `p²q²`
/// digit: `n·q(A) ≡ q(B) (mod pq)` with `A`, `B` the shifted lifts.
pub fn smart_recover(
    pair: &SafePrimePair,
    base: &CanonicalLift,
    target: &CanonicalLift,
    k: &BigUint,
    l: &BigUint,
) -> Result<Residue> {
    if (k % pair.pq().get()).is_zero() {
        return Err(Error::ZeroOffset);
    }
    let a = shifted(pair, base, k);
    let b = shifted(pair, target, l);
    let coefficient = fermat_quotient_pq(pair, a.value())?;
    let rhs = fermat_quotient_pq(pair, b.value())?;
    solve_linear(coefficient.value(), rhs.value())
}

/// Lifts `n mod q` to `n mod p − 1` by testing `n` and `n + q` against
/// `a0^n ≡ b0 (mod p)`.
pub fn lift_to_p_minus_1(
    pair: &SafePrimePair,
    a0_mod_p: &BigUint,
    b0_mod_p: &BigUint,
    n_mod_q: &BigUint,
) -> Result<Residue> {
    let target = Residue::new(b0_mod_p, pair.p());
    let first = n_mod_q % pair.q().get();
    let second = &first + pair.q().get();
    let hits: Vec<BigUint> = [first, second]
        .into_iter()
        .filter(|n| powmod(a0_mod_p, n, pair.p()) == target)
        .collect();
    match hits.as_slice() {
        [] => Err(Error::NoCandidate),
        [n] => Ok(Residue::new(n, pair.p_minus_1())),
        [x, y, ..] => Err(Error::BothCandidates(x.clone(), y.clone())),
    }
}

/// Which recovery formula [`relaxed_recover`] applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecoveryMode {
    /// Offsets are `(k1, l1)` of a subgroup-preserving lift: `n ≡ l1/k1 (mod q)`.
    ModQ,
    /// Offsets are `(k, l)`: `n ≡ (l/b0^φ(q))/(k/a0^φ(q)) (mod pq)`.
    ModPq,
}

/// Recovery when `a0` is only a primitive root of `p`: the congruence is
/// first raised to `φ(q)`, giving `A0 = a0^φ(q)`, `B0 = b0^φ(q)` with
/// `A0^n ≡ B0 (mod pq)`, and the offsets belong to lifts of that instance.
pub fn relaxed_recover(
    pair: &SafePrimePair,
    a0: &BigUint,
    b0: &BigUint,
    da0: &BigUint,
    db0: &BigUint,
    mode: RecoveryMode,
) -> Result<Residue> {
    for x in [a0, b0] {
        if !x.gcd(pair.pq().get()).is_one() {
            return Err(Error::NotCoprime {
                value: x.clone(),
                modulus: pair.pq().get().clone(),
            });
        }
    }
    if !is_primitive_root(a0, pair.p(), &pair.p_minus_1_factorization()) {
        return Err(Error::NotDualPrimitiveRoot(a0.clone()));
    }
    let (big_a, big_b) = powered_pair(pair, a0, b0);
    match mode {
        RecoveryMode::ModQ => recover_mod_q(pair, big_a.value(), big_b.value(), da0, db0),
        RecoveryMode::ModPq => recover_mod_pq(pair, big_a.value(), big_b.value(), da0, db0),
    }
}

/// `(a0^φ(q), b0^φ(q)) mod pq`.
pub fn powered_pair(pair: &SafePrimePair, a0: &BigUint, b0: &BigUint) -> (Residue, Residue) {
    let phi = pair.phi_q().get();
    (powmod(a0, phi, pair.pq()), powmod(b0, phi, pair.pq()))
}

/// Modulus at which a recovery from offset `k` pins down `n`: `pq/gcd(k, pq)`.
pub fn recovery_modulus(pair: &SafePrimePair, k: &BigUint) -> Result<Modulus> {
    let g = k.gcd(pair.pq().get());
    Modulus::new(pair.pq().get() / g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::big;
    use crate::instance::{find_dual_primitive_root, safe_prime_pairs};
    use crate::lifts::canonical_lift;
    use proptest::prelude::*;

    struct Fixture {
        pair: SafePrimePair,
        inst: DlogInstance,
        base: CanonicalLift,
        target: CanonicalLift,
    }

    fn fixture(q: u64, n: u64) -> Fixture {
        let pair = SafePrimePair::from_q(&big(q)).unwrap();
        let a0 = find_dual_primitive_root(&pair).unwrap();
        let inst = DlogInstance::from_exponent(&pair, a0.value(), &big(n)).unwrap();
        let base = canonical_lift(&pair, inst.a0().value()).unwrap();
        let target = canonical_lift(&pair, inst.b0().value()).unwrap();
        Fixture {
            pair,
            inst,
            base,
            target,
        }
    }

    #[test]
    fn construct_examples() {
        let f = fixture(3, 2);
        let lift = construct_noncanonical(&f.inst, &f.base, &f.target, &big(1)).unwrap();
        assert_eq!(lift.l().value(), &big(10));
        assert_eq!(lift.base_element().value(), &big(236));
        assert_eq!(lift.base_element().pow(&big(2)).value(), &big(130));
        assert_eq!(lift.case().unwrap(), OffsetCase::FullOrder);

        let lift = construct_noncanonical(&f.inst, &f.base, &f.target, &big(7)).unwrap();
        assert_eq!(lift.l().value(), &big(7));
        assert_eq!(
            lift.case().unwrap(),
            OffsetCase::SubgroupPreserving {
                k1: Residue::from_u64(1, f.pair.q()),
                l1: Residue::from_u64(1, f.pair.q()),
            }
        );

        let lift = construct_noncanonical(&f.inst, &f.base, &f.target, &big(0)).unwrap();
        assert!(lift.l().is_zero());
        assert_eq!(lift.case().unwrap(), OffsetCase::Canonical);

        let unknown = DlogInstance::new(&f.pair, &big(5), &big(4)).unwrap();
        assert_eq!(
            construct_noncanonical(&unknown, &f.base, &f.target, &big(1)),
            Err(Error::MissingKnownN)
        );
    }

    #[test]
    fn construct_detects_mismatched_lifts() {
        let f = fixture(3, 2);
        let wrong_target = canonical_lift(&f.pair, &big(16)).unwrap();
        assert!(matches!(
            construct_noncanonical(&f.inst, &f.base, &wrong_target, &big(1)),
            Err(Error::ConstructionFailed { .. })
        ));
    }

    #[test]
    fn classify_examples() {
        let pr = SafePrimePair::from_u64(7, 3).unwrap();
        assert!(matches!(
            classify_offset(&pr, &big(7), &big(7)).unwrap(),
            OffsetCase::SubgroupPreserving { .. }
        ));
        assert_eq!(
            classify_offset(&pr, &big(1), &big(10)).unwrap(),
            OffsetCase::FullOrder
        );
        assert_eq!(
            classify_offset(&pr, &big(0), &big(0)).unwrap(),
            OffsetCase::Canonical
        );
        assert!(matches!(
            classify_offset(&pr, &big(7), &big(3)),
            Err(Error::InconsistentPair { .. })
        ));
        assert!(matches!(
            classify_offset(&pr, &big(0), &big(5)),
            Err(Error::InconsistentPair { .. })
        ));
        // reduced mod pq first
        assert_eq!(
            classify_offset(&pr, &big(21), &big(42)).unwrap(),
            OffsetCase::Canonical
        );
    }

    #[test]
    fn order_examples() {
        let f = fixture(3, 2);
        assert_eq!(
            check_noncanonical_order(&f.pair, &f.base, &big(7)).unwrap(),
            big(6)
        );
        assert_eq!(
            check_noncanonical_order(&f.pair, &f.base, &big(1)).unwrap(),
            big(42)
        );
        assert_eq!(
            check_noncanonical_order(&f.pair, &f.base, &big(0)).unwrap(),
            big(6)
        );
        assert_eq!(powmod(&big(362), &big(3), f.pair.p2q2()).value(), &big(440));
        assert_eq!(powmod(&big(236), &big(6), f.pair.p2q2()).value(), &big(379));
        // gcd(k, pq) = q is still full order
        assert_eq!(
            check_noncanonical_order(&f.pair, &f.base, &big(3)).unwrap(),
            big(42)
        );
    }

    #[test]
    fn recover_mod_q_examples() {
        let pr = SafePrimePair::from_u64(7, 3).unwrap();
        assert_eq!(
            recover_mod_q(&pr, &big(5), &big(4), &big(1), &big(1))
                .unwrap()
                .value(),
            &big(2)
        );
        assert!(recover_mod_q(&pr, &big(5), &big(4), &big(1), &big(0))
            .unwrap()
            .is_zero());
        assert!(matches!(
            recover_mod_q(&pr, &big(5), &big(4), &big(0), &big(1)),
            Err(Error::NotInvertible { .. })
        ));
    }

    #[test]
    fn recover_mod_pq_examples() {
        let pr = SafePrimePair::from_u64(7, 3).unwrap();
        let n = recover_mod_pq(&pr, &big(5), &big(4), &big(1), &big(10)).unwrap();
        assert_eq!((n.value(), n.modulus().get()), (&big(2), &big(21)));
        let n = recover_mod_pq(&pr, &big(5), &big(4), &big(7), &big(7)).unwrap();
        assert_eq!((n.value(), n.modulus().get()), (&big(2), &big(3)));
        // l = k·b0/a0 means n = 1
        let l = (&Residue::from_u64(4, pr.pq())
            * &Residue::from_u64(5, pr.pq()).inverse().unwrap())
            .into_value();
        assert!(recover_mod_pq(&pr, &big(5), &big(4), &big(1), &l)
            .unwrap()
            .is_one());
        assert_eq!(
            recover_mod_pq(&pr, &big(5), &big(4), &big(0), &big(0)),
            Err(Error::ZeroOffset)
        );
        assert!(matches!(
            recover_mod_pq(&pr, &big(5), &big(4), &big(7), &big(1)),
            Err(Error::Unsolvable { .. })
        ));
    }

    #[test]
    fn smart_examples() {
        let f = fixture(3, 2);
        let n = smart_recover(&f.pair, &f.base, &f.target, &big(1), &big(10)).unwrap();
        assert_eq!((n.value(), n.modulus().get()), (&big(2), &big(21)));
        let n = smart_recover(&f.pair, &f.base, &f.target, &big(7), &big(7)).unwrap();
        assert_eq!((n.value(), n.modulus().get()), (&big(2), &big(3)));
        assert_eq!(
            smart_recover(&f.pair, &f.base, &f.target, &big(0), &big(0)),
            Err(Error::ZeroOffset)
        );
    }

    #[test]
    fn expanded_coefficient_matches_powering() {
        for q in [3u64, 5, 11, 23] {
            let f = fixture(q, 1);
            let pq = u64::try_from(f.pair.pq().get()).unwrap();
            for k in 0..pq.min(60) {
                let shifted_base = shifted(&f.pair, &f.base, &big(k));
                let powered = fermat_quotient_pq(&f.pair, shifted_base.value()).unwrap();
                let expanded = expanded_coefficient(&f.pair, &f.base, &big(k)).unwrap();
                assert_eq!(powered.value(), &expanded);
            }
        }
    }

    #[test]
    fn lift_to_p_minus_1_examples() {
        let pr = SafePrimePair::from_u64(7, 3).unwrap();
        assert_eq!(
            lift_to_p_minus_1(&pr, &big(5), &big(4), &big(2))
                .unwrap()
                .value(),
            &big(2)
        );
        assert!(lift_to_p_minus_1(&pr, &big(5), &big(1), &big(0))
            .unwrap()
            .is_zero());
        assert_eq!(
            lift_to_p_minus_1(&pr, &big(5), &big(4), &big(1)),
            Err(Error::NoCandidate)
        );
        // not a primitive root: 1 satisfies both candidates
        assert!(matches!(
            lift_to_p_minus_1(&pr, &big(1), &big(1), &big(0)),
            Err(Error::BothCandidates(..))
        ));
        let pr = SafePrimePair::from_u64(11, 5).unwrap();
        for n in 0..10u64 {
            let b0 = powmod(&big(2), &big(n), pr.p());
            let got = lift_to_p_minus_1(&pr, &big(2), b0.value(), &big(n % 5)).unwrap();
            assert_eq!(got.value(), &big(n));
        }
    }

    #[test]
    fn relaxed_examples() {
        let pr = SafePrimePair::from_u64(11, 5).unwrap();
        let inst = DlogInstance::relaxed(&pr, &big(6), &big(36))
            .unwrap()
            .with_known_n(&big(2))
            .unwrap();
        let powered = inst.powered().unwrap();
        let base = canonical_lift(&pr, powered.a0().value()).unwrap();
        let target = canonical_lift(&pr, powered.b0().value()).unwrap();

        let lift = construct_noncanonical(&powered, &base, &target, &big(1)).unwrap();
        let n = relaxed_recover(
            &pr,
            &big(6),
            &big(36),
            &big(1),
            lift.l().value(),
            RecoveryMode::ModPq,
        )
        .unwrap();
        assert_eq!(n.value(), &big(2));

        let lift = construct_noncanonical(&powered, &base, &target, &big(11 * 3)).unwrap();
        let OffsetCase::SubgroupPreserving { k1, l1 } = lift.case().unwrap() else {
            panic!("expected subgroup-preserving offsets");
        };
        let n = relaxed_recover(
            &pr,
            &big(6),
            &big(36),
            k1.value(),
            l1.value(),
            RecoveryMode::ModQ,
        )
        .unwrap();
        assert_eq!((n.value(), n.modulus().get()), (&big(2), &big(5)));

        // equal offsets mean n ≡ 1, zero target offset means n ≡ 0
        let n =
            relaxed_recover(&pr, &big(6), &big(36), &big(3), &big(3), RecoveryMode::ModQ).unwrap();
        assert!(n.is_one());
        let n =
            relaxed_recover(&pr, &big(6), &big(36), &big(3), &big(0), RecoveryMode::ModQ).unwrap();
        assert!(n.is_zero());
        assert!(matches!(
            relaxed_recover(&pr, &big(3), &big(36), &big(1), &big(1), RecoveryMode::ModQ),
            Err(Error::NotDualPrimitiveRoot(_))
        ));
    }

    #[test]
    fn round_trip_small_pairs_exhaustive_offsets() {
        for pr in safe_prime_pairs(12) {
            let a0 = find_dual_primitive_root(&pr).unwrap();
            let base = canonical_lift(&pr, a0.value()).unwrap();
            let order = u64::try_from(pr.subgroup_order().get()).unwrap();
            let pq = u64::try_from(pr.pq().get()).unwrap();
            for n in 0..order {
                let inst = DlogInstance::from_exponent(&pr, a0.value(), &big(n)).unwrap();
                let target = canonical_lift(&pr, inst.b0().value()).unwrap();
                for k in 1..pq {
                    let lift = construct_noncanonical(&inst, &base, &target, &big(k)).unwrap();
                    let case = lift.case().unwrap();
                    let got = recover_mod_pq(
                        &pr,
                        a0.value(),
                        inst.b0().value(),
                        &big(k),
                        lift.l().value(),
                    )
                    .unwrap();
                    assert_eq!(got, Residue::new(&big(n), got.modulus()));
                    let smart =
                        smart_recover(&pr, &base, &target, &big(k), lift.l().value()).unwrap();
                    assert_eq!(smart, got);
                    assert_eq!(
                        check_noncanonical_order(&pr, &base, &big(k)).unwrap(),
                        case.predicted_order(&pr)
                    );
                    if let OffsetCase::SubgroupPreserving { k1, l1 } = case {
                        let r = recover_mod_q(
                            &pr,
                            a0.value(),
                            inst.b0().value(),
                            k1.value(),
                            l1.value(),
                        )
                        .unwrap();
                        assert_eq!(r, Residue::new(&big(n), pr.q()));
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn smart_agrees_with_closed_form(idx in 0usize..6, n in 0u64..2000, k in 1u64..100_000) {
            let q = [3u64, 5, 11, 23, 29, 41][idx];
            let n = n % (q * (q - 1));
            let f = fixture(q, n);
            let pq = 2 * q * q + q;
            prop_assume!(k % pq != 0);
            let lift = construct_noncanonical(&f.inst, &f.base, &f.target, &big(k)).unwrap();
            let closed = recover_mod_pq(&f.pair, f.inst.a0().value(), f.inst.b0().value(), &big(k), lift.l().value()).unwrap();
            let smart = smart_recover(&f.pair, &f.base, &f.target, &big(k), lift.l().value()).unwrap();
            prop_assert_eq!(&closed, &smart);
            prop_assert_eq!(closed.modulus().clone(), recovery_modulus(&f.pair, &big(k)).unwrap());
        }
    }
}
