//! Safe-prime pairs `p = 2q + 1`, discrete-log instances modulo `pq`, and the
//! conditions under which a logarithm modulo `p` extends to one modulo `pq`.
//!
//! A base `a0` that is a primitive root of both `p` and `q` generates a
//! subgroup of order `q·φ(q) = lcm(p − 1, q − 1)` modulo `pq`. A target `b0`
//! lies in it exactly when its Legendre symbols modulo `p` and `q` agree,
//! because `gcd(p − 1, q − 1) = 2` forces `n_p ≡ n_q (mod 2)`.

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{
    crt_pair, factorize, is_primitive_root, is_probable_prime, legendre_symbol, powmod,
    solve_linear, Factorization, Modulus, Residue,
};
use crate::error::{Error, Result};

/// Default number of random candidates tried by [`find_safe_prime`].
pub const DEFAULT_SAFE_PRIME_ATTEMPTS: u64 = 1 << 22;

/// A safe prime `p = 2q + 1` together with the moduli tower built on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SafePrimePair {
    p: Modulus,
    q: Modulus,
    p_minus_1: Modulus,
    q_minus_1: Modulus,
    pq: Modulus,
    p2q2: Modulus,
    p2q3: Modulus,
    p3q3: Modulus,
    subgroup_order: Modulus,
    full_lift_order: BigUint,
}

impl SafePrimePair {
    pub fn new(p: &BigUint, q: &BigUint) -> Result<Self> {
        validate_safe_prime(p, q)
    }

    pub fn from_u64(p: u64, q: u64) -> Result<Self> {
        validate_safe_prime(&BigUint::from(p), &BigUint::from(q))
    }

    /// The pair for the Sophie Germain prime `q`.
    pub fn from_q(q: &BigUint) -> Result<Self> {
        validate_safe_prime(&(q * 2u32 + 1u32), q)
    }

    pub fn p(&self) -> &Modulus {
        &self.p
    }

    pub fn q(&self) -> &Modulus {
        &self.q
    }

    pub fn p_minus_1(&self) -> &Modulus {
        &self.p_minus_1
    }

    /// `φ(q) = q − 1`.
    pub fn phi_q(&self) -> &Modulus {
        &self.q_minus_1
    }

    pub fn pq(&self) -> &Modulus {
        &self.pq
    }

    pub fn p2q2(&self) -> &Modulus {
        &self.p2q2
    }

    pub fn p2q3(&self) -> &Modulus {
        &self.p2q3
    }

    pub fn p3q3(&self) -> &Modulus {
        &self.p3q3
    }

    /// `q·φ(q)`, the order of the subgroup generated by a dual primitive root.
    pub fn subgroup_order(&self) -> &Modulus {
        &self.subgroup_order
    }

    /// `p·q·φ(q) = λ(p²q²)`.
    pub fn full_lift_order(&self) -> &BigUint {
        &self.full_lift_order
    }

    /// Factorization of `q·φ(q)`. Trial-divides `q − 1`.
    pub fn subgroup_order_factorization(&self) -> Result<Factorization> {
        let q_part = Factorization::from_prime_powers([(self.q.get().clone(), 1)])?;
        Ok(q_part.merge(&factorize(self.q_minus_1.get())?))
    }

    /// Factorization of `p·q·φ(q)`.
    pub fn full_lift_order_factorization(&self) -> Result<Factorization> {
        let p_part = Factorization::from_prime_powers([(self.p.get().clone(), 1)])?;
        Ok(p_part.merge(&self.subgroup_order_factorization()?))
    }

    /// Factorization of `p − 1 = 2q`.
    pub fn p_minus_1_factorization(&self) -> Factorization {
        Factorization::from_prime_powers([(BigUint::from(2u32), 1), (self.q.get().clone(), 1)])
            .expect("2 and q are prime")
    }

    pub fn describe(&self) -> String {
        format!("p={} q={}", self.p, self.q)
    }
}

/// Checks `p = 2q + 1` with both prime and `q` odd, and builds the tower.
pub fn validate_safe_prime(p: &BigUint, q: &BigUint) -> Result<SafePrimePair> {
    for x in [p, q] {
        if !is_probable_prime(x) {
            return Err(Error::NotPrime(x.clone()));
        }
    }
    if *p != q * 2u32 + 1u32 {
        return Err(Error::NotSafePrime {
            p: p.clone(),
            q: q.clone(),
        });
    }
    if *q == BigUint::from(2u32) {
        return Err(Error::QTooSmall);
    }
    let pq = p * q;
    let p2q2 = &pq * &pq;
    let q_minus_1 = q - 1u32;
    let subgroup_order = q * &q_minus_1;
    Ok(SafePrimePair {
        p: Modulus::new(p.clone())?,
        q: Modulus::new(q.clone())?,
        p_minus_1: Modulus::new(p - 1u32)?,
        q_minus_1: Modulus::new(q_minus_1)?,
        p2q3: Modulus::new(&p2q2 * q)?,
        p3q3: Modulus::new(&p2q2 * &pq)?,
        full_lift_order: p * &subgroup_order,
        subgroup_order: Modulus::new(subgroup_order)?,
        pq: Modulus::new(pq)?,
        p2q2: Modulus::new(p2q2)?,
    })
}

/// Samples odd `q` with exactly `bit_length` bits until `q` and `2q + 1` are
/// both prime. Deterministic for a fixed seed.
pub fn find_safe_prime(bit_length: u64, seed: u64) -> Result<SafePrimePair> {
    find_safe_prime_with_cap(bit_length, seed, DEFAULT_SAFE_PRIME_ATTEMPTS)
}

pub fn find_safe_prime_with_cap(
    bit_length: u64,
    seed: u64,
    attempts: u64,
) -> Result<SafePrimePair> {
    if bit_length < 2 {
        return Err(Error::BitLengthTooSmall(bit_length));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lo = BigUint::one() << (bit_length - 1);
    let hi = BigUint::one() << bit_length;
    for _ in 0..attempts {
        let q = rng.gen_biguint_range(&lo, &hi) | BigUint::one();
        if q == BigUint::from(2u32) || !is_probable_prime(&q) {
            continue;
        }
        let p = &q * 2u32 + 1u32;
        if is_probable_prime(&p) {
            return validate_safe_prime(&p, &q);
        }
    }
    Err(Error::ExhaustedAttempts(attempts))
}

/// Every safe-prime pair with `3 ≤ q ≤ q_max`, in increasing order of `q`.
pub fn safe_prime_pairs(q_max: u64) -> Vec<SafePrimePair> {
    (3..=q_max)
        .step_by(2)
        .filter_map(|q| SafePrimePair::from_q(&BigUint::from(q)).ok())
        .collect()
}

/// True when `a0` is a primitive root of both `p` and `q`.
pub fn is_dual_primitive_root(pair: &SafePrimePair, a0: &BigUint) -> Result<bool> {
    let q_minus_1 = factorize(pair.phi_q().get())?;
    Ok(
        is_primitive_root(a0, pair.p(), &pair.p_minus_1_factorization())
            && is_primitive_root(a0, pair.q(), &q_minus_1),
    )
}

/// Smallest `a0 ≥ 2` that is a primitive root of both `p` and `q`.
pub fn find_dual_primitive_root(pair: &SafePrimePair) -> Result<Residue> {
    let p_minus_1 = pair.p_minus_1_factorization();
    let q_minus_1 = factorize(pair.phi_q().get())?;
    let mut a0 = BigUint::from(2u32);
    loop {
        if is_primitive_root(&a0, pair.p(), &p_minus_1)
            && is_primitive_root(&a0, pair.q(), &q_minus_1)
        {
            return Ok(Residue::new(&a0, pair.pq()));
        }
        a0 += 1u32;
    }
}

fn require_coprime(x: &BigUint, m: &Modulus) -> Result<()> {
    if x.gcd(m.get()).is_one() {
        Ok(())
    } else {
        Err(Error::NotCoprime {
            value: x.clone(),
            modulus: m.get().clone(),
        })
    }
}

/// Whether `a0^n ≡ b0 (mod p)` extends to a congruence modulo `pq`:
/// the Legendre symbols of `b0` modulo `p` and `q` must agree.
pub fn is_extendable(pair: &SafePrimePair, b0: &BigUint) -> Result<bool> {
    require_coprime(b0, pair.pq())?;
    Ok(legendre_symbol(b0, pair.p())? == legendre_symbol(b0, pair.q())?)
}

/// Combines `n_p mod p − 1` and `n_q mod q − 1` into `n mod q·φ(q)`.
pub fn extend_dlog(pair: &SafePrimePair, n_p: &BigUint, n_q: &BigUint) -> Result<Residue> {
    let rp = Residue::new(n_p, pair.p_minus_1());
    let rq = Residue::new(n_q, pair.phi_q());
    if rp.value().is_even() != rq.value().is_even() {
        return Err(Error::ParityMismatch {
            n_p: rp.into_value(),
            n_q: rq.into_value(),
        });
    }
    crt_pair(&rp, &rq)
}

/// Output of a normalization: the new target and how many steps it took.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub b0: Residue,
    pub steps: u64,
}

/// Tries `b0 + k·p` for `k = 0, 1, …` until the candidate is coprime to `q`
/// and extendable. The residue modulo `p`, hence `n_p`, is unchanged.
pub fn normalize_shift(pair: &SafePrimePair, b0_mod_p: &BigUint) -> Result<Normalized> {
    require_coprime(b0_mod_p, pair.p())?;
    let cap = 4 * pair_q_u64(pair);
    let mut candidate = b0_mod_p % pair.p().get();
    for k in 0..cap {
        if candidate.gcd(pair.q().get()).is_one() && is_extendable(pair, &candidate)? {
            return Ok(Normalized {
                b0: Residue::new(&candidate, pair.pq()),
                steps: k,
            });
        }
        candidate += pair.p().get();
    }
    Err(Error::SearchCapExceeded(cap))
}

/// Multiplies the target by `a0^k` modulo `p` (keeping the least positive
/// representative) until it is coprime to `q` and extendable. The logarithm
/// of the result is `n_p + k (mod p − 1)`.
pub fn normalize_multiply(pair: &SafePrimePair, a0: &BigUint, b0: &BigUint) -> Result<Normalized> {
    require_coprime(a0, pair.p())?;
    require_coprime(b0, pair.p())?;
    let cap = 2 * pair_q_u64(pair);
    let a0_p = Residue::new(a0, pair.p());
    let mut candidate = Residue::new(b0, pair.p());
    for k in 0..cap {
        let c = candidate.value();
        if c.gcd(pair.q().get()).is_one() && is_extendable(pair, c)? {
            return Ok(Normalized {
                b0: Residue::new(c, pair.pq()),
                steps: k,
            });
        }
        candidate = &candidate * &a0_p;
    }
    Err(Error::SearchCapExceeded(cap))
}

/// `b0² mod pq`; always extendable, with logarithm `2n`.
pub fn normalize_square(pair: &SafePrimePair, b0: &BigUint) -> Result<Residue> {
    require_coprime(b0, pair.pq())?;
    Ok(powmod(b0, &BigUint::from(2u32), pair.pq()))
}

/// Recovers `n mod p − 1` from `2n` known modulo some `M` (typically `q` or
/// `q·φ(q)`), keeping the candidate that satisfies `a0^n ≡ b0 (mod p)`.
pub fn resolve_halving(
    pair: &SafePrimePair,
    a0: &BigUint,
    b0_mod_p: &BigUint,
    two_n: &Residue,
) -> Result<Residue> {
    let two = Residue::from_u64(2, two_n.modulus());
    let half = solve_linear(&two, two_n)?;
    let step = half.modulus().get().gcd(pair.p_minus_1().get());
    let target = Residue::new(b0_mod_p, pair.p());
    let start = half.value() % &step;
    let mut survivors = Vec::new();
    let mut candidate = start;
    while candidate < *pair.p_minus_1().get() {
        if powmod(a0, &candidate, pair.p()) == target {
            survivors.push(candidate.clone());
        }
        candidate += &step;
    }
    match survivors.len() {
        0 => Err(Error::NoCandidate),
        1 => Ok(Residue::new(&survivors[0], pair.p_minus_1())),
        _ => Err(Error::BothCandidates(
            survivors[0].clone(),
            survivors[1].clone(),
        )),
    }
}

fn pair_q_u64(pair: &SafePrimePair) -> u64 {
    u64::try_from(pair.q().get()).unwrap_or(u64::MAX / 4)
}

/// A discrete-log instance `a0^n ≡ b0 (mod pq)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DlogInstance {
    pair: SafePrimePair,
    a0: Residue,
    b0: Residue,
    known_n: Option<BigUint>,
    n_p: Option<Residue>,
    n_q: Option<Residue>,
    relaxed: bool,
}

impl DlogInstance {
    /// An instance whose base is a primitive root of both `p` and `q`.
    pub fn new(pair: &SafePrimePair, a0: &BigUint, b0: &BigUint) -> Result<Self> {
        require_coprime(a0, pair.pq())?;
        require_coprime(b0, pair.pq())?;
        if !is_dual_primitive_root(pair, a0)? {
            return Err(Error::NotDualPrimitiveRoot(a0.clone()));
        }
        Ok(Self::unchecked(pair, a0, b0, false))
    }

    /// An instance with relaxed hypotheses: `a0` need only be a primitive
    /// root of `p`, and both `a0`, `b0` coprime to `pq`.
    pub fn relaxed(pair: &SafePrimePair, a0: &BigUint, b0: &BigUint) -> Result<Self> {
        require_coprime(a0, pair.pq())?;
        require_coprime(b0, pair.pq())?;
        Ok(Self::unchecked(pair, a0, b0, true))
    }

    /// The instance `(a0, a0^n mod pq)` with `n` known.
    pub fn from_exponent(pair: &SafePrimePair, a0: &BigUint, n: &BigUint) -> Result<Self> {
        let b0 = powmod(a0, n, pair.pq());
        Self::new(pair, a0, b0.value())?.with_known_n(n)
    }

    fn unchecked(pair: &SafePrimePair, a0: &BigUint, b0: &BigUint, relaxed: bool) -> Self {
        DlogInstance {
            pair: pair.clone(),
            a0: Residue::new(a0, pair.pq()),
            b0: Residue::new(b0, pair.pq()),
            known_n: None,
            n_p: None,
            n_q: None,
            relaxed,
        }
    }

    /// Attaches the exponent, checking `a0^n ≡ b0 (mod pq)` and `n < q·φ(q)`.
    pub fn with_known_n(mut self, n: &BigUint) -> Result<Self> {
        if n >= self.pair.subgroup_order().get() || self.a0.pow(n) != self.b0 {
            return Err(Error::NotCongruent {
                base: self.a0.value().clone(),
                exponent: n.clone(),
                target: self.b0.value().clone(),
                modulus: self.pair.pq().get().clone(),
            });
        }
        self.n_p = Some(Residue::new(n, self.pair.p_minus_1()));
        self.n_q = Some(Residue::new(n, self.pair.phi_q()));
        self.known_n = Some(n.clone());
        Ok(self)
    }

    /// The powered instance `(a0^φ(q), b0^φ(q))` used when `a0` is only a
    /// primitive root of `p`. Carries over the exponent if known.
    pub fn powered(&self) -> Result<DlogInstance> {
        let phi = self.pair.phi_q().get();
        let a = self.a0.pow(phi);
        let b = self.b0.pow(phi);
        let inst = Self::unchecked(&self.pair, a.value(), b.value(), true);
        match &self.known_n {
            Some(n) => inst.with_known_n(n),
            None => Ok(inst),
        }
    }

    /// Builds the powered instance `(a0^φ(q), b0^φ(q)) mod pq` from a
    /// congruence `a0^n ≡ b0` known only modulo `p`, where `a0` is merely a
    /// primitive root of `p`. The powered congruence holds modulo `pq`
    /// because both sides are `1` modulo `q`.
    pub fn relaxed_powered(
        pair: &SafePrimePair,
        a0: &BigUint,
        b0: &BigUint,
        n: &BigUint,
    ) -> Result<Self> {
        require_coprime(a0, pair.pq())?;
        require_coprime(b0, pair.pq())?;
        if !is_primitive_root(a0, pair.p(), &pair.p_minus_1_factorization()) {
            return Err(Error::NotDualPrimitiveRoot(a0.clone()));
        }
        if powmod(a0, n, pair.p()) != Residue::new(b0, pair.p()) {
            return Err(Error::NotCongruent {
                base: a0.clone(),
                exponent: n.clone(),
                target: b0.clone(),
                modulus: pair.p().get().clone(),
            });
        }
        let phi = pair.phi_q().get();
        let big_a = powmod(a0, phi, pair.pq());
        let big_b = powmod(b0, phi, pair.pq());
        Self::unchecked(pair, big_a.value(), big_b.value(), true).with_known_n(n)
    }

    pub fn pair(&self) -> &SafePrimePair {
        &self.pair
    }

    pub fn a0(&self) -> &Residue {
        &self.a0
    }

    pub fn b0(&self) -> &Residue {
        &self.b0
    }

    pub fn known_n(&self) -> Option<&BigUint> {
        self.known_n.as_ref()
    }

    pub fn n_p(&self) -> Option<&Residue> {
        self.n_p.as_ref()
    }

    pub fn n_q(&self) -> Option<&Residue> {
        self.n_q.as_ref()
    }

    pub fn is_relaxed(&self) -> bool {
        self.relaxed
    }

    pub fn is_extendable(&self) -> Result<bool> {
        is_extendable(&self.pair, self.b0.value())
    }
}
