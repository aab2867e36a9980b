//! Arbitrary-precision modular arithmetic and the elementary number-theoretic
//! functions (Carmichael λ, Euler φ, Legendre symbols, multiplicative orders,
//! trial-division factoring, Miller–Rabin) used by every other module.
//!
//! Everything here works on [`BigUint`]; there is no fixed-width fast path.
//! A [`Residue`] always holds its canonical representative in `[0, m)`.

use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Deterministic Miller–Rabin base set: correct for every n below
/// [`DETERMINISTIC_MR_LIMIT`].
const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// 3 317 044 064 679 887 385 961 981, the first strong pseudoprime to all of
/// [`MR_BASES`].
pub const DETERMINISTIC_MR_LIMIT: u128 = 3_317_044_064_679_887_385_961_981;

/// Random rounds used above [`DETERMINISTIC_MR_LIMIT`].
pub const MR_RANDOM_ROUNDS: usize = 64;

const MR_RNG_SEED: u64 = 0x6c69_6674_6c61_6221;

/// A modulus `m ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(BigUint);

impl Modulus {
    pub fn new(m: BigUint) -> Result<Self> {
        if m < BigUint::from(2u32) {
            return Err(Error::InvalidModulus(m));
        }
        Ok(Modulus(m))
    }

    pub fn from_u64(m: u64) -> Result<Self> {
        Self::new(BigUint::from(m))
    }

    pub fn get(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }
}

impl Deref for Modulus {
    type Target = BigUint;

    fn deref(&self) -> &BigUint {
        &self.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An element of `Z/mZ`, stored as its least non-negative representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    value: BigUint,
    modulus: Modulus,
}

impl Residue {
    pub fn new(x: &BigUint, m: &Modulus) -> Self {
        Residue {
            value: x % m.get(),
            modulus: m.clone(),
        }
    }

    pub fn from_u64(x: u64, m: &Modulus) -> Self {
        Self::new(&BigUint::from(x), m)
    }

    /// Reduces a signed integer into `[0, m)`.
    pub fn from_signed(x: &BigInt, m: &Modulus) -> Self {
        let m_signed = BigInt::from(m.get().clone());
        let reduced = x.mod_floor(&m_signed);
        Residue {
            value: reduced.to_biguint().expect("mod_floor is non-negative"),
            modulus: m.clone(),
        }
    }

    pub fn zero(m: &Modulus) -> Self {
        Residue {
            value: BigUint::zero(),
            modulus: m.clone(),
        }
    }

    pub fn one(m: &Modulus) -> Self {
        Residue {
            value: BigUint::one(),
            modulus: m.clone(),
        }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn into_value(self) -> BigUint {
        self.value
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.value.to_u64()
    }

    pub fn pow(&self, e: &BigUint) -> Residue {
        powmod(&self.value, e, &self.modulus)
    }

    pub fn inverse(&self) -> Result<Residue> {
        invmod(&self.value, &self.modulus)
    }

    /// `self / rhs`, failing when `rhs` is not a unit.
    pub fn try_div(&self, rhs: &Residue) -> Result<Residue> {
        Ok(self * &rhs.inverse()?)
    }

    /// Reinterprets the representative modulo another modulus.
    pub fn reduce(&self, m: &Modulus) -> Residue {
        Residue::new(&self.value, m)
    }

    fn check_same(&self, rhs: &Residue) {
        assert_eq!(
            self.modulus, rhs.modulus,
            "residue arithmetic across different moduli"
        );
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

impl Add for &Residue {
    type Output = Residue;

    fn add(self, rhs: &Residue) -> Residue {
        self.check_same(rhs);
        Residue::new(&(&self.value + &rhs.value), &self.modulus)
    }
}

impl Sub for &Residue {
    type Output = Residue;

    fn sub(self, rhs: &Residue) -> Residue {
        self.check_same(rhs);
        let m = self.modulus.get();
        Residue::new(&(&self.value + m - &rhs.value), &self.modulus)
    }
}

impl Mul for &Residue {
    type Output = Residue;

    fn mul(self, rhs: &Residue) -> Residue {
        self.check_same(rhs);
        Residue::new(&(&self.value * &rhs.value), &self.modulus)
    }
}

impl Neg for &Residue {
    type Output = Residue;

    fn neg(self) -> Residue {
        if self.value.is_zero() {
            return self.clone();
        }
        Residue {
            value: self.modulus.get() - &self.value,
            modulus: self.modulus.clone(),
        }
    }
}

/// A complete factorization as strictly increasing prime powers.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    prime_powers: Vec<(BigUint, u32)>,
}

impl Factorization {
    /// Builds a factorization from arbitrary (prime, exponent) entries,
    /// merging repeats and sorting. Every entry must be prime.
    pub fn from_prime_powers(entries: impl IntoIterator<Item = (BigUint, u32)>) -> Result<Self> {
        let mut sorted: Vec<(BigUint, u32)> = entries.into_iter().filter(|(_, e)| *e > 0).collect();
        sorted.sort();
        let mut prime_powers: Vec<(BigUint, u32)> = Vec::with_capacity(sorted.len());
        for (prime, exp) in sorted {
            if !is_probable_prime(&prime) {
                return Err(Error::NotPrime(prime));
            }
            match prime_powers.last_mut() {
                Some((last, e)) if *last == prime => *e += exp,
                _ => prime_powers.push((prime, exp)),
            }
        }
        Ok(Factorization { prime_powers })
    }

    pub fn prime_powers(&self) -> &[(BigUint, u32)] {
        &self.prime_powers
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.prime_powers.iter().map(|(p, _)| p)
    }

    pub fn value(&self) -> BigUint {
        self.prime_powers.iter().map(|(p, e)| p.pow(*e)).product()
    }

    /// Factorization of the product of `self` and `other`.
    pub fn merge(&self, other: &Factorization) -> Factorization {
        let mut entries = self.prime_powers.clone();
        entries.extend(other.prime_powers.iter().cloned());
        entries.sort();
        let mut merged: Vec<(BigUint, u32)> = Vec::with_capacity(entries.len());
        for (prime, exp) in entries {
            match merged.last_mut() {
                Some((last, e)) if *last == prime => *e += exp,
                _ => merged.push((prime, exp)),
            }
        }
        Factorization {
            prime_powers: merged,
        }
    }
}

/// `x^e mod m` by square-and-multiply.
pub fn powmod(x: &BigUint, e: &BigUint, m: &Modulus) -> Residue {
    Residue {
        value: x.modpow(e, m.get()),
        modulus: m.clone(),
    }
}

/// The inverse of `x` modulo `m`.
pub fn invmod(x: &BigUint, m: &Modulus) -> Result<Residue> {
    let a = BigInt::from(x % m.get());
    let n = BigInt::from(m.get().clone());
    let egcd = a.extended_gcd(&n);
    if !egcd.gcd.is_one() {
        return Err(Error::NotInvertible {
            value: x.clone(),
            gcd: egcd.gcd.magnitude().clone(),
        });
    }
    Ok(Residue::from_signed(&egcd.x, m))
}

/// The unique `n mod lcm(m1, m2)` with `n ≡ r1 (mod m1)` and `n ≡ r2 (mod m2)`.
pub fn crt_pair(r1: &Residue, r2: &Residue) -> Result<Residue> {
    let (m1, m2) = (r1.modulus.get(), r2.modulus.get());
    let g = m1.gcd(m2);
    let (a1, a2) = (
        BigInt::from(r1.value.clone()),
        BigInt::from(r2.value.clone()),
    );
    let diff = &a2 - &a1;
    let g_signed = BigInt::from(g.clone());
    if !diff.is_multiple_of(&g_signed) {
        return Err(Error::Incompatible {
            r1: r1.value.clone(),
            m1: m1.clone(),
            r2: r2.value.clone(),
            m2: m2.clone(),
        });
    }
    let lcm = Modulus::new(m1 / &g * m2)?;
    // n = a1 + m1 * t with (m1/g) t ≡ (a2 - a1)/g mod (m2/g)
    let m2_red = m2 / &g;
    let t = if m2_red.is_one() {
        BigInt::zero()
    } else {
        let m2_mod = Modulus::new(m2_red)?;
        let inv = invmod(&(m1 / &g), &m2_mod)?;
        let rhs = Residue::from_signed(&(&diff / &g_signed), &m2_mod);
        BigInt::from((&rhs * &inv).value)
    };
    let n = a1 + BigInt::from(m1.clone()) * t;
    Ok(Residue::from_signed(&n, &lcm))
}

/// Legendre symbol `(x / p)` via Euler's criterion.
pub fn legendre_symbol(x: &BigUint, p: &BigUint) -> Result<i8> {
    if p.is_even() || !is_probable_prime(p) {
        return Err(Error::InvalidModulus(p.clone()));
    }
    let m = Modulus::new(p.clone())?;
    let r = powmod(x, &(p >> 1u32), &m);
    Ok(if r.is_zero() {
        0
    } else if r.is_one() {
        1
    } else {
        -1
    })
}

/// Carmichael's λ of the integer factored by `f`.
pub fn carmichael_lambda(f: &Factorization) -> BigUint {
    let two = BigUint::from(2u32);
    f.prime_powers()
        .iter()
        .map(|(prime, exp)| {
            if *prime == two {
                match exp {
                    1 => BigUint::one(),
                    2 => two.clone(),
                    r => BigUint::one() << (r - 2),
                }
            } else {
                prime_power_phi(prime, *exp)
            }
        })
        .fold(BigUint::one(), |acc, l| acc.lcm(&l))
}

/// Euler's φ of the integer factored by `f`.
pub fn euler_phi(f: &Factorization) -> BigUint {
    f.prime_powers()
        .iter()
        .map(|(prime, exp)| prime_power_phi(prime, *exp))
        .product()
}

fn prime_power_phi(prime: &BigUint, exp: u32) -> BigUint {
    prime.pow(exp - 1) * (prime - 1u32)
}

/// Least `d > 0` with `x^d ≡ 1 (mod m)`, found by stripping prime factors
/// from a known exponent of the group.
pub fn multiplicative_order(
    x: &BigUint,
    m: &Modulus,
    group_exponent: &BigUint,
    f: &Factorization,
) -> Result<BigUint> {
    let g = x.gcd(m.get());
    if !g.is_one() {
        return Err(Error::NotInvertible {
            value: x.clone(),
            gcd: g,
        });
    }
    if !powmod(x, group_exponent, m).is_one() {
        return Err(Error::ExponentInvalid {
            base: x.clone(),
            exponent: group_exponent.clone(),
            modulus: m.get().clone(),
        });
    }
    let mut order = group_exponent.clone();
    for (prime, exp) in f.prime_powers() {
        for _ in 0..*exp {
            let candidate = &order / prime;
            if !(&order % prime).is_zero() || !powmod(x, &candidate, m).is_one() {
                break;
            }
            order = candidate;
        }
    }
    Ok(order)
}

/// Default trial-division cap: inputs must be below 2^64.
pub fn default_factor_bound() -> BigUint {
    BigUint::one() << 64u32
}

/// Complete factorization by trial division, for `n < 2^64`.
pub fn factorize(n: &BigUint) -> Result<Factorization> {
    factorize_bounded(n, &default_factor_bound())
}

pub fn factorize_bounded(n: &BigUint, bound: &BigUint) -> Result<Factorization> {
    if n >= bound {
        return Err(Error::TooLarge {
            value: n.clone(),
            bound: bound.clone(),
        });
    }
    let mut rest = n.clone();
    let mut prime_powers = Vec::new();
    let mut strip = |rest: &mut BigUint, d: u64| {
        let mut exp = 0u32;
        while !rest.is_zero() && (&*rest % d).is_zero() {
            *rest /= d;
            exp += 1;
        }
        if exp > 0 {
            prime_powers.push((BigUint::from(d), exp));
        }
    };
    strip(&mut rest, 2);
    strip(&mut rest, 3);
    let mut d = 5u64;
    let mut limit = rest.sqrt();
    while BigUint::from(d) <= limit {
        for candidate in [d, d + 2] {
            let before = rest.clone();
            strip(&mut rest, candidate);
            if rest != before {
                limit = rest.sqrt();
            }
        }
        d += 6;
    }
    if rest > BigUint::one() {
        prime_powers.push((rest, 1));
    }
    Ok(Factorization { prime_powers })
}

/// Miller–Rabin primality: exact below [`DETERMINISTIC_MR_LIMIT`], 64 seeded
/// random rounds above it.
pub fn is_probable_prime(n: &BigUint) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(MR_RNG_SEED);
    is_probable_prime_with(n, &mut rng)
}

pub fn is_probable_prime_with<R: rand::Rng + ?Sized>(n: &BigUint, rng: &mut R) -> bool {
    if *n < BigUint::from(2u32) {
        return false;
    }
    for b in MR_BASES {
        let b = BigUint::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().expect("n - 1 > 0");
    let d = &n_minus_1 >> s;
    let witness = |a: &BigUint| -> bool {
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            return false;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == n_minus_1 {
                return false;
            }
        }
        true
    };
    if *n < BigUint::from(DETERMINISTIC_MR_LIMIT) {
        return !MR_BASES.iter().any(|&b| witness(&BigUint::from(b)));
    }
    let two = BigUint::from(2u32);
    for _ in 0..MR_RANDOM_ROUNDS {
        let a = rng.gen_biguint_range(&two, &n_minus_1);
        if witness(&a) {
            return false;
        }
    }
    true
}

/// True when `x` generates `(Z/pZ)^*`; `f` factors `p - 1`.
pub fn is_primitive_root(x: &BigUint, p: &Modulus, f: &Factorization) -> bool {
    let p_minus_1 = p.get() - 1u32;
    if (x % p.get()).is_zero() {
        return false;
    }
    f.primes()
        .all(|prime| !powmod(x, &(&p_minus_1 / prime), p).is_one())
}

/// Solves `coefficient · n ≡ rhs (mod m)`, returning the unique solution
/// modulo `m / gcd(coefficient, m)`.
pub fn solve_linear(coefficient: &Residue, rhs: &Residue) -> Result<Residue> {
    let m = coefficient.modulus().get();
    let g = coefficient.value().gcd(m);
    if g == *m {
        return Err(Error::DegenerateCoefficient(coefficient.value().clone()));
    }
    if !(rhs.value() % &g).is_zero() {
        return Err(Error::Unsolvable {
            coefficient: coefficient.value().clone(),
            rhs: rhs.value().clone(),
            modulus: m.clone(),
        });
    }
    let reduced = Modulus::new(m / &g)?;
    let c = Residue::new(&(coefficient.value() / &g), &reduced);
    let r = Residue::new(&(rhs.value() / &g), &reduced);
    r.try_div(&c)
}

pub(crate) fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(x: u64) -> Modulus {
        Modulus::from_u64(x).unwrap()
    }

    fn fact(n: u64) -> Factorization {
        factorize(&big(n)).unwrap()
    }

    #[test]
    fn powmod_examples() {
        assert_eq!(powmod(&big(5), &big(6), &m(21)).value(), &big(1));
        assert_eq!(powmod(&big(7), &big(0), &m(13)).value(), &big(1));
        assert_eq!(powmod(&big(5), &big(42), &m(9261)).value(), &big(7498));
    }

    #[test]
    fn modulus_rejects_small() {
        assert!(matches!(
            Modulus::from_u64(1),
            Err(Error::InvalidModulus(_))
        ));
        assert!(Modulus::from_u64(0).is_err());
    }

    #[test]
    fn invmod_examples() {
        assert_eq!(invmod(&big(5), &m(21)).unwrap().value(), &big(17));
        assert_eq!(invmod(&big(1), &m(97)).unwrap().value(), &big(1));
        assert_eq!(
            invmod(&big(6), &m(21)),
            Err(Error::NotInvertible {
                value: big(6),
                gcd: big(3)
            })
        );
    }

    #[test]
    fn crt_examples() {
        let r = crt_pair(&Residue::from_u64(2, &m(6)), &Residue::from_u64(0, &m(2))).unwrap();
        assert_eq!((r.value(), r.modulus().get()), (&big(2), &big(6)));
        let same = Residue::from_u64(4, &m(9));
        assert_eq!(crt_pair(&same, &same).unwrap(), same);
        assert!(matches!(
            crt_pair(&Residue::from_u64(1, &m(6)), &Residue::from_u64(0, &m(2))),
            Err(Error::Incompatible { .. })
        ));
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_symbol(&big(2), &big(7)).unwrap(), 1);
        assert_eq!(legendre_symbol(&big(2), &big(3)).unwrap(), -1);
        assert_eq!(legendre_symbol(&big(1), &big(101)).unwrap(), 1);
        assert_eq!(legendre_symbol(&big(14), &big(7)).unwrap(), 0);
        assert!(matches!(
            legendre_symbol(&big(3), &big(9)),
            Err(Error::InvalidModulus(_))
        ));
        assert!(legendre_symbol(&big(3), &big(2)).is_err());
    }

    #[test]
    fn lambda_and_phi() {
        assert_eq!(carmichael_lambda(&fact(8)), big(2));
        assert_eq!(carmichael_lambda(&fact(2)), big(1));
        assert_eq!(carmichael_lambda(&fact(4)), big(2));
        assert_eq!(carmichael_lambda(&fact(32)), big(8));
        assert_eq!(carmichael_lambda(&fact(441)), big(42));
        assert_eq!(carmichael_lambda(&fact(101)), big(100));
        assert_eq!(euler_phi(&fact(441)), big(252));
        assert_eq!(euler_phi(&fact(1)), big(1));
        assert_eq!(euler_phi(&fact(3)), big(2));
    }

    #[test]
    fn order_examples() {
        assert_eq!(
            multiplicative_order(&big(5), &m(21), &big(6), &fact(6)).unwrap(),
            big(6)
        );
        assert_eq!(
            multiplicative_order(&big(1), &m(21), &big(6), &fact(6)).unwrap(),
            big(1)
        );
        assert_eq!(
            multiplicative_order(&big(2), &m(55), &big(20), &fact(20)).unwrap(),
            big(20)
        );
        assert!(matches!(
            multiplicative_order(&big(2), &m(21), &big(5), &fact(5)),
            Err(Error::ExponentInvalid { .. })
        ));
        assert!(matches!(
            multiplicative_order(&big(3), &m(21), &big(6), &fact(6)),
            Err(Error::NotInvertible { .. })
        ));
    }

    #[test]
    fn factorize_examples() {
        let f = fact(42);
        assert_eq!(f.prime_powers(), &[(big(2), 1), (big(3), 1), (big(7), 1)]);
        assert!(fact(1).prime_powers().is_empty());
        assert_eq!(fact(441).prime_powers(), &[(big(3), 2), (big(7), 2)]);
        assert_eq!(fact(1_000_003 * 999_983).value(), big(1_000_003 * 999_983));
        assert!(matches!(
            factorize(&(BigUint::one() << 64u32)),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            factorize_bounded(&big(1000), &big(1000)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn primality_examples() {
        assert!(is_probable_prime(&big(23)));
        assert!(!is_probable_prime(&big(1)));
        assert!(!is_probable_prime(&big(0)));
        assert!(!is_probable_prime(&big(341)));
        assert!(!is_probable_prime(&big(3_215_031_751)));
        assert!(is_probable_prime(&big(2)));
        // 2^89 - 1 is a Mersenne prime above the deterministic limit.
        let m89 = (BigUint::one() << 89u32) - 1u32;
        assert!(m89 > BigUint::from(DETERMINISTIC_MR_LIMIT));
        assert!(is_probable_prime(&m89));
        assert!(!is_probable_prime(&(&m89 * 3u32)));
        assert!(!is_probable_prime(&(&m89 * &m89)));
    }

    #[test]
    fn primality_matches_sieve() {
        let limit = 5000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                for j in (i * i..limit).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (n, &prime) in sieve.iter().enumerate() {
            assert_eq!(is_probable_prime(&big(n as u64)), prime, "n = {n}");
        }
    }

    #[test]
    fn residue_ops() {
        let md = m(21);
        let a = Residue::from_u64(5, &md);
        let b = Residue::from_u64(17, &md);
        assert!((&a * &b).is_one());
        assert_eq!((&a - &b).value(), &big(9));
        assert_eq!((-&a).value(), &big(16));
        assert!((-&Residue::zero(&md)).is_zero());
        assert_eq!(
            Residue::from_signed(&BigInt::from(-1), &md).value(),
            &big(20)
        );
        assert_eq!(a.try_div(&a).unwrap(), Residue::one(&md));
    }

    #[test]
    fn solve_linear_reduces_modulus() {
        let md = m(21);
        // 7n ≡ 14 mod 21  ->  n ≡ 2 mod 3
        let n = solve_linear(&Residue::from_u64(7, &md), &Residue::from_u64(14, &md)).unwrap();
        assert_eq!((n.value(), n.modulus().get()), (&big(2), &big(3)));
        assert!(matches!(
            solve_linear(&Residue::from_u64(7, &md), &Residue::from_u64(1, &md)),
            Err(Error::Unsolvable { .. })
        ));
        assert!(matches!(
            solve_linear(&Residue::zero(&md), &Residue::zero(&md)),
            Err(Error::DegenerateCoefficient(_))
        ));
    }

    #[test]
    fn carmichael_theorem_on_safe_prime_tower() {
        for (p, q) in [(7u64, 3u64), (11, 5), (23, 11)] {
            for modulus in [p * q, p * p * q * q, p * p * p * q * q * q] {
                let md = m(modulus);
                let f = fact(modulus);
                let lambda = carmichael_lambda(&f);
                for x in (1..modulus.min(500)).filter(|x| x.gcd(&modulus) == 1) {
                    assert!(powmod(&big(x), &lambda, &md).is_one(), "{x} mod {modulus}");
                }
            }
        }
    }

    #[test]
    fn lambda_divides_phi_on_safe_pairs() {
        for (p, q) in [
            (7u64, 3u64),
            (11, 5),
            (23, 11),
            (47, 23),
            (59, 29),
            (83, 41),
        ] {
            let f = fact(p * p * q * q);
            let lambda = carmichael_lambda(&f);
            let phi = euler_phi(&f);
            assert_eq!(lambda, big(p * q * (q - 1)));
            assert_eq!(phi, big(2 * p * q * q * (q - 1)));
            assert!((&phi % &lambda).is_zero());
        }
    }

    proptest! {
        #[test]
        fn invmod_is_inverse(x in 1u64..10_000, modulus in 2u64..10_000) {
            let md = m(modulus);
            match invmod(&big(x), &md) {
                Ok(y) => prop_assert!((&y * &Residue::from_u64(x, &md)).is_one()),
                Err(Error::NotInvertible { gcd, .. }) => prop_assert_eq!(gcd, big(x.gcd(&modulus))),
                Err(e) => prop_assert!(false, "unexpected {e}"),
            }
        }

        #[test]
        fn crt_reduces_to_both(r1 in 0u64..1000, m1 in 2u64..200, r2 in 0u64..1000, m2 in 2u64..200) {
            let a = Residue::from_u64(r1, &m(m1));
            let b = Residue::from_u64(r2, &m(m2));
            match crt_pair(&a, &b) {
                Ok(n) => {
                    prop_assert_eq!(n.modulus().get(), &big(m1.lcm(&m2)));
                    prop_assert_eq!(n.reduce(&m(m1)), a);
                    prop_assert_eq!(n.reduce(&m(m2)), b);
                }
                Err(_) => prop_assert!((r1 % m1).abs_diff(r2 % m2) % m1.gcd(&m2) != 0),
            }
        }

        #[test]
        fn legendre_is_multiplicative(x in 1u64..5000, y in 1u64..5000, idx in 0usize..8) {
            let p = [3u64, 5, 7, 11, 23, 47, 101, 179][idx];
            prop_assume!(x % p != 0 && y % p != 0);
            let lx = legendre_symbol(&big(x), &big(p)).unwrap();
            let ly = legendre_symbol(&big(y), &big(p)).unwrap();
            prop_assert_eq!(legendre_symbol(&big(x * y), &big(p)).unwrap(), lx * ly);
        }

        #[test]
        fn order_divides_exponent(x in 1u64..2000, idx in 0usize..4) {
            let modulus = [21u64, 55, 253, 441][idx];
            prop_assume!(x.gcd(&modulus) == 1);
            let f = fact(modulus);
            let lambda = carmichael_lambda(&f);
            let lf = factorize(&lambda).unwrap();
            let ord = multiplicative_order(&big(x), &m(modulus), &lambda, &lf).unwrap();
            prop_assert!((&lambda % &ord).is_zero());
            prop_assert!(powmod(&big(x), &ord, &m(modulus)).is_one());
            // minimality by brute force
            let mut acc = 1u64;
            for d in 1..=ord.to_u64().unwrap() {
                acc = acc * x % modulus;
                if acc == 1 {
                    prop_assert_eq!(d, ord.to_u64().unwrap());
                    break;
                }
            }
        }

        #[test]
        fn factorization_reconstructs(n in 1u64..2_000_000) {
            let f = fact(n);
            prop_assert_eq!(f.value(), big(n));
            let primes: Vec<_> = f.primes().cloned().collect();
            prop_assert!(primes.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(primes.iter().all(is_probable_prime));
        }
    }
}
