use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is invalid (must be at least 2)")]
    InvalidModulus(BigUint),

    #[error("{value} is not invertible (gcd with modulus is {gcd})")]
    NotInvertible { value: BigUint, gcd: BigUint },

    #[error("residues {r1} mod {m1} and {r2} mod {m2} are incompatible")]
    Incompatible {
        r1: BigUint,
        m1: BigUint,
        r2: BigUint,
        m2: BigUint,
    },

    #[error("{base}^{exponent} is not 1 modulo {modulus}")]
    ExponentInvalid {
        base: BigUint,
        exponent: BigUint,
        modulus: BigUint,
    },

    #[error("{value} exceeds the trial-division bound {bound}")]
    TooLarge { value: BigUint, bound: BigUint },

    #[error("{0} is not prime")]
    NotPrime(BigUint),

    #[error("p = {p} is not 2q + 1 for q = {q}")]
    NotSafePrime { p: BigUint, q: BigUint },

    #[error("q must be an odd prime (q = 2 is excluded)")]
    QTooSmall,

    #[error("bit length {0} is too small (need at least 2)")]
    BitLengthTooSmall(u64),

    #[error("no safe prime found after {0} attempts")]
    ExhaustedAttempts(u64),

    #[error("{value} is not coprime to {modulus}")]
    NotCoprime { value: BigUint, modulus: BigUint },

    #[error("{0} is not a primitive root of both p and q")]
    NotDualPrimitiveRoot(BigUint),

    #[error("n_p = {n_p} and n_q = {n_q} differ in parity")]
    ParityMismatch { n_p: BigUint, n_q: BigUint },

    #[error("search gave up after {0} candidates")]
    SearchCapExceeded(u64),

    #[error("no candidate exponent verifies")]
    NoCandidate,

    #[error("both candidate exponents {0} and {1} verify")]
    BothCandidates(BigUint, BigUint),

    #[error("{base}^{exponent} is not congruent to {target} modulo {modulus}")]
    NotCongruent {
        base: BigUint,
        exponent: BigUint,
        target: BigUint,
        modulus: BigUint,
    },

    #[error("order of {element} is {actual}, expected {expected}")]
    OrderMismatch {
        element: BigUint,
        expected: BigUint,
        actual: BigUint,
    },

    #[error("a non-canonical lift can only be built from a known exponent n")]
    MissingKnownN,

    #[error("offsets k = {k}, l = {l} do not share the p-divisibility pattern")]
    InconsistentPair { k: BigUint, l: BigUint },

    #[error("congruence {coefficient} * n = {rhs} mod {modulus} has no solution")]
    Unsolvable {
        coefficient: BigUint,
        rhs: BigUint,
        modulus: BigUint,
    },

    #[error("offset k is zero modulo pq")]
    ZeroOffset,

    #[error("coefficient {0} of n vanishes modulo pq")]
    DegenerateCoefficient(BigUint),

    #[error("lifted relation failed to verify for offset k = {k}")]
    ConstructionFailed { k: BigUint },

    #[error("bound {bound} exceeds the configured cap {cap}")]
    BoundExceeded { bound: BigUint, cap: BigUint },

    #[error("{g}^{order} is not 1 modulo {modulus}")]
    NotClosed {
        g: BigUint,
        order: BigUint,
        modulus: BigUint,
    },
}
