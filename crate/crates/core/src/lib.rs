//! Exact arithmetic for translational tilings of the integers.
//!
//! A finite set `A` of integers *tiles* the integers if some set of
//! translates of `A` partitions ℤ; every such tiling is periodic, so the
//! question reduces to complement pairs `A ⊕ B = ℤ/Mℤ` with `|A|·|B| = M`.
//! This crate provides the machinery for analysing such pairs with exact
//! integer and rational arithmetic throughout:
//!
//! * [`numtheory`] — factorization, totient, Möbius, divisor and Ramanujan
//!   sum kernels;
//! * [`polynomials`] — integer sets, mask (characteristic) polynomials,
//!   cyclotomic polynomials and exact division;
//! * [`spectra`] — divisor-indexed correlation spectra of a set and the
//!   exact identity linking the pair-count spectrum to the root-of-unity
//!   power spectrum;
//! * [`tiling`] — tiling verification (direct and polynomial routes), the
//!   two cyclotomic tiling conditions, the divisor-disjointness criterion
//!   and bound, tiling decomposition along a prime, backtracking complement
//!   search, and exhaustive corpus enumeration;
//! * [`threeprime`] — structure theory for complements whose cardinality is
//!   a product of three distinct primes: support classification in CRT
//!   coordinates, equidistribution counts, alpha-spectrum relations,
//!   closed-form cyclotomic membership for axis-supported sets, and the
//!   composite divisibility theorem check.
//!
//! All counting is done in machine integers only where the quantity is
//! bounded by the modulus; everything feeding a rational identity is
//! arbitrary precision ([`num_bigint::BigInt`] / [`Rational`]), so overflow
//! is impossible by construction.

pub mod numtheory;
pub mod polynomials;
pub mod spectra;
pub mod threeprime;
pub mod tiling;

/// Exact rational number: arbitrary-precision, always reduced to lowest
/// terms with a positive denominator.
pub type Rational = num_rational::BigRational;

use num_bigint::BigInt;

/// Build a [`Rational`] from machine-integer numerator and denominator.
pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Errors signalled by the fallible operations of this crate.
///
/// Scalar kernels with trivially checkable domains (`euler_phi(0)` and
/// friends) panic instead; `Error` is reserved for failure modes a caller
/// may legitimately need to branch on or report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A set that must consist of distinct residues modulo `modulus` has a
    /// repeated residue.
    #[error("set has repeated residues modulo {modulus}")]
    RepeatedResidues { modulus: u64 },

    /// The evaluation point of a divisor-class count must avoid the set.
    #[error("evaluation point {c} lies in the set")]
    PointInSet { c: i64 },

    /// `n` was required to divide `m`.
    #[error("{n} does not divide {m}")]
    NotADivisor { n: u64, m: u64 },

    /// The cardinality of a set does not divide the modulus.
    #[error("cardinality {cardinality} does not divide modulus {modulus}")]
    CardinalityNotDivisor { cardinality: u64, modulus: u64 },

    /// A pair was required to tile the cyclic group but does not.
    #[error("A ⊕ B is not a tiling of Z/{modulus}")]
    NotATiling { modulus: u64 },

    /// The difference-divisor sets of the pair were required to be
    /// disjoint but share `shared`.
    #[error("difference-divisor sets are not disjoint (shared divisor {shared})")]
    SharedDivisor { shared: u64 },

    /// A decomposition along `p` requires every element of the complement
    /// to be divisible by `p`; `witness` is not.
    #[error("complement element {witness} is not divisible by {p}")]
    ComplementNotInPrimeScale { p: u64, witness: i64 },

    /// A parameter that must be prime is not.
    #[error("{n} is not prime")]
    NotPrime { n: u64 },

    /// The three primes of a three-prime analysis must be distinct primes.
    #[error("parameters {p}, {q}, {r} are not three distinct primes")]
    BadPrimeTriple { p: u64, q: u64, r: u64 },

    /// Three-prime support analysis requires 0 to be an element.
    #[error("set does not contain 0")]
    ZeroNotInSet,

    /// The pairwise-difference hypothesis of the support classification
    /// fails for the witness pair.
    #[error("difference {b1} - {b2} is coprime to all three primes")]
    DifferenceHypothesisViolated { b1: i64, b2: i64 },

    /// A claimed cyclotomic divisibility hypothesis does not actually hold.
    #[error("claimed divisibility by the {d}-th cyclotomic polynomial does not hold")]
    HypothesisNotSatisfied { d: u64 },

    /// An hypothesis outside the admissible set was supplied.
    #[error("{d} is not an admissible divisibility hypothesis")]
    InadmissibleHypothesis { d: u64 },

    /// Not enough divisibility hypotheses were supplied to verify any
    /// relation set.
    #[error("insufficient divisibility hypotheses: all three prime hypotheses are required")]
    InsufficientHypotheses,

    /// The set has an element outside the origin axis classes; carried
    /// witness is such an element.
    #[error("element {witness} lies off the coordinate axes")]
    NotAxisSupported { witness: i64 },

    /// An axis profile required to be uniform is not.
    #[error("axis profile is not uniform")]
    NonUniformProfile,

    /// An axis profile required to have nonzero axis counts has a zero.
    #[error("axis profile has a zero axis count")]
    ZeroAxisCount,

    /// A cardinality precondition of the three-prime theorem fails.
    #[error("cardinality {got} does not have the required prime factorization")]
    BadCardinality { got: u64 },
}

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
