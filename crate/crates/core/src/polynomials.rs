//! Integer sets, mask (characteristic) polynomials, cyclotomic polynomials
//! and exact polynomial division.
//!
//! The mask polynomial of a finite set `A = {a_1 < … < a_k}` is
//! `A(x) = Σ_i x^{a_i − a_1}` (translated so the least element maps to
//! exponent 0, which changes nothing about cyclotomic divisibility).
//! Cyclotomic polynomials `Φ_d` are generated by iterated exact division of
//! `x^d − 1` by `Φ_e` over the proper divisors `e | d` and memoized
//! process-wide behind a mutex, so concurrent callers are safe.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

use crate::numtheory::{divisors, euler_phi, factorize};

/// Maximum diameter accepted when densifying a set into a mask polynomial.
const MAX_MASK_DIAMETER: i128 = 10_000_000;

/// A finite set of integers, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntegerSet {
    elems: Vec<i64>,
}

impl IntegerSet {
    /// Builds a set from arbitrary-order elements.
    ///
    /// # Panics
    /// Panics if an element is repeated; silent deduplication would change
    /// the cardinality and with it every counting result downstream.
    pub fn new(mut elems: Vec<i64>) -> Self {
        elems.sort_unstable();
        if let Some(w) = elems.windows(2).find(|w| w[0] == w[1]) {
            panic!("IntegerSet: duplicate element {}", w[0]);
        }
        IntegerSet { elems }
    }

    /// Convenience constructor from a slice.
    pub fn from_slice(elems: &[i64]) -> Self {
        Self::new(elems.to_vec())
    }

    /// The interval `{0, 1, …, n−1}`.
    pub fn interval(n: u64) -> Self {
        IntegerSet { elems: (0..n as i64).collect() }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> &[i64] {
        &self.elems
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.elems.iter().copied()
    }

    pub fn min_element(&self) -> Option<i64> {
        self.elems.first().copied()
    }

    pub fn max_element(&self) -> Option<i64> {
        self.elems.last().copied()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    /// The set `{a + k : a ∈ A}`.
    pub fn translate(&self, k: i64) -> Self {
        IntegerSet { elems: self.elems.iter().map(|&a| a + k).collect() }
    }

    /// The set `{k·a : a ∈ A}` for `k ≠ 0`.
    ///
    /// # Panics
    /// Panics if `k = 0` (which would collapse the set).
    pub fn dilate(&self, k: i64) -> Self {
        assert!(k != 0, "dilate: factor must be nonzero");
        let mut elems: Vec<i64> = self.elems.iter().map(|&a| a * k).collect();
        elems.sort_unstable();
        IntegerSet { elems }
    }

    /// Element residues modulo `m`, in element order (repeats preserved).
    pub fn residues_mod(&self, m: u64) -> Vec<u64> {
        assert!(m > 0, "residues_mod: modulus must be positive");
        self.elems
            .iter()
            .map(|&a| (a as i128).rem_euclid(m as i128) as u64)
            .collect()
    }

    /// True iff all elements are pairwise incongruent modulo `m`.
    pub fn distinct_mod(&self, m: u64) -> bool {
        let mut r = self.residues_mod(m);
        r.sort_unstable();
        r.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// Dense integer polynomial, coefficients ascending by exponent; the zero
/// polynomial is the empty coefficient vector, otherwise the leading
/// coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// The polynomial `x^n − 1`.
    pub fn x_power_minus_one(n: u64) -> Self {
        let mut coeffs = vec![0i64; n as usize + 1];
        coeffs[0] = -1;
        coeffs[n as usize] = 1;
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    /// The coefficient sum, i.e. the value at `x = 1`.
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Product of two polynomials (exact; panics only if a coefficient
    /// exceeds `i64`, which no in-crate computation approaches).
    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut acc = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] += a as i128 * b as i128;
            }
        }
        IntPolynomial::from_coeffs(
            acc.into_iter()
                .map(|c| i64::try_from(c).expect("polynomial coefficient overflow"))
                .collect(),
        )
    }
}

impl std::ops::Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::mul(self, rhs)
    }
}

/// Mask polynomial `Σ_a x^{a − min(A)}` of a nonempty set.
///
/// # Panics
/// Panics on the empty set, or if the set diameter exceeds the dense
/// representation limit.
pub fn mask_poly(a: &IntegerSet) -> IntPolynomial {
    let lo = a.min_element().expect("mask_poly: set must be nonempty");
    let diameter = a.max_element().unwrap() as i128 - lo as i128;
    assert!(
        diameter <= MAX_MASK_DIAMETER,
        "mask_poly: set diameter {diameter} too large for dense representation"
    );
    let mut coeffs = vec![0i64; diameter as usize + 1];
    for x in a.iter() {
        coeffs[(x as i128 - lo as i128) as usize] = 1;
    }
    IntPolynomial { coeffs }
}

/// Exact division of `f` by a monic `g`: returns `q` with `f = g·q`, or
/// `None` when `g` does not divide `f` over ℤ.
///
/// # Panics
/// Panics if `g` is zero or not monic.
pub fn exact_divide(f: &IntPolynomial, g: &IntPolynomial) -> Option<IntPolynomial> {
    assert!(!g.is_zero(), "exact_divide: divisor must be nonzero");
    assert!(g.is_monic(), "exact_divide: divisor must be monic");
    if f.is_zero() {
        return Some(IntPolynomial::zero());
    }
    let (df, dg) = (f.degree().unwrap(), g.degree().unwrap());
    if df < dg {
        return None;
    }
    // long division with an i128 working remainder; divisor monic, so the
    // quotient stays integral whenever divisibility holds at all
    let mut rem: Vec<i128> = f.coeffs().iter().map(|&c| c as i128).collect();
    let mut quot = vec![0i128; df - dg + 1];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dg];
        if c == 0 {
            continue;
        }
        quot[i] = c;
        for (j, &gc) in g.coeffs().iter().enumerate() {
            rem[i + j] -= c * gc as i128;
        }
    }
    if rem.iter().any(|&c| c != 0) {
        return None;
    }
    Some(IntPolynomial::from_coeffs(
        quot.into_iter()
            .map(|c| i64::try_from(c).expect("quotient coefficient overflow"))
            .collect(),
    ))
}

/// The `d`-th cyclotomic polynomial `Φ_d`, memoized process-wide.
///
/// `Φ_d` is obtained by dividing `x^d − 1` by `Φ_e` for every proper
/// divisor `e` of `d`; the divisions are exact by construction.
///
/// # Panics
/// Panics if `d = 0`.
pub fn cyclotomic(d: u64) -> IntPolynomial {
    assert!(d > 0, "cyclotomic: index must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u64, IntPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&d) {
        return hit.clone();
    }
    // compute outside the lock; a racing thread at worst duplicates work
    let mut f = IntPolynomial::x_power_minus_one(d);
    for e in divisors(d) {
        if e == d {
            continue;
        }
        f = exact_divide(&f, &cyclotomic(e)).expect("cyclotomic division is exact");
    }
    cache.lock().unwrap().insert(d, f.clone());
    f
}

/// The value `Φ_s(1)` for `s ≥ 2` via the closed form: `p` when `s = p^k`
/// is a prime power, `1` otherwise.
///
/// # Panics
/// Panics if `s ≤ 1` (`Φ_1(1) = 0` and is deliberately out of domain).
pub fn phi_at_one(s: u64) -> u64 {
    assert!(s >= 2, "phi_at_one: argument must be at least 2");
    let f = factorize(s);
    if f.is_prime_power() {
        f.pairs()[0].0
    } else {
        1
    }
}

/// True iff `Φ_d` divides the mask polynomial of `a`.
///
/// # Panics
/// Panics if `a` is empty or `d = 0`.
pub fn divides_cyclotomic(a: &IntegerSet, d: u64) -> bool {
    assert!(d > 0, "divides_cyclotomic: index must be positive");
    let f = mask_poly(a);
    if euler_phi(d) as usize > f.degree().unwrap() {
        return false;
    }
    exact_divide(&f, &cyclotomic(d)).is_some()
}

/// Every prime power `p^α` whose cyclotomic polynomial divides the mask
/// polynomial of `a`, ascending.
///
/// The scan covers exactly the prime powers with `φ(p^α) ≤ deg`, which is
/// the full candidate range: no `Φ_d` of degree exceeding the mask degree
/// can divide it.
///
/// # Panics
/// Panics if `a` is empty.
pub fn cyclotomic_support_prime_powers(a: &IntegerSet) -> Vec<u64> {
    let deg = mask_poly(a).degree().unwrap() as u64;
    let mut support = Vec::new();
    let mut p = 2u64;
    while p.saturating_sub(1) <= deg {
        if crate::numtheory::is_prime(p) {
            let mut pk = p;
            while euler_phi(pk) <= deg {
                if divides_cyclotomic(a, pk) {
                    support.push(pk);
                }
                match pk.checked_mul(p) {
                    Some(next) => pk = next,
                    None => break,
                }
            }
        }
        p += 1;
    }
    support.sort_unstable();
    support
}
