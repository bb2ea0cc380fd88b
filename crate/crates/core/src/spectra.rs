//! Divisor-indexed correlation spectra of a finite integer set and the
//! exact identity connecting them.
//!
//! Fix a modulus `N` and a finite set `A`. Every ordered pair `(a, a′)`
//! falls into the divisor class `m = gcd_conv(N, a − a′)`, with pairs
//! congruent mod `N` (the diagonal included) landing in class `N`:
//!
//! * the *difference spectrum* counts pairs per class, `A_m`;
//! * the *power spectrum* `𝒜_d = Σ_{(a,a′)} c_d(a − a′)` accumulates
//!   Ramanujan sums and equals the sum of `|A(ξ)|²` over the primitive
//!   `d`-th roots of unity `ξ` — computed here purely in exact integer
//!   arithmetic, never through floating-point roots;
//! * the *alpha spectrum* rescales counts to `α_m = A_m / φ(N/m)`.
//!
//! The central identity verified by [`verify_main_identity`] states that
//! for any two sets,
//! `Σ_{m|N} A_m·B_m/φ(N/m) = (1/N)·Σ_{d|N} 𝒜_d·ℬ_d/φ(d)`,
//! with both sides exact rationals. [`corollary_constant`] evaluates the
//! weighted divisor-class sum `Σ_m b_m(c)·A_m/φ(N/m)` which is constant in
//! `c` whenever the pair extends to a tiling.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::numtheory::{divisors, euler_phi, ramanujan_sum};
use crate::polynomials::IntegerSet;
use crate::{Error, Rational, Result};

/// Divisor class of the integer difference `t` for modulus `n`: `n` when
/// `n | t`, otherwise `gcd(n, |t| mod n)`.
fn divisor_class(n: u64, t: i128) -> u64 {
    let r = t.rem_euclid(n as i128) as u64;
    if r == 0 {
        n
    } else {
        num_integer::gcd(n, r)
    }
}

/// Ordered-pair counts of a set per divisor class of a modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceSpectrum {
    /// The modulus `N`.
    pub modulus: u64,
    /// `A_m` for every divisor `m` of `N` (zero counts included).
    pub counts: BTreeMap<u64, u64>,
    /// Divisor classes realized by pairs of *distinct elements*; the
    /// diagonal never contributes here, so `N` appears only when two
    /// distinct elements are congruent mod `N`.
    pub divisor_set: BTreeSet<u64>,
}

impl DifferenceSpectrum {
    /// `A_m`, zero for divisors without pairs.
    pub fn count(&self, m: u64) -> u64 {
        self.counts.get(&m).copied().unwrap_or(0)
    }
}

/// The difference spectrum of `a` for modulus `n`.
///
/// # Panics
/// Panics if `a` is empty or `n = 0`.
pub fn difference_spectrum(a: &IntegerSet, n: u64) -> DifferenceSpectrum {
    assert!(!a.is_empty(), "difference_spectrum: set must be nonempty");
    assert!(n > 0, "difference_spectrum: modulus must be positive");
    let mut counts: BTreeMap<u64, u64> = divisors(n).into_iter().map(|d| (d, 0)).collect();
    let mut divisor_set = BTreeSet::new();
    for (i, x) in a.iter().enumerate() {
        for (j, y) in a.iter().enumerate() {
            let m = divisor_class(n, x as i128 - y as i128);
            *counts.get_mut(&m).unwrap() += 1;
            if i != j {
                divisor_set.insert(m);
            }
        }
    }
    DifferenceSpectrum { modulus: n, counts, divisor_set }
}

/// Ramanujan-sum power spectrum of a set per divisor of a modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSpectrum {
    /// The modulus `N`.
    pub modulus: u64,
    /// `𝒜_d` for every divisor `d` of `N`; each value is a nonnegative
    /// integer (it is a sum of squared root-of-unity magnitudes), but is
    /// carried as a signed big integer because the summands alternate.
    pub values: BTreeMap<u64, BigInt>,
}

impl PowerSpectrum {
    /// `𝒜_d` for a divisor of the modulus.
    pub fn value(&self, d: u64) -> &BigInt {
        &self.values[&d]
    }
}

/// The power spectrum of `a` for modulus `n`, via exact Ramanujan sums.
///
/// # Panics
/// Panics if `a` is empty or `n = 0`.
pub fn power_spectrum(a: &IntegerSet, n: u64) -> PowerSpectrum {
    assert!(!a.is_empty(), "power_spectrum: set must be nonempty");
    assert!(n > 0, "power_spectrum: modulus must be positive");
    // bucket ordered pairs by difference residue so each Ramanujan value
    // is computed once per (divisor, residue) rather than once per pair
    let mut residue_counts = vec![0u64; n as usize];
    for x in a.iter() {
        for y in a.iter() {
            residue_counts[(x as i128 - y as i128).rem_euclid(n as i128) as usize] += 1;
        }
    }
    let values = divisors(n)
        .into_iter()
        .map(|d| {
            let mut total = BigInt::zero();
            for (r, &count) in residue_counts.iter().enumerate() {
                if count > 0 {
                    let c = ramanujan_sum(d, (r as u64 % d) as i64);
                    total += BigInt::from(count) * BigInt::from(c);
                }
            }
            (d, total)
        })
        .collect();
    PowerSpectrum { modulus: n, values }
}

/// Rescaled difference spectrum `α_m = A_m / φ(N/m)` as exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaSpectrum {
    /// The modulus `N`.
    pub modulus: u64,
    /// `α_m` for every divisor `m` of `N`.
    pub values: BTreeMap<u64, Rational>,
}

impl AlphaSpectrum {
    pub fn value(&self, m: u64) -> &Rational {
        &self.values[&m]
    }
}

/// The alpha spectrum of `a` for modulus `n`.
///
/// # Panics
/// Panics if `a` is empty or `n = 0`.
pub fn alpha_spectrum(a: &IntegerSet, n: u64) -> AlphaSpectrum {
    let diff = difference_spectrum(a, n);
    let values = diff
        .counts
        .iter()
        .map(|(&m, &c)| {
            let alpha = Rational::new(BigInt::from(c), BigInt::from(euler_phi(n / m)));
            (m, alpha)
        })
        .collect();
    AlphaSpectrum { modulus: n, values }
}

/// Both sides of the central identity, exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    /// `Σ_{m|N} A_m·B_m / φ(N/m)`.
    pub lhs: Rational,
    /// `(1/N) · Σ_{d|N} 𝒜_d·ℬ_d / φ(d)`.
    pub rhs: Rational,
    /// Whether the two sides agree (they always should).
    pub equal: bool,
}

/// Evaluates both sides of the identity
/// `Σ_{m|N} A_m·B_m/φ(N/m) = (1/N)·Σ_{d|N} 𝒜_d·ℬ_d/φ(d)` in exact
/// arithmetic.
///
/// # Panics
/// Panics if either set is empty or `n = 0`.
pub fn verify_main_identity(a: &IntegerSet, b: &IntegerSet, n: u64) -> IdentityCheck {
    let (da, db) = (difference_spectrum(a, n), difference_spectrum(b, n));
    let (pa, pb) = (power_spectrum(a, n), power_spectrum(b, n));
    let mut lhs = Rational::zero();
    let mut rhs = Rational::zero();
    for d in divisors(n) {
        lhs += Rational::new(
            BigInt::from(da.count(d)) * BigInt::from(db.count(d)),
            BigInt::from(euler_phi(n / d)),
        );
        rhs += Rational::new(pa.value(d) * pb.value(d), BigInt::from(euler_phi(d)));
    }
    rhs /= Rational::from_integer(BigInt::from(n));
    let equal = lhs == rhs;
    IdentityCheck { lhs, rhs, equal }
}

/// Divisor-class counts of a set against an external point: maps each
/// divisor `m` of `n` to `b_m(c) = #{b ∈ B : gcd_conv(n, b − c) = m}`.
///
/// The point may lie in the set; its self-difference then lands in class
/// `n` like any other multiple of `n`.
///
/// # Panics
/// Panics if `b` is empty or `n = 0`.
pub fn residue_class_counts(b: &IntegerSet, c: i64, n: u64) -> BTreeMap<u64, u64> {
    assert!(!b.is_empty(), "residue_class_counts: set must be nonempty");
    assert!(n > 0, "residue_class_counts: modulus must be positive");
    let mut counts: BTreeMap<u64, u64> = divisors(n).into_iter().map(|d| (d, 0)).collect();
    for x in b.iter() {
        let m = divisor_class(n, x as i128 - c as i128);
        *counts.get_mut(&m).unwrap() += 1;
    }
    counts
}

/// The weighted divisor-class sum `Σ_{m|N} b_m(c)·A_m/φ(N/m)`.
///
/// When `A ⊕ B = ℤ/Mℤ` is a tiling and `N | M`, this value does not depend
/// on the choice of `c ∉ B` and equals `|A|` in the case `N = M`. The
/// tiling hypothesis is *not* re-verified here — compose with the tiling
/// module when needed — but the structural preconditions are:
///
/// # Errors
/// * [`Error::NotADivisor`] if `N ∤ M`;
/// * [`Error::PointInSet`] if `c` is an element of `B` (literal integer
///   membership; a point merely congruent to an element is fine).
///
/// # Panics
/// Panics if either set is empty or `n = 0` or `m = 0`.
pub fn corollary_constant(
    a: &IntegerSet,
    b: &IntegerSet,
    m: u64,
    n: u64,
    c: i64,
) -> Result<Rational> {
    assert!(m > 0 && n > 0, "corollary_constant: moduli must be positive");
    assert!(!a.is_empty() && !b.is_empty(), "corollary_constant: sets must be nonempty");
    if !m.is_multiple_of(n) {
        return Err(Error::NotADivisor { n, m });
    }
    if b.contains(c) {
        return Err(Error::PointInSet { c });
    }
    let spectrum = difference_spectrum(a, n);
    let class_counts = residue_class_counts(b, c, n);
    let mut total = Rational::zero();
    for (&md, &bm) in &class_counts {
        if bm == 0 {
            continue;
        }
        total += Rational::new(
            BigInt::from(bm) * BigInt::from(spectrum.count(md)),
            BigInt::from(euler_phi(n / md)),
        );
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use num_integer::Integer;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn set(elems: &[i64]) -> IntegerSet {
        IntegerSet::from_slice(elems)
    }

    fn rat(n: i64, d: i64) -> Rational {
        crate::rational(n, d)
    }

    /// `𝒜_d` by brute floating summation of `|A(ξ)|²` over the primitive
    /// `d`-th roots of unity — the independent oracle for the exact
    /// Ramanujan-sum route.
    fn power_by_roots(a: &IntegerSet, d: u64) -> f64 {
        let tau = std::f64::consts::TAU;
        (1..=d)
            .filter(|k| k.gcd(&d) == 1)
            .map(|k| {
                let val: Complex64 = a
                    .iter()
                    .map(|x| Complex64::from_polar(1.0, tau * k as f64 * x as f64 / d as f64))
                    .sum();
                val.norm_sqr()
            })
            .sum()
    }

    /// Left side of the identity by brute floating summation.
    fn identity_lhs_by_pairs(a: &IntegerSet, b: &IntegerSet, n: u64) -> f64 {
        let mut lhs = 0.0;
        for m in divisors(n) {
            let am = a
                .iter()
                .flat_map(|x| a.iter().map(move |y| (x, y)))
                .filter(|&(x, y)| divisor_class(n, x as i128 - y as i128) == m)
                .count() as f64;
            let bm = b
                .iter()
                .flat_map(|x| b.iter().map(move |y| (x, y)))
                .filter(|&(x, y)| divisor_class(n, x as i128 - y as i128) == m)
                .count() as f64;
            lhs += am * bm / euler_phi(n / m) as f64;
        }
        lhs
    }

    fn rational_to_f64(r: &Rational) -> f64 {
        use num_traits::ToPrimitive;
        r.to_f64().unwrap()
    }

    #[test]
    fn difference_spectrum_examples() {
        let s = difference_spectrum(&set(&[0, 1]), 2);
        assert_eq!(s.count(1), 2);
        assert_eq!(s.count(2), 2);
        assert_eq!(s.divisor_set.iter().copied().collect::<Vec<_>>(), vec![1]);

        let s = difference_spectrum(&set(&[0, 2]), 4);
        assert_eq!(s.count(1), 0);
        assert_eq!(s.count(2), 2);
        assert_eq!(s.count(4), 2);
        assert_eq!(s.divisor_set.iter().copied().collect::<Vec<_>>(), vec![2]);

        let s = difference_spectrum(&set(&[0, 3]), 6);
        assert_eq!(s.count(3), 2);
        assert_eq!(s.count(6), 2);
        assert_eq!(s.count(1) + s.count(2), 0);
    }

    #[test]
    fn difference_spectrum_congruent_elements_land_in_class_n() {
        // distinct elements congruent mod N put N into the divisor set
        let s = difference_spectrum(&set(&[0, 4]), 4);
        assert_eq!(s.count(4), 4);
        assert!(s.divisor_set.contains(&4));
    }

    #[test]
    fn power_spectrum_examples() {
        let p = power_spectrum(&set(&[0, 2]), 4);
        assert_eq!(p.value(1), &BigInt::from(4));
        assert_eq!(p.value(2), &BigInt::from(4));
        assert_eq!(p.value(4), &BigInt::from(0));
    }

    #[test]
    fn power_spectrum_matches_root_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.gen_range(1..=24u64);
            let size = rng.gen_range(1..=6usize);
            let mut elems = std::collections::BTreeSet::new();
            while elems.len() < size {
                elems.insert(rng.gen_range(-30i64..30));
            }
            let a = IntegerSet::new(elems.into_iter().collect());
            let p = power_spectrum(&a, n);
            for d in divisors(n) {
                let float = power_by_roots(&a, d);
                let exact: f64 = p.value(d).to_string().parse().unwrap();
                assert!(
                    (float - exact).abs() < 1e-9,
                    "𝒜_{d} of {a}: exact {exact}, roots {float}"
                );
            }
        }
    }

    #[test]
    fn power_spectrum_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..=36u64);
            let size = rng.gen_range(1..=8usize);
            let mut elems = std::collections::BTreeSet::new();
            while elems.len() < size {
                elems.insert(rng.gen_range(-60i64..60));
            }
            let a = IntegerSet::new(elems.into_iter().collect());
            let p = power_spectrum(&a, n);
            let card = BigInt::from(a.len() as u64);
            assert_eq!(p.value(1), &(&card * &card), "𝒜_1 = |A|²");
            for d in divisors(n) {
                assert!(p.value(d) >= &BigInt::zero(), "𝒜_{d} ≥ 0 for {a}");
            }
            // Σ_d 𝒜_d = N · #{pairs congruent mod N}
            let congruent = difference_spectrum(&a, n).count(n);
            let total: BigInt = divisors(n).iter().map(|&d| p.value(d).clone()).sum();
            assert_eq!(total, BigInt::from(n) * BigInt::from(congruent));
        }
    }

    #[test]
    fn main_identity_example() {
        let check = verify_main_identity(&set(&[0, 1]), &set(&[0, 1]), 2);
        assert!(check.equal);
        assert_eq!(check.lhs, rat(8, 1));
        assert_eq!(check.rhs, rat(8, 1));
    }

    #[test]
    fn main_identity_exhaustive_small() {
        // all nonempty A, B ⊆ {0..3} at N ∈ 1..8, floated against the
        // pair-summation oracle before trusting the exact route
        for n in 1..=8u64 {
            for abits in 1u32..16 {
                for bbits in 1u32..16 {
                    let a = IntegerSet::new((0..4).filter(|i| abits >> i & 1 == 1).collect());
                    let b = IntegerSet::new((0..4).filter(|i| bbits >> i & 1 == 1).collect());
                    let check = verify_main_identity(&a, &b, n);
                    assert!(check.equal, "identity at N={n}, A={a}, B={b}");
                    let float = identity_lhs_by_pairs(&a, &b, n);
                    assert!((rational_to_f64(&check.lhs) - float).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn alpha_spectrum_examples() {
        let alpha = alpha_spectrum(&set(&[0, 1, 2, 3, 4, 5]), 6);
        for m in divisors(6) {
            assert_eq!(alpha.value(m), &rat(6, 1), "α_{m}");
        }
        let alpha = alpha_spectrum(&set(&[0, 3]), 6);
        assert_eq!(alpha.value(1), &rat(0, 1));
        assert_eq!(alpha.value(2), &rat(0, 1));
        assert_eq!(alpha.value(3), &rat(2, 1));
        assert_eq!(alpha.value(6), &rat(2, 1));
    }

    #[test]
    fn residue_class_count_examples() {
        let counts = residue_class_counts(&set(&[0, 1]), 2, 4);
        assert_eq!(counts[&1], 1);
        assert_eq!(counts[&2], 1);
        assert_eq!(counts[&4], 0);
        // the point may sit inside the set; self-difference lands in class n
        let counts = residue_class_counts(&set(&[0]), 0, 6);
        assert_eq!(counts[&6], 1);
    }

    #[test]
    fn corollary_constant_examples() {
        let a = set(&[0, 2]);
        let b = set(&[0, 1]);
        assert_eq!(corollary_constant(&a, &b, 4, 4, 2).unwrap(), rat(2, 1));
        // c ≡ 1 (mod 4) yet c ∉ B: allowed, and the value is unchanged
        assert_eq!(corollary_constant(&a, &b, 4, 4, 5).unwrap(), rat(2, 1));
        assert_eq!(corollary_constant(&a, &b, 4, 4, 1), Err(Error::PointInSet { c: 1 }));
        assert_eq!(
            corollary_constant(&a, &b, 4, 3, 2),
            Err(Error::NotADivisor { n: 3, m: 4 })
        );
    }

    #[test]
    fn corollary_constant_sweep_on_a_tiling() {
        // A ⊕ B = Z/4: the weighted sum is |A| for every admissible c
        let a = set(&[0, 2]);
        let b = set(&[0, 1]);
        for c in -8..=8 {
            if b.contains(c) {
                continue;
            }
            assert_eq!(corollary_constant(&a, &b, 4, 4, c).unwrap(), rat(2, 1), "c={c}");
        }
        // and with N = 2 | M = 4 the value is constant as well
        let at_n2: Vec<Rational> = (-8..=8)
            .filter(|&c| !b.contains(c))
            .map(|c| corollary_constant(&a, &b, 4, 2, c).unwrap())
            .collect();
        assert!(at_n2.windows(2).all(|w| w[0] == w[1]));
    }

    proptest! {
        #[test]
        fn difference_counts_sum_to_square(
            elems in prop::collection::btree_set(-50i64..50, 1..9),
            n in 1u64..40,
        ) {
            let a = IntegerSet::new(elems.into_iter().collect());
            let s = difference_spectrum(&a, n);
            let total: u64 = s.counts.values().sum();
            prop_assert_eq!(total, (a.len() * a.len()) as u64);
            // diagonal pairs always land in class n
            prop_assert!(s.count(n) >= a.len() as u64);
            if a.distinct_mod(n) {
                prop_assert_eq!(s.count(n), a.len() as u64);
            }
        }

        #[test]
        fn spectra_are_translation_invariant(
            elems in prop::collection::btree_set(-40i64..40, 1..7),
            n in 1u64..30,
            k in -10i64..=10,
        ) {
            let a = IntegerSet::new(elems.into_iter().collect());
            let t = a.translate(k);
            prop_assert_eq!(difference_spectrum(&a, n).counts, difference_spectrum(&t, n).counts);
            prop_assert_eq!(power_spectrum(&a, n).values, power_spectrum(&t, n).values);
        }

        #[test]
        fn identity_holds_on_random_pairs(
            ae in prop::collection::btree_set(-30i64..30, 1..7),
            be in prop::collection::btree_set(-30i64..30, 1..7),
            n in 1u64..30,
        ) {
            let a = IntegerSet::new(ae.into_iter().collect());
            let b = IntegerSet::new(be.into_iter().collect());
            prop_assert!(verify_main_identity(&a, &b, n).equal);
        }
    }
}
