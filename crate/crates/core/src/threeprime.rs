//! Structure theory for complements whose cardinality is a product of
//! three distinct primes `p, q, r`.
//!
//! Residues mod `pqr` are viewed in CRT coordinates `(i, j, k)` with
//! `i = n mod p`, `j = n mod q`, `k = n mod r`. A set whose pairwise
//! differences all lie in `pℤ ∪ qℤ ∪ rℤ` is strongly constrained: it must
//! sit on three coordinate lines through a point, on four special points,
//! or inside a coordinate plane ([`classify_support`]). For sets supported
//! on the coordinate axes through the origin, divisibility of the mask
//! polynomial by the cyclotomic polynomials `Φ_pq, Φ_qr, Φ_pr, Φ_pqr`
//! reduces to linear conditions on the per-axis counts
//! ([`structured_cyclotomic_membership`]), which exclude one another in
//! specific ways ([`check_exclusivity`]). On the spectral side,
//! equidistribution counts and exact linear relations among the normalized
//! difference-spectrum values `α_m` tie prime-level divisibility to
//! composite-level divisibility ([`verify_unif_relations`]), culminating in
//! the checkable theorem of [`verify_theorem1`]: for a tiling `A ⊕ B` with
//! `|B| = pqr` and `|A| = p^a q^b r^c`, divisibility of `A(x)` by
//! `Φ_p, Φ_q, Φ_r` forces divisibility by all four composite cyclotomics.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::numtheory::{factorize, is_prime};
use crate::polynomials::{divides_cyclotomic, IntegerSet};
use crate::spectra::alpha_spectrum;
use crate::tiling::is_tiling;
use crate::{Error, Rational, Result};

/// A CRT coordinate system on `ℤ/pqrℤ` for three distinct primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueCoordinates {
    pub p: u64,
    pub q: u64,
    pub r: u64,
}

fn inverse_mod(a: u64, modulus: u64) -> u64 {
    let gcd = (a as i128).extended_gcd(&(modulus as i128));
    debug_assert_eq!(gcd.gcd, 1, "inverse_mod: arguments must be coprime");
    gcd.x.rem_euclid(modulus as i128) as u64
}

impl ResidueCoordinates {
    /// Validates that `p, q, r` are three pairwise-distinct primes.
    pub fn new(p: u64, q: u64, r: u64) -> Result<Self> {
        if !is_prime(p) || !is_prime(q) || !is_prime(r) || p == q || p == r || q == r {
            return Err(Error::BadPrimeTriple { p, q, r });
        }
        Ok(ResidueCoordinates { p, q, r })
    }

    /// The ambient modulus `pqr`.
    pub fn modulus(&self) -> u64 {
        self.p * self.q * self.r
    }

    /// The coordinates `(n mod p, n mod q, n mod r)` of an integer.
    pub fn coordinates(&self, n: i64) -> (u64, u64, u64) {
        let n = n as i128;
        (
            n.rem_euclid(self.p as i128) as u64,
            n.rem_euclid(self.q as i128) as u64,
            n.rem_euclid(self.r as i128) as u64,
        )
    }

    /// The unique residue in `0..pqr` with the given coordinates.
    ///
    /// # Panics
    /// Panics if a coordinate is out of range.
    pub fn representative(&self, i: u64, j: u64, k: u64) -> u64 {
        assert!(i < self.p && j < self.q && k < self.r, "coordinate out of range");
        let m = self.modulus() as u128;
        // CRT basis: for each prime, (product of the other two) times its
        // inverse modulo that prime is 1 there and 0 at the other primes
        let term = |residue: u64, prime: u64| -> u128 {
            let others = self.modulus() / prime;
            let basis = others as u128 * inverse_mod(others % prime, prime) as u128 % m;
            residue as u128 * basis % m
        };
        ((term(i, self.p) + term(j, self.q) + term(k, self.r)) % m) as u64
    }
}

/// Which of the three structural cases a difference-constrained set
/// satisfies, with every witnessing parameter choice.
///
/// The three cases (any of which may hold simultaneously):
/// * `case_a` — the set lies on the three coordinate lines through some
///   point `(i, j, k)`;
/// * `case_b` — the set lies on the four points `(0,0,0)`, `(i,j,0)`,
///   `(i,0,k)`, `(0,j,k)` for some `(i, j, k)`;
/// * `case_c` — the set lies in a coordinate plane through the origin,
///   i.e. every element is divisible by one fixed prime of the triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportClassification {
    pub case_a: bool,
    /// All `(i, j, k)` whose axis lines contain the set, ascending.
    pub case_a_witnesses: Vec<(u64, u64, u64)>,
    pub case_b: bool,
    /// All `(i, j, k)` whose four-point configuration contains the set.
    pub case_b_witnesses: Vec<(u64, u64, u64)>,
    pub case_c: bool,
    /// The primes of the triple dividing every element, in `(p, q, r)` order.
    pub case_c_primes: Vec<u64>,
}

impl SupportClassification {
    /// Whether at least one case holds (guaranteed by the structure
    /// theorem whenever the difference hypothesis holds).
    pub fn any(&self) -> bool {
        self.case_a || self.case_b || self.case_c
    }
}

/// Classifies the support of `b` in CRT coordinates, provided every
/// pairwise difference is divisible by at least one of the three primes.
///
/// # Errors
/// * [`Error::ZeroNotInSet`] if `0 ∉ b` (the classification is anchored at
///   the origin; translate first);
/// * [`Error::DifferenceHypothesisViolated`] with a witness pair whose
///   difference is coprime to all three primes.
pub fn classify_support(
    b: &IntegerSet,
    coords: &ResidueCoordinates,
) -> Result<SupportClassification> {
    if !b.contains(0) {
        return Err(Error::ZeroNotInSet);
    }
    let elems: Vec<i64> = b.iter().collect();
    for (idx, &x) in elems.iter().enumerate() {
        for &y in &elems[idx + 1..] {
            let d = (y - x).unsigned_abs();
            if d % coords.p != 0 && d % coords.q != 0 && d % coords.r != 0 {
                return Err(Error::DifferenceHypothesisViolated { b1: x, b2: y });
            }
        }
    }
    let classes: BTreeSet<(u64, u64, u64)> = elems.iter().map(|&x| coords.coordinates(x)).collect();

    let mut case_a_witnesses = Vec::new();
    let mut case_b_witnesses = Vec::new();
    for i in 0..coords.p {
        for j in 0..coords.q {
            for k in 0..coords.r {
                let on_axes = classes.iter().all(|&(ci, cj, ck)| {
                    (cj == j && ck == k) || (ci == i && ck == k) || (ci == i && cj == j)
                });
                if on_axes {
                    case_a_witnesses.push((i, j, k));
                }
                let on_points = classes.iter().all(|&c| {
                    c == (0, 0, 0) || c == (i, j, 0) || c == (i, 0, k) || c == (0, j, k)
                });
                if on_points {
                    case_b_witnesses.push((i, j, k));
                }
            }
        }
    }
    let mut case_c_primes = Vec::new();
    if classes.iter().all(|&(ci, _, _)| ci == 0) {
        case_c_primes.push(coords.p);
    }
    if classes.iter().all(|&(_, cj, _)| cj == 0) {
        case_c_primes.push(coords.q);
    }
    if classes.iter().all(|&(_, _, ck)| ck == 0) {
        case_c_primes.push(coords.r);
    }
    Ok(SupportClassification {
        case_a: !case_a_witnesses.is_empty(),
        case_a_witnesses,
        case_b: !case_b_witnesses.is_empty(),
        case_b_witnesses,
        case_c: !case_c_primes.is_empty(),
        case_c_primes,
    })
}

/// The count of ordered pairs with difference divisible by `m`, against
/// its exact lower bound `|A|²/m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDivisibilityCount {
    pub count: u64,
    /// `|A|²/m` as an exact rational.
    pub lower_bound: Rational,
    /// `count ≥ |A|²/m`; always true.
    pub bound_holds: bool,
    /// `count = |A|²/m`, equivalent to every residue class mod `m`
    /// containing exactly `|A|/m` elements.
    pub equidistributed: bool,
}

/// Counts ordered pairs `(a, a′) ∈ A×A` with `m | a − a′` (the diagonal
/// included) and compares against the equidistribution bound.
///
/// # Panics
/// Panics if `a` is empty or `m = 0`.
pub fn count_pairs_divisible(a: &IntegerSet, m: u64) -> PairDivisibilityCount {
    assert!(!a.is_empty(), "count_pairs_divisible: set must be nonempty");
    assert!(m > 0, "count_pairs_divisible: m must be positive");
    let mut census = std::collections::HashMap::new();
    for x in a.iter() {
        *census.entry((x as i128).rem_euclid(m as i128)).or_insert(0u64) += 1;
    }
    let count = census.values().map(|&c| c as u128 * c as u128).sum::<u128>();
    let count = u64::try_from(count).expect("pair count exceeds u64");
    let n = a.len() as u64;
    let lower_bound = Rational::new(BigInt::from(n) * BigInt::from(n), BigInt::from(m));
    let as_rational = Rational::from_integer(BigInt::from(count));
    PairDivisibilityCount {
        count,
        bound_holds: as_rational >= lower_bound,
        equidistributed: as_rational == lower_bound,
        lower_bound,
    }
}

/// One exact linear relation among normalized difference-spectrum values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaRelation {
    /// The family of ordered pairs the relation counts, by divisibility of
    /// the difference.
    pub name: &'static str,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

/// The verdicts of all applicable α-relations for one set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaRelationReport {
    /// The ambient modulus `pqr`.
    pub modulus: u64,
    /// `L = |A|²/(pqr)`, exact.
    pub l: Rational,
    pub relations: Vec<AlphaRelation>,
    pub all_hold: bool,
}

/// Verifies the exact linear relations among the `α_m = A_m/φ(pqr/m)`
/// that follow from cyclotomic divisibility hypotheses on `a`.
///
/// `hypotheses` must be a subset of `{p, q, r, pr}` and contain all three
/// primes; each hypothesis is checked against the mask polynomial before
/// any relation is evaluated. With the three prime hypotheses, six
/// relations apply (pair counts filtered by divisibility by one prime, and
/// by avoidance of one prime); hypothesizing `pr` as well adds four more
/// (counts filtered by divisibility by `pr`, by `r` but not `p`, by `p`
/// but not `r`, and by neither).
///
/// # Errors
/// * [`Error::InadmissibleHypothesis`] for a hypothesis outside
///   `{p, q, r, pr}`;
/// * [`Error::InsufficientHypotheses`] if any prime hypothesis is missing;
/// * [`Error::HypothesisNotSatisfied`] if a claimed divisibility fails.
///
/// # Panics
/// Panics if `a` is empty.
pub fn verify_unif_relations(
    a: &IntegerSet,
    coords: &ResidueCoordinates,
    hypotheses: &[u64],
) -> Result<AlphaRelationReport> {
    assert!(!a.is_empty(), "verify_unif_relations: set must be nonempty");
    let (p, q, r) = (coords.p, coords.q, coords.r);
    let pqr = coords.modulus();
    let claimed: BTreeSet<u64> = hypotheses.iter().copied().collect();
    for &h in &claimed {
        if h != p && h != q && h != r && h != p * r {
            return Err(Error::InadmissibleHypothesis { d: h });
        }
    }
    if !(claimed.contains(&p) && claimed.contains(&q) && claimed.contains(&r)) {
        return Err(Error::InsufficientHypotheses);
    }
    for &h in &claimed {
        if !divides_cyclotomic(a, h) {
            return Err(Error::HypothesisNotSatisfied { d: h });
        }
    }

    let alpha = alpha_spectrum(a, pqr);
    let al = |m: u64| alpha.value(m).clone();
    let rat = |n: u64| Rational::from_integer(BigInt::from(n));
    let n = a.len() as u64;
    let l = Rational::new(BigInt::from(n) * BigInt::from(n), BigInt::from(pqr));

    let mut relations = Vec::new();
    let mut push = |name: &'static str, lhs: Rational, rhs: Rational| {
        let holds = lhs == rhs;
        relations.push(AlphaRelation { name, lhs, rhs, holds });
    };

    // pair counts filtered by divisibility by one prime, in α-normalized
    // form; the right-hand sides are the equidistribution values
    push(
        "pairs-multiple-of-p",
        rat((q - 1) * (r - 1)) * al(p) + rat(r - 1) * al(p * q) + rat(q - 1) * al(p * r)
            + al(pqr),
        rat(q * r) * l.clone(),
    );
    push(
        "pairs-multiple-of-q",
        rat((p - 1) * (r - 1)) * al(q) + rat(r - 1) * al(p * q) + rat(p - 1) * al(q * r)
            + al(pqr),
        rat(p * r) * l.clone(),
    );
    push(
        "pairs-multiple-of-r",
        rat((p - 1) * (q - 1)) * al(r) + rat(q - 1) * al(p * r) + rat(p - 1) * al(q * r)
            + al(pqr),
        rat(p * q) * l.clone(),
    );
    push(
        "pairs-avoiding-p",
        rat((q - 1) * (r - 1)) * al(1) + rat(r - 1) * al(q) + rat(q - 1) * al(r) + al(q * r),
        rat(q * r) * l.clone(),
    );
    push(
        "pairs-avoiding-q",
        rat((p - 1) * (r - 1)) * al(1) + rat(r - 1) * al(p) + rat(p - 1) * al(r) + al(p * r),
        rat(p * r) * l.clone(),
    );
    push(
        "pairs-avoiding-r",
        rat((p - 1) * (q - 1)) * al(1) + rat(q - 1) * al(p) + rat(p - 1) * al(q) + al(p * q),
        rat(p * q) * l.clone(),
    );
    if claimed.contains(&(p * r)) {
        push(
            "pairs-multiple-of-pr",
            rat(q - 1) * al(p * r) + al(pqr),
            rat(q) * l.clone(),
        );
        push(
            "pairs-multiple-of-r-avoiding-p",
            rat(q - 1) * al(r) + al(q * r),
            rat(q) * l.clone(),
        );
        push(
            "pairs-multiple-of-p-avoiding-r",
            rat(q - 1) * al(p) + al(p * q),
            rat(q) * l.clone(),
        );
        push(
            "pairs-avoiding-p-and-r",
            rat(q - 1) * al(1) + al(q),
            rat(q) * l.clone(),
        );
    }
    let all_hold = relations.iter().all(|rel| rel.holds);
    Ok(AlphaRelationReport { modulus: pqr, l, relations, all_hold })
}

/// Per-class element counts of a set supported on the three coordinate
/// axes through the origin.
///
/// `x[i-1]` counts elements in class `(i, 0, 0)` for `i = 1..p−1`, `y` and
/// `z` likewise along the `q` and `r` axes, and `t` counts the origin
/// class; multiple integers in the same class accumulate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreePrimeProfile {
    pub coords: ResidueCoordinates,
    pub t: u64,
    pub x: Vec<u64>,
    pub y: Vec<u64>,
    pub z: Vec<u64>,
    /// `X = Σ x_i`.
    pub x_total: u64,
    /// `Y = Σ y_j`.
    pub y_total: u64,
    /// `Z = Σ z_k`.
    pub z_total: u64,
    /// Whether each axis vector is constant.
    pub uniform: bool,
}

impl ThreePrimeProfile {
    /// The profile with every class on an axis holding the same count.
    pub fn with_uniform_counts(coords: ResidueCoordinates, t: u64, x: u64, y: u64, z: u64) -> Self {
        let (p, q, r) = (coords.p, coords.q, coords.r);
        ThreePrimeProfile {
            coords,
            t,
            x: vec![x; (p - 1) as usize],
            y: vec![y; (q - 1) as usize],
            z: vec![z; (r - 1) as usize],
            x_total: x * (p - 1),
            y_total: y * (q - 1),
            z_total: z * (r - 1),
            uniform: true,
        }
    }

    /// Total element count `t + X + Y + Z`.
    pub fn cardinality(&self) -> u64 {
        self.t + self.x_total + self.y_total + self.z_total
    }

    /// The shared per-class counts `(x, y, z)` of a uniform profile.
    fn uniform_counts(&self) -> Option<(u64, u64, u64)> {
        if !self.uniform {
            return None;
        }
        Some((self.x[0], self.y[0], self.z[0]))
    }
}

/// Computes the axis profile of `b`, requiring every element to lie on a
/// coordinate axis through the origin (at least two zero coordinates).
///
/// # Errors
/// [`Error::NotAxisSupported`] with the smallest off-axis element.
pub fn structured_profile(b: &IntegerSet, coords: &ResidueCoordinates) -> Result<ThreePrimeProfile> {
    let (p, q, r) = (coords.p, coords.q, coords.r);
    let mut t = 0u64;
    let mut x = vec![0u64; (p - 1) as usize];
    let mut y = vec![0u64; (q - 1) as usize];
    let mut z = vec![0u64; (r - 1) as usize];
    for elem in b.iter() {
        match coords.coordinates(elem) {
            (0, 0, 0) => t += 1,
            (i, 0, 0) => x[(i - 1) as usize] += 1,
            (0, j, 0) => y[(j - 1) as usize] += 1,
            (0, 0, k) => z[(k - 1) as usize] += 1,
            _ => return Err(Error::NotAxisSupported { witness: elem }),
        }
    }
    let constant = |v: &[u64]| v.iter().all(|&c| c == v[0]);
    let uniform = constant(&x) && constant(&y) && constant(&z);
    Ok(ThreePrimeProfile {
        coords: *coords,
        t,
        x_total: x.iter().sum(),
        y_total: y.iter().sum(),
        z_total: z.iter().sum(),
        x,
        y,
        z,
        uniform,
    })
}

/// A canonical integer set with the given axis profile: class `(i, j, k)`
/// with count `c` contributes its least nonnegative representative plus
/// `c − 1` further copies shifted by multiples of `pqr`.
///
/// # Panics
/// Panics if the profile is empty.
pub fn realizing_set(profile: &ThreePrimeProfile) -> IntegerSet {
    let coords = &profile.coords;
    let pqr = coords.modulus();
    let mut elems = Vec::new();
    let mut place = |rep: u64, count: u64| {
        for s in 0..count {
            elems.push((rep + s * pqr) as i64);
        }
    };
    place(0, profile.t);
    for (i, &count) in profile.x.iter().enumerate() {
        place(coords.representative(i as u64 + 1, 0, 0), count);
    }
    for (j, &count) in profile.y.iter().enumerate() {
        place(coords.representative(0, j as u64 + 1, 0), count);
    }
    for (k, &count) in profile.z.iter().enumerate() {
        place(coords.representative(0, 0, k as u64 + 1), count);
    }
    assert!(!elems.is_empty(), "realizing_set: profile has no elements");
    IntegerSet::new(elems)
}

/// The membership verdict for one composite cyclotomic polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeMembership {
    /// The cyclotomic index (`pq`, `qr`, `pr`, or `pqr`).
    pub modulus: u64,
    /// Whether the profile's mask polynomial is divisible.
    pub divides: bool,
    /// The origin-class count that would make it divisible.
    pub required_t: i64,
    /// Whether `required_t` is a possible count (nonnegative).
    pub satisfiable: bool,
}

/// Closed-form divisibility verdicts for the four composite cyclotomics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipReport {
    pub pq: CompositeMembership,
    pub qr: CompositeMembership,
    pub pr: CompositeMembership,
    pub pqr: CompositeMembership,
    /// Set when an axis count is zero: the verdicts remain valid but the
    /// profile is outside the regime where the exclusivity statements
    /// apply.
    pub degenerate: bool,
}

/// Evaluates the four closed-form divisibility conditions of a uniform
/// axis profile: with per-class counts `x, y, z` and `s = x + y + z`,
/// `Φ_pq` divides iff `t = s − zr`, `Φ_qr` iff `t = s − xp`, `Φ_pr` iff
/// `t = s − yq`, and `Φ_pqr` iff `t = s`.
///
/// # Errors
/// [`Error::NonUniformProfile`] if the axis vectors are not constant.
pub fn structured_cyclotomic_membership(profile: &ThreePrimeProfile) -> Result<MembershipReport> {
    let (x, y, z) = profile.uniform_counts().ok_or(Error::NonUniformProfile)?;
    let (p, q, r) = (profile.coords.p, profile.coords.q, profile.coords.r);
    let s = (x + y + z) as i64;
    let verdict = |modulus: u64, required_t: i64| CompositeMembership {
        modulus,
        divides: profile.t as i64 == required_t,
        required_t,
        satisfiable: required_t >= 0,
    };
    Ok(MembershipReport {
        pq: verdict(p * q, s - (z * r) as i64),
        qr: verdict(q * r, s - (x * p) as i64),
        pr: verdict(p * r, s - (y * q) as i64),
        pqr: verdict(p * q * r, s),
        degenerate: x == 0 || y == 0 || z == 0,
    })
}

/// Exclusivity of the composite divisibility conditions for one profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExclusivityReport {
    pub pq_divides: bool,
    pub qr_divides: bool,
    pub pr_divides: bool,
    pub pqr_divides: bool,
    /// Echo of the cardinality assumption under which the pairwise
    /// statement applies.
    pub cardinality_is_pqr: bool,
    /// If `Φ_pqr` divides, none of the pairwise composites may.
    pub full_exclusion_holds: bool,
    /// Under the cardinality assumption, at most one pairwise composite
    /// may divide.
    pub pairwise_exclusion_holds: bool,
    /// Both exclusion statements hold (must never be false).
    pub consistent: bool,
}

/// Checks the two exclusion statements on a uniform profile with all axis
/// counts positive. When `cardinality_is_pqr` is set, the profile's total
/// count must actually equal `pqr`; the pairwise statement is asserted
/// only in that case.
///
/// # Errors
/// * [`Error::NonUniformProfile`] if the profile is not uniform;
/// * [`Error::ZeroAxisCount`] if some axis count is zero;
/// * [`Error::BadCardinality`] if `cardinality_is_pqr` is claimed but the
///   total count differs from `pqr`.
pub fn check_exclusivity(
    profile: &ThreePrimeProfile,
    cardinality_is_pqr: bool,
) -> Result<ExclusivityReport> {
    let (x, y, z) = profile.uniform_counts().ok_or(Error::NonUniformProfile)?;
    if x == 0 || y == 0 || z == 0 {
        return Err(Error::ZeroAxisCount);
    }
    if cardinality_is_pqr && profile.cardinality() != profile.coords.modulus() {
        return Err(Error::BadCardinality { got: profile.cardinality() });
    }
    let membership = structured_cyclotomic_membership(profile)?;
    let pairwise =
        [membership.pq.divides, membership.qr.divides, membership.pr.divides];
    let pairwise_count = pairwise.iter().filter(|&&d| d).count();
    let full_exclusion_holds = !membership.pqr.divides || pairwise_count == 0;
    let pairwise_exclusion_holds = !cardinality_is_pqr || pairwise_count <= 1;
    Ok(ExclusivityReport {
        pq_divides: membership.pq.divides,
        qr_divides: membership.qr.divides,
        pr_divides: membership.pr.divides,
        pqr_divides: membership.pqr.divides,
        cardinality_is_pqr,
        full_exclusion_holds,
        pairwise_exclusion_holds,
        consistent: full_exclusion_holds && pairwise_exclusion_holds,
    })
}

/// Verdict of the composite-divisibility theorem on one tiling instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Report {
    pub divides_p: bool,
    pub divides_q: bool,
    pub divides_r: bool,
    pub divides_pq: bool,
    pub divides_pr: bool,
    pub divides_qr: bool,
    pub divides_pqr: bool,
    /// `Φ_p, Φ_q, Φ_r` all divide `A(x)`.
    pub hypotheses_hold: bool,
    /// `Φ_pq, Φ_pr, Φ_qr, Φ_pqr` all divide `A(x)`.
    pub conclusion_holds: bool,
    /// `hypotheses_hold → conclusion_holds`; the theorem asserts this is
    /// always true.
    pub consistent: bool,
}

/// Tests the composite-divisibility theorem on a tiling `A ⊕ B = ℤ/Mℤ`
/// with `M = |A||B|`, `|B| = pqr`, and `|A| = p^a q^b r^c` (`a, b, c ≥ 1`):
/// if the three prime cyclotomics divide `A(x)`, the four composite ones
/// must as well.
///
/// # Errors
/// * [`Error::BadCardinality`] if `|B| ≠ pqr` or `|A|` is not composed of
///   exactly the primes `p, q, r`;
/// * [`Error::NotATiling`] if the pair does not tile `ℤ/Mℤ`.
pub fn verify_theorem1(
    a: &IntegerSet,
    b: &IntegerSet,
    coords: &ResidueCoordinates,
) -> Result<Theorem1Report> {
    let (p, q, r) = (coords.p, coords.q, coords.r);
    if b.len() as u64 != coords.modulus() {
        return Err(Error::BadCardinality { got: b.len() as u64 });
    }
    let required: BTreeSet<u64> = [p, q, r].into_iter().collect();
    let support: BTreeSet<u64> = factorize(a.len() as u64).primes().collect();
    if support != required {
        return Err(Error::BadCardinality { got: a.len() as u64 });
    }
    let m = (a.len() as u64)
        .checked_mul(b.len() as u64)
        .expect("modulus |A||B| exceeds u64");
    if !is_tiling(a, b, m) {
        return Err(Error::NotATiling { modulus: m });
    }
    let d = |n: u64| divides_cyclotomic(a, n);
    let report = Theorem1Report {
        divides_p: d(p),
        divides_q: d(q),
        divides_r: d(r),
        divides_pq: d(p * q),
        divides_pr: d(p * r),
        divides_qr: d(q * r),
        divides_pqr: d(p * q * r),
        hypotheses_hold: false,
        conclusion_holds: false,
        consistent: false,
    };
    let hypotheses_hold = report.divides_p && report.divides_q && report.divides_r;
    let conclusion_holds =
        report.divides_pq && report.divides_pr && report.divides_qr && report.divides_pqr;
    Ok(Theorem1Report {
        hypotheses_hold,
        conclusion_holds,
        consistent: !hypotheses_hold || conclusion_holds,
        ..report
    })
}
