//! Backtracking search for tiling complements and exhaustive enumeration
//! of all complement pairs of a cyclic group.
//!
//! Both searches walk residues of `ℤ/Mℤ` smallest-uncovered-first,
//! maintaining an exact cover; a candidate is cut as soon as it would
//! double-cover a residue or put a difference-divisor of one side into the
//! divisor set of the other (complement pairs must keep those sets
//! disjoint). The searches are deterministic: candidates are tried in
//! ascending order, results are reported in canonical sorted order, and
//! the parallel variant partitions only the top-level branches so its
//! merged result equals the sequential one.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::polynomials::IntegerSet;
use crate::spectra::difference_spectrum;
use crate::tiling::TilingInstance;
use crate::{Error, Result};

/// Lexicographically least translate of `b` (residues mod `m`) that
/// contains 0.
fn canonical_translate(b: &[u64], m: u64) -> Vec<u64> {
    let mut best: Option<Vec<u64>> = None;
    for &shift in b {
        let mut t: Vec<u64> = b.iter().map(|&x| (x + m - shift) % m).collect();
        t.sort_unstable();
        if best.as_ref().is_none_or(|cur| &t < cur) {
            best = Some(t);
        }
    }
    best.expect("canonical_translate: set must be nonempty")
}

fn to_set(residues: &[u64]) -> IntegerSet {
    IntegerSet::new(residues.iter().map(|&x| x as i64).collect())
}

/// Shared state of the complement search for a fixed `A`.
struct ComplementSearch {
    m: u64,
    /// Residues of `A`, ascending.
    ra: Vec<u64>,
    /// Difference-divisor membership of `A`, indexed by divisor value.
    da: Vec<bool>,
    limit: usize,
    results: BTreeSet<IntegerSet>,
}

impl ComplementSearch {
    fn new(a: &IntegerSet, m: u64, limit: usize) -> Result<Self> {
        if !a.distinct_mod(m) {
            return Err(Error::RepeatedResidues { modulus: m });
        }
        if !m.is_multiple_of(a.len() as u64) {
            return Err(Error::CardinalityNotDivisor { cardinality: a.len() as u64, modulus: m });
        }
        let mut ra = a.residues_mod(m);
        ra.sort_unstable();
        let mut da = vec![false; m as usize + 1];
        for d in difference_spectrum(a, m).divisor_set {
            da[d as usize] = true;
        }
        Ok(ComplementSearch { m, ra, da, limit, results: BTreeSet::new() })
    }

    /// Candidate elements that cover the smallest uncovered residue:
    /// `r − a (mod m)` over `a ∈ A`, ascending.
    fn candidates(&self, covered: &[bool]) -> Vec<u64> {
        let r = covered.iter().position(|&c| !c).expect("cover incomplete") as u64;
        let mut cands: Vec<u64> = self.ra.iter().map(|&a| (r + self.m - a % self.m) % self.m).collect();
        cands.sort_unstable();
        cands
    }

    /// Tries to extend `b` by `x`: checks the divisor pruning and the
    /// exact cover, recursing on success. Returns `false` once the result
    /// limit is reached and the search should unwind.
    fn extend(&mut self, b: &mut Vec<u64>, covered: &mut Vec<bool>, uncovered: u64, x: u64) -> bool {
        for &y in b.iter() {
            let diff = x.abs_diff(y);
            let g = if diff == 0 { self.m } else { num_integer::gcd(self.m, diff) };
            if self.da[g as usize] {
                return true; // pruned, keep searching siblings
            }
        }
        let mut marked = Vec::with_capacity(self.ra.len());
        for &a in &self.ra {
            let s = ((a + x) % self.m) as usize;
            if covered[s] {
                for &undo in &marked {
                    covered[undo] = false;
                }
                return true; // double cover, pruned
            }
            covered[s] = true;
            marked.push(s);
        }
        b.push(x);
        let keep_going = self.descend(b, covered, uncovered - marked.len() as u64);
        b.pop();
        for undo in marked {
            covered[undo] = false;
        }
        keep_going
    }

    fn descend(&mut self, b: &mut Vec<u64>, covered: &mut Vec<bool>, uncovered: u64) -> bool {
        if uncovered == 0 {
            // record only canonical representatives: every complement's
            // canonical translate is itself discovered by the search
            let mut sorted = b.clone();
            sorted.sort_unstable();
            if canonical_translate(&sorted, self.m) == sorted {
                self.results.insert(to_set(&sorted));
            }
            return self.results.len() < self.limit;
        }
        for x in self.candidates(covered) {
            if !self.extend(b, covered, uncovered, x) {
                return false;
            }
        }
        true
    }
}

/// Searches for complements of `A` in `ℤ/Mℤ`: sets `B` containing 0 with
/// `A ⊕ B = ℤ/Mℤ`. Returns up to `limit` complements, one canonical
/// representative per translation orbit (the lexicographically least
/// translate containing 0), in ascending order.
///
/// # Errors
/// * [`Error::RepeatedResidues`] if `A` repeats a residue mod `M` (such an
///   `A` is not a candidate tile of `ℤ/Mℤ` at all);
/// * [`Error::CardinalityNotDivisor`] if `|A| ∤ M`.
///
/// # Panics
/// Panics if `a` is empty or `m = 0`.
pub fn find_complements(a: &IntegerSet, m: u64, limit: usize) -> Result<Vec<IntegerSet>> {
    assert!(m > 0, "find_complements: modulus must be positive");
    assert!(!a.is_empty(), "find_complements: set must be nonempty");
    let mut search = ComplementSearch::new(a, m, limit)?;
    if limit == 0 {
        return Ok(Vec::new());
    }
    let mut covered = vec![false; m as usize];
    for &r in &search.ra {
        covered[r as usize] = true;
    }
    let uncovered = m - search.ra.len() as u64;
    let mut b = vec![0u64];
    search.descend(&mut b, &mut covered, uncovered);
    Ok(search.results.into_iter().collect())
}

/// Parallel variant of [`find_complements`]: the top-level candidate
/// branches are partitioned across `jobs` workers and the per-branch
/// results merged in branch order, so the outcome is identical to the
/// sequential search. `jobs = 1` runs sequentially on the caller's thread.
///
/// # Errors
/// As for [`find_complements`].
///
/// # Panics
/// Panics if `a` is empty, `m = 0` or `jobs = 0`.
pub fn find_complements_parallel(
    a: &IntegerSet,
    m: u64,
    limit: usize,
    jobs: usize,
) -> Result<Vec<IntegerSet>> {
    assert!(jobs > 0, "find_complements_parallel: jobs must be positive");
    if jobs == 1 {
        return find_complements(a, m, limit);
    }
    // validate preconditions (and build the candidate frame) up front
    let probe = ComplementSearch::new(a, m, limit)?;
    if limit == 0 {
        return Ok(Vec::new());
    }
    let mut covered = vec![false; m as usize];
    for &r in &probe.ra {
        covered[r as usize] = true;
    }
    let uncovered = m - probe.ra.len() as u64;
    if uncovered == 0 {
        // B = {0} is the lone complement; nothing to partition
        return find_complements(a, m, limit);
    }
    let top_level = probe.candidates(&covered);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("worker pool construction");
    let per_branch: Vec<BTreeSet<IntegerSet>> = pool.install(|| {
        top_level
            .par_iter()
            .map(|&x| {
                let mut search =
                    ComplementSearch::new(a, m, limit).expect("preconditions already checked");
                let mut covered = covered.clone();
                let mut b = vec![0u64];
                search.extend(&mut b, &mut covered, uncovered, x);
                search.results
            })
            .collect()
    });
    // concatenate in branch order and cut at the limit: this reproduces the
    // sequential discovery prefix, then returns it sorted
    let mut merged = BTreeSet::new();
    'outer: for branch in per_branch {
        for result in branch {
            merged.insert(result);
            if merged.len() == limit {
                break 'outer;
            }
        }
    }
    Ok(merged.into_iter().collect())
}

/// Sweeps candidate moduli `M = |A|·k ≤ max_modulus` in ascending order
/// and returns the first complement found together with its modulus, or
/// `None` when `A` admits no complement in the swept range. Moduli where
/// `A` repeats a residue are skipped (no complement can exist there).
///
/// # Panics
/// Panics if `a` is empty.
pub fn find_tiling(a: &IntegerSet, max_modulus: u64) -> Option<(IntegerSet, u64)> {
    assert!(!a.is_empty(), "find_tiling: set must be nonempty");
    let k = a.len() as u64;
    let mut m = k;
    while m <= max_modulus {
        if a.distinct_mod(m) {
            let found = find_complements(a, m, 1).expect("preconditions hold by construction");
            if let Some(b) = found.into_iter().next() {
                return Some((b, m));
            }
        }
        m += k;
    }
    None
}

/// State of the exhaustive pair enumeration.
struct PairEnumeration {
    m: u64,
    divisors: Vec<u64>,
    a: Vec<u64>,
    b: Vec<u64>,
    in_a: Vec<bool>,
    in_b: Vec<bool>,
    covered: Vec<bool>,
    uncovered: u64,
    /// Difference-divisor membership per side, indexed by divisor value.
    da: Vec<bool>,
    db: Vec<bool>,
    results: Vec<TilingInstance>,
}

impl PairEnumeration {
    fn new(m: u64) -> Self {
        let mut covered = vec![false; m as usize];
        covered[0] = true;
        PairEnumeration {
            m,
            divisors: crate::numtheory::divisors(m),
            a: vec![0],
            b: vec![0],
            in_a: { let mut v = vec![false; m as usize]; v[0] = true; v },
            in_b: { let mut v = vec![false; m as usize]; v[0] = true; v },
            covered,
            uncovered: m - 1,
            da: vec![false; m as usize + 1],
            db: vec![false; m as usize + 1],
            results: Vec::new(),
        }
    }

    /// Can the current partial sizes still extend to `|A|·|B| = M`?
    fn sizes_feasible(&self, na: usize, nb: usize) -> bool {
        self.divisors
            .iter()
            .any(|&d| d >= na as u64 && self.m / d >= nb as u64)
    }

    /// Divisor classes a new element `x` adds against the existing
    /// elements of `side`, or `None` if one of them collides with the
    /// other side's divisor set.
    fn new_divisors(&self, side: &[u64], other_set: &[bool], x: u64) -> Option<Vec<u64>> {
        let mut added = Vec::new();
        for &y in side {
            let diff = x.abs_diff(y);
            let g = if diff == 0 { self.m } else { num_integer::gcd(self.m, diff) };
            if other_set[g as usize] {
                return None;
            }
            added.push(g);
        }
        Some(added)
    }

    fn recurse(&mut self) {
        if self.uncovered == 0 {
            let a = to_set(&{ let mut s = self.a.clone(); s.sort_unstable(); s });
            let b = to_set(&{ let mut s = self.b.clone(); s.sort_unstable(); s });
            self.results.push(TilingInstance { a, b, modulus: self.m });
            return;
        }
        let r = self.covered.iter().position(|&c| !c).expect("uncovered residue exists") as u64;
        for alpha in 0..self.m {
            let beta = (r + self.m - alpha) % self.m;
            let add_a = !self.in_a[alpha as usize];
            let add_b = !self.in_b[beta as usize];
            if !add_a && !add_b {
                continue; // r would already be covered
            }
            // size feasibility after the additions
            let (na, nb) = (self.a.len() + add_a as usize, self.b.len() + add_b as usize);
            if !self.sizes_feasible(na, nb) {
                continue;
            }
            // divisor-disjointness pruning, both directions
            let added_da = if add_a {
                match self.new_divisors(&self.a, &self.db, alpha) {
                    Some(v) => v,
                    None => continue,
                }
            } else {
                Vec::new()
            };
            let added_db = if add_b {
                match self.new_divisors(&self.b, &self.da, beta) {
                    Some(v) => v,
                    None => continue,
                }
            } else {
                Vec::new()
            };
            // the two fresh difference sets must also avoid each other
            if add_a && add_b && added_da.iter().any(|g| added_db.contains(g)) {
                continue;
            }
            // exact-cover update: all sums produced by the new elements
            let mut marked = Vec::new();
            let mut ok = true;
            {
                let mut try_mark = |s: usize, covered: &mut Vec<bool>| {
                    if covered[s] {
                        false
                    } else {
                        covered[s] = true;
                        marked.push(s);
                        true
                    }
                };
                if add_a && add_b {
                    for &y in &self.b {
                        if !try_mark(((alpha + y) % self.m) as usize, &mut self.covered) {
                            ok = false;
                            break;
                        }
                    }
                    if ok {
                        for &x in &self.a {
                            if !try_mark(((x + beta) % self.m) as usize, &mut self.covered) {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if ok {
                        ok = try_mark(((alpha + beta) % self.m) as usize, &mut self.covered);
                    }
                } else if add_a {
                    for &y in &self.b {
                        if !try_mark(((alpha + y) % self.m) as usize, &mut self.covered) {
                            ok = false;
                            break;
                        }
                    }
                } else {
                    for &x in &self.a {
                        if !try_mark(((x + beta) % self.m) as usize, &mut self.covered) {
                            ok = false;
                            break;
                        }
                    }
                }
            }
            if !ok {
                for s in marked {
                    self.covered[s] = false;
                }
                continue;
            }
            // commit
            if add_a {
                self.a.push(alpha);
                self.in_a[alpha as usize] = true;
                for &g in &added_da {
                    self.da[g as usize] = true;
                }
            }
            if add_b {
                self.b.push(beta);
                self.in_b[beta as usize] = true;
                for &g in &added_db {
                    self.db[g as usize] = true;
                }
            }
            self.uncovered -= marked.len() as u64;
            self.recurse();
            self.uncovered += marked.len() as u64;
            if add_b {
                self.b.pop();
                self.in_b[beta as usize] = false;
                for &g in &added_db {
                    self.db[g as usize] = false;
                }
            }
            if add_a {
                self.a.pop();
                self.in_a[alpha as usize] = false;
                for &g in &added_da {
                    self.da[g as usize] = false;
                }
            }
            for s in marked {
                self.covered[s] = false;
            }
        }
    }
}

/// Enumerates every complement pair of `ℤ/Mℤ`: all `(A, B)` with
/// `A ⊕ B = ℤ/Mℤ` and `0 ∈ A ∩ B`, as residue sets. Pairs are returned
/// sorted by `A` then `B`; `(A, B)` and `(B, A)` are distinct records.
///
/// # Panics
/// Panics if `m = 0`.
pub fn enumerate_tilings(m: u64) -> Vec<TilingInstance> {
    assert!(m > 0, "enumerate_tilings: modulus must be positive");
    let mut enumeration = PairEnumeration::new(m);
    enumeration.recurse();
    let mut results = enumeration.results;
    results.sort();
    results
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiling::is_tiling;

    fn set(elems: &[i64]) -> IntegerSet {
        IntegerSet::from_slice(elems)
    }

    #[test]
    fn complement_examples() {
        // {0,3} is also a complement but is the same orbit as {0,1}
        assert_eq!(find_complements(&set(&[0, 2]), 4, 8).unwrap(), vec![set(&[0, 1])]);
        assert_eq!(find_complements(&set(&[0, 1, 3]), 6, 8).unwrap(), vec![]);
        assert_eq!(find_complements(&set(&[0]), 2, 8).unwrap(), vec![set(&[0, 1])]);
        // a complete residue system admits exactly B = {0}
        assert_eq!(
            find_complements(&set(&[0, 1, 2, 3]), 4, 8).unwrap(),
            vec![set(&[0])]
        );
    }

    #[test]
    fn complement_errors() {
        assert_eq!(
            find_complements(&set(&[0, 4]), 4, 1),
            Err(Error::RepeatedResidues { modulus: 4 })
        );
        assert_eq!(
            find_complements(&set(&[0, 1]), 5, 1),
            Err(Error::CardinalityNotDivisor { cardinality: 2, modulus: 5 })
        );
    }

    #[test]
    fn complements_are_genuine_and_canonical() {
        let a = set(&[0, 1, 5, 6]);
        for m in [8, 12, 16, 20] {
            if !a.distinct_mod(m) || m % 4 != 0 {
                continue;
            }
            for b in find_complements(&a, m, 50).unwrap() {
                assert!(is_tiling(&a, &b, m), "claimed complement {b} at M={m}");
                assert_eq!(b.min_element(), Some(0));
            }
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let a = set(&[0, 2]);
        for limit in [1, 3, 100] {
            for jobs in [1, 2, 4] {
                assert_eq!(
                    find_complements_parallel(&a, 16, limit, jobs).unwrap(),
                    find_complements(&a, 16, limit).unwrap(),
                    "limit={limit} jobs={jobs}"
                );
            }
        }
        let a = set(&[0, 1, 2, 3]);
        assert_eq!(
            find_complements_parallel(&a, 32, 64, 3).unwrap(),
            find_complements(&a, 32, 64).unwrap()
        );
    }

    #[test]
    fn find_tiling_examples() {
        assert_eq!(find_tiling(&set(&[0, 2]), 8), Some((set(&[0, 1]), 4)));
        assert_eq!(find_tiling(&set(&[0]), 1), Some((set(&[0]), 1)));
        assert_eq!(
            find_tiling(&set(&[0, 1, 2, 3, 4, 5]), 6),
            Some((set(&[0]), 6))
        );
        // fails the cardinality condition, so no modulus can work
        assert_eq!(find_tiling(&set(&[0, 1, 3]), 30), None);
        // fails the composite divisibility condition; exhausts the sweep
        assert_eq!(find_tiling(&set(&[0, 1, 2, 4, 5, 6]), 72), None);
    }

    #[test]
    fn enumeration_of_small_groups() {
        let records = enumerate_tilings(1);
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].a, set(&[0]));
        assert_eq!(records[0].b, set(&[0]));

        let records = enumerate_tilings(2);
        assert_eq!(records.len(), 2);

        let records = enumerate_tilings(4);
        let pairs: Vec<(IntegerSet, IntegerSet)> =
            records.iter().map(|t| (t.a.clone(), t.b.clone())).collect();
        assert_eq!(
            pairs,
            vec![
                (set(&[0]), set(&[0, 1, 2, 3])),
                (set(&[0, 1]), set(&[0, 2])),
                (set(&[0, 1, 2, 3]), set(&[0])),
                (set(&[0, 2]), set(&[0, 1])),
                (set(&[0, 2]), set(&[0, 3])),
                (set(&[0, 3]), set(&[0, 2])),
            ]
        );
    }

    #[test]
    fn enumeration_is_sound_and_symmetric() {
        for m in 1..=16u64 {
            let records = enumerate_tilings(m);
            // soundness + canonical form
            for t in &records {
                assert!(is_tiling(&t.a, &t.b, m));
                assert!(t.a.contains(0) && t.b.contains(0));
                assert!(t.a.iter().all(|x| (0..m as i64).contains(&x)));
            }
            // no duplicates, sorted
            for w in records.windows(2) {
                assert!((&w[0].a, &w[0].b) < (&w[1].a, &w[1].b));
            }
            // swap symmetry
            let swapped_count = records
                .iter()
                .filter(|t| {
                    records
                        .iter()
                        .any(|u| u.a == t.b && u.b == t.a)
                })
                .count();
            assert_eq!(swapped_count, records.len(), "swap closure at M={m}");
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        // independent oracle: filter all subset pairs containing 0
        for m in 1..=10u64 {
            let mut brute = Vec::new();
            for abits in 0u32..1 << (m - 1) {
                let a: Vec<i64> = std::iter::once(0)
                    .chain((1..m as i64).filter(|&i| abits >> (i - 1) & 1 == 1))
                    .collect();
                for bbits in 0u32..1 << (m - 1) {
                    let b: Vec<i64> = std::iter::once(0)
                        .chain((1..m as i64).filter(|&i| bbits >> (i - 1) & 1 == 1))
                        .collect();
                    let (a, b) = (IntegerSet::new(a.clone()), IntegerSet::new(b));
                    if is_tiling(&a, &b, m) {
                        brute.push((a, b));
                    }
                }
            }
            brute.sort();
            let enumerated: Vec<(IntegerSet, IntegerSet)> = enumerate_tilings(m)
                .into_iter()
                .map(|t| (t.a, t.b))
                .collect();
            assert_eq!(enumerated, brute, "enumeration at M={m}");
        }
    }
}
