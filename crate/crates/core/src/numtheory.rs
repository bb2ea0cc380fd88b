//! Scalar number-theoretic kernels: factorization, totient, Möbius,
//! divisor enumeration and Ramanujan sums.
//!
//! Every function here is total on its documented domain and panics on
//! domain violations (`n = 0` where a positive argument is required);
//! outputs are bounded by inputs, so machine integers cannot overflow at
//! any input the argument types accept.

use num_integer::Integer;

/// Prime factorization of a positive integer as ascending `(prime, exponent)`
/// pairs. `factorize(1)` is the empty factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    /// The `(prime, exponent)` pairs in ascending prime order.
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// The distinct primes, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    /// Number of distinct prime factors (ω).
    pub fn distinct_primes(&self) -> usize {
        self.pairs.len()
    }

    /// Reconstructs the factored integer.
    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, e)| p.pow(e)).product()
    }

    /// True iff the factored integer is `p^k` for a single prime `p`, `k ≥ 1`.
    pub fn is_prime_power(&self) -> bool {
        self.pairs.len() == 1
    }

    /// True iff some exponent is at least 2.
    pub fn has_square_factor(&self) -> bool {
        self.pairs.iter().any(|&(_, e)| e >= 2)
    }
}

/// Factorizes `n ≥ 1` by trial division up to `√n`.
///
/// # Panics
/// Panics if `n = 0`.
pub fn factorize(n: u64) -> Factorization {
    assert!(n > 0, "factorize: argument must be positive");
    let mut pairs = Vec::new();
    let mut m = n;
    let mut d = 2u64;
    while d <= m / d {
        if m.is_multiple_of(d) {
            let mut e = 0u32;
            while m.is_multiple_of(d) {
                m /= d;
                e += 1;
            }
            pairs.push((d, e));
        }
        d += 1;
    }
    if m > 1 {
        pairs.push((m, 1));
    }
    Factorization { pairs }
}

/// True iff `n` is prime.
pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).pairs() == [(n, 1)]
}

/// Euler's totient φ(n): the number of `1 ≤ k ≤ n` coprime to `n`.
///
/// # Panics
/// Panics if `n = 0`.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n > 0, "euler_phi: argument must be positive");
    let mut phi = n;
    for &(p, _) in factorize(n).pairs() {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Möbius function μ(n) ∈ {−1, 0, 1}.
///
/// # Panics
/// Panics if `n = 0`.
pub fn moebius(n: u64) -> i64 {
    assert!(n > 0, "moebius: argument must be positive");
    let f = factorize(n);
    if f.has_square_factor() {
        0
    } else if f.distinct_primes().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All positive divisors of `n`, ascending.
///
/// # Panics
/// Panics if `n = 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0, "divisors: argument must be positive");
    let mut divs = vec![1u64];
    for &(p, e) in factorize(n).pairs() {
        let prev = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(prev.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}

/// The gcd `(n, t)` with the convention `(n, 0) = |n|`: computes
/// `gcd(|n|, |t|)` where `t = 0` yields `|n|`.
///
/// This is the divisor-classification gcd used throughout the correlation
/// spectra: for a modulus `n` and an integer difference `t`, `gcd_conv(n, t)`
/// is the divisor class of `t`, with differences divisible by `n` (and the
/// zero difference in particular) landing in class `n`.
///
/// # Panics
/// Panics if `n = 0`.
pub fn gcd_conv(n: i64, t: i64) -> u64 {
    assert!(n != 0, "gcd_conv: first argument must be nonzero");
    let n = (n as i128).unsigned_abs() as u64;
    let t = (t as i128).unsigned_abs();
    // reduce t mod n first so huge |t| costs nothing and u64 suffices
    let t = (t % n as u128) as u64;
    if t == 0 {
        n
    } else {
        n.gcd(&t)
    }
}

/// Ramanujan sum c_d(n): the sum of `e^{2πi·k·n/d}` over `1 ≤ k ≤ d` with
/// `gcd(k, d) = 1`, computed exactly via the closed form
/// `μ(d/g)·φ(d)/φ(d/g)` with `g = gcd_conv(d, n)`.
///
/// # Panics
/// Panics if `d = 0`.
pub fn ramanujan_sum(d: u64, n: i64) -> i64 {
    assert!(d > 0, "ramanujan_sum: modulus must be positive");
    let g = gcd_conv(d as i64, n);
    let k = d / g;
    let mu = moebius(k);
    if mu == 0 {
        return 0;
    }
    let (phi_d, phi_k) = (euler_phi(d), euler_phi(k));
    debug_assert_eq!(phi_d % phi_k, 0, "φ(k) divides φ(d) whenever k | d");
    mu * (phi_d / phi_k) as i64
}
