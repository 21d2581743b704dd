//! Exact big-integer and big-rational arithmetic shared by every module:
//! Bernoulli numbers, divisor sums and Bezout coefficients.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

static BERNOULLI_CACHE: Mutex<Vec<BigRational>> = Mutex::new(Vec::new());

/// The m-th Bernoulli number, in the convention with `B_1 = -1/2`
/// (so `B_6 = 1/42` and `B_12 = -691/2730`).
///
/// Computed by the recurrence `sum_{k=0}^{m} C(m+1, k) B_k = 0` and memoized.
pub fn bernoulli(m: usize) -> BigRational {
    let mut cache = BERNOULLI_CACHE.lock().unwrap();
    extend_bernoulli(&mut cache, m);
    cache[m].clone()
}

fn extend_bernoulli(cache: &mut Vec<BigRational>, m: usize) {
    if cache.is_empty() {
        cache.push(BigRational::one());
    }
    while cache.len() <= m {
        let r = cache.len(); // computing B_r
        if r % 2 == 1 && r > 1 {
            cache.push(BigRational::zero());
            continue;
        }
        // C(r+1, r) B_r = -sum_{k=0}^{r-1} C(r+1, k) B_k
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one(); // C(r+1, 0)
        for (k, b) in cache.iter().enumerate() {
            acc += b * BigRational::from_integer(binom.clone());
            // C(r+1, k+1) = C(r+1, k) * (r+1-k) / (k+1)
            binom = binom * BigInt::from(r + 1 - k) / BigInt::from(k + 1);
        }
        // binom is now C(r+1, r) = r+1
        cache.push(-acc / BigRational::from_integer(BigInt::from(r + 1)));
    }
}

/// Divisor power sum `sigma_k(n) = sum_{d | n} d^k`.
pub fn divisor_sum(k: u32, n: u64) -> BigInt {
    assert!(k >= 1 && n >= 1, "divisor_sum requires k >= 1, n >= 1");
    let mut total = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            total += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                total += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    total
}

/// Bezout coefficients `(c, d)` with `c*k + d*j = 1` for coprime `k`, `j`.
///
/// The choice is canonical: `|c|` minimal (so `|c| < j` when `j > 1`),
/// ties broken toward `c >= 0`.
pub fn bezout(k: &BigInt, j: &BigInt) -> Result<(BigInt, BigInt)> {
    let g = k.extended_gcd(j);
    if !g.gcd.is_one() {
        return Err(Error::invalid(format!(
            "bezout requires gcd({k}, {j}) = 1, found gcd {}",
            g.gcd
        )));
    }
    let (mut c, mut d) = (g.x, g.y);
    if j.abs() > BigInt::one() {
        // Normalize c into minimal absolute value modulo j.
        let ja = j.abs();
        c = c.mod_floor(&ja);
        let alt = &c - &ja;
        if alt.abs() < c.abs() || (alt.abs() == c.abs() && alt.is_positive()) {
            c = alt;
        }
        d = (BigInt::one() - &c * k) / j;
    }
    debug_assert!((&c * k + &d * j).is_one());
    Ok((c, d))
}

/// `(|numerator|, denominator)` of a rational in lowest terms.
/// Returns `(0, 1)` for zero.
pub fn lowest_terms_num_denom(r: &BigRational) -> (BigInt, BigInt) {
    (r.numer().abs(), r.denom().clone())
}

/// `C(n, k)` as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Trial-division factorization; adequate for the constants in this crate.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2u32);
    while &p * &p <= n {
        if (&n % &p).is_zero() {
            let mut e = 0u32;
            while (&n % &p).is_zero() {
                n /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}
