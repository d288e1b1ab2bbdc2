//! Prime counting over a [`PrimeTable`], explicit lower and upper bounds for
//! π(n), and primality by bisection.

use serde::{Deserialize, Serialize};

use crate::error::{domain, range, Result};
use crate::sieves::PrimeTable;

/// Integer bounds with `lower < π(n) < upper` for every odd n ≥ 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiBounds {
    pub lower: u64,
    pub upper: u64,
}

/// Number of primes ≤ `x`.
pub fn pi_count(x: u64, table: &PrimeTable) -> Result<u64> {
    if x > table.limit() {
        return Err(range(format!(
            "x = {x} exceeds the sieve limit {}",
            table.limit()
        )));
    }
    Ok(table.primes().partition_point(|&p| p <= x) as u64)
}

/// Lower and upper bounds for π(n) derived from the Rosser–Schoenfeld
/// inequalities
///
/// x/ln x · (1 + 1/(2 ln x)) < π(x) < x/ln x · (1 + 3/(2 ln x)).
///
/// The lower bound is floored and lowered by 2 below 11 and by 1 up to 39,
/// which makes it strict for every odd n ≥ 3. The upper bound is the ceiling
/// of the right-hand side.
pub fn pi_bounds(n: u64) -> Result<PiBounds> {
    if n < 3 {
        return Err(domain(format!("bounds need n >= 3, got {n}")));
    }
    let x = n as f64;
    let ln = x.ln();
    let base = x / ln;
    let f = (base * (1.0 + 1.0 / (2.0 * ln))).floor() as u64;
    let lower = match n {
        0..=10 => f.saturating_sub(2),
        11..=39 => f.saturating_sub(1),
        _ => f,
    };
    let upper = (base * (1.0 + 3.0 / (2.0 * ln))).ceil() as u64;
    Ok(PiBounds { lower, upper })
}

/// Worst-case number of bisection steps needed to locate an odd `n` between
/// the bounds: ⌈log₂(upper − lower)⌉.
pub fn nt_tests(n: u64) -> Result<u32> {
    if n < 3 || n % 2 == 0 {
        return Err(domain(format!("test count needs an odd n >= 3, got {n}")));
    }
    let b = pi_bounds(n)?;
    Ok(ceil_log2(b.upper - b.lower))
}

fn ceil_log2(d: u64) -> u32 {
    if d <= 1 {
        0
    } else {
        64 - (d - 1).leading_zeros()
    }
}

/// Primality by binary search in the prime table.
pub fn bisect_is_prime(n: u64, table: &PrimeTable) -> Result<bool> {
    if n > table.limit() {
        return Err(range(format!(
            "n = {n} exceeds the sieve limit {}",
            table.limit()
        )));
    }
    let primes = table.primes();
    let (mut lo, mut hi) = (0usize, primes.len());
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match primes[mid].cmp(&n) {
            std::cmp::Ordering::Equal => return Ok(true),
            std::cmp::Ordering::Less => lo = mid + 1,
            std::cmp::Ordering::Greater => hi = mid,
        }
    }
    Ok(false)
}
