//! Searches that do not fit the equation registry: unit fraction
//! decompositions of 4/n, primes whose digit reversal sum is prime, and
//! narcissistic numbers.

use crate::error::{Error, Result};
use crate::factorint::is_prime_u64;

/// Largest denominator that reproduces the published decomposition lists
/// for n = 2..13.
pub const ERDOS_STRAUS_CAP: u64 = 100;

/// All triples x ≤ y ≤ z ≤ cap with 4/n = 1/x + 1/y + 1/z.
///
/// For each x and y the last denominator is forced:
/// z = n·x·y / (4·x·y − n·(x + y)), so the work is quadratic in the cap.
pub fn erdos_straus(n: u64, cap: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    let n = n as u128;
    for x in 1..=cap as u128 {
        // 1/x ≥ 4/(3n) is needed for the two remaining terms to fit.
        if 4 * x > 3 * n {
            break;
        }
        for y in x..=cap as u128 {
            let den = 4 * x * y;
            let sub = n * (x + y);
            if den <= sub {
                continue;
            }
            let num = n * x * y;
            let d = den - sub;
            if num % d == 0 {
                let z = num / d;
                if z >= y && z <= cap as u128 {
                    out.push((x as u64, y as u64, z as u64));
                }
            }
        }
    }
    out
}

/// Digits of n reversed in base 10, so 229 becomes 922.
pub fn reverse_digits(mut n: u64) -> u128 {
    let mut r = 0u128;
    while n > 0 {
        r = r * 10 + (n % 10) as u128;
        n /= 10;
    }
    r
}

/// Whether p plus its decimal reversal is prime.
pub fn has_229_property(p: u64) -> bool {
    let sum = p as u128 + reverse_digits(p);
    u64::try_from(sum).map(is_prime_u64).unwrap_or(false)
}

/// All numbers with exactly `len` digits in `base` that equal the sum of
/// the len-th powers of their digits, in increasing order.
///
/// The sum depends only on the multiset of digits, so each nondecreasing
/// digit sequence is tried once and its power sum is checked for carrying
/// the same digits.
pub fn narcissistic(base: u64, len: u32) -> Result<Vec<u128>> {
    if base < 2 || len == 0 {
        return Err(Error::Domain("narcissistic numbers need base ≥ 2 and length ≥ 1".into()));
    }
    let b = base as u128;
    let hi = b
        .checked_pow(len)
        .ok_or_else(|| Error::Capacity(format!("{base}^{len} does not fit in 128 bits")))?;
    let lo = b.pow(len - 1);
    let powers: Vec<u128> = (0..b).map(|d| d.pow(len)).collect();
    // len·(base−1)^len bounds every power sum.
    (len as u128)
        .checked_mul(powers[b as usize - 1])
        .ok_or_else(|| Error::Capacity("digit power sums overflow 128 bits".into()))?;
    let mut counts = vec![0u32; base as usize];
    let mut out = Vec::new();
    walk(0, len, 0, &powers, &mut counts, lo, hi, &mut out);
    out.sort_unstable();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn walk(
    digit: usize,
    left: u32,
    sum: u128,
    powers: &[u128],
    counts: &mut Vec<u32>,
    lo: u128,
    hi: u128,
    out: &mut Vec<u128>,
) {
    if sum >= hi {
        return;
    }
    if digit + 1 == powers.len() {
        counts[digit] = left;
        let total = sum + left as u128 * powers[digit];
        if total >= lo && total < hi && same_digits(total, powers.len() as u128, counts) {
            out.push(total);
        }
        counts[digit] = 0;
        return;
    }
    for c in 0..=left {
        counts[digit] = c;
        walk(digit + 1, left - c, sum + c as u128 * powers[digit], powers, counts, lo, hi, out);
    }
    counts[digit] = 0;
}

fn same_digits(mut n: u128, base: u128, counts: &[u32]) -> bool {
    let mut seen = vec![0u32; counts.len()];
    while n > 0 {
        seen[(n % base) as usize] += 1;
        n /= base;
    }
    seen == counts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_decompositions() {
        assert_eq!(erdos_straus(2, ERDOS_STRAUS_CAP), vec![(1, 2, 2)]);
        assert_eq!(erdos_straus(5, ERDOS_STRAUS_CAP), vec![(2, 4, 20), (2, 5, 10)]);
        assert_eq!(erdos_straus(13, ERDOS_STRAUS_CAP), vec![(4, 26, 52)]);
    }

    #[test]
    fn reversal_sums() {
        assert!(has_229_property(229));
        assert!(has_229_property(239) && has_229_property(241) && has_229_property(257));
        assert!(!has_229_property(2));
        assert!(!has_229_property(223));
    }

    #[test]
    fn small_narcissistic_sets() {
        assert_eq!(narcissistic(3, 2).unwrap(), vec![5, 8]);
        let b4 = narcissistic(4, 3).unwrap();
        assert_eq!(b4.len(), 6);
        assert!(b4.contains(&28) && b4.contains(&62));
        assert_eq!(narcissistic(10, 1).unwrap(), (1..=9).collect::<Vec<_>>());
        assert_eq!(narcissistic(10, 3).unwrap(), vec![153, 370, 371, 407]);
        assert!(narcissistic(1, 3).is_err());
    }
}
