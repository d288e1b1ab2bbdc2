//! The Smarandache function η(n), the least m such that n divides m!.
//!
//! For a prime power, Kempner's algorithm writes the exponent α in the
//! generalized base with place values a_i = (p^i − 1)/(p − 1) and reads the
//! digits back in ordinary base p, scaled by p. For general n, η(n) is the
//! maximum over the prime-power parts of its factorization.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::arithfun::{gen_table, TableFn, ValueTable};
use crate::error::{domain, range, Result};
use crate::factorint::{factor_trial, factorize, Factorization};
use crate::sieves::PrimeTable;

/// Largest k accepted by [`inverse_count`].
pub const INVERSE_COUNT_MAX: u64 = 100;

/// An exponent written in the generalized base of a prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralizedBaseDigits {
    pub p: u64,
    /// Digit κ_i multiplies `scale[i]`; the most significant digit is last.
    pub digits: Vec<u64>,
    /// Place values a_1 = 1, a_2 = p + 1, a_3 = p² + p + 1, ...
    pub scale: Vec<u128>,
}

impl GeneralizedBaseDigits {
    /// Greedy expansion of `alpha` ≥ 1. Every digit lies in 0..=p, and only
    /// the leading digit can reach p.
    pub fn expand(p: u64, alpha: u64) -> Self {
        let p128 = p as u128;
        let mut scale = vec![1u128];
        while let Some(next) = scale.last().and_then(|a| a.checked_mul(p128)).map(|a| a + 1) {
            if next > alpha as u128 {
                break;
            }
            scale.push(next);
        }
        let mut rest = alpha as u128;
        let mut digits = vec![0u64; scale.len()];
        for i in (0..scale.len()).rev() {
            digits[i] = (rest / scale[i]) as u64;
            rest %= scale[i];
        }
        GeneralizedBaseDigits { p, digits, scale }
    }

    /// Σ κ_i a_i, which reconstructs the exponent.
    pub fn value(&self) -> u128 {
        self.digits
            .iter()
            .zip(&self.scale)
            .map(|(&k, &a)| k as u128 * a)
            .sum()
    }

    /// The digits read as an ordinary base-p numeral.
    pub fn read_in_base_p(&self) -> u128 {
        self.digits
            .iter()
            .rev()
            .fold(0u128, |acc, &k| acc * self.p as u128 + k as u128)
    }

    /// Σ κ_i.
    pub fn digit_sum(&self) -> u128 {
        self.digits.iter().map(|&k| k as u128).sum()
    }
}

/// η(p^α) for a prime p and α ≥ 1, computed as p times the generalized-base
/// digits of α read in base p. The identity with (p − 1)α + Σκ_i is checked
/// in debug builds.
pub fn eta_prime_power(p: u64, alpha: u64) -> u128 {
    if alpha == 0 {
        return 1;
    }
    let d = GeneralizedBaseDigits::expand(p, alpha);
    let kempner = p as u128 * d.read_in_base_p();
    debug_assert_eq!(kempner, (p as u128 - 1) * alpha as u128 + d.digit_sum());
    kempner
}

/// η(n) via the table's trial division. η(1) = 1.
pub fn eta(n: u64, table: &PrimeTable) -> Result<u64> {
    match n {
        0 => Err(domain("eta needs n >= 1")),
        1 => Ok(1),
        _ => Ok(eta_of(&factorize(n, table)?)),
    }
}

/// η(n) with table-free trial division. Intended for moderate n.
pub fn eta_u64(n: u64) -> u64 {
    if n <= 1 {
        return 1;
    }
    eta_of(&factor_trial(n))
}

fn eta_of(f: &Factorization) -> u64 {
    f.factors()
        .iter()
        .map(|&(p, a)| eta_prime_power(p, a) as u64)
        .max()
        .unwrap_or(1)
}

/// η of a number given only by its factorization, which may be far too
/// large to materialize.
pub fn eta_factored(f: &Factorization) -> Result<u128> {
    f.factors()
        .iter()
        .map(|&(p, a)| eta_prime_power(p, a))
        .max()
        .ok_or_else(|| domain("eta_factored needs at least one prime power"))
}

/// Dense η(1..=n).
pub fn eta_table(n: u64) -> Result<ValueTable> {
    if n == 0 {
        return Err(domain("eta_table needs N >= 1"));
    }
    gen_table(TableFn::Eta, n)
}

/// For each k whose row is complete within the table (k! ≤ N), every n ≤ N
/// with η(n) = k, ascending.
pub fn eta_inverse_rows(n: u64, table: &ValueTable) -> Result<BTreeMap<u64, Vec<u64>>> {
    if n < 2 {
        return Err(domain("eta_inverse_rows needs N >= 2"));
    }
    if table.func() != TableFn::Eta || table.len() < n {
        return Err(range(format!("an eta table of size >= {n} is required")));
    }
    let mut complete = 1u64;
    let mut fact = 1u64;
    while let Some(next) = fact.checked_mul(complete + 1) {
        if next > n {
            break;
        }
        complete += 1;
        fact = next;
    }
    let mut rows: BTreeMap<u64, Vec<u64>> = (2..=complete).map(|k| (k, Vec::new())).collect();
    for i in 2..=n {
        if let Some(row) = rows.get_mut(&table.at(i)) {
            row.push(i);
        }
    }
    Ok(rows)
}

/// Exponent of the prime p in n! (Legendre's formula).
pub fn legendre(n: u64, p: u64) -> u64 {
    let mut e = 0;
    let mut q = n;
    while q > 0 {
        q /= p;
        e += q;
    }
    e
}

/// The least m with η(m) = n: the minimum over primes p | n of
/// p^(e_p((n−1)!) + 1).
pub fn smallest_inverse(n: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(domain("smallest_inverse needs n >= 2"));
    }
    factor_trial(n)
        .factors()
        .iter()
        .map(|&(p, _)| BigUint::from(p).pow((legendre(n - 1, p) + 1) as u32))
        .min()
        .ok_or_else(|| domain("n has no prime factor"))
}

/// Number of m with η(m) = k, equal to σ0(k!) − σ0((k−1)!).
pub fn inverse_count(k: u64) -> Result<u128> {
    if k < 2 {
        return Err(domain("inverse_count needs k >= 2"));
    }
    if k > INVERSE_COUNT_MAX {
        return Err(range(format!(
            "inverse_count supports k <= {INVERSE_COUNT_MAX}, got {k}"
        )));
    }
    let primes = PrimeTable::new(k.max(2))?;
    let divisors_of_factorial = |m: u64| -> u128 {
        primes
            .primes()
            .iter()
            .map(|&p| legendre(m, p) as u128 + 1)
            .product()
    };
    Ok(divisors_of_factorial(k) - divisors_of_factorial(k - 1))
}

/// π(n) from the η table: −1 + Σ_{k=2}^{n} ⌊η(k)/k⌋ for n ≥ 4.
pub fn pi_via_eta(n: u64, table: &ValueTable) -> Result<u64> {
    if n == 0 || n > table.len() {
        return Err(range(format!(
            "n = {n} outside the eta table of size {}",
            table.len()
        )));
    }
    Ok(match n {
        1 => 0,
        2 => 1,
        3 => 2,
        _ => (2..=n).map(|k| table.at(k) / k).sum::<u64>() - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const PREFIX: [u64; 18] = [1, 2, 3, 4, 5, 3, 7, 4, 6, 5, 11, 4, 13, 7, 5, 6, 17, 6];

    #[test]
    fn prime_powers() {
        assert_eq!(eta_prime_power(7, 1), 7);
        assert_eq!(eta_prime_power(5, 6), 25);
        assert_eq!(eta_prime_power(3, 9), 21);
        let d = GeneralizedBaseDigits::expand(3, 9);
        assert_eq!(d.digits, vec![1, 2]);
        assert_eq!(d.value(), 9);
    }

    #[test]
    fn printed_prefix_and_factorials() {
        let t = eta_table(18).unwrap();
        assert_eq!(t.values(), &PREFIX);
        let primes = PrimeTable::new(2000).unwrap();
        let mut fact = 1u64;
        for n in 1..=10u64 {
            fact *= n;
            if n >= 5 {
                assert_eq!(eta(fact, &primes).unwrap(), n);
            }
        }
    }

    #[test]
    fn huge_inputs() {
        let f = |pairs: &[(u64, u64)]| Factorization::from_pairs(pairs.iter().copied()).unwrap();
        assert_eq!(eta_factored(&f(&[(2, 12), (7, 13), (11, 23)])).unwrap(), 242);
        assert_eq!(eta_factored(&f(&[(3, 33), (5, 55), (7, 51), (11, 11)])).unwrap(), 315);
        assert_eq!(eta_factored(&f(&[(2, 1000), (5, 1000)])).unwrap(), 4005);
        assert!(eta_factored(&Factorization::default()).is_err());
    }

    #[test]
    fn inverses() {
        let t = eta_table(5040).unwrap();
        let rows = eta_inverse_rows(5040, &t).unwrap();
        assert_eq!(rows[&2], vec![2]);
        assert_eq!(rows[&5], vec![5, 10, 15, 20, 30, 40, 60, 120]);
        assert_eq!(rows[&7].len(), 30);
        assert_eq!(*rows[&7].last().unwrap(), 5040);
        let small: Vec<u64> = (2..=12)
            .map(|n| u64::try_from(smallest_inverse(n).unwrap()).unwrap())
            .collect();
        assert_eq!(small, vec![2, 3, 4, 5, 9, 7, 32, 27, 25, 11, 243]);
        let counts: Vec<u128> = (2..=10).map(|k| inverse_count(k).unwrap()).collect();
        assert_eq!(counts, vec![1, 2, 4, 8, 14, 30, 36, 64, 110]);
    }

    #[test]
    fn prime_count_formula() {
        let t = eta_table(1000).unwrap();
        assert_eq!(pi_via_eta(1, &t).unwrap(), 0);
        assert_eq!(pi_via_eta(10, &t).unwrap(), 4);
        assert_eq!(pi_via_eta(1000, &t).unwrap(), 168);
        assert!(pi_via_eta(1001, &t).is_err());
    }
}
