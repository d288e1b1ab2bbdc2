//! Divisor-power sums σ_k, the aliquot sum s, Euler's totient φ and
//! k-hyperperfect numbers, with dense table generation for all of them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, range, Error, Result};
use crate::factorint::{factor_trial, smallest_prime_factors};

/// The functions that can be tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableFn {
    Eta,
    Sigma0,
    Sigma1,
    Sigma2,
    S,
    Phi,
}

impl TableFn {
    /// Every tabulated function, in a fixed order.
    pub const ALL: [TableFn; 6] = [
        TableFn::Eta,
        TableFn::Sigma0,
        TableFn::Sigma1,
        TableFn::Sigma2,
        TableFn::S,
        TableFn::Phi,
    ];

    /// Lowercase name, also the stem of the table file.
    pub fn name(self) -> &'static str {
        match self {
            TableFn::Eta => "eta",
            TableFn::Sigma0 => "sigma0",
            TableFn::Sigma1 => "sigma1",
            TableFn::Sigma2 => "sigma2",
            TableFn::S => "s",
            TableFn::Phi => "phi",
        }
    }
}

impl fmt::Display for TableFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableFn::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| domain(format!("unknown table function `{s}`")))
    }
}

/// Dense values f(1), ..., f(N) of one arithmetic function.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueTable {
    func: TableFn,
    values: Vec<u64>,
}

impl ValueTable {
    /// Wraps raw values; `values[0]` is f(1).
    pub fn from_values(func: TableFn, values: Vec<u64>) -> Self {
        ValueTable { func, values }
    }

    /// Which function the table holds.
    pub fn func(&self) -> TableFn {
        self.func
    }

    /// The table size N.
    pub fn len(&self) -> u64 {
        self.values.len() as u64
    }

    /// True for N = 0.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// f(n) for 1 ≤ n ≤ N, `None` otherwise.
    pub fn get(&self, n: u64) -> Option<u64> {
        if n == 0 {
            return None;
        }
        self.values.get((n - 1) as usize).copied()
    }

    /// f(n), or a range error naming the table.
    pub fn try_get(&self, n: u64) -> Result<u64> {
        self.get(n).ok_or_else(|| {
            range(format!(
                "index {n} outside the {} table of size {}",
                self.func,
                self.len()
            ))
        })
    }

    /// f(n) without the `Option`; panics outside 1..=N.
    #[inline]
    pub fn at(&self, n: u64) -> u64 {
        self.values[(n - 1) as usize]
    }

    /// The values, f(1) first.
    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

/// σ_k(n), the sum of the k-th powers of the divisors of n.
pub fn sigma_k(k: u32, n: u64) -> Result<BigUint> {
    if n == 0 {
        return Err(domain("sigma_k needs n >= 1"));
    }
    let f = factor_trial(n);
    let mut acc = BigUint::one();
    for &(p, a) in f.factors() {
        if k == 0 {
            acc *= BigUint::from(a + 1);
        } else {
            // (p^((a+1)k) − 1) / (p^k − 1)
            let pk = BigUint::from(p).pow(k);
            let num = pk.pow((a + 1) as u32) - BigUint::one();
            acc *= num / (pk - BigUint::one());
        }
    }
    Ok(acc)
}

/// σ_k(n) as a `u64`, when it fits.
pub fn sigma_k_u64(k: u32, n: u64) -> Option<u64> {
    sigma_k(k, n).ok()?.to_u64()
}

/// s(n) = σ(n) − n, the sum of the proper divisors.
pub fn s_val(n: u64) -> Result<u64> {
    let s = sigma_k(1, n)? - BigUint::from(n);
    s.to_u64()
        .ok_or_else(|| range(format!("s({n}) does not fit in 64 bits")))
}

/// Euler's totient, with φ(0) = 1.
pub fn phi(n: u64) -> u64 {
    if n == 0 {
        return 1;
    }
    factor_trial(n)
        .factors()
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// The k ≥ 1 with n = 1 + k·(σ(n) − n − 1), if one exists.
pub fn hyperperfect_k(n: u64) -> Result<Option<u64>> {
    if n < 2 {
        return Err(domain("hyperperfect_k needs n >= 2"));
    }
    let sigma = sigma_k(1, n)?;
    let denom = sigma - BigUint::from(n) - BigUint::one();
    if denom.is_zero() {
        return Ok(None);
    }
    let num = BigUint::from(n - 1);
    if (&num % &denom).is_zero() {
        Ok((num / denom).to_u64().filter(|&k| k >= 1))
    } else {
        Ok(None)
    }
}

/// Dense table of f(1..=n).
///
/// Values are built from a smallest-prime-factor sieve: writing
/// n = p^a · m with p the least prime factor, f(n) = f(p^a) · f(m) for the
/// multiplicative functions, and η(n) = max(η(p^a), η(m)).
pub fn gen_table(func: TableFn, n: u64) -> Result<ValueTable> {
    let size = usize::try_from(n).map_err(|_| domain("table size exceeds address space"))?;
    if func == TableFn::S {
        let sigma = gen_table(TableFn::Sigma1, n)?;
        let values = sigma
            .values
            .iter()
            .zip(1u64..)
            .map(|(s, i)| s - i)
            .collect();
        return Ok(ValueTable::from_values(func, values));
    }
    let spf = smallest_prime_factors(size);
    let mut values = vec![0u64; size + 1];
    if size >= 1 {
        values[1] = 1;
    }
    for i in 2..=size {
        let p = spf[i] as u64;
        let mut m = i as u64;
        let mut a = 0u64;
        while m % p == 0 {
            m /= p;
            a += 1;
        }
        let prime_power = match func {
            TableFn::Eta => crate::eta::eta_prime_power(p, a) as u64,
            TableFn::Sigma0 => a + 1,
            TableFn::Sigma1 => geometric(p, a),
            TableFn::Sigma2 => geometric(p * p, a),
            TableFn::Phi => p.pow(a as u32 - 1) * (p - 1),
            TableFn::S => unreachable!("handled above"),
        };
        let rest = values[m as usize];
        values[i] = if func == TableFn::Eta {
            prime_power.max(rest)
        } else {
            prime_power * rest
        };
    }
    values.remove(0);
    Ok(ValueTable::from_values(func, values))
}

/// 1 + q + q² + ... + q^a.
fn geometric(q: u64, a: u64) -> u64 {
    let mut sum = 1u64;
    let mut term = 1u64;
    for _ in 0..a {
        term *= q;
        sum += term;
    }
    sum
}
