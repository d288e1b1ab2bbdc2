//! Primality tests: the η fixed-point test, four Wilson-type factorial
//! criteria, Miller–Rabin and Lucas–Lehmer.
//!
//! The factorial criteria never build a factorial; every product is reduced
//! modulo p as it is accumulated.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arithfun::{TableFn, ValueTable};
pub use crate::factorint::strong_probable_prime;
use crate::factorint::{factor_trial, mul_mod};

/// Outcome of a primality test. `Invalid` means the input is outside the
/// test's domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TestVerdict {
    Prime,
    Composite,
    Invalid,
}

impl TestVerdict {
    fn from_bool(prime: bool) -> Self {
        if prime {
            TestVerdict::Prime
        } else {
            TestVerdict::Composite
        }
    }

    /// 1 for prime, 0 for composite, −1 for invalid input.
    pub fn code(self) -> i32 {
        match self {
            TestVerdict::Prime => 1,
            TestVerdict::Composite => 0,
            TestVerdict::Invalid => -1,
        }
    }
}

impl fmt::Display for TestVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TestVerdict::Prime => "prime",
            TestVerdict::Composite => "composite",
            TestVerdict::Invalid => "invalid",
        })
    }
}

/// Default number of Miller–Rabin rounds.
pub const MR_ROUNDS: u32 = 25;

/// η fixed-point test: for n > 4, n is prime exactly when η(n) = n.
pub fn tp_eta(n: u64, table: &ValueTable) -> TestVerdict {
    if table.func() != TableFn::Eta {
        return TestVerdict::Invalid;
    }
    match (n, table.get(n)) {
        (_, None) => TestVerdict::Invalid,
        (1 | 4, _) => TestVerdict::Composite,
        (2 | 3, _) => TestVerdict::Prime,
        (_, Some(e)) => TestVerdict::from_bool(e == n),
    }
}

/// (m)! mod p, accumulated one factor at a time.
fn factorial_mod(m: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    for i in 2..=m {
        acc = mul_mod(acc, i % p, p);
        if acc == 0 {
            break;
        }
    }
    acc
}

/// Residue of a signed value modulo p.
fn signed_mod(v: i128, p: u64) -> u64 {
    v.rem_euclid(p as i128) as u64
}

/// The factorial criteria.
///
/// 1. (p−3)! ≡ (p−1)/2 (mod p), for p ≥ 3.
/// 2. (p−4)! ≡ (−1)^(⌊p/3⌋+1) · ⌊(p+1)/6⌋ (mod p), for p ≥ 5.
/// 3. (p−5)! ≡ r·h + (r²−1)/24 (mod p) with h = ⌊p/24⌋, r = p − 24h,
///    for p ≥ 5. The right side uses exact division when 24 | r² − 1 and
///    reports composite otherwise.
/// 4. With p + 1 = (k−1)!·h for the largest k ≥ 3 whose (k−1)! divides
///    p + 1: (p−k)! ≡ (−1)^(k+⌊p/h⌋+1) · h (mod p). Numbers with no such k
///    are composite, except p = 2.
pub fn csp(variant: u8, p: u64) -> TestVerdict {
    match variant {
        1 => {
            if p < 3 {
                return TestVerdict::Invalid;
            }
            let lhs = factorial_mod(p - 3, p);
            let rhs = signed_mod(((p - 1) / 2) as i128, p);
            // (p−1)/2 is only an integer for odd p; an even p fails Wilson anyway.
            TestVerdict::from_bool(p % 2 == 1 && lhs == rhs)
        }
        2 => {
            if p < 5 {
                return TestVerdict::Invalid;
            }
            let sign: i128 = if (p / 3 + 1) % 2 == 0 { 1 } else { -1 };
            let rhs = signed_mod(sign * ((p + 1) / 6) as i128, p);
            TestVerdict::from_bool(factorial_mod(p - 4, p) == rhs)
        }
        3 => {
            if p < 5 {
                return TestVerdict::Invalid;
            }
            let h = p / 24;
            let r = p - 24 * h;
            let sq = r * r - 1;
            if sq % 24 != 0 {
                return TestVerdict::Composite;
            }
            let rhs = signed_mod((r * h + sq / 24) as i128, p);
            TestVerdict::from_bool(factorial_mod(p - 5, p) == rhs)
        }
        4 => {
            if p < 2 {
                return TestVerdict::Invalid;
            }
            if p == 2 {
                return TestVerdict::Prime;
            }
            let mut found: Option<(u64, u64)> = None;
            let mut j = 3u64;
            let mut fact = 2u64; // (j − 1)!
            while fact <= p + 1 {
                if (p + 1) % fact == 0 {
                    found = Some(((p + 1) / fact, j));
                }
                j += 1;
                match fact.checked_mul(j - 1) {
                    Some(f) => fact = f,
                    None => break,
                }
            }
            let Some((h, k)) = found else {
                return TestVerdict::Composite;
            };
            if k > p {
                return TestVerdict::Composite;
            }
            let exponent = k + p / h + 1;
            let sign: i128 = if exponent % 2 == 0 { 1 } else { -1 };
            let rhs = signed_mod(sign * h as i128, p);
            TestVerdict::from_bool(factorial_mod(p - k, p) == rhs)
        }
        _ => TestVerdict::Invalid,
    }
}

/// Miller–Rabin with `rounds` random odd bases.
///
/// Bases are 3 + 2·⌊u·√n/2⌋ for u uniform in [0, 1) drawn from a ChaCha8
/// generator seeded with `seed`, so a run is reproducible. A base above
/// n − 2 is folded back to 2 + (b mod (n − 3)). Composite answers are
/// certain; prime answers are probable.
pub fn miller_rabin(n: u64, rounds: u32, seed: u64) -> TestVerdict {
    if n < 3 || n % 2 == 0 {
        return TestVerdict::Invalid;
    }
    if n == 3 {
        return TestVerdict::Prime;
    }
    let mut s = 0u32;
    let mut t = n - 1;
    while t % 2 == 0 {
        s += 1;
        t /= 2;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let half_root = (n as f64).sqrt() / 2.0;
    for _ in 0..rounds {
        let u: f64 = rng.gen();
        let mut b = 3 + 2 * (u * half_root).floor() as u64;
        if b > n - 2 {
            b = 2 + b % (n - 3);
        }
        if !strong_probable_prime(n, b, s, t) {
            return TestVerdict::Composite;
        }
    }
    TestVerdict::Prime
}

/// Lucas–Lehmer test of the Mersenne number 2^n − 1 for prime n ≥ 3.
/// Returns the Mersenne number with the verdict; a composite exponent is
/// outside the test's domain and reports `Invalid`.
pub fn lucas_lehmer(n: u64) -> (BigUint, TestVerdict) {
    if n < 3 {
        return (BigUint::zero(), TestVerdict::Invalid);
    }
    let m = (BigUint::one() << n as usize) - BigUint::one();
    let f = factor_trial(n);
    if f.factors() != [(n, 1)] {
        return (m, TestVerdict::Invalid);
    }
    let two = BigUint::from(2u32);
    let mut s = BigUint::from(4u32);
    for _ in 0..n - 2 {
        // s² − 2 mod M, kept nonnegative.
        s = (&s * &s + &m - &two) % &m;
    }
    let verdict = TestVerdict::from_bool(s.is_zero());
    (m, verdict)
}

/// Trial-division primality, used as a reference.
pub fn is_prime_trial(n: u64) -> bool {
    n >= 2 && factor_trial(n).factors() == [(n, 1)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eta::eta_table;

    #[test]
    fn eta_test_edges() {
        let t = eta_table(100).unwrap();
        assert_eq!(tp_eta(1, &t), TestVerdict::Composite);
        assert_eq!(tp_eta(4, &t), TestVerdict::Composite);
        assert_eq!(tp_eta(2, &t), TestVerdict::Prime);
        assert_eq!(tp_eta(3, &t), TestVerdict::Prime);
        assert_eq!(tp_eta(97, &t), TestVerdict::Prime);
        assert_eq!(tp_eta(0, &t), TestVerdict::Invalid);
        assert_eq!(tp_eta(101, &t), TestVerdict::Invalid);
    }

    #[test]
    fn printed_verdicts() {
        for v in 1..=3 {
            let got: Vec<i32> = [61, 87, 127, 1057].iter().map(|&p| csp(v, p).code()).collect();
            assert_eq!(got, vec![1, 0, 1, 0], "criterion {v}");
        }
        let got: Vec<i32> = [47, 147, 149, 150].iter().map(|&p| csp(4, p).code()).collect();
        assert_eq!(got, vec![1, 0, 1, 0]);
        assert_eq!(csp(1, 2), TestVerdict::Invalid);
        assert_eq!(csp(2, 4), TestVerdict::Invalid);
        assert_eq!(csp(4, 1), TestVerdict::Invalid);
        assert_eq!(csp(4, 2), TestVerdict::Prime);
        let sum: i32 = (3..=99u64).step_by(2).map(|p| csp(4, p).code()).sum();
        assert_eq!(sum, 24);
    }

    #[test]
    fn miller_rabin_runs() {
        assert_eq!(miller_rabin((1 << 47) - 1, MR_ROUNDS, 0), TestVerdict::Composite);
        assert_eq!(miller_rabin((1 << 19) - 1, MR_ROUNDS, 0), TestVerdict::Prime);
        assert_eq!(miller_rabin(9, MR_ROUNDS, 0), TestVerdict::Composite);
        assert_eq!(miller_rabin(3, MR_ROUNDS, 0), TestVerdict::Prime);
        assert_eq!(miller_rabin(5, MR_ROUNDS, 7), TestVerdict::Prime);
        assert_eq!(miller_rabin(10, MR_ROUNDS, 0), TestVerdict::Invalid);
        assert_eq!(miller_rabin(1, MR_ROUNDS, 0), TestVerdict::Invalid);
    }

    #[test]
    fn mersenne() {
        assert_eq!(lucas_lehmer(13), (BigUint::from(8191u32), TestVerdict::Prime));
        assert_eq!(lucas_lehmer(19), (BigUint::from(524287u32), TestVerdict::Prime));
        assert_eq!(lucas_lehmer(11), (BigUint::from(2047u32), TestVerdict::Composite));
        assert_eq!(lucas_lehmer(23).1, TestVerdict::Composite);
        assert_eq!(lucas_lehmer(15).1, TestVerdict::Invalid);
    }
}
