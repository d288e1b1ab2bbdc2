//! The generalized Euler theorem and the product L(x, m) of shifted coprime
//! residues, with checks of the classical congruences it specializes to.
//!
//! For any a and m, stripping from m the common factors it shares with a
//! gives a pair (s, m_s) with a^(φ(m_s)+s) ≡ a^s (mod m). When gcd(a, m) = 1
//! the pair is (0, m) and the statement is Euler's theorem.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arithfun::phi;
use crate::factorint::{factor_trial, mod_pow_unchecked, mul_mod};

/// The reduction (s, m_s) produced by [`euler_gen`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerGenPair {
    pub s: u64,
    pub m_s: u64,
}

/// Repeatedly divides m by its gcd with a until the gcd is 1.
///
/// Starting from d = gcd(a, m) and m_s = m, each step sets m_s ← m_s/d,
/// d ← gcd(d, m_s) and counts one step in s.
pub fn euler_gen(a: u64, m: u64) -> EulerGenPair {
    let mut m_s = m.max(1);
    let mut d = a.gcd(&m_s);
    let mut s = 0;
    while d != 1 {
        m_s /= d;
        d = d.gcd(&m_s);
        s += 1;
    }
    EulerGenPair { s, m_s }
}

/// Whether a^(φ(m_s)+s) ≡ a^s (mod m) for the pair computed from (a, m).
pub fn verify_euler_gen(a: u64, m: u64) -> bool {
    let m = m.max(1);
    let pair = euler_gen(a, m);
    mod_pow_unchecked(a, phi(pair.m_s) + pair.s, m) == mod_pow_unchecked(a, pair.s, m)
}

/// Every r in 1..=m coprime to m, ascending. For m = 1 this is [1].
pub fn coprime_residues(m: u64) -> Vec<u64> {
    if m <= 1 {
        return vec![1];
    }
    (1..=m).filter(|r| r.gcd(&m) == 1).collect()
}

/// Membership in the set of moduli whose coprime residues multiply to −1:
/// 0, ±1, ±2, ±4, ±p^β and ±2p^β for an odd prime p and β ≥ 1.
pub fn in_set_a(m: i64) -> bool {
    let m = m.unsigned_abs();
    if matches!(m, 0 | 1 | 2 | 4) {
        return true;
    }
    let odd = if m % 2 == 0 { m / 2 } else { m };
    if odd % 2 == 0 || odd == 1 {
        return false;
    }
    factor_trial(odd).factors().len() == 1
}

/// Product of the coprime residues of m, reduced mod m. By Gauss's
/// generalization of Wilson's theorem this is m − 1 for m in the set A and
/// 1 otherwise. Negative m is treated as |m|.
pub fn gauss_product(m: i64) -> u64 {
    l_func(0, m)
}

/// L(x, m) = (x + C_1)(x + C_2)···(x + C_φ(m)) mod |m|, the C_i being the
/// coprime residues of m. Returns 0 for |m| = 1, the residue of the empty
/// product modulo 1.
pub fn l_func(x: i64, m: i64) -> u64 {
    let m = m.unsigned_abs().max(1);
    let shift = x.rem_euclid(m as i64) as u64;
    coprime_residues(m)
        .into_iter()
        .fold(1 % m, |acc, c| mul_mod(acc, (shift + c) % m, m))
}

/// The split of L(x, m): d is the part of m built from the primes that also
/// divide x, and m' = m/d. L(x, m) ≡ 0 (mod m') and L(x, m) ≡ ±1 (mod d),
/// with −1 exactly when m is in A.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LSplit {
    pub d: u64,
    pub m_prime: u64,
}

/// Computes the split of m with respect to x.
pub fn l_split(x: i64, m: u64) -> LSplit {
    let x = x.unsigned_abs();
    let d = factor_trial(m.max(1))
        .factors()
        .iter()
        .filter(|&&(p, _)| x % p == 0)
        .map(|&(p, a)| p.pow(a as u32))
        .product::<u64>();
    LSplit { d, m_prime: m.max(1) / d }
}

/// Wilson: (p − 1)! + 1 mod n. Zero exactly when n is prime, for n ≥ 2.
pub fn wilson_residue(n: u64) -> u64 {
    let f = (2..n).fold(1 % n, |acc, i| mul_mod(acc, i, n));
    (f + 1) % n
}

/// Moser: (p − 1)!·a^p + a mod p.
pub fn moser_residue(a: u64, p: u64) -> u64 {
    let f = (2..p).fold(1 % p, |acc, i| mul_mod(acc, i, p));
    (mul_mod(f, mod_pow_unchecked(a, p, p), p) + a % p) % p
}

/// Sierpinski: a^p + (p − 1)!·a mod p.
pub fn sierpinski_residue(a: u64, p: u64) -> u64 {
    let f = (2..p).fold(1 % p, |acc, i| mul_mod(acc, i, p));
    (mod_pow_unchecked(a, p, p) + mul_mod(f, a % p, p)) % p
}

/// (a^m − a)·(m − 1)! mod m. It vanishes for prime m by Fermat's theorem
/// and for composite m ≠ 4 because m divides (m − 1)!.
pub fn fermat_extension_residue(a: u64, m: u64) -> u64 {
    let f = (2..m).fold(1 % m, |acc, i| mul_mod(acc, i, m));
    let diff = (mod_pow_unchecked(a, m, m) + m - a % m) % m;
    mul_mod(diff, f, m)
}
