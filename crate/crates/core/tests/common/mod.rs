//! Reference implementations used as oracles. They favour obviousness over
//! speed and share no code with the library.

#![allow(dead_code)]

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn primes_upto(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| is_prime(k)).collect()
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn sigma(k: u32, n: u64) -> u128 {
    divisors(n).iter().map(|&d| (d as u128).pow(k)).sum()
}

pub fn phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

/// Least m with n | m!, by accumulating m! mod n.
pub fn eta(n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let mut f = 1u128;
    let mut m = 0u64;
    loop {
        m += 1;
        f = f * m as u128 % n as u128;
        if f == 0 {
            return m;
        }
    }
}

/// Prime counting by trial division.
pub fn pi(n: u64) -> u64 {
    (2..=n).filter(|&k| is_prime(k)).count() as u64
}
