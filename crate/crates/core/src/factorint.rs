//! Integer factorization and the kernels it relies on.
//!
//! Trial division over a [`PrimeTable`] gives complete factorizations. The
//! special-purpose methods (Fermat, Pollard rho, Pollard p−1 and the
//! Pollard–Strassen block method) look for a single nontrivial divisor.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint};
use num_integer::{Integer, Roots};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::sieves::PrimeTable;

/// Prime factorization as ascending `(prime, exponent)` pairs.
///
/// The factorization of 1 is the empty list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factorization {
    factors: Vec<(u64, u64)>,
}

impl Factorization {
    /// Builds a factorization from pairs, sorting them and merging repeated
    /// primes. Primality of the entries is the caller's responsibility.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        let mut factors: Vec<(u64, u64)> = Vec::new();
        let mut raw: Vec<(u64, u64)> = pairs.into_iter().collect();
        raw.sort_unstable();
        for (p, a) in raw {
            if p < 2 {
                return Err(domain(format!("{p} is not a prime base")));
            }
            if a == 0 {
                continue;
            }
            match factors.last_mut() {
                Some((q, b)) if *q == p => *b += a,
                _ => factors.push((p, a)),
            }
        }
        Ok(Factorization { factors })
    }

    /// The `(prime, exponent)` pairs in ascending prime order.
    pub fn factors(&self) -> &[(u64, u64)] {
        &self.factors
    }

    /// True for the factorization of 1.
    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiplies the factors back together.
    pub fn value(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, &(p, a)| {
                acc * BigUint::from(p).pow(a as u32)
            })
    }

    /// The product as a `u64`, when it fits.
    pub fn value_u64(&self) -> Option<u64> {
        self.factors.iter().try_fold(1u64, |acc, &(p, a)| {
            let pa = p.checked_pow(u32::try_from(a).ok()?)?;
            acc.checked_mul(pa)
        })
    }
}

impl fmt::Display for Factorization {
    /// `p^a * q^b`, with exponent 1 written out.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, a)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{p}^{a}")?;
        }
        Ok(())
    }
}

/// Complete factorization by trial division over the table's primes.
///
/// Once the remaining cofactor is smaller than the square of the next trial
/// prime it is itself prime, so the scan stops there. Inputs above the
/// square of the table's largest prime are rejected because the scan could
/// no longer certify the last cofactor.
pub fn factorize(m: u64, table: &PrimeTable) -> Result<Factorization> {
    if m < 2 {
        return Err(domain(format!("factorize needs m >= 2, got {m}")));
    }
    let last = table.last().unwrap_or(1) as u128;
    if m as u128 > last * last {
        return Err(Error::Capacity(format!(
            "m = {m} is larger than the square of the last prime {last}"
        )));
    }
    let mut rest = m;
    let mut factors = Vec::new();
    for &p in table.primes() {
        if (p as u128) * (p as u128) > rest as u128 {
            break;
        }
        if rest % p == 0 {
            let mut a = 0;
            while rest % p == 0 {
                rest /= p;
                a += 1;
            }
            factors.push((p, a));
        }
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

/// Complete factorization by trial division by 2 and odd numbers, without a
/// table. Suitable for scalar evaluations up to about 10^14.
pub fn factor_trial(m: u64) -> Factorization {
    let mut rest = m;
    let mut factors = Vec::new();
    let mut push = |rest: &mut u64, p: u64| {
        let mut a = 0;
        while *rest % p == 0 {
            *rest /= p;
            a += 1;
        }
        if a > 0 {
            factors.push((p, a));
        }
    };
    if rest >= 2 {
        push(&mut rest, 2);
        let mut p = 3u64;
        while (p as u128) * (p as u128) <= rest as u128 {
            push(&mut rest, p);
            p += 2;
        }
        if rest > 1 {
            factors.push((rest, 1));
        }
    }
    Factorization { factors }
}

/// Smallest-prime-factor sieve: entry n holds the least prime dividing n
/// (0 for n < 2).
pub fn smallest_prime_factors(n: usize) -> Vec<u32> {
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            spf[i] = i as u32;
            if let Some(start) = i.checked_mul(i) {
                for j in (start..=n).step_by(i) {
                    if spf[j] == 0 {
                        spf[j] = i as u32;
                    }
                }
            }
        }
    }
    spf
}

/// Factorization read off a smallest-prime-factor table.
pub fn factor_with_spf(mut n: u64, spf: &[u32]) -> Factorization {
    let mut factors = Vec::new();
    while n > 1 {
        let p = spf[n as usize] as u64;
        let mut a = 0;
        while n % p == 0 {
            n /= p;
            a += 1;
        }
        factors.push((p, a));
    }
    Factorization { factors }
}

/// Polynomial evaluation by Horner's scheme. `coeffs[i]` multiplies x^i.
/// The empty polynomial evaluates to zero.
pub fn horner<T>(coeffs: &[T], x: &T) -> T
where
    T: Clone + Zero + for<'a> Mul<&'a T, Output = T> + for<'a> Add<&'a T, Output = T>,
{
    let mut it = coeffs.iter().rev();
    let Some(lead) = it.next() else {
        return T::zero();
    };
    it.fold(lead.clone(), |acc, a| acc * x + a)
}

/// Coefficients of (x+1)(x+2)···(x+c), constant term first.
pub fn prod_coeffs(c: u64) -> Result<Vec<BigInt>> {
    if c == 0 {
        return Err(domain("prod_coeffs needs c >= 1"));
    }
    let mut v = vec![BigInt::one(), BigInt::one()];
    for k in 2..=c {
        // Multiply by (x + k): shift up and add k times the old vector.
        let k = BigInt::from(k);
        let mut next = vec![BigInt::zero(); v.len() + 1];
        for (i, a) in v.iter().enumerate() {
            next[i + 1] += a;
            next[i] += a * &k;
        }
        v = next;
    }
    Ok(v)
}

/// Binary digits of `n`, least significant first.
pub fn base2_digits(n: u64) -> Result<Vec<u8>> {
    if n == 0 {
        return Err(domain("base2_digits needs n >= 1"));
    }
    let bits = 64 - n.leading_zeros();
    Ok((0..bits).map(|i| ((n >> i) & 1) as u8).collect())
}

/// `b^n mod m` by repeated squaring over the binary digits of `n`.
pub fn mod_pow(b: u64, n: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(domain(format!("modulus must be >= 2, got {m}")));
    }
    Ok(mod_pow_unchecked(b, n, m))
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn mod_pow_unchecked(b: u64, n: u64, m: u64) -> u64 {
    if n == 0 {
        return 1 % m;
    }
    let mut square = b % m;
    let mut acc = 1u64 % m;
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, square, m);
        }
        e >>= 1;
        if e > 0 {
            square = mul_mod(square, square, m);
        }
    }
    acc
}

/// Whether n passes the strong pseudoprime test to base b, where
/// n − 1 = 2^s · t with t odd.
pub fn strong_probable_prime(n: u64, b: u64, s: u32, t: u64) -> bool {
    let mut y = mod_pow_unchecked(b, t, n);
    if y == 1 || y == n - 1 {
        return true;
    }
    for _ in 1..s {
        y = mul_mod(y, y, n);
        if y == n - 1 {
            return true;
        }
        if y == 1 {
            return false;
        }
    }
    false
}

/// Deterministic primality for every 64-bit integer: the strong test to the
/// first twelve prime bases has no counterexample below 3.3·10^24.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    if let Some(&p) = BASES.iter().find(|&&p| n % p == 0) {
        return n == p;
    }
    let s = (n - 1).trailing_zeros();
    let t = (n - 1) >> s;
    BASES.iter().all(|&b| strong_probable_prime(n, b, s, t))
}

/// Complete factorization of any 64-bit integer: trial division by small
/// primes, then Pollard rho on the cofactors with deterministic primality
/// checks. Returns the empty factorization for m < 2.
pub fn factor_u64(m: u64) -> Factorization {
    let mut rest = m;
    let mut primes: Vec<u64> = Vec::new();
    if m >= 2 {
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
            while rest % p == 0 {
                rest /= p;
                primes.push(p);
            }
        }
        let mut stack = vec![rest];
        while let Some(n) = stack.pop() {
            if n == 1 {
                continue;
            }
            if is_prime_u64(n) {
                primes.push(n);
                continue;
            }
            let d = (1u64..)
                .find_map(|c| pollard_rho(n, c, 2).ok().flatten())
                .expect("rho finds a divisor of a composite for some c");
            stack.push(d);
            stack.push(n / d);
        }
    }
    primes.sort_unstable();
    let mut factors: Vec<(u64, u64)> = Vec::new();
    for p in primes {
        match factors.last_mut() {
            Some((q, a)) if *q == p => *a += 1,
            _ => factors.push((p, 1)),
        }
    }
    Factorization { factors }
}

/// Smallest prime factor of `n` not above `b`, found by the Pollard–Strassen
/// block method.
///
/// With c = ⌈√b⌉, the products f(kc) = (kc+1)···(kc+c) mod n cover 1..c²
/// in c blocks. The first block whose product shares a factor with n is
/// scanned for the least divisor ≥ 2. `None` means every block was coprime.
pub fn pollard_strassen(n: u64, b: u64) -> Result<Option<u64>> {
    if n < 3 {
        return Err(domain(format!("Pollard-Strassen needs n >= 3, got {n}")));
    }
    if b == 0 {
        return Err(domain("Pollard-Strassen needs b >= 1"));
    }
    let c = ceil_sqrt(b);
    let nb = BigInt::from(n);
    let coeffs: Vec<BigInt> = prod_coeffs(c)?.iter().map(|a| a.mod_floor(&nb)).collect();
    for k in 0..c {
        let x = BigInt::from((k as u128 * c as u128 % n as u128) as u64);
        let g = horner(&coeffs, &x).mod_floor(&nb);
        let d = g.gcd(&nb);
        if d > BigInt::one() {
            let lo = (k * c + 1).max(2);
            let hi = k * c + c;
            return Ok((lo..=hi).find(|d| n % d == 0).or(Some(
                u64::try_from(d).expect("gcd with n fits in u64"),
            )));
        }
    }
    Ok(None)
}

fn ceil_sqrt(b: u64) -> u64 {
    let r = b.sqrt();
    if r * r == b {
        r
    } else {
        r + 1
    }
}

/// Pollard's rho method with f(x) = x² + c and Floyd cycle detection.
///
/// Returns a proper divisor, or `None` when the sequence collapses
/// (gcd = n), meaning another `c` or `seed` must be tried.
pub fn pollard_rho(n: u64, c: u64, seed: u64) -> Result<Option<u64>> {
    if n <= 2 {
        return Err(domain(format!("Pollard rho needs n > 2, got {n}")));
    }
    if n % 2 == 0 {
        return Ok(Some(2));
    }
    let f = |x: u64| (mul_mod(x, x, n) + c % n) % n;
    let mut a = seed % n;
    let mut b = seed % n;
    loop {
        a = f(a);
        b = f(f(b));
        let d = a.abs_diff(b).gcd(&n);
        if d == n {
            return Ok(None);
        }
        if d > 1 {
            return Ok(Some(d));
        }
    }
}

/// Which gcd closes a Pollard p−1 run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum P1Gcd {
    /// gcd(a − 1, n), the standard step.
    #[default]
    Standard,
    /// gcd(n − 1, a), kept for comparison with the printed variant.
    NMinusOne,
}

/// Pollard's p−1 method with smoothness bound `bound`.
///
/// For each prime q ≤ bound, a is raised to q^ℓ where q^ℓ ≤ n < q^(ℓ+1).
/// A run that ends in gcd = n is retried with the next base, starting from
/// a = 2, for up to 32 bases.
pub fn pollard_p1(n: u64, bound: u64, gcd_mode: P1Gcd) -> Result<Option<u64>> {
    if n <= 2 {
        return Err(domain(format!("Pollard p-1 needs n > 2, got {n}")));
    }
    let small = PrimeTable::new(bound.max(2))?;
    for start in 2..n.min(34) {
        let d = start.gcd(&n);
        if d >= 2 {
            return Ok(Some(d));
        }
        let mut a = start;
        for &q in small.primes().iter().take_while(|&&q| q <= bound) {
            let mut qe = q;
            while let Some(next) = qe.checked_mul(q) {
                if next > n {
                    break;
                }
                qe = next;
            }
            a = mod_pow_unchecked(a, qe, n);
        }
        let d = match gcd_mode {
            P1Gcd::Standard => ((a + n - 1) % n).gcd(&n),
            P1Gcd::NMinusOne => (n - 1).gcd(&a),
        };
        if d > 1 && d < n && n % d == 0 {
            return Ok(Some(d));
        }
        if d == 1 || gcd_mode == P1Gcd::NMinusOne {
            return Ok(None);
        }
    }
    Ok(None)
}

/// Fermat's difference-of-squares search for odd `n`.
///
/// x runs upward from ⌈√n⌉ until x² − n is a square y²; the result is
/// (x − y, x + y). A prime input ends at x = (n+1)/2 with (1, n).
pub fn fermat_factor(n: u64) -> Result<(u64, u64)> {
    if n % 2 == 0 || n < 3 {
        return Err(domain(format!("Fermat's method needs an odd n >= 3, got {n}")));
    }
    let mut x = ceil_sqrt(n);
    loop {
        let y2 = (x as u128) * (x as u128) - n as u128;
        let y = y2.sqrt();
        if y * y == y2 {
            let y = y as u64;
            return Ok((x - y, x + y));
        }
        x += 1;
    }
}
