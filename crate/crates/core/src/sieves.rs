//! Prime generation up to a limit by several sieve variants.
//!
//! Every variant returns the same [`PrimeTable`]. They differ in memory layout
//! and in how often they overwrite a cell, which [`SieveStats`] records so the
//! variants can be compared on equal terms.
//!
//! `zero_assignments` counts every write of 0 into the marking array,
//! including repeated writes to a cell that is already 0. For the Atkin
//! variants it counts parity flips plus the clears of square multiples.
//! `memory_cells` is the number of marking cells plus the number of primes
//! stored.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_integer::Roots;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// All primes up to `limit`, in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    /// Builds a table with the default variant ([`Algorithm::Batched`] when
    /// the limit allows it).
    pub fn new(limit: u64) -> Result<Self> {
        let algo = if limit >= Algorithm::Batched.min_limit() {
            Algorithm::Batched
        } else {
            Algorithm::PritchardOdd
        };
        sieve(limit, algo).map(|(t, _)| t)
    }

    /// The sieve bound.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// The primes, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Number of primes stored.
    pub fn len(&self) -> usize {
        self.primes.len()
    }

    /// True when no prime is stored (limit below 2).
    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// Largest stored prime.
    pub fn last(&self) -> Option<u64> {
        self.primes.last().copied()
    }

    /// Membership by binary search. Values above the limit report `false`;
    /// use [`crate::counting::bisect_is_prime`] for a range-checked query.
    pub fn contains(&self, n: u64) -> bool {
        self.primes.binary_search(&n).is_ok()
    }
}

/// The sieve variants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    /// Plain Eratosthenes crossing off multiples of every k from k².
    Pritchard,
    /// Crosses off only odd multiples of odd k.
    PritchardOdd,
    /// As `PritchardOdd`, storing odd numbers only.
    PritchardMinmem,
    /// Crosses off odd multiples of primes and harvests primes batch by batch
    /// between consecutive prime squares.
    Batched,
    /// As `Batched`, storing odd numbers only.
    BatchedMinmem,
    /// Sieve of Sundaram.
    Sundaram,
    /// Sieve of Atkin in its textbook form.
    Atkin,
    /// Sieve of Atkin restricted to odd candidates.
    AtkinOpt,
}

impl Algorithm {
    /// Every variant, in a fixed order.
    pub const ALL: [Algorithm; 8] = [
        Algorithm::Pritchard,
        Algorithm::PritchardOdd,
        Algorithm::PritchardMinmem,
        Algorithm::Batched,
        Algorithm::BatchedMinmem,
        Algorithm::Sundaram,
        Algorithm::Atkin,
        Algorithm::AtkinOpt,
    ];

    /// Smallest accepted limit.
    pub fn min_limit(self) -> u64 {
        match self {
            Algorithm::Batched | Algorithm::BatchedMinmem => 15,
            _ => 2,
        }
    }

    /// Stable lowercase name used on the command line and in CSV output.
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Pritchard => "pritchard",
            Algorithm::PritchardOdd => "pritchard_odd",
            Algorithm::PritchardMinmem => "pritchard_minmem",
            Algorithm::Batched => "batched",
            Algorithm::BatchedMinmem => "batched_minmem",
            Algorithm::Sundaram => "sundaram",
            Algorithm::Atkin => "atkin",
            Algorithm::AtkinOpt => "atkin_opt",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| domain(format!("unknown sieve algorithm `{s}`")))
    }
}

/// Instrumentation collected while sieving.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SieveStats {
    pub algorithm: Algorithm,
    pub zero_assignments: u64,
    pub memory_cells: u64,
    pub elapsed: Duration,
}

impl SieveStats {
    /// `algo,zero_assignments,memory_cells,elapsed_ms`
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{}",
            self.algorithm,
            self.zero_assignments,
            self.memory_cells,
            self.elapsed.as_millis()
        )
    }
}

/// Generates all primes up to `limit` with the chosen variant.
pub fn sieve(limit: u64, algorithm: Algorithm) -> Result<(PrimeTable, SieveStats)> {
    let min = algorithm.min_limit();
    if limit < min {
        return Err(domain(format!(
            "{algorithm} needs a limit of at least {min}, got {limit}"
        )));
    }
    let l = usize::try_from(limit).map_err(|_| domain("limit exceeds address space"))?;
    let start = Instant::now();
    let (primes, zeros, cells) = match algorithm {
        Algorithm::Pritchard => pritchard(l),
        Algorithm::PritchardOdd => pritchard_odd(l),
        Algorithm::PritchardMinmem => pritchard_minmem(l),
        Algorithm::Batched => batched(l),
        Algorithm::BatchedMinmem => batched_minmem(l),
        Algorithm::Sundaram => sundaram(l),
        Algorithm::Atkin => atkin(l),
        Algorithm::AtkinOpt => atkin_opt(l),
    };
    let elapsed = start.elapsed();
    let memory_cells = cells as u64 + primes.len() as u64;
    Ok((
        PrimeTable { limit, primes },
        SieveStats {
            algorithm,
            zero_assignments: zeros,
            memory_cells,
            elapsed,
        },
    ))
}

type SieveOutput = (Vec<u64>, u64, usize);

fn pritchard(l: usize) -> SieveOutput {
    let mut is_prime = vec![1u8; l + 1];
    let mut zeros = 0u64;
    let mut k = 2usize;
    while k * k <= l {
        let mut j = k * k;
        while j <= l {
            is_prime[j] = 0;
            zeros += 1;
            j += k;
        }
        k += 1;
    }
    let primes = (2..=l)
        .filter(|&n| is_prime[n] == 1)
        .map(|n| n as u64)
        .collect();
    (primes, zeros, l)
}

fn pritchard_odd(l: usize) -> SieveOutput {
    let mut is_prime = vec![1u8; l + 1];
    let mut zeros = 0u64;
    let root = l.sqrt();
    for k in (3..=root).step_by(2) {
        for j in (k * k..=l).step_by(2 * k) {
            is_prime[j] = 0;
            zeros += 1;
        }
    }
    let mut primes = vec![2u64];
    primes.extend(
        (3..=l)
            .step_by(2)
            .filter(|&n| is_prime[n] == 1)
            .map(|n| n as u64),
    );
    (primes, zeros, l)
}

fn pritchard_minmem(l: usize) -> SieveOutput {
    // Cell i stands for the odd number 2i + 1.
    let half = l / 2;
    let mut is_prime = vec![1u8; half + 1];
    let mut zeros = 0u64;
    let root = l.sqrt();
    for k in (3..=root).step_by(2) {
        for j in (k * k..=l).step_by(2 * k) {
            is_prime[(j - 1) / 2] = 0;
            zeros += 1;
        }
    }
    let mut primes = vec![2u64];
    primes.extend(
        (1..=half)
            .map(|i| 2 * i + 1)
            .filter(|&n| n <= l && is_prime[(n - 1) / 2] == 1)
            .map(|n| n as u64),
    );
    (primes, zeros, half)
}

fn batched(l: usize) -> SieveOutput {
    let mut is_prime = vec![1u8; l + 1];
    let mut zeros = 0u64;
    let mut primes: Vec<u64> = vec![2, 3, 5, 7];
    for j in (9..=l).step_by(6) {
        is_prime[j] = 0;
        zeros += 1;
    }
    let mut k = 2usize;
    let mut s = 9usize;
    let mut t = 25usize;
    while t <= l {
        let p = primes[k] as usize;
        for j in (t..=l).step_by(2 * p) {
            is_prime[j] = 0;
            zeros += 1;
        }
        harvest(&mut primes, s + 2, t - 2, |j| is_prime[j] == 1);
        s = t;
        k += 1;
        let next = primes[k] as usize;
        t = next * next;
    }
    harvest(&mut primes, s + 2, l, |j| is_prime[j] == 1);
    primes.retain(|&p| p as usize <= l);
    (primes, zeros, l)
}

fn batched_minmem(l: usize) -> SieveOutput {
    let half = l / 2;
    let mut is_prime = vec![1u8; half + 1];
    let mut zeros = 0u64;
    let mut primes: Vec<u64> = vec![2, 3, 5, 7];
    // Cells 4, 7, 10, ... are the odd multiples of 3 from 9 on. Cells whose
    // number exceeds the limit are left alone so the count matches `batched`.
    let top = (l - 1) / 2;
    for j in (4..=top).step_by(3) {
        is_prime[j] = 0;
        zeros += 1;
    }
    let mut k = 2usize;
    let mut s = 9usize;
    let mut t = 25usize;
    while t <= l {
        let p = primes[k] as usize;
        for j in (t..=l).step_by(2 * p) {
            is_prime[(j - 1) / 2] = 0;
            zeros += 1;
        }
        harvest(&mut primes, s + 2, t - 2, |j| is_prime[(j - 1) / 2] == 1);
        s = t;
        k += 1;
        let next = primes[k] as usize;
        t = next * next;
    }
    harvest(&mut primes, s + 2, l, |j| is_prime[(j - 1) / 2] == 1);
    primes.retain(|&p| p as usize <= l);
    (primes, zeros, half)
}

/// Appends the odd numbers in `from..=to` that are still marked.
fn harvest(primes: &mut Vec<u64>, from: usize, to: usize, marked: impl Fn(usize) -> bool) {
    if from > to {
        return;
    }
    primes.extend(
        (from..=to)
            .step_by(2)
            .filter(|&j| marked(j))
            .map(|j| j as u64),
    );
}

fn sundaram(l: usize) -> SieveOutput {
    // Cell k stands for 2k + 1; k + j + 2kj marks the composite (2k+1)(2j+1).
    let m = l / 2;
    let mut is_prime = vec![1u8; m + 1];
    let mut zeros = 0u64;
    let mut k = 1usize;
    while 3 * k + 1 <= m {
        let step = 2 * k + 1;
        let last_j = (m - k) / step;
        for j in 1..=last_j {
            is_prime[k + j * step] = 0;
            zeros += 1;
        }
        k += 1;
    }
    let mut primes = vec![2u64];
    primes.extend(
        (1..=m)
            .filter(|&k| is_prime[k] == 1 && 2 * k + 1 <= l)
            .map(|k| (2 * k + 1) as u64),
    );
    (primes, zeros, m)
}

fn atkin(l: usize) -> SieveOutput {
    let mut is_prime = vec![0u8; l + 1];
    let mut flips = 0u64;
    let root = l.sqrt();
    for x in 1..=root {
        for y in 1..=root {
            let n = 4 * x * x + y * y;
            if n <= l && (n % 12 == 1 || n % 12 == 5) {
                is_prime[n] ^= 1;
                flips += 1;
            }
            let n = 3 * x * x + y * y;
            if n <= l && n % 12 == 7 {
                is_prime[n] ^= 1;
                flips += 1;
            }
            if x > y {
                let n = 3 * x * x - y * y;
                if n <= l && n % 12 == 11 {
                    is_prime[n] ^= 1;
                    flips += 1;
                }
            }
        }
    }
    for n in 5..=root {
        if is_prime[n] == 1 {
            let sq = n * n;
            for m in (sq..=l).step_by(sq) {
                is_prime[m] = 0;
                flips += 1;
            }
        }
    }
    (collect_atkin(&is_prime, l, 1), flips, l)
}

fn atkin_opt(l: usize) -> SieveOutput {
    let mut is_prime = vec![0u8; l + 1];
    let mut flips = 0u64;
    let root = l.sqrt();
    // 4k² + j² is odd only for odd j.
    for j in (1..=root).step_by(2) {
        let kmax = ((l - j * j) / 4).sqrt();
        for k in 1..=kmax {
            let n = 4 * k * k + j * j;
            let r = n % 12;
            if r == 1 || r == 5 {
                is_prime[n] ^= 1;
                flips += 1;
            }
        }
    }
    // 3k² + j² is odd only when k and j differ in parity.
    for j in 1..=root {
        let kmax = ((l - j * j) / 3).sqrt();
        for k in ((j % 2 + 1)..=kmax).step_by(2) {
            let n = 3 * k * k + j * j;
            if n % 12 == 7 {
                is_prime[n] ^= 1;
                flips += 1;
            }
        }
    }
    // 3k² - j² with k > j, again with parities differing.
    for j in 1..=root {
        let kmax = ((l + j * j) / 3).sqrt();
        for k in ((j + 1)..=kmax).step_by(2) {
            let n = 3 * k * k - j * j;
            if n <= l && n % 12 == 11 {
                is_prime[n] ^= 1;
                flips += 1;
            }
        }
    }
    // Only odd multiples of odd squares need clearing.
    for j in (5..=root).step_by(2) {
        if is_prime[j] == 1 {
            let sq = j * j;
            for m in (sq..=l).step_by(2 * sq) {
                is_prime[m] = 0;
                flips += 1;
            }
        }
    }
    (collect_atkin(&is_prime, l, 2), flips, l)
}

fn collect_atkin(is_prime: &[u8], l: usize, step: usize) -> Vec<u64> {
    let mut primes: Vec<u64> = [2u64, 3].into_iter().filter(|&p| p as usize <= l).collect();
    primes.extend(
        (5..=l)
            .step_by(step)
            .filter(|&n| is_prime[n] == 1)
            .map(|n| n as u64),
    );
    primes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limit_25_marks_and_counts() {
        let (t, s) = sieve(25, Algorithm::Pritchard).unwrap();
        assert_eq!(t.primes(), &[2, 3, 5, 7, 11, 13, 17, 19, 23]);
        assert_eq!(s.zero_assignments, 21);
        assert_eq!(s.memory_cells, 25 + 9);
    }

    #[test]
    fn smallest_limits() {
        let (t, _) = sieve(2, Algorithm::PritchardOdd).unwrap();
        assert_eq!(t.primes(), &[2]);
        for algo in Algorithm::ALL {
            let min = algo.min_limit();
            assert!(matches!(sieve(min - 1, algo), Err(Error::Domain(_))));
            let (t, _) = sieve(min, algo).unwrap();
            assert!(t.primes().iter().all(|&p| p <= min));
        }
    }

    #[test]
    fn variants_agree_on_small_limits() {
        for l in 15..400u64 {
            let (reference, _) = sieve(l, Algorithm::Pritchard).unwrap();
            for algo in Algorithm::ALL {
                let (t, _) = sieve(l, algo).unwrap();
                assert_eq!(t, reference, "{algo} at {l}");
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for algo in Algorithm::ALL {
            assert_eq!(algo.name().parse::<Algorithm>().unwrap(), algo);
        }
        assert!("eratosthenes".parse::<Algorithm>().is_err());
    }
}
