//! Agreement between the primality criteria and trial division.

mod common;

use df_core::eta::eta_table;
use df_core::primality::{csp, lucas_lehmer, miller_rabin, tp_eta, TestVerdict, MR_ROUNDS};
use proptest::prelude::*;

fn verdict(prime: bool) -> TestVerdict {
    if prime {
        TestVerdict::Prime
    } else {
        TestVerdict::Composite
    }
}

#[test]
fn criteria_agree_on_odd_numbers_to_2e4() {
    let t = eta_table(20_000).unwrap();
    for n in (3..=20_000u64).step_by(2) {
        let want = verdict(common::is_prime(n));
        assert_eq!(tp_eta(n, &t), want, "eta at {n}");
        assert_eq!(csp(1, n), want, "csp1 at {n}");
        if n >= 5 {
            assert_eq!(csp(2, n), want, "csp2 at {n}");
            assert_eq!(csp(3, n), want, "csp3 at {n}");
        }
    }
}

#[test]
fn small_mersenne_primes() {
    let mersenne_prime = |n: u32| common::is_prime((1u64 << n) - 1);
    let mut found = Vec::new();
    for n in 3..=31u32 {
        let (m, v) = lucas_lehmer(n as u64);
        assert_eq!(m, num_bigint::BigUint::from((1u64 << n) - 1));
        if !common::is_prime(n as u64) {
            assert_eq!(v, TestVerdict::Invalid);
            continue;
        }
        assert_eq!(v, verdict(mersenne_prime(n)), "n = {n}");
        if v == TestVerdict::Prime {
            found.push(n);
        }
    }
    assert_eq!(found, vec![3, 5, 7, 13, 17, 19, 31]);
}

proptest! {
    #[test]
    fn miller_rabin_on_odd_numbers(half in 1u64..5_000_000, seed in any::<u64>()) {
        let n = 2 * half + 1;
        let v = miller_rabin(n, MR_ROUNDS, seed);
        prop_assert_eq!(v, verdict(common::is_prime(n)));
        prop_assert_eq!(miller_rabin(2 * half, MR_ROUNDS, seed), TestVerdict::Invalid);
    }
}
