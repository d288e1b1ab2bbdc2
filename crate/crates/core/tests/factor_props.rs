//! Factorization round trips, modular powers and the Pollard–Strassen
//! block product.

mod common;

use df_core::factorint::{factor_trial, factor_u64, factorize, horner, mod_pow, prod_coeffs};
use df_core::sieves::PrimeTable;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn product(pairs: &[(u64, u64)]) -> u64 {
    pairs.iter().map(|&(p, a)| p.pow(a as u32)).product()
}

#[test]
fn factorization_round_trip_up_to_1e5() {
    let t = PrimeTable::new(1000).unwrap();
    assert!(factorize(1, &t).is_err());
    for m in 2..=100_000u64 {
        let f = factorize(m, &t).unwrap();
        assert_eq!(product(f.factors()), m, "m = {m}");
        assert!(f.factors().iter().all(|&(p, a)| a >= 1 && common::is_prime(p)));
        assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
    }
}

proptest! {
    #[test]
    fn every_factorizer_round_trips(m in 1u64..u64::MAX / 2) {
        let f = factor_u64(m);
        prop_assert_eq!(f.value_u64(), Some(m));
        prop_assert!(f.factors().iter().all(|&(p, _)| df_core::factorint::is_prime_u64(p)));
    }

    #[test]
    fn trial_division_round_trips(m in 1u64..10_000_000) {
        prop_assert_eq!(product(factor_trial(m).factors()), m);
    }

    #[test]
    fn mod_pow_matches_repeated_multiplication(b in 0u64..10_000, n in 0u64..1000, m in 2u64..1_000_000) {
        let mut acc = 1 % m;
        for _ in 0..n {
            acc = acc * (b % m) % m;
        }
        prop_assert_eq!(mod_pow(b, n, m).unwrap(), acc);
    }
}

#[test]
fn block_products_give_the_factorial() {
    // Π_{k<c} f(k·c) with f(x) = (x+1)···(x+c) is (c²)!.
    for n in [97u64, 1001, 65_537, 999_983, 1_000_000] {
        for c in 1..=6u64 {
            let coeffs = prod_coeffs(c).unwrap();
            let nb = BigInt::from(n);
            let mut acc = BigInt::from(1);
            for k in 0..c {
                acc = (acc * horner(&coeffs, &BigInt::from(k * c))).mod_floor(&nb);
            }
            let fact = (1..=c * c).fold(1u64, |f, i| f * i % n);
            assert_eq!(acc.to_u64().unwrap(), fact, "n = {n}, c = {c}");
        }
    }
}
