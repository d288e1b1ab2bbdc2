//! Divisor functions and Euler's totient against divisor enumeration.

mod common;

use df_core::arithfun::{gen_table, phi, sigma_k, TableFn};
use num_bigint::BigUint;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn sigma_is_multiplicative(m in 1u64..100_000, n in 1u64..100_000, k in 0u32..3) {
        // Strip from n every prime it shares with m.
        let mut n = n;
        loop {
            let g = common::gcd(m, n);
            if g == 1 {
                break;
            }
            n /= g;
        }
        prop_assert_eq!(sigma_k(k, m * n).unwrap(), sigma_k(k, m).unwrap() * sigma_k(k, n).unwrap());
    }
}

#[test]
fn phi_of_powers() {
    for n in 1..=100u64 {
        for l in 1..=4u32 {
            assert_eq!(phi(n.pow(l)), n.pow(l - 1) * phi(n), "n = {n}, ℓ = {l}");
        }
    }
}

#[test]
fn phi_against_square_root() {
    for n in 1..=10_000u64 {
        let p = phi(n);
        // φ(n) > √n fails only at 1, 2, 4 and 6; at 1 and 4 with equality.
        assert_eq!(p * p <= n, [1, 2, 4, 6].contains(&n), "n = {n}");
        if n >= 4 && !common::is_prime(n) {
            assert!((n - p) * (n - p) >= n, "composite n = {n}: φ = {p}");
        }
    }
}

#[test]
fn tables_match_divisor_enumeration() {
    let n = 3000;
    let tables: Vec<_> = TableFn::ALL.iter().map(|&f| gen_table(f, n).unwrap()).collect();
    for i in 1..=n {
        let want = [
            common::eta(i) as u128,
            common::sigma(0, i),
            common::sigma(1, i),
            common::sigma(2, i),
            common::sigma(1, i) - i as u128,
            common::phi(i) as u128,
        ];
        for (t, w) in tables.iter().zip(want) {
            assert_eq!(t.at(i) as u128, w, "{}({i})", t.func());
        }
        assert_eq!(sigma_k(2, i).unwrap(), BigUint::from(want[3]));
    }
}

#[test]
fn only_triple_equal_totient_below_1e4() {
    let t = gen_table(TableFn::Phi, 10_002).unwrap();
    let hits: Vec<u64> = (1..=10_000).filter(|&n| t.at(n) == t.at(n + 1) && t.at(n) == t.at(n + 2)).collect();
    assert_eq!(hits, vec![5186]);
}
