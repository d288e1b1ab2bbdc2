//! Linear systems, rational roots and the quadratic a·x² − b·y² + c = 0.

use std::collections::BTreeSet;

use df_core::dioph_linear::{
    poly_roots, sign_variation, solve_linear2, solve_linear_n, RationalMatrix, RootMode,
};
use df_core::dioph_quad::{Branch, QuadSolver, DEFAULT_BOUND};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-6i64..=6, c), r)
    })
}

/// Coefficients (constant first) of Π (q·x − p) times `extra`.
fn planted(roots: &[(i64, i64)], extra: &[i64]) -> Vec<BigInt> {
    let mut poly: Vec<BigInt> = extra.iter().map(|&v| BigInt::from(v)).collect();
    for &(p, q) in roots {
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (i, a) in poly.iter().enumerate() {
            next[i + 1] += a * q;
            next[i] -= a * p;
        }
        poly = next;
    }
    poly
}

fn eval(coeffs: &[BigInt], x: &BigRational) -> BigRational {
    coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, a| acc * x + BigRational::from_integer(a.clone()))
}

fn small_divisors(v: &BigInt) -> Vec<i64> {
    let v = v.abs().to_i64().unwrap();
    (1..=v).filter(|d| v % d == 0).collect()
}

/// Every ±p/q with p | a_low and q | a_high that is a root.
fn candidate_roots(coeffs: &[BigInt]) -> BTreeSet<BigRational> {
    let mut out = BTreeSet::new();
    let low = coeffs.iter().position(|c| !c.is_zero()).unwrap();
    let high = coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
    if low > 0 {
        out.insert(BigRational::zero());
    }
    for p in small_divisors(&coeffs[low]) {
        for q in small_divisors(&coeffs[high]) {
            for s in [1, -1] {
                let r = BigRational::new((s * p).into(), q.into());
                if eval(coeffs, &r).is_zero() {
                    out.insert(r);
                }
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn rref_is_idempotent(rows in matrix()) {
        let m = RationalMatrix::from_int_rows(&rows).unwrap();
        let r = m.rref();
        prop_assert_eq!(r.rref(), r);
    }

    #[test]
    fn planted_roots_are_found_and_nothing_else(
        roots in prop::collection::vec((-6i64..=6, 1i64..=4), 0..4),
        extra in prop::collection::vec(-5i64..=5, 1..3),
    ) {
        prop_assume!(extra.iter().any(|&v| v != 0));
        let coeffs = planted(&roots, &extra);
        let got: BTreeSet<BigRational> = poly_roots(&coeffs, RootMode::Rational).unwrap().into_iter().collect();
        for r in &got {
            prop_assert!(eval(&coeffs, r).is_zero());
        }
        for &(p, q) in &roots {
            prop_assert!(got.contains(&BigRational::new(p.into(), q.into())));
        }
        prop_assert_eq!(&got, &candidate_roots(&coeffs));
        let ints: BTreeSet<_> = got.iter().filter(|r| r.is_integer()).cloned().collect();
        let nat: BTreeSet<_> = ints.iter().filter(|r| !r.is_negative()).cloned().collect();
        prop_assert_eq!(poly_roots(&coeffs, RootMode::Integer).unwrap().into_iter().collect::<BTreeSet<_>>(), ints);
        prop_assert_eq!(poly_roots(&coeffs, RootMode::Natural).unwrap().into_iter().collect::<BTreeSet<_>>(), nat);
    }

    #[test]
    fn two_variable_solutions_are_all_the_solutions(a in 1i64..40, b in 1i64..40, c in -60i64..60) {
        let sol = solve_linear2(&a.into(), &b.into(), &c.into()).unwrap();
        // Brute force over a window that contains several periods.
        let mut found = Vec::new();
        for x in 0..=80i64 {
            for y in 0..=80i64 {
                if a * x - b * y == c {
                    found.push((x, y));
                }
            }
        }
        match sol {
            None => prop_assert!(found.is_empty()),
            Some(s) => {
                let terms = s.natural_terms(found.len());
                let terms: Vec<(i64, i64)> = terms.iter().map(|(x, y)| (x.to_i64().unwrap(), y.to_i64().unwrap())).collect();
                let inside: Vec<_> = terms.into_iter().filter(|&(x, y)| x <= 80 && y <= 80).collect();
                prop_assert_eq!(inside, found);
            }
        }
    }
}

#[test]
fn single_sign_equations_have_few_solutions() {
    // With positive coefficients Σ a_i x_i = b has at most Π (1 + b/a_i)
    // natural solutions, and each lies in the parametric family.
    let mut coeff_sets = Vec::new();
    for a1 in 1..=5i64 {
        coeff_sets.push(vec![a1]);
        for a2 in 1..=5i64 {
            coeff_sets.push(vec![a1, a2]);
            for a3 in 1..=4i64 {
                coeff_sets.push(vec![a1, a2, a3]);
            }
        }
    }
    for a in &coeff_sets {
        assert!(!sign_variation(a).unwrap());
        for b in 1..=30i64 {
            let family = solve_linear_n(a, b).unwrap();
            let mut count = 0u64;
            let ranges: Vec<i64> = a.iter().map(|&ai| b / ai).collect();
            let mut x = vec![0i64; a.len()];
            loop {
                if a.iter().zip(&x).map(|(ai, xi)| ai * xi).sum::<i64>() == b {
                    count += 1;
                    let xb: Vec<BigInt> = x.iter().map(|&v| v.into()).collect();
                    let f = family.as_ref().expect("a natural solution exists");
                    let t = f.parameters_of(&xb).expect("solution lies in the family");
                    assert_eq!(f.point(&t), xb);
                }
                // Odometer over 0..=b/a_i in each coordinate.
                let mut i = 0;
                while i < x.len() && x[i] == ranges[i] {
                    x[i] = 0;
                    i += 1;
                }
                if i == x.len() {
                    break;
                }
                x[i] += 1;
            }
            let bound: f64 = a.iter().map(|&ai| 1.0 + b as f64 / ai as f64).product();
            assert!((count as f64) <= bound, "a = {a:?}, b = {b}: {count} > {bound}");
        }
    }
}

fn check_family(s: &QuadSolver) {
    assert!(s.matrix.det().is_one());
    for which in [Branch::S0, Branch::S1] {
        let rows: Vec<_> = s.solutions(which).take(11).collect();
        for (n, v) in rows.iter().enumerate() {
            let (x, y) = v;
            assert!((&s.a * x * x - &s.b * y * y + &s.c).is_zero(), "row {n} of {which:?}");
            assert_eq!(s.iterate(n as u64, which), *v);
        }
        if which == Branch::S0 && s.s0.0.is_positive() && s.s0.1.is_positive() {
            assert!(rows.windows(2).all(|w| w[1].0 > w[0].0));
        }
    }
}

#[test]
fn published_quadratic_families() {
    check_family(&QuadSolver::new(2, 3, -5, DEFAULT_BOUND).unwrap());
    check_family(&QuadSolver::new(13, 17, -2636, DEFAULT_BOUND).unwrap());
}

#[test]
fn small_quadratic_families() {
    let mut solved = 0;
    for a in 1..=8u64 {
        for b in 1..=8u64 {
            for c in (-40i64..=40).filter(|&c| c != 0) {
                if let Ok(s) = QuadSolver::new(a, b, c, 10_000) {
                    check_family(&s);
                    solved += 1;
                }
            }
        }
    }
    assert!(solved > 50, "only {solved} instances had solutions");
}
