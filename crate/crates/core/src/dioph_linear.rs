//! Linear Diophantine equations, exact linear systems and rational roots of
//! integer polynomials.
//!
//! Everything here is exact: integer work uses `BigInt` and matrices hold
//! `BigRational` entries, so no result depends on floating-point rounding.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::factorint::factor_u64;

/// General solution of a·x − b·y = c: x_k = x_step·k + x0 and
/// y_k = y_step·k + y0 for every integer k. Both coordinates are
/// nonnegative exactly when k ≥ k_min.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Linear2Solution {
    pub x0: BigInt,
    pub y0: BigInt,
    pub x_step: BigInt,
    pub y_step: BigInt,
    pub k_min: BigInt,
}

impl Linear2Solution {
    /// The solution with parameter k.
    pub fn term(&self, k: &BigInt) -> (BigInt, BigInt) {
        (&self.x_step * k + &self.x0, &self.y_step * k + &self.y0)
    }

    /// The first `count` natural solutions, starting at k_min.
    pub fn natural_terms(&self, count: usize) -> Vec<(BigInt, BigInt)> {
        let mut k = self.k_min.clone();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            out.push(self.term(&k));
            k += 1;
        }
        out
    }
}

/// Solves a·x − b·y = c for positive a and b. `None` when gcd(a, b) does
/// not divide c.
///
/// The particular solution has the least positive x, which is also the
/// first hit of a scan over x = 1, 2, .... It comes from the modular inverse
/// of a/g modulo b/g with g = gcd(a, b). The steps are b/g and a/g, so the
/// family covers every solution even when g > 1.
pub fn solve_linear2(a: &BigInt, b: &BigInt, c: &BigInt) -> Result<Option<Linear2Solution>> {
    if !a.is_positive() || !b.is_positive() {
        return Err(domain("solve_linear2 needs a > 0 and b > 0"));
    }
    let g = a.gcd(b);
    if !(c % &g).is_zero() {
        return Ok(None);
    }
    let (a1, b1, c1) = (a / &g, b / &g, c / &g);
    let mut x0 = if b1.is_one() {
        BigInt::zero()
    } else {
        let inv = mod_inverse(&a1, &b1).expect("a/g and b/g are coprime");
        (c1 * inv).mod_floor(&b1)
    };
    if x0.is_zero() {
        x0 = b1.clone();
    }
    let y0 = (a * &x0 - c) / b;
    let k_min = ceil_div(&-&x0, &b1).max(ceil_div(&-&y0, &a1));
    Ok(Some(Linear2Solution {
        x0,
        y0,
        x_step: b1,
        y_step: a1,
        k_min,
    }))
}

/// Inverse of a modulo m > 1, if gcd(a, m) = 1.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

fn ceil_div(n: &BigInt, d: &BigInt) -> BigInt {
    -((-n).div_floor(d))
}

/// Whether the coefficients contain both signs. An equation Σ a_i x_i = b
/// with mixed signs has infinitely many natural solutions once it has one;
/// with a single sign it has finitely many.
pub fn sign_variation(a: &[i64]) -> Result<bool> {
    if a.iter().all(|&v| v == 0) {
        return Err(domain("sign_variation needs a nonzero coefficient"));
    }
    Ok(a.iter().any(|&v| v > 0) && a.iter().any(|&v| v < 0))
}

/// Integer solutions of a·x = b: particular + Σ t_i·basis_i over integer t.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearNSolution {
    pub particular: Vec<BigInt>,
    pub homogeneous_basis: Vec<Vec<BigInt>>,
}

impl LinearNSolution {
    /// particular + Σ t_i·basis_i.
    pub fn point(&self, params: &[BigInt]) -> Vec<BigInt> {
        let mut x = self.particular.clone();
        for (t, v) in params.iter().zip(&self.homogeneous_basis) {
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi += t * vi;
            }
        }
        x
    }

    /// The integer parameters reproducing `x`, or `None` if `x` is not in
    /// the family.
    pub fn parameters_of(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let n = self.particular.len();
        let k = self.homogeneous_basis.len();
        let cols = k + 1;
        let mut m = RationalMatrix::zeros(n, cols);
        for i in 0..n {
            for (j, v) in self.homogeneous_basis.iter().enumerate() {
                m.set(i, j, BigRational::from_integer(v[i].clone()));
            }
            m.set(i, k, BigRational::from_integer(&x[i] - &self.particular[i]));
        }
        let r = m.rref();
        if r.pivot_columns().contains(&k) {
            return None;
        }
        let t: Vec<BigRational> = (0..k).map(|j| r.get(j, k).clone()).collect();
        t.iter()
            .all(|v| v.is_integer())
            .then(|| t.into_iter().map(|v| v.to_integer()).collect())
    }
}

/// Solves a·x = b in integers by unimodular column reduction.
///
/// The coefficient vector is reduced Euclid-style (a_k ← a_k − q·a_j) until
/// a single entry ±g remains, mirroring each step on the columns of an
/// identity matrix U. Then a·U = ±g·e_j, so x = U·t solves the equation
/// with t_j = b/(±g) and the other n − 1 entries of t free. `None` when
/// g does not divide b.
pub fn solve_linear_n(a: &[i64], b: i64) -> Result<Option<LinearNSolution>> {
    if a.iter().all(|&v| v == 0) {
        return Err(domain("solve_linear_n needs a nonzero coefficient"));
    }
    let n = a.len();
    let mut v: Vec<BigInt> = a.iter().map(|&x| BigInt::from(x)).collect();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|j| (0..n).map(|i| BigInt::from((i == j) as i32)).collect())
        .collect();
    loop {
        let nonzero: Vec<usize> = (0..n).filter(|&i| !v[i].is_zero()).collect();
        let j = *nonzero
            .iter()
            .min_by_key(|&&i| v[i].abs())
            .expect("a nonzero entry survives every step");
        if nonzero.len() == 1 {
            let g = v[j].clone();
            let b = BigInt::from(b);
            if !(&b % &g).is_zero() {
                return Ok(None);
            }
            let t = b / &g;
            let particular = u[j].iter().map(|e| e * &t).collect();
            let homogeneous_basis = (0..n).filter(|&i| i != j).map(|i| u[i].clone()).collect();
            return Ok(Some(LinearNSolution {
                particular,
                homogeneous_basis,
            }));
        }
        for &k in &nonzero {
            if k == j {
                continue;
            }
            let q = v[k].div_floor(&v[j]);
            v[k] = &v[k] - &q * &v[j];
            let (uj, uk) = if j < k {
                let (lo, hi) = u.split_at_mut(k);
                (&lo[j], &mut hi[0])
            } else {
                let (lo, hi) = u.split_at_mut(j);
                (&hi[0], &mut lo[k])
            };
            for (ek, ej) in uk.iter_mut().zip(uj) {
                *ek -= &q * ej;
            }
        }
    }
}

/// Dense matrix of exact rationals, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    /// The rows × cols zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    /// Builds a matrix from integer rows of equal length.
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let r: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|row| row.iter().map(|&v| BigRational::from_integer(v.into())).collect())
            .collect();
        Self::from_rows(r)
    }

    /// Builds a matrix from rational rows of equal length.
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(domain("matrix rows have different lengths"));
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    /// Row r as a slice.
    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// [A | b].
    pub fn augment(&self, b: &[BigRational]) -> Result<Self> {
        if b.len() != self.rows {
            return Err(domain("right-hand side length differs from the row count"));
        }
        let rows = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        Self::from_rows(rows)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// Reduced row-echelon form by Gauss–Jordan elimination.
    pub fn rref(&self) -> Self {
        let mut m = self.clone();
        let mut lead_row = 0;
        for c in 0..m.cols {
            if lead_row == m.rows {
                break;
            }
            let Some(p) = (lead_row..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, lead_row);
            let inv = m.get(lead_row, c).recip();
            for k in c..m.cols {
                let v = m.get(lead_row, k) * &inv;
                m.set(lead_row, k, v);
            }
            for r in 0..m.rows {
                if r == lead_row || m.get(r, c).is_zero() {
                    continue;
                }
                let factor = m.get(r, c).clone();
                for k in c..m.cols {
                    let v = m.get(r, k) - &factor * m.get(lead_row, k);
                    m.set(r, k, v);
                }
            }
            lead_row += 1;
        }
        m
    }

    /// Columns holding a leading 1, assuming `self` is in rref.
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.rows)
            .filter_map(|r| (0..self.cols).find(|&c| !self.get(r, c).is_zero()))
            .collect()
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Classification of a linear system A·x = b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemSolution {
    /// No free variables.
    Unique(Vec<BigRational>),
    /// x = particular + Σ x_f·basis_f over the free variables `free`.
    Parametric {
        particular: Vec<BigRational>,
        free: Vec<usize>,
        basis: Vec<Vec<BigRational>>,
    },
    /// The augmented column is a pivot column.
    Inconsistent,
}

/// Solves A·x = b through the rref of [A | b].
pub fn solve_system(a: &RationalMatrix, b: &[BigRational]) -> Result<SystemSolution> {
    let n = a.cols();
    let r = a.augment(b)?.rref();
    let pivots = r.pivot_columns();
    if pivots.contains(&n) {
        return Ok(SystemSolution::Inconsistent);
    }
    let mut particular = vec![BigRational::zero(); n];
    for (row, &c) in pivots.iter().enumerate() {
        particular[c] = r.get(row, n).clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.is_empty() {
        return Ok(SystemSolution::Unique(particular));
    }
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); n];
            v[f] = BigRational::one();
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = -r.get(row, f);
            }
            v
        })
        .collect();
    Ok(SystemSolution::Parametric {
        particular,
        free,
        basis,
    })
}

/// Which roots [`poly_roots`] keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootMode {
    Rational,
    Integer,
    Natural,
}

impl FromStr for RootMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rational" => Ok(RootMode::Rational),
            "integer" => Ok(RootMode::Integer),
            "natural" => Ok(RootMode::Natural),
            _ => Err(domain(format!("unknown root mode `{s}`"))),
        }
    }
}

/// Rational roots of Σ coeffs[i]·x^i, ascending and without repetition.
///
/// A factor x^k is split off first and contributes the root 0. Every other
/// rational root p/q in lowest terms has p | a_0 and q | a_n, so testing
/// those candidates is exhaustive. Each candidate is checked exactly as
/// Σ a_i p^i q^(n−i) = 0. The end coefficients must fit in 64 bits so their
/// divisors can be listed.
pub fn poly_roots(coeffs: &[BigInt], mode: RootMode) -> Result<Vec<BigRational>> {
    let Some(lead_idx) = coeffs.iter().rposition(|c| !c.is_zero()) else {
        return Err(domain("poly_roots needs a nonzero polynomial"));
    };
    let low = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let poly = &coeffs[low..=lead_idx];
    let mut roots: BTreeSet<BigRational> = BTreeSet::new();
    if low > 0 {
        roots.insert(BigRational::zero());
    }
    let divisors_of = |v: &BigInt| -> Result<Vec<u64>> {
        let v = v.abs().to_u64().ok_or_else(|| {
            Error::Capacity(format!("coefficient {v} is too large to list its divisors"))
        })?;
        Ok(divisors(v))
    };
    let residues: Vec<u64> = poly
        .iter()
        .map(|a| a.mod_floor(&BigInt::from(FILTER_PRIME)).to_u64().expect("reduced below the modulus"))
        .collect();
    let numerators = divisors_of(&poly[0])?;
    let denominators = divisors_of(&poly[poly.len() - 1])?;
    for &p in &numerators {
        for &q in &denominators {
            if p.gcd(&q) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let p_mod = if sign > 0 { p % FILTER_PRIME } else { FILTER_PRIME - p % FILTER_PRIME };
                if !is_root_mod(&residues, p_mod, q % FILTER_PRIME) {
                    continue;
                }
                let num = BigInt::from(p) * sign;
                let den = BigInt::from(q);
                if is_root(poly, &num, &den) {
                    roots.insert(BigRational::new(num, den));
                }
            }
        }
    }
    Ok(roots
        .into_iter()
        .filter(|r| match mode {
            RootMode::Rational => true,
            RootMode::Integer => r.is_integer(),
            RootMode::Natural => r.is_integer() && !r.is_negative(),
        })
        .collect())
}

/// The Mersenne prime 2^61 − 1, used to discard candidates cheaply before
/// the exact check.
const FILTER_PRIME: u64 = (1 << 61) - 1;

/// The homogenized evaluation reduced mod [`FILTER_PRIME`]. A true root
/// always gives 0 here.
fn is_root_mod(residues: &[u64], p: u64, q: u64) -> bool {
    let m = FILTER_PRIME as u128;
    let mut acc = 0u128;
    let mut q_pow = 1u128;
    for &a in residues.iter().rev() {
        acc = (acc * p as u128 + a as u128 * q_pow) % m;
        q_pow = q_pow * q as u128 % m;
    }
    acc == 0
}

/// Σ a_i p^i q^(n−i) = 0, the cleared-denominator form of P(p/q) = 0.
fn is_root(poly: &[BigInt], p: &BigInt, q: &BigInt) -> bool {
    // Horner on the homogenized polynomial.
    let mut acc = BigInt::zero();
    let mut q_pow = BigInt::one();
    for a in poly.iter().rev() {
        acc = acc * p + a * &q_pow;
        q_pow *= q;
    }
    acc.is_zero()
}

/// All divisors of n ≥ 1, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for &(p, a) in factor_u64(n).factors() {
        let current = ds.clone();
        let mut pk = 1u64;
        for _ in 0..a {
            pk *= p;
            ds.extend(current.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    ds
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(big(n), big(d))
    }

    #[test]
    fn two_unknowns() {
        let s = solve_linear2(&big(124), &big(365), &big(4567)).unwrap().unwrap();
        assert_eq!((s.x0.clone(), s.y0.clone()), (big(28), big(-3)));
        assert_eq!(s.k_min, big(1));
        let terms = s.natural_terms(10);
        assert_eq!(terms[0], (big(393), big(121)));
        assert_eq!(terms[9], (big(3678), big(1237)));
        assert!(solve_linear2(&big(2), &big(4), &big(3)).unwrap().is_none());
        let s = solve_linear2(&big(6), &big(4), &big(10)).unwrap().unwrap();
        assert_eq!((s.x_step.clone(), s.y_step.clone()), (big(2), big(3)));
    }

    #[test]
    fn sign_variation_cases() {
        assert!(sign_variation(&[3, -7, 2]).unwrap());
        assert!(!sign_variation(&[1, 2, 3]).unwrap());
        assert!(!sign_variation(&[-1, -2]).unwrap());
        assert!(sign_variation(&[0, 0]).is_err());
    }

    #[test]
    fn n_unknowns() {
        let s = solve_linear_n(&[3, -7, 2], -18).unwrap().unwrap();
        assert_eq!(s.homogeneous_basis.len(), 2);
        for k1 in 0..=5 {
            for k2 in 0..=5 {
                let p = [big(k1), big(k1 + 2 * k2), big(2 * k1 + 7 * k2 - 9)];
                assert!(s.parameters_of(&p).is_some(), "({k1}, {k2})");
            }
        }
        let s = solve_linear_n(&[1], 7).unwrap().unwrap();
        assert_eq!(s.particular, vec![big(7)]);
        assert!(s.homogeneous_basis.is_empty());
        assert!(solve_linear_n(&[4, 6], 3).unwrap().is_none());
    }

    #[test]
    fn printed_systems() {
        let e = RationalMatrix::from_int_rows(&[
            vec![0, 3, -6, 6, 4, -5],
            vec![3, -7, 8, -5, 8, 9],
            vec![3, -9, 12, -9, 6, 15],
        ])
        .unwrap();
        let want = RationalMatrix::from_int_rows(&[
            vec![1, 0, -2, 3, 0, -24],
            vec![0, 1, -2, 2, 0, -7],
            vec![0, 0, 0, 0, 1, 4],
        ])
        .unwrap();
        assert_eq!(e.rref(), want);
        // x1 = 2·x3 − 3·x4 − 24, x2 = 2·x3 − 2·x4 − 7, x5 = 4 for free x3, x4.
        for (x3, x4) in [(0i64, 0i64), (1, 5), (-3, 2)] {
            let x = [2 * x3 - 3 * x4 - 24, 2 * x3 - 2 * x4 - 7, x3, x4, 4];
            for r in 0..3 {
                let lhs: BigRational = (0..5).map(|c| e.get(r, c) * rat(x[c], 1)).sum();
                assert_eq!(&lhs, e.get(r, 5));
            }
        }

        let a = RationalMatrix::from_int_rows(&[vec![3, 4], vec![2, 5], vec![-2, -3]]).unwrap();
        let b = [rat(-3, 1), rat(5, 1), rat(1, 1)];
        assert_eq!(
            solve_system(&a, &b).unwrap(),
            SystemSolution::Unique(vec![rat(-5, 1), rat(3, 1)])
        );

        let a = RationalMatrix::from_int_rows(&[
            vec![1, 1, 1],
            vec![1, 2, 4],
            vec![1, 3, 9],
            vec![1, 4, 16],
        ])
        .unwrap();
        let b: Vec<BigRational> = [-1, 3, 3, 5].iter().map(|&v| rat(v, 1)).collect();
        assert_eq!(solve_system(&a, &b).unwrap(), SystemSolution::Inconsistent);
        let id = RationalMatrix::from_int_rows(&[
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ])
        .unwrap();
        assert_eq!(a.augment(&b).unwrap().rref(), id);
    }

    #[test]
    fn five_by_six_family() {
        let a = RationalMatrix::from_int_rows(&[
            vec![1, 2, 3, 4, 5, 6],
            vec![1, 4, 9, 16, 25, -36],
            vec![1, 8, 27, 64, 125, 216],
            vec![1, 16, 81, 256, 625, -1296],
            vec![1, 32, 243, 1024, 3125, 7776],
        ])
        .unwrap();
        let b: Vec<BigRational> = [104, -140, 2750, -7952, 87374].iter().map(|&v| rat(v, 1)).collect();
        let SystemSolution::Parametric { particular, free, basis } = solve_system(&a, &b).unwrap() else {
            panic!("expected a parametric family");
        };
        assert_eq!(free, vec![5]);
        let want_p: Vec<BigRational> = [17833, -31185, 27719, -12469, 2272, 0].iter().map(|&v| rat(v, 1)).collect();
        assert_eq!(particular, want_p);
        let want_b: Vec<BigRational> = [-1980, 3465, -3080, 1386, -252, 1].iter().map(|&v| rat(v, 1)).collect();
        assert_eq!(basis, vec![want_b]);
    }

    #[test]
    fn printed_roots() {
        let a: Vec<BigInt> = [-96, 776, -1568, 134, 1620, -359, -466, 49, 30].iter().map(|&v| big(v)).collect();
        assert_eq!(poly_roots(&a, RootMode::Natural).unwrap(), vec![rat(3, 1)]);
        assert_eq!(
            poly_roots(&a, RootMode::Integer).unwrap(),
            vec![rat(-4, 1), rat(-2, 1), rat(3, 1)]
        );
        assert_eq!(
            poly_roots(&a, RootMode::Rational).unwrap(),
            vec![rat(-4, 1), rat(-2, 1), rat(1, 5), rat(1, 2), rat(2, 3), rat(3, 1)]
        );
        let q = [big(1469), big(-490), big(29)];
        assert_eq!(poly_roots(&q, RootMode::Rational).unwrap(), vec![rat(113, 29), rat(13, 1)]);
        assert_eq!(poly_roots(&q, RootMode::Natural).unwrap(), vec![rat(13, 1)]);
        assert_eq!(poly_roots(&[big(0), big(0), big(1)], RootMode::Natural).unwrap(), vec![rat(0, 1)]);
    }

    #[test]
    fn degree_fourteen_natural_roots() {
        let a: Vec<BigInt> = [
            "2074506308666643852", "-4170138555243755952", "3708600060698625999",
            "-2371615921694294428", "1144052588009550927", "-392768652155202268",
            "93951730922422481", "-15744238825971732", "1864646677195241",
            "-156394532149220", "9205044609900", "-370727876000", "9701590000",
            "-148200000", "1000000",
        ]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
        let want: Vec<BigRational> = [11, 13, 17, 19, 23, 29].iter().map(|&v| rat(v, 1)).collect();
        assert_eq!(poly_roots(&a, RootMode::Natural).unwrap(), want);
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1_000_000).len(), 49);
    }
}
