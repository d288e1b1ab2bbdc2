//! The generalized Pell equation a·x² − b·y² + c = 0.
//!
//! A 2×2 integer matrix A with determinant 1 that preserves the form
//! a·x² − b·y² maps every solution to a larger one. Starting from the
//! minimal solutions (x₀, ±y₀), the powers A^n generate two infinite
//! families. Entries grow geometrically, so iterates are `BigInt`.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Default search bound for α and for the minimal y.
pub const DEFAULT_BOUND: u64 = 1_000_000;

/// Row-major 2×2 integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix2(pub [[BigInt; 2]; 2]);

impl Matrix2 {
    /// Builds a matrix from small integer entries.
    pub fn from_i64(m: [[i64; 2]; 2]) -> Self {
        Matrix2(m.map(|row| row.map(BigInt::from)))
    }

    /// The identity matrix.
    pub fn identity() -> Self {
        Self::from_i64([[1, 0], [0, 1]])
    }

    /// Matrix product self · rhs.
    pub fn mul(&self, rhs: &Matrix2) -> Matrix2 {
        let (a, b) = (&self.0, &rhs.0);
        Matrix2([
            [
                &a[0][0] * &b[0][0] + &a[0][1] * &b[1][0],
                &a[0][0] * &b[0][1] + &a[0][1] * &b[1][1],
            ],
            [
                &a[1][0] * &b[0][0] + &a[1][1] * &b[1][0],
                &a[1][0] * &b[0][1] + &a[1][1] * &b[1][1],
            ],
        ])
    }

    /// self · (x, y).
    pub fn apply(&self, v: &(BigInt, BigInt)) -> (BigInt, BigInt) {
        let m = &self.0;
        (
            &m[0][0] * &v.0 + &m[0][1] * &v.1,
            &m[1][0] * &v.0 + &m[1][1] * &v.1,
        )
    }

    /// self^n by repeated squaring.
    pub fn pow(&self, mut n: u64) -> Matrix2 {
        let mut acc = Matrix2::identity();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn det(&self) -> BigInt {
        let m = &self.0;
        &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
    }
}

/// The basis matrix [[α, q], [(a/b)·q, α]] for the smallest α ≥ 2 such that
/// q = √((b/a)(α² − 1)) and (a/b)·q are both integers. Then
/// a·α² − b·γ² = a with γ = (a/b)·q, the determinant is 1 and the map
/// preserves a·x² − b·y². `None` when no α ≤ `bound` qualifies.
pub fn basis_matrix(a: u64, b: u64, bound: u64) -> Result<Option<Matrix2>> {
    if a == 0 || b == 0 {
        return Err(domain("basis_matrix needs a >= 1 and b >= 1"));
    }
    let (a, b) = (a as u128, b as u128);
    for alpha in 2..=bound as u128 {
        let num = b * (alpha * alpha - 1);
        if num % a != 0 {
            continue;
        }
        let q2 = num / a;
        let q = q2.sqrt();
        if q * q != q2 || (a * q) % b != 0 {
            continue;
        }
        let gamma = a * q / b;
        return Ok(Some(Matrix2([
            [BigInt::from(alpha), BigInt::from(q)],
            [BigInt::from(gamma), BigInt::from(alpha)],
        ])));
    }
    Ok(None)
}

/// The minimal solutions S0 = (x, y) and S1 = (x, −y): the smallest y ≥ 1
/// for which (b·y² − c)/a is a nonnegative perfect square x². `None` when
/// no y ≤ `bound` works.
pub fn minimal_solutions(
    a: u64,
    b: u64,
    c: i64,
    bound: u64,
) -> Result<Option<((BigInt, BigInt), (BigInt, BigInt))>> {
    if a == 0 || b == 0 {
        return Err(domain("minimal_solutions needs a >= 1 and b >= 1"));
    }
    let (a, b, c) = (a as i128, b as i128, c as i128);
    for y in 1..=bound as i128 {
        let num = b * y * y - c;
        if num < 0 || num % a != 0 {
            continue;
        }
        let d = num / a;
        let x = d.sqrt();
        if x * x == d {
            let (x, y) = (BigInt::from(x), BigInt::from(y));
            return Ok(Some(((x.clone(), y.clone()), (x, -y))));
        }
    }
    Ok(None)
}

/// Which minimal solution a family starts from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// Start at (x₀, y₀).
    #[default]
    S0,
    /// Start at (x₀, −y₀).
    S1,
}

/// Solver for a·x² − b·y² + c = 0 holding the basis matrix and the two
/// minimal solutions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadSolver {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub matrix: Matrix2,
    pub s0: (BigInt, BigInt),
    pub s1: (BigInt, BigInt),
}

impl QuadSolver {
    /// Finds the basis matrix and the minimal solutions, each searched up
    /// to `bound`. A search that runs out of room is a capacity error, since
    /// a larger bound may still succeed.
    pub fn new(a: u64, b: u64, c: i64, bound: u64) -> Result<Self> {
        if c == 0 {
            return Err(domain("the constant term c must be nonzero"));
        }
        let matrix = basis_matrix(a, b, bound)?.ok_or_else(|| {
            Error::Capacity(format!("no basis matrix for ({a}, {b}) with alpha <= {bound}"))
        })?;
        let (s0, s1) = minimal_solutions(a, b, c, bound)?.ok_or_else(|| {
            Error::Capacity(format!("no minimal solution for ({a}, {b}, {c}) with y <= {bound}"))
        })?;
        Ok(QuadSolver {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            matrix,
            s0,
            s1,
        })
    }

    fn start(&self, which: Branch) -> &(BigInt, BigInt) {
        match which {
            Branch::S0 => &self.s0,
            Branch::S1 => &self.s1,
        }
    }

    /// A^n applied to the chosen minimal solution.
    pub fn iterate(&self, n: u64, which: Branch) -> (BigInt, BigInt) {
        self.matrix.pow(n).apply(self.start(which))
    }

    /// The family A^0·S, A^1·S, ... as an endless stream.
    pub fn solutions(&self, which: Branch) -> impl Iterator<Item = (BigInt, BigInt)> + '_ {
        std::iter::successors(Some(self.start(which).clone()), move |v| {
            Some(self.matrix.apply(v))
        })
    }

    /// a·x² − b·y² + c, zero exactly on solutions.
    pub fn form_value(&self, v: &(BigInt, BigInt)) -> BigInt {
        &self.a * &v.0 * &v.0 - &self.b * &v.1 * &v.1 + &self.c
    }
}

/// Affine map with rational coefficients
/// x = (p·u + q·v + r)/d and y = (p'·u + q'·v + r')/d'.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineMap {
    pub x_num: [BigInt; 3],
    pub x_den: BigInt,
    pub y_num: [BigInt; 3],
    pub y_den: BigInt,
}

impl AffineMap {
    /// Builds the map from small integer coefficients `[p, q, r]` and a
    /// nonzero denominator for each coordinate.
    pub fn new(x_num: [i64; 3], x_den: i64, y_num: [i64; 3], y_den: i64) -> Result<Self> {
        if x_den == 0 || y_den == 0 {
            return Err(domain("affine map denominators must be nonzero"));
        }
        Ok(AffineMap {
            x_num: x_num.map(BigInt::from),
            x_den: x_den.into(),
            y_num: y_num.map(BigInt::from),
            y_den: y_den.into(),
        })
    }

    /// (u, v) ↦ (u, v).
    pub fn identity() -> Self {
        Self::new([1, 0, 0], 1, [0, 1, 0], 1).expect("nonzero denominators")
    }

    /// The image of (u, v) when both coordinates are integers.
    pub fn apply(&self, u: &BigInt, v: &BigInt) -> Option<(BigInt, BigInt)> {
        let image = |num: &[BigInt; 3], den: &BigInt| {
            let n = &num[0] * u + &num[1] * v + &num[2];
            let (q, r) = n.div_rem(den);
            r.is_zero().then_some(q)
        };
        Some((image(&self.x_num, &self.x_den)?, image(&self.y_num, &self.y_den)?))
    }
}

/// Maps a stream of (u, v) solutions through `map`, keeping the pairs whose
/// images are both integers.
pub fn back_substitute<'a, I>(uv: I, map: &'a AffineMap) -> impl Iterator<Item = (BigInt, BigInt)> + 'a
where
    I: IntoIterator<Item = (BigInt, BigInt)> + 'a,
{
    uv.into_iter().filter_map(move |(u, v)| map.apply(&u, &v))
}

/// Positive solutions of x² = 2y⁴ − 1 found among the first `limit_n` + 1
/// solutions (x, t) of x² − 2t² = −1, generated by [[3, 4], [2, 3]] from
/// (1, 1). A pair is kept when t is a perfect square y².
pub fn x2_2y4(limit_n: u64) -> Vec<(BigInt, BigInt)> {
    let step = Matrix2::from_i64([[3, 4], [2, 3]]);
    std::iter::successors(Some((BigInt::one(), BigInt::one())), |v| Some(step.apply(v)))
        .take(limit_n as usize + 1)
        .filter_map(|(x, t)| {
            let y = t.sqrt();
            (&y * &y == t && t.is_positive()).then_some((x, y))
        })
        .collect()
}
