//! Alexander polynomial from the reduced Burau representation.

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::{LaurentPoly, Var};
use crate::error::{Error, Result};
use crate::knots::BraidWord;

type Matrix = Vec<Vec<LaurentPoly>>;

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { LaurentPoly::one(Var::T) } else { LaurentPoly::zero(Var::T) }).collect())
        .collect()
}

fn t_pow(k: i64, c: i64) -> LaurentPoly {
    LaurentPoly::monomial(Var::T, k, c)
}

/// Reduced Burau matrix of a single letter on `n` strands.
fn burau_letter(n: usize, letter: i32) -> Matrix {
    let dim = n - 1;
    let mut m = identity(dim);
    let i = letter.unsigned_abs() as usize;
    let inv = letter < 0;
    let e = if inv { -1 } else { 1 };
    if n == 2 {
        m[0][0] = t_pow(e, -1);
        return m;
    }
    if i == 1 {
        m[0][0] = t_pow(e, -1);
        m[1][0] = if inv { t_pow(-1, 1) } else { t_pow(0, 1) };
    } else if i == n - 1 {
        let k = dim - 1;
        m[k - 1][k] = if inv { t_pow(0, 1) } else { t_pow(1, 1) };
        m[k][k] = t_pow(e, -1);
    } else {
        let k = i - 1;
        m[k - 1][k] = if inv { t_pow(0, 1) } else { t_pow(1, 1) };
        m[k][k] = t_pow(e, -1);
        m[k + 1][k] = if inv { t_pow(-1, 1) } else { t_pow(0, 1) };
    }
    m
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![LaurentPoly::zero(Var::T); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

/// Fraction-free (Bareiss) determinant over `Z[t, t^-1]`.
fn determinant(mut m: Matrix) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one(Var::T);
    }
    let mut sign = 1;
    let mut prev = LaurentPoly::one(Var::T);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return LaurentPoly::zero(Var::T),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss step is exact");
            }
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].scale(&BigInt::from(sign))
}

/// Conway-normalized Alexander polynomial of the closure (any number of
/// components) in `A = t^{1/2}`, with `A(K+) - A(K-) = (A - A^-1) A(K0)`
/// for `K+` the closure containing `sigma_i`.
pub fn alexander_link(b: &BraidWord) -> Result<LaurentPoly> {
    let n = b.strands();
    if n == 1 {
        return Ok(LaurentPoly::one(Var::A));
    }
    let psi = b.letters().iter().fold(identity(n - 1), |acc, &l| mat_mul(&acc, &burau_letter(n, l)));
    let mut shifted = psi;
    for (i, row) in shifted.iter_mut().enumerate() {
        row[i] = &row[i] - &LaurentPoly::one(Var::T);
    }
    let det = determinant(shifted);
    // det(psi - I) (1 - t) / (1 - t^n), computed in s = t^{1/2}
    let num = &det.substitute_power(2).with_var(Var::A) * &LaurentPoly::from_terms(Var::A, [(0, 1), (2, -1)]);
    let den = LaurentPoly::from_terms(Var::A, [(0, 1), (2 * n as i64, -1)]);
    let quotient = num
        .div_exact(&den)
        .ok_or_else(|| Error::DivisionFailed(format!("Burau determinant of {b} not divisible by 1 - t^{n}")))?;
    let sign = if n % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    let shift = -(b.writhe() - n as i64 + 1);
    Ok(quotient.shifted(shift).scale(&sign).substitute_power(-1))
}

/// Alexander polynomial of a knot: symmetric in `t`, with `A(1) = 1`.
pub fn alexander(b: &BraidWord) -> Result<LaurentPoly> {
    b.ensure_knot()?;
    let a = alexander_link(b)?;
    a.compress_exponents(2, Var::T).ok_or_else(|| Error::OddExponent { var: 'a', exponent: a.max_exp().unwrap_or(0) })
}
