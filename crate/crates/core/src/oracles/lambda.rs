use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::arith::binomial;
use crate::algebra::{BivariateSeries, LaurentPoly};
use crate::error::Result;

/// `lambda_m` with `A(t) = sum_m lambda_m (t - 1)^m`, for `m <= max_m`.
pub fn lambda_coeffs(a: &LaurentPoly, max_m: u32) -> Result<Vec<BigInt>> {
    let s = BivariateSeries::from_laurent(a, max_m)?;
    Ok((0..=max_m).map(|m| s.coeff(0, m)).collect())
}

/// Inner sum `sum_k C(m, k) (-1)^{m-k} C(r k, j)`.
pub fn binomial_inner_sum(r: u64, m: u32, j: u32) -> BigInt {
    (0..=m)
        .map(|k| {
            let term = binomial(m as i64, k) * binomial(r as i64 * k as i64, j);
            if (m - k).is_multiple_of(2) {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// True iff the inner sum vanishes; expected whenever `m > j`.
pub fn binomial_lemma_check(r: u64, m: u32, j: u32) -> bool {
    binomial_inner_sum(r, m, j).is_zero()
}

/// `lambda~_j(r) = sum_m lambda_m sum_k C(m, k) (-1)^{m-k} C(r k, j)`, the
/// coefficient of `(t - 1)^j` in `A(t^r)`. Terms with `m > j` vanish, so
/// `lambda` needs only `j + 1` entries.
pub fn lambda_tilde(lambda: &[BigInt], r: u64, j: u32) -> BigInt {
    lambda.iter().enumerate().take(j as usize + 1).map(|(m, l)| l * binomial_inner_sum(r, m as u32, j)).sum()
}

/// The row `lambda~_0(r), ..., lambda~_max_j(r)`.
pub fn lambda_tilde_row(lambda: &[BigInt], r: u64, max_j: u32) -> Vec<BigInt> {
    (0..=max_j).map(|j| lambda_tilde(lambda, r, j)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Var;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_coeffs(&LaurentPoly::one(Var::T), 3).unwrap(), ints(&[1, 0, 0, 0]));
        let tre = LaurentPoly::from_terms(Var::T, [(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(lambda_coeffs(&tre, 4).unwrap(), ints(&[1, 0, 1, -1, 1]));
        let fig = LaurentPoly::from_terms(Var::T, [(1, -1), (0, 3), (-1, -1)]);
        assert_eq!(lambda_coeffs(&fig, 4).unwrap(), ints(&[1, 0, -1, 1, -1]));
    }

    #[test]
    fn binomial_lemma_instances() {
        assert_eq!(binomial_inner_sum(3, 2, 1), BigInt::zero());
        assert!(binomial_lemma_check(2, 1, 0));
        assert!(binomial_lemma_check(5, 4, 2));
        assert!(!binomial_lemma_check(3, 2, 2));
    }

    #[test]
    fn lambda_tilde_examples() {
        let tre = ints(&[1, 0, 1, -1, 1]);
        assert_eq!(lambda_tilde(&tre, 3, 0), BigInt::from(1));
        assert_eq!(lambda_tilde(&tre, 3, 1), BigInt::zero());
        // A(t^3) = t^3 - 1 + t^-3 = 1 + 9y^2 + ...
        assert_eq!(lambda_tilde(&tre, 3, 2), BigInt::from(9));
    }
}
