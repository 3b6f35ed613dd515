//! Small integer helpers shared by the arithmetic kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::{LaurentPoly, Var};

/// Returns `(p, l)` with `r = p^l`, `l >= 1`, or `None`.
pub fn prime_power(r: u64) -> Option<(u64, u32)> {
    if r < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= r && !r.is_multiple_of(p) {
        p += 1;
    }
    if !r.is_multiple_of(p) {
        p = r;
    }
    let mut rest = r;
    let mut l = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        l += 1;
    }
    (rest == 1).then_some((p, l))
}

/// Euler's totient, for any `m >= 1`.
pub fn totient(m: u64) -> u64 {
    let mut result = m;
    let mut rest = m;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}

/// Generalized binomial coefficient `C(n, k)` for any integer `n`.
pub fn binomial(n: i64, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k as i64 {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// Representative of `a` in `[0, modulus)`.
pub fn mod_floor(a: &BigInt, modulus: &BigInt) -> BigInt {
    a.mod_floor(modulus)
}

/// `p`-adic valuation; `None` for zero.
pub fn valuation(a: &BigInt, p: u64) -> Option<u32> {
    if a.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut a = a.abs();
    let mut v = 0;
    loop {
        let (q, r) = a.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        a = q;
        v += 1;
    }
}

/// Symmetric quantum integer `[n] = (q^n - q^-n)/(q - q^-1)`.
pub fn quantum_integer(n: u32) -> LaurentPoly {
    let mut p = LaurentPoly::zero(Var::Q);
    for k in 0..n as i64 {
        p.add_term(n as i64 - 1 - 2 * k, &BigInt::one());
    }
    p
}

/// Symmetric quantum binomial `[n choose k]_q` as a Laurent polynomial in `q`.
pub fn quantum_binomial(n: u32, k: u32) -> LaurentPoly {
    if k > n {
        return LaurentPoly::zero(Var::Q);
    }
    // rows[j] holds [i choose j] for the current i
    let mut rows = vec![LaurentPoly::one(Var::Q)];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i as usize + 1);
        for j in 0..=i {
            let mut term = LaurentPoly::zero(Var::Q);
            if j < i {
                term = &term + &rows[j as usize].shifted(-(j as i64));
            }
            if j > 0 {
                term = &term + &rows[j as usize - 1].shifted((i - j) as i64);
            }
            next.push(term);
        }
        rows = next;
    }
    rows.swap_remove(k as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(16), Some((2, 4)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(97), Some((97, 1)));
    }

    #[test]
    fn totients() {
        assert_eq!(totient(9), 6);
        assert_eq!(totient(18), 6);
        assert_eq!(totient(16), 8);
        assert_eq!(totient(2), 1);
    }

    #[test]
    fn negative_binomials() {
        // (1+x)^-1 = 1 - x + x^2 - ...
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn q_binomial_matches_factorial_form() {
        // [4 choose 2] = [4][3]/([2][1]) = q^4 + q^2 + 2 + q^-2 + q^-4
        let b = quantum_binomial(4, 2);
        let num = &quantum_integer(4) * &quantum_integer(3);
        assert_eq!(&b * &quantum_integer(2), num);
        assert_eq!(b.eval_at_one(), BigInt::from(6));
    }
}
