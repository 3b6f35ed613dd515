//! Matrix coefficients of the braiding and of the pivotal cups and caps on
//! the Verma basis `v_0, v_1, ...`.
//!
//! The factor `q^{alpha^2/2}` of every crossing is left out; callers track
//! it through the writhe.

use crate::algebra::arith::quantum_binomial;
use crate::algebra::QaLaurent;

/// Coefficient of the `n`-th summand of a crossing on `v_a (x) v_b`.
///
/// A positive crossing sends `v_a (x) v_b` to `v_{b+n} (x) v_{a-n}`, a
/// negative one to `v_{b-n} (x) v_{a+n}`. `None` when `E^n` would lower
/// past `v_0`.
pub fn crossing_weight(sign: i8, a: u32, b: u32, n: u32) -> Option<QaLaurent> {
    let (a64, b64, n64) = (a as i64, b as i64, n as i64);
    if sign > 0 {
        if n > a {
            return None;
        }
        let half = n64 * (n64 - 1) / 2;
        let diag = QaLaurent::monomial(half + 2 * (a64 - n64) * (b64 + n64), -(a64 + b64), 1);
        let binom = QaLaurent::from(&quantum_binomial(n + b, b));
        Some(&(&diag * &binom) * &QaLaurent::curly_falling(b64, n))
    } else {
        if n > b {
            return None;
        }
        let half = -n64 * (n64 - 1) / 2;
        let sgn = if n.is_multiple_of(2) { 1 } else { -1 };
        let diag = QaLaurent::monomial(half - 2 * a64 * b64, a64 + b64, sgn);
        let binom = QaLaurent::from(&quantum_binomial(n + a, a));
        Some(&(&diag * &binom) * &QaLaurent::curly_falling(a64, n))
    }
}

/// Output indices `(left, right)` of the `n`-th summand.
pub fn crossing_targets(sign: i8, a: u32, b: u32, n: u32) -> (u32, u32) {
    if sign > 0 {
        (b + n, a - n)
    } else {
        (b - n, a + n)
    }
}

/// All summands of a crossing on `v_i (x) v_j` with `n <= order`, as
/// `(left index, right index, coefficient)`.
pub fn crossing_weights(i: u32, j: u32, sign: i8, order: u32) -> Vec<(u32, u32, QaLaurent)> {
    (0..=order)
        .filter_map(|n| {
            let w = crossing_weight(sign, i, j, n)?;
            let (l, r) = crossing_targets(sign, i, j, n);
            Some((l, r, w))
        })
        .collect()
}

/// `K v_i = A q^{-2i} v_i`, the weight of a clockwise cap.
pub fn pivotal(i: u32) -> QaLaurent {
    QaLaurent::monomial(-2 * i as i64, 1, 1)
}

/// `K^{-1} v_i`, the weight of a counterclockwise cup.
pub fn pivotal_inverse(i: u32) -> QaLaurent {
    QaLaurent::monomial(2 * i as i64, -1, 1)
}
