use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::table::{CoefficientTable, TableKind};
use crate::algebra::arith::{prime_power, totient};
use crate::algebra::{check_zeta_ideal, CyclotomicInt};
use crate::error::{Error, Result};
use crate::oracles::AdoPolynomial;

/// `c_{n,m} = sum_{k<=m} lambda~_k b_{n,m-k}` for `n + m <= D`.
pub fn c_table(b: &CoefficientTable, lambda_tilde: &[BigInt], r: u64) -> Result<CoefficientTable> {
    if b.kind != TableKind::B {
        return Err(Error::InvalidParameter(format!("expected a b table, got {}", b.kind)));
    }
    let d = b.order;
    if lambda_tilde.len() <= d as usize {
        return Err(Error::InvalidParameter(format!("need lambda~ up to index {d}")));
    }
    let mut out = CoefficientTable::new(TableKind::C, Some(r), d);
    for n in 0..=d {
        for m in 0..=d - n {
            let c: BigInt = (0..=m).map(|k| &lambda_tilde[k as usize] * b.at(n, m - k)).sum();
            out.set(&[n, m], c);
        }
    }
    Ok(out)
}

/// `d_{n,m}(r)`: the `y^m` coefficient of the ADO polynomial written in the
/// basis `(zeta_r - 1)^n`, `n < phi(r)`, for `m <= max_m`.
pub fn d_table(a: &AdoPolynomial, max_m: u32) -> Result<CoefficientTable> {
    let r = a.r;
    prime_power(r).ok_or(Error::NotPrimePower(r))?;
    let mut out = CoefficientTable::new(TableKind::D, Some(r), max_m);
    for (m, coeff) in a.y_expansion(max_m)?.iter().enumerate() {
        for (n, d) in coeff.to_offset_basis().into_iter().enumerate() {
            out.set(&[n as u32, m as u32], d);
        }
    }
    Ok(out)
}

/// The `y^m` coefficients `sum_n d_{n,m} (zeta_r - 1)^n` of a `d` table.
pub fn d_reconstruct(d: &CoefficientTable) -> Result<Vec<CyclotomicInt>> {
    let r = d.r.ok_or_else(|| Error::InvalidParameter("d table without r".into()))?;
    let phi = totient(r) as u32;
    (0..=d.order)
        .map(|m| {
            let row: Vec<BigInt> = (0..phi).map(|n| d.at(n, m)).collect();
            CyclotomicInt::from_offset_basis(r, &row)
        })
        .collect()
}

fn zeta_minus_one_powers(r: u64, count: usize) -> Result<Vec<CyclotomicInt>> {
    let zm1 = &CyclotomicInt::zeta(r)? - &CyclotomicInt::one(r)?;
    let mut out = Vec::with_capacity(count);
    let mut p = CyclotomicInt::one(r)?;
    for _ in 0..count {
        out.push(p.clone());
        p = &p * &zm1;
    }
    Ok(out)
}

/// Rows `m` of a `c` table for which every `c_{n,m}`, `n < (J+1) phi(r)`,
/// lies inside the truncation.
fn cl_rows(c: &CoefficientTable, phi: u32, levels: u32) -> Vec<u32> {
    let need = (levels + 1) * phi;
    (0..=c.order).filter(|m| m + need <= c.order + 1).collect()
}

fn push_digits(out: &mut CoefficientTable, offset: &[BigInt], r: u64, levels: u32, m: u32) {
    let base = BigInt::from(r);
    for (i, d) in offset.iter().enumerate() {
        let mut rest = d.clone();
        for j in 0..levels {
            let (q, digit) = rest.div_mod_floor(&base);
            out.set(&[j, i as u32, m], digit);
            rest = q;
        }
        out.set(&[levels, i as u32, m], rest);
    }
}

/// `r`-adic digits `CL_{j,i,m}` with
/// `sum_{n < (J+1)phi} c_{n,m} (zeta-1)^n = sum_{j<=J, i<phi} CL_{j,i,m} r^j (zeta-1)^i`.
///
/// Levels `j < J` hold digits in `[0, r)`; level `J` holds the remainder.
/// Only rows `m` whose needed `c_{n,m}` lie within the truncation are
/// produced.
pub fn cl_digits(c: &CoefficientTable, r: u64, levels: u32) -> Result<CoefficientTable> {
    if c.kind != TableKind::C {
        return Err(Error::InvalidParameter(format!("expected a c table, got {}", c.kind)));
    }
    prime_power(r).ok_or(Error::NotPrimePower(r))?;
    let phi = totient(r) as u32;
    let powers = zeta_minus_one_powers(r, ((levels + 1) * phi) as usize)?;
    let mut out = CoefficientTable::new(TableKind::Cl, Some(r), c.order);
    out.levels = Some(levels);
    for m in cl_rows(c, phi, levels) {
        let mut sum = CyclotomicInt::zero(r)?;
        for (n, p) in powers.iter().enumerate() {
            let v = c.at(n as u32, m);
            if !v.is_zero() {
                sum.add_assign_ref(&p.scale(&v));
            }
        }
        push_digits(&mut out, &sum.to_offset_basis(), r, levels, m);
    }
    Ok(out)
}

/// Same digits computed block by block: `(zeta-1)^{k phi + i}` is rewritten
/// as `p^k u^k (zeta-1)^i` with the unit `u` of [`check_zeta_ideal`], so
/// block `k` lands at `r`-adic level `k` when `r = p` is prime.
pub fn cl_digits_via_unit(c: &CoefficientTable, r: u64, levels: u32) -> Result<CoefficientTable> {
    if c.kind != TableKind::C {
        return Err(Error::InvalidParameter(format!("expected a c table, got {}", c.kind)));
    }
    let (p, l) = prime_power(r).ok_or(Error::NotPrimePower(r))?;
    if l != 1 {
        return Err(Error::InvalidParameter(format!("block route needs a prime, got {r}")));
    }
    let phi = totient(r) as u32;
    let u = check_zeta_ideal(r)?;
    let low = zeta_minus_one_powers(r, phi as usize)?;
    let mut out = CoefficientTable::new(TableKind::Cl, Some(r), c.order);
    out.levels = Some(levels);
    for m in cl_rows(c, phi, levels) {
        // level-k integer coordinates, before carrying
        let mut raw = vec![BigInt::zero(); phi as usize];
        let mut scale = BigInt::from(1);
        let mut u_pow = CyclotomicInt::one(r)?;
        for k in 0..=levels {
            let mut block = CyclotomicInt::zero(r)?;
            for i in 0..phi {
                let v = c.at(k * phi + i, m);
                if !v.is_zero() {
                    block.add_assign_ref(&(&u_pow * &low[i as usize]).scale(&v));
                }
            }
            for (acc, d) in raw.iter_mut().zip(block.to_offset_basis()) {
                *acc += &scale * d;
            }
            scale *= p;
            u_pow = &u_pow * &u;
        }
        push_digits(&mut out, &raw, r, levels, m);
    }
    Ok(out)
}

/// `sum_{j, i} CL_{j,i,m} r^j (zeta-1)^i` for one row.
pub fn cl_reconstruct(cl: &CoefficientTable, m: u32) -> Result<CyclotomicInt> {
    let r = cl.r.ok_or_else(|| Error::InvalidParameter("CL table without r".into()))?;
    let levels = cl.levels.unwrap_or(0);
    let phi = totient(r) as u32;
    let row: Vec<BigInt> =
        (0..phi).map(|i| (0..=levels).map(|j| cl.get(&[j, i, m]) * BigInt::from(r).pow(j)).sum()).collect();
    CyclotomicInt::from_offset_basis(r, &row)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn unknot_b(order: u32) -> CoefficientTable {
        let mut b = CoefficientTable::new(TableKind::B, None, order);
        b.set(&[0, 0], BigInt::from(1));
        b
    }

    #[test]
    fn c_of_unknot_and_identity_row() {
        let b = unknot_b(3);
        let c = c_table(&b, &ints(&[1, 0, 0, 0]), 3).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.at(0, 0), BigInt::from(1));

        let mut b = CoefficientTable::new(TableKind::B, None, 2);
        b.set(&[1, 1], BigInt::from(5));
        b.set(&[0, 2], BigInt::from(-2));
        let c = c_table(&b, &ints(&[1, 0, 0]), 2).unwrap();
        assert_eq!(c.coeffs, b.coeffs);
        assert!(c_table(&b, &ints(&[1]), 2).is_err());
    }

    #[test]
    fn d_of_unknot() {
        let d = d_table(&AdoPolynomial::one(3).unwrap(), 3).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.at(0, 0), BigInt::from(1));
    }

    #[test]
    fn digits_of_a_constant_row() {
        let mut c = CoefficientTable::new(TableKind::C, Some(3), 4);
        c.set(&[0, 0], BigInt::from(17));
        let cl = cl_digits(&c, 3, 1).unwrap();
        // 17 = 2 + 3 * 5
        assert_eq!(cl.get(&[0, 0, 0]), BigInt::from(2));
        assert_eq!(cl.get(&[1, 0, 0]), BigInt::from(5));
        assert_eq!(cl, cl_digits_via_unit(&c, 3, 1).unwrap());
    }
}
