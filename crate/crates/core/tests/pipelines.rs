use adoseries::algebra::{eval_root, CyclotomicInt};
use adoseries::coefficients::{
    c_table, check_unified_vs_ado, cl_digits, cl_digits_via_unit, cl_reconstruct, congruence_report, corollary_report,
    d_reconstruct, d_table, mod_r_congruence_check, unified_side, valuation_mod_r, TableKind, Valuation,
};
use adoseries::knots::{knot_table, BraidWord, KNOT_NAMES};
use adoseries::oracles::{ado, alexander, lambda_coeffs, lambda_tilde_row};
use adoseries::universal::{b_table, f_infinity};
use adoseries::{BivariateSeries, Error};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

fn table(name: &str) -> BraidWord {
    knot_table(name).unwrap()
}

fn c_of(name: &str, r: u64, order: u32) -> adoseries::coefficients::CoefficientTable {
    let b = table(name);
    let lambda = lambda_coeffs(&alexander(&b).unwrap(), order).unwrap();
    c_table(&b_table(&b, order).unwrap(), &lambda_tilde_row(&lambda, r, order), r).unwrap()
}

#[test]
fn c_table_is_the_product_series() {
    for name in ["trefoil", "figure8", "5_2"] {
        for r in [2, 3, 4, 5] {
            let b = table(name);
            let a = BivariateSeries::from_laurent(&alexander(&b).unwrap().substitute_power(r as i64), 5).unwrap();
            let product = &a * &f_infinity(&b, 5).unwrap();
            let c = c_of(name, r, 5);
            assert_eq!(c.to_series().unwrap(), product, "{name} r={r}");
            assert_eq!(eval_root(&c.to_series().unwrap(), r).unwrap(), unified_side(&b, r, 5).unwrap());
        }
    }
}

#[test]
fn c_agrees_with_b_mod_r_below_r() {
    let c = c_of("trefoil", 3, 5);
    let b = b_table(&table("trefoil"), 5).unwrap();
    for m in 0..3 {
        for n in 0..=5 - m {
            assert!((c.at(n, m) - b.at(n, m)).mod_floor(&BigInt::from(3)).is_zero(), "({n},{m})");
        }
    }
}

#[test]
fn d_table_round_trip() {
    let a = ado(&table("trefoil"), 3).unwrap();
    let d = d_table(&a, 4).unwrap();
    assert_eq!(d.kind, TableKind::D);
    assert!(d.iter().all(|(k, _)| k[0] < 2));
    assert_eq!(d_reconstruct(&d).unwrap(), a.y_expansion(4).unwrap());

    let a2 = ado(&table("figure8"), 2).unwrap();
    let d2 = d_table(&a2, 3).unwrap();
    assert!(d2.iter().all(|(k, _)| k[0] == 0));
    let ys = a2.y_expansion(3).unwrap();
    for m in 0..=3 {
        assert_eq!(&d2.at(0, m), ys[m as usize].as_integer().unwrap());
    }
    assert!(d_table(&ado(&table("trefoil"), 2).unwrap(), 1).is_ok());
}

#[test]
fn cl_digits_round_trip() {
    let c = c_of("trefoil", 3, 5);
    let cl = cl_digits(&c, 3, 1).unwrap();
    assert_eq!(cl, cl_digits_via_unit(&c, 3, 1).unwrap());
    let zm1 = &CyclotomicInt::zeta(3).unwrap() - &CyclotomicInt::one(3).unwrap();
    for m in 0..=2 {
        let mut expected = CyclotomicInt::zero(3).unwrap();
        for n in 0..4 {
            expected.add_assign_ref(&zm1.pow(n).scale(&c.at(n, m)));
        }
        assert_eq!(cl_reconstruct(&cl, m).unwrap(), expected, "m={m}");
        for j in 0..1 {
            for i in 0..2 {
                let digit = cl.get(&[j, i, m]);
                assert!(digit >= BigInt::zero() && digit < BigInt::from(3));
            }
        }
    }
    let unknot = c_of("unknot", 3, 5);
    let cl = cl_digits(&unknot, 3, 1).unwrap();
    assert_eq!(cl.len(), 1);
    assert_eq!(cl.get(&[0, 0, 0]), BigInt::from(1));
}

#[test]
fn factorization_examples() {
    assert!(check_unified_vs_ado(&table("unknot"), "unknot", 5, 5, 5).unwrap().passed());
    assert!(check_unified_vs_ado(&table("figure8"), "figure8", 4, 5, 3).unwrap().passed());
    assert!(matches!(check_unified_vs_ado(&table("trefoil"), "trefoil", 3, 3, 4), Err(Error::InvalidParameter(_))));
}

#[test]
fn congruence_for_primes() {
    for name in KNOT_NAMES {
        for r in [2, 3, 5] {
            assert!(mod_r_congruence_check(&table(name), name, r, 5).unwrap().passed(), "{name} r={r}");
        }
    }
    for name in ["trefoil", "figure8", "5_1", "5_2"] {
        assert!(mod_r_congruence_check(&table(name), name, 7, 5).unwrap().passed(), "{name} r=7");
    }
    let rep = congruence_report(&table("trefoil"), "trefoil", 5, 5).unwrap();
    assert_eq!(rep.per_m.iter().map(|e| e.m).collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);
}

// For r = p^l with l >= 2 the congruence holds modulo p and fails modulo r.
#[test]
fn congruence_for_prime_powers() {
    for name in ["trefoil", "figure8", "5_2"] {
        for (r, p) in [(4u64, 2u64), (8, 2), (9, 3)] {
            let b = table(name);
            let bt = b_table(&b, 5).unwrap();
            let dt = d_table(&ado(&b, r).unwrap(), 5.min(r as u32 - 1)).unwrap();
            let phi = (r / p) * (p - 1);
            for m in 0..=5.min(r as u32 - 1) {
                for n in (0..phi as u32).filter(|n| n + m <= 5) {
                    assert!(
                        (dt.at(n, m) - bt.at(n, m)).mod_floor(&BigInt::from(p)).is_zero(),
                        "{name} r={r} ({n},{m})"
                    );
                }
            }
            assert!(!congruence_report(&b, name, r, 5).unwrap().passed(), "{name} r={r}");
            assert!(matches!(
                mod_r_congruence_check(&b, name, r, 5),
                Err(Error::CongruenceFailure { modulus, .. }) if modulus == r
            ));
        }
    }
}

#[test]
fn corollary() {
    for name in KNOT_NAMES {
        for r in [2, 3, 5] {
            let rep = corollary_report(&table(name), name, r, 5).unwrap();
            assert!(rep.passed(), "{name} r={r}: {:?}", rep.failures);
        }
    }
}

#[test]
fn valuation_examples() {
    assert_eq!(valuation_mod_r(&table("unknot"), 3, 5, 4).unwrap(), Valuation::Infinite);
    assert!(valuation_mod_r(&table("trefoil"), 2, 5, 4).unwrap().at_least(2));
    assert!(valuation_mod_r(&table("trefoil"), 3, 5, 4).unwrap().at_least(3));
    for name in KNOT_NAMES {
        for r in [2, 3, 5] {
            assert!(valuation_mod_r(&table(name), r, 5, 5).unwrap().at_least(r as u32), "{name} r={r}");
        }
    }
}
