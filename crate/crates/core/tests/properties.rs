use adoseries::algebra::{eval_root, laurent_to_series, series_mul};
use adoseries::knots::{closure_to_long, normalize_writhe, resolutions, BraidWord, KnotCombination, SingularBraidWord};
use adoseries::oracles::{alexander_link, lambda_coeffs, lambda_tilde};
use adoseries::universal::f_infinity;
use adoseries::vassiliev::{evaluate, Functional};
use adoseries::{BivariateSeries, CyclotomicInt, LaurentPoly, Var};
use num_bigint::BigInt;
use proptest::prelude::*;

const CONDUCTORS: [u64; 12] = [2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 18];
const ROOTS: [u64; 15] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27];

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn cyclo(conductor: u64) -> impl Strategy<Value = CyclotomicInt> {
    prop::collection::vec(-20i64..20, conductor as usize)
        .prop_map(move |c| CyclotomicInt::from_poly(conductor, big(&c)).unwrap())
}

fn cyclo_triple() -> impl Strategy<Value = (CyclotomicInt, CyclotomicInt, CyclotomicInt)> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(|m| (cyclo(m), cyclo(m), cyclo(m)))
}

fn laurent(var: Var) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..5, -9i64..10), 0..6)
        .prop_map(move |t| LaurentPoly::from_terms(var, t.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn series(order: u32) -> impl Strategy<Value = BivariateSeries> {
    prop::collection::vec((0u32..=order, 0u32..=order, -9i64..10), 0..8).prop_map(move |t| {
        BivariateSeries::from_terms(
            order,
            t.into_iter().filter(|(n, m, _)| n + m <= order).map(|(n, m, c)| (n, m, BigInt::from(c))),
        )
    })
}

fn braid(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |s| {
        prop::collection::vec((1..s as i32, any::<bool>()), 0..=max_len)
            .prop_map(move |l| BraidWord::new(s, l.into_iter().map(|(g, p)| if p { g } else { -g }).collect()).unwrap())
    })
}

fn knot_braid(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    braid(max_strands, max_len).prop_filter("closure must be a knot", BraidWord::is_knot)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclotomic_ring_axioms((a, b, c) in cyclo_triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        let one = CyclotomicInt::one(a.conductor()).unwrap();
        prop_assert_eq!(&a * &one, a.clone());
    }

    #[test]
    fn galois_is_multiplicative((a, b, _c) in cyclo_triple()) {
        let m = a.conductor();
        for k in (1..m).filter(|k| num_integer::gcd(*k, m) == 1) {
            prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
        }
    }

    #[test]
    fn laurent_ring_axioms(a in laurent(Var::Q), b in laurent(Var::Q), c in laurent(Var::Q)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn series_ring_axioms(a in series(4), b in series(4), c in series(4)) {
        prop_assert_eq!(series_mul(&series_mul(&a, &b), &c), series_mul(&a, &series_mul(&b, &c)));
        prop_assert_eq!(series_mul(&a, &(&b + &c)), &series_mul(&a, &b) + &series_mul(&a, &c));
        prop_assert_eq!(series_mul(&a, &b), series_mul(&b, &a));
    }

    #[test]
    fn offset_basis_round_trip(r in prop::sample::select(ROOTS.to_vec()), seed in prop::collection::vec(-30i64..30, 27)) {
        let x = CyclotomicInt::from_poly(r, big(&seed[..r as usize])).unwrap();
        let d = x.to_offset_basis();
        prop_assert_eq!(CyclotomicInt::from_offset_basis(r, &d).unwrap(), x);
        let phi = d.len();
        let y = CyclotomicInt::from_offset_basis(r, &big(&seed[..phi])).unwrap();
        prop_assert_eq!(y.to_offset_basis(), big(&seed[..phi]));
    }

    #[test]
    fn laurent_to_series_back_substitution(p in laurent(Var::T), order in 0u32..6) {
        let s = laurent_to_series(&p, order).unwrap();
        let t_minus_one = LaurentPoly::from_terms(Var::T, [(1, BigInt::from(1)), (0, BigInt::from(-1))]);
        let mut back = LaurentPoly::zero(Var::T);
        for m in 0..=order {
            back = &back + &t_minus_one.pow(m).scale(&s.coeff(0, m));
        }
        let rest = &p - &back;
        prop_assert!(rest.div_exact(&t_minus_one.pow(order + 1)).is_some(), "{} vs {}", p, back);
    }

    #[test]
    fn lambda_tilde_two_routes(p in laurent(Var::T), r in 2u64..8, j in 0u32..6) {
        let direct = laurent_to_series(&p.substitute_power(r as i64), j).unwrap().coeff(0, j);
        let via = lambda_tilde(&lambda_coeffs(&p, j).unwrap(), r, j);
        prop_assert_eq!(direct, via);
    }

    #[test]
    fn resolution_signs(b in braid(3, 7), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4)) {
        prop_assume!(b.is_knot() && !b.is_empty());
        let marks: std::collections::BTreeSet<usize> = picks.iter().map(|i| i.index(b.len())).collect();
        let d = marks.len();
        let res = resolutions(&SingularBraidWord::new(b, marks).unwrap()).unwrap();
        prop_assert_eq!(res.len(), 1 << d);
        let plus = res.iter().filter(|(_, s)| *s == 1).count();
        prop_assert_eq!(plus, 1 << (d - 1));
        let words: std::collections::BTreeSet<_> = res.iter().map(|(w, _)| w.clone()).collect();
        prop_assert_eq!(words.len(), 1 << d);
    }

    #[test]
    fn alexander_skein(b in braid(3, 6), pos in any::<prop::sample::Index>(), g in 1i32..3) {
        let p = pos.index(b.len() + 1);
        let g = g.min(b.strands() as i32 - 1);
        let mut plus = b.letters().to_vec();
        plus.insert(p, g);
        let mut minus = b.letters().to_vec();
        minus.insert(p, -g);
        let plus = BraidWord::new(b.strands(), plus).unwrap();
        let minus = BraidWord::new(b.strands(), minus).unwrap();
        let zero = BraidWord::new(b.strands(), b.letters().to_vec()).unwrap();
        let s = LaurentPoly::from_terms(Var::A, [(1, BigInt::from(1)), (-1, BigInt::from(-1))]);
        let lhs = &alexander_link(&plus).unwrap() - &alexander_link(&minus).unwrap();
        prop_assert_eq!(lhs, &s * &alexander_link(&zero).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn writhe_normalization(b in knot_braid(3, 6)) {
        let d = normalize_writhe(&closure_to_long(&b).unwrap());
        prop_assert_eq!(d.writhe(), 0);
        let mut stab = b.letters().to_vec();
        stab.push(if b.writhe() >= 0 { -(b.strands() as i32) } else { b.strands() as i32 });
        let stab = BraidWord::new(b.strands() + 1, stab).unwrap();
        prop_assert_eq!(f_infinity(&b, 3).unwrap(), f_infinity(&stab, 3).unwrap());
    }

    #[test]
    fn eval_root_precision_is_stable(b in knot_braid(3, 5), r in prop::sample::select(vec![2u64, 3, 4, 5])) {
        let low = eval_root(&f_infinity(&b, 3).unwrap(), r).unwrap();
        let high = eval_root(&f_infinity(&b, 4).unwrap(), r).unwrap();
        for m in 0..=3 {
            let diff = low.coeff(m) - high.coeff(m);
            if let Some(v) = diff.zeta_valuation().unwrap() {
                prop_assert!(v >= low.precision(m), "m={} valuation {} precision {}", m, v, low.precision(m));
            }
        }
    }

    #[test]
    fn evaluate_is_linear(
        xs in prop::collection::vec((knot_braid(3, 5), -3i64..4), 1..4),
        ys in prop::collection::vec((knot_braid(3, 5), -3i64..4), 1..4),
        a in -5i64..6,
        b in -5i64..6,
    ) {
        let comb = |v: &[(BraidWord, i64)]| {
            let mut c = KnotCombination::new();
            for (w, k) in v {
                c.add_term(w.clone(), BigInt::from(*k));
            }
            c
        };
        let (x, y) = (comb(&xs), comb(&ys));
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        let both = x.scale(&a).add(&y.scale(&b));
        for f in [Functional::b(1, 1), Functional::lambda(2), "d:1,0,3%3".parse().unwrap()] {
            let lhs = evaluate(&f, &both).unwrap();
            let rhs = &a * evaluate(&f, &x).unwrap() + &b * evaluate(&f, &y).unwrap();
            let rhs = match f.modulus {
                Some(k) => num_integer::Integer::mod_floor(&rhs, &BigInt::from(k)),
                None => rhs,
            };
            prop_assert_eq!(lhs, rhs, "{}", f);
        }
    }
}
