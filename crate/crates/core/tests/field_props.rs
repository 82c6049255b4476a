use std::cmp::Ordering;
use std::sync::Arc;

use betamorph_core::classify::{multinacci_field, multinacci_poly};
use betamorph_core::{classify_beta, make_field, AlgebraicField, BetaClass, FieldElement, IntPolynomial, QPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn element(f: &Arc<AlgebraicField>, c: &[(i64, i64)]) -> FieldElement {
    let coeffs = c.iter().map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q))).collect();
    f.element(QPoly::new(coeffs))
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-20i64..20, 1i64..7), 1..5)
}

fn fields() -> Vec<Arc<AlgebraicField>> {
    vec![
        multinacci_field(3).unwrap(),
        multinacci_field(4).unwrap(),
        make_field(&IntPolynomial::from_i64(&[-1, 1, -2, 1]), None).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in coeffs(), b in coeffs(), c in coeffs(), which in 0usize..3) {
        let f = &fields()[which];
        let (a, b, c) = (element(f, &a), element(f, &b), element(f, &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), f.one());
        }
    }

    #[test]
    fn compare_is_a_total_order(a in coeffs(), b in coeffs(), c in coeffs(), which in 0usize..3) {
        let f = &fields()[which];
        let (a, b, c) = (element(f, &a), element(f, &b), element(f, &c));
        let ab = a.compare(&b).unwrap();
        prop_assert_eq!(ab, b.compare(&a).unwrap().reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        let bc = b.compare(&c).unwrap();
        if ab != Ordering::Greater && bc != Ordering::Greater {
            prop_assert_ne!(a.compare(&c).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn sign_agrees_with_enclosure(a in coeffs(), which in 0usize..3) {
        let f = &fields()[which];
        let a = element(f, &a);
        let iv = a.refine(&BigRational::new(1.into(), BigInt::from(1u64 << 40))).unwrap();
        match a.sign().unwrap() {
            Ordering::Greater => prop_assert!(iv.hi > BigRational::from_integer(0.into())),
            Ordering::Less => prop_assert!(iv.lo < BigRational::from_integer(0.into())),
            Ordering::Equal => prop_assert!(iv.is_point()),
        }
    }
}

#[test]
fn multinacci_numbers_classify_and_increase() {
    let width = BigRational::new(1.into(), BigInt::from(1u64 << 50));
    let mut prev: Option<betamorph_core::RationalInterval> = None;
    for n in 2..=10 {
        let f = make_field(&multinacci_poly(n).unwrap(), None).unwrap();
        assert_eq!(classify_beta(&f).unwrap(), BetaClass::Exact(n));
        let iv = f.refine_beta(&width).unwrap();
        if let Some(p) = prev {
            assert!(p.hi < iv.lo, "β_{} not below β_{n}", n - 1);
        }
        prev = Some(iv);
    }
}

#[test]
fn moduli_are_squarefree() {
    let inputs: [&[i64]; 3] = [
        &[-1, -1, 1],
        &[1, -2, 1, -2, 1],
        &[-1, -1, -1, -1, 1],
    ];
    let doubled = {
        let g = QPoly::from_i64(&[-1, -1, 1]);
        let p = &(&g * &g) * &QPoly::from_i64(&[-3, 1]);
        p.to_primitive_int()
    };
    for p in inputs.iter().map(|c| IntPolynomial::from_i64(c)).chain([doubled]) {
        let Ok(f) = make_field(&p, None) else { continue };
        let m = f.modulus();
        let g = QPoly::gcd(m, &m.derivative());
        assert_eq!(g.degree(), Some(0), "modulus of {p:?} not squarefree");
    }
}
