use betamorph_core::classify::{gap_sample, multinacci_field, rational_field_big};
use betamorph_core::monotone::{decompose, PreimageSpectrum};
use betamorph_core::verdict::{obstruction_check, Verdict};
use betamorph_core::{make_field, IntPolynomial, Orientation, PLMap};

fn samples() -> Vec<std::sync::Arc<betamorph_core::AlgebraicField>> {
    let mut v: Vec<_> = (2..=10).map(|n| rational_field_big(&gap_sample(n).unwrap()).unwrap()).collect();
    for c in [&[1, -2, 1, -2, 1][..], &[-1, 1, -2, 1]] {
        v.push(make_field(&IntPolynomial::from_i64(c), None).unwrap());
    }
    v
}

#[test]
fn every_gap_sample_is_separated() {
    for f in samples() {
        match obstruction_check(&f, None).unwrap() {
            Verdict::NotIsomorphic { witnesses, consistent, predicted, .. } => {
                assert!(consistent, "β = {}: predicted {predicted:?}", f.beta());
                for w in witnesses {
                    assert!(w.length_plus.is_zero() != w.length_minus.is_zero());
                }
            }
            other => panic!("β = {}: {other:?}", f.beta()),
        }
    }
}

#[test]
fn multinacci_never_obstructed() {
    for n in 2..=6 {
        assert!(obstruction_check(&multinacci_field(n).unwrap(), None).unwrap().is_isomorphic());
    }
}

fn named(sp: &PreimageSpectrum) -> Vec<(String, String, u64)> {
    (0..sp.len()).map(|i| (sp.breakpoint_name(i), sp.breakpoint_name(i + 1), sp.values[i])).collect()
}

fn table(rows: &[(&str, &str, u64)]) -> Vec<(String, String, u64)> {
    rows.iter().map(|&(a, b, v)| (a.into(), b.into(), v)).collect()
}

#[test]
fn first_two_spectra_above_golden_ratio() {
    for n in 3..=10 {
        let f = rational_field_big(&gap_sample(n).unwrap()).unwrap();
        let sp = |o, m| named(&decompose(&PLMap::new(&f, o), m).unwrap().spectrum());
        assert_eq!(sp(Orientation::Positive, 1), table(&[("0", "T^1(1)", 2), ("T^1(1)", "1", 1)]));
        assert_eq!(
            sp(Orientation::Positive, 2),
            table(&[("0", "T^2(1)", 4), ("T^2(1)", "T^1(1)", 3), ("T^1(1)", "1", 2)])
        );
        assert_eq!(sp(Orientation::Negative, 1), table(&[("0", "S^1(1)", 1), ("S^1(1)", "1", 2)]));
        assert_eq!(
            sp(Orientation::Negative, 2),
            table(&[("0", "S^1(1)", 2), ("S^1(1)", "S^2(1)", 4), ("S^2(1)", "1", 3)])
        );
    }
}

#[test]
fn spectra_carry_full_mass() {
    for f in samples() {
        for o in [Orientation::Positive, Orientation::Negative] {
            for m in 1..=5 {
                let sp = decompose(&PLMap::new(&f, o), m).unwrap().spectrum();
                assert!(sp.mass_identity_holds());
                if o == Orientation::Positive {
                    assert!(sp.is_nonincreasing());
                }
            }
        }
    }
}
