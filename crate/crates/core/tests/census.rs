use betamorph_core::classify::{gap_sample, rational_field_big};
use betamorph_core::monotone::{decompose, parity_profile, verify_census};
use betamorph_core::{Orientation, PLMap};

fn samples() -> Vec<(usize, num_rational::BigRational)> {
    (2..=10).map(|n| (n, gap_sample(n).unwrap())).collect()
}

#[test]
fn type_counts_match_closed_forms_in_every_regime() {
    for (n, beta) in samples() {
        let f = rational_field_big(&beta).unwrap();
        for o in [Orientation::Positive, Orientation::Negative] {
            let r = verify_census(&f, o, None).unwrap();
            assert_eq!(r.n, n);
            assert!(r.all_match(), "beta = {beta}\n{}", r.report);
        }
    }
}

#[test]
fn branch_counts_double_until_the_regime_index() {
    for (n, beta) in samples() {
        let f = rational_field_big(&beta).unwrap();
        let t = verify_census(&f, Orientation::Positive, None).unwrap();
        let s = verify_census(&f, Orientation::Negative, None).unwrap();
        for m in 1..n {
            assert_eq!(t.rows[m - 1].branches, 1 << m, "T, beta = {beta}, m = {m}");
            assert_eq!(s.rows[m - 1].branches, 1 << m, "S, beta = {beta}, m = {m}");
        }
        assert_eq!(t.rows[n - 1].branches, (1 << n) - 1, "T, beta = {beta}");
    }
}

#[test]
fn spectra_satisfy_mass_and_extremal_values() {
    for (n, beta) in samples() {
        let f = rational_field_big(&beta).unwrap();
        for m in 1..=n.max(3) {
            for o in [Orientation::Positive, Orientation::Negative] {
                let sp = decompose(&PLMap::new(&f, o), m).unwrap().spectrum();
                assert!(sp.mass_identity_holds(), "{o}^{m} at {beta}");
                if o == Orientation::Positive {
                    assert!(sp.is_nonincreasing(), "T^{m} at {beta}: {:?}", sp.values);
                }
            }
        }
        if n >= 3 {
            let t = decompose(&PLMap::positive(&f), n).unwrap().spectrum();
            let s = decompose(&PLMap::negative(&f), n).unwrap().spectrum();
            assert_eq!(t.max_value(), (1 << n) - 1, "beta = {beta}");
            assert_eq!(s.max_value(), (1 << n) - 1, "beta = {beta}");
            if n >= 4 {
                let r = parity_profile(&t).unwrap();
                assert!(r.all_passed(), "beta = {beta}\n{r}");
            }
        }
    }
}
