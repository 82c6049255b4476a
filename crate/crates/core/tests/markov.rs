use betamorph_core::classify::{multinacci_field, rational_field};
use betamorph_core::markov::{
    certify_isomorphism, check_r1, detect_markov, log_beta, multinacci_states, parry_measure, TransitionMatrix,
};
use betamorph_core::maps::{large_fixed_point, small_fixed_point};
use betamorph_core::{FieldElement, PLMap};
use num_bigint::BigInt;
use num_rational::BigRational;

fn cuts_from_states(states: &[(FieldElement, FieldElement)]) -> Vec<FieldElement> {
    let mut v: Vec<FieldElement> = states.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect();
    v.sort_by(|a, b| a.compare(b).unwrap());
    v.dedup();
    v
}

#[test]
fn detected_partitions_at_multinacci() {
    for n in 2..=8 {
        let f = multinacci_field(n).unwrap();
        let t = PLMap::positive(&f);
        let pt = detect_markov(&t, 2 * n).unwrap().expect("T is Markov");
        // 0 < T^{n−1}1 < ⋯ < T1 < 1.
        let orbit = t.orbit_of_one(n - 1).unwrap();
        let mut expected: Vec<FieldElement> = vec![f.zero()];
        expected.extend(orbit.points[1..n].iter().rev().cloned());
        expected.push(f.one());
        assert_eq!(pt.cuts(), &expected[..], "T, n = {n}");

        let s = PLMap::negative(&f);
        let ps = detect_markov(&s, 2 * n).unwrap().expect("S is Markov");
        let orbit = s.orbit_of_one(n - 1).unwrap();
        let mut expected: Vec<FieldElement> = vec![f.zero(), f.one()];
        expected.extend(orbit.points[1..n].iter().cloned());
        expected.sort_by(|a, b| a.compare(b).unwrap());
        assert_eq!(ps.cuts(), &expected[..], "S, n = {n}");
        assert_eq!(ps.states(), n);
        let last = &orbit.points[n - 1];
        let fixed = if n % 2 == 0 { small_fixed_point(&f) } else { large_fixed_point(&f) };
        assert_eq!(last, &fixed);
        assert_eq!(cuts_from_states(&multinacci_states(&s, n).unwrap()), expected);
    }
}

#[test]
fn golden_mean_measure() {
    let f = multinacci_field(2).unwrap();
    let m = TransitionMatrix::standard(2);
    assert_eq!(m.entries, vec![vec![1, 1], vec![1, 0]]);
    let mu = parry_measure(&m, &f).unwrap();
    let b = f.beta();
    let ib = b.inv().unwrap();
    assert_eq!(mu.p[0][0], ib);
    assert_eq!(mu.p[0][1], &ib * &ib);
    assert_eq!(mu.p[1][0], f.one());
    assert!(mu.p[1][1].is_zero());
    let b2 = &b * &b;
    let denom = &b2 + &f.one();
    assert_eq!(mu.q[0], b2.div(&denom).unwrap());
    assert_eq!(mu.q[1], denom.inv().unwrap());
}

#[test]
fn cylinders_are_consistent() {
    for n in [2, 3, 4] {
        let f = multinacci_field(n).unwrap();
        let m = TransitionMatrix::standard(n);
        let mu = parry_measure(&m, &f).unwrap();
        let mut words: Vec<Vec<usize>> = (0..n).map(|s| vec![s]).collect();
        for _ in 1..6 {
            let mut next = Vec::new();
            for w in &words {
                let total = mu.cylinder(w).unwrap();
                let mut sum = f.zero();
                for s in 0..n {
                    if m.get(*w.last().unwrap(), s) {
                        let mut e = w.clone();
                        e.push(s);
                        sum = &sum + &mu.cylinder(&e).unwrap();
                        next.push(e);
                    }
                }
                assert_eq!(sum, total, "word {w:?}");
            }
            words = next;
        }
    }
}

#[test]
fn entropy_encloses_log_beta() {
    let width = BigRational::new(BigInt::from(1), BigInt::from(10u64.pow(10)));
    for n in 2..=8 {
        let f = multinacci_field(n).unwrap();
        let mu = parry_measure(&TransitionMatrix::standard(n), &f).unwrap();
        let h = mu.entropy(&width).unwrap();
        assert!(h.width() <= width);
        let l = log_beta(&f, 80).unwrap();
        assert!(h.lo <= l.hi && l.lo <= h.hi, "n = {n}: {h:?} vs {l:?}");
        assert!(l.width() < width);
    }
}

#[test]
fn standard_matrix_passes_r1() {
    for n in 2..=8 {
        let f = multinacci_field(n).unwrap();
        let r = check_r1(&TransitionMatrix::standard(n), &f).unwrap();
        assert!(r.passed(), "{}", r.to_report());
    }
}

#[test]
fn certificates_two_to_eight() {
    for n in 2..=8 {
        let c = certify_isomorphism(&multinacci_field(n).unwrap()).unwrap();
        assert!(c.matrices_equal && c.standard_pattern);
        assert!(c.report().unwrap().all_passed());
    }
}

#[test]
fn no_markov_partition_at_three_halves() {
    let f = rational_field(3, 2).unwrap();
    assert!(detect_markov(&PLMap::positive(&f), 50).unwrap().is_none());
}
