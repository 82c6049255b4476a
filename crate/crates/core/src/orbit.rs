//! Position of the S-orbit of 1 relative to the fixed points x_s < x_ℓ.
//!
//! For β ≥ βₙ the points Sᵏ1, 1 ≤ k ≤ n − 2, alternate: odd k lie below
//! x_s and even k above x_ℓ, and S^{n−1}1 reaches x_s (n even) or x_ℓ
//! (n odd), with equality exactly at β = βₙ.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::classify::{at_least_multinacci, classify_beta, BetaClass};
use crate::error::{Error, Result};
use crate::field::{AlgebraicField, FieldElement};
use crate::maps::{large_fixed_point, small_fixed_point, PLMap};
use crate::poly::QPoly;
use crate::report::Report;

/// Sᵏ1 as an alternating polynomial in β, valid for β ≥ β_{k+1}.
///
/// Even k: `βᵏ − 2βᵏ⁻¹ + βᵏ⁻² − ⋯ + β² − 2β + 1`.
/// Odd k: `−βᵏ + 2βᵏ⁻¹ − βᵏ⁻² + ⋯ − β + 2`.
pub fn s_closed_form(field: &Arc<AlgebraicField>, k: usize) -> Result<FieldElement> {
    if k == 0 {
        return Err(Error::Range("closed form needs k >= 1".into()));
    }
    if !at_least_multinacci(field, k + 1)? {
        return Err(Error::Range(alloc::format!("closed form for S^{k}(1) needs beta >= beta_{}", k + 1)));
    }
    let coeffs = (0..=k)
        .map(|i| {
            let same_parity = (k - i).is_multiple_of(2);
            let c: i64 = match (k.is_multiple_of(2), same_parity) {
                (true, true) => 1,
                (true, false) => -2,
                (false, true) => -1,
                (false, false) => 2,
            };
            BigRational::from_integer(BigInt::from(c))
        })
        .collect();
    Ok(field.eval_at_beta(&QPoly::new(coeffs)))
}

/// Outcome of the alternation check at index n.
#[derive(Clone, Debug)]
pub struct OrbitParityReport {
    pub n: usize,
    pub report: Report,
    /// S^{n−1}1 coincides with its fixed point.
    pub equality: bool,
    /// Every comparison, including the last, is strict.
    pub strict: bool,
}

fn rel(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "<",
        Ordering::Equal => "=",
        Ordering::Greater => ">",
    }
}

/// Checks the alternation of S¹1, …, S^{n−1}1 around x_s and x_ℓ. Requires β ≥ βₙ.
pub fn verify_orbit_parity(field: &Arc<AlgebraicField>, n: usize) -> Result<OrbitParityReport> {
    if n < 2 {
        return Err(Error::InvalidArgument("index must be >= 2".into()));
    }
    if !at_least_multinacci(field, n)? {
        return Err(Error::Hypothesis(alloc::format!("beta < beta_{n}")));
    }
    let xs = small_fixed_point(field);
    let xl = large_fixed_point(field);
    let orbit = PLMap::negative(field).orbit_of_one(n - 1)?;
    let mut report = Report::new(alloc::format!("S-orbit alternation, n = {n}"));
    let mut strict = true;
    for k in 1..=n - 2 {
        let p = &orbit.points[k];
        let (name, o, want) = if k % 2 == 0 {
            ("x_l", p.compare(&xl)?, Ordering::Greater)
        } else {
            ("x_s", p.compare(&xs)?, Ordering::Less)
        };
        report.push(alloc::format!("S^{k}(1) {} {name}", rel(want)), o == want, alloc::format!("observed {}", rel(o)));
        strict &= o == want;
    }
    let last = &orbit.points[n - 1];
    let (name, o, want) = if n.is_multiple_of(2) {
        ("x_s", last.compare(&xs)?, Ordering::Less)
    } else {
        ("x_l", last.compare(&xl)?, Ordering::Greater)
    };
    let ok = o == want || o == Ordering::Equal;
    report.push(
        alloc::format!("S^{}(1) {}= {name}", n - 1, rel(want)),
        ok,
        alloc::format!("observed {}", rel(o)),
    );
    let equality = o == Ordering::Equal;
    strict &= o == want;
    let exact = classify_beta(field)? == BetaClass::Exact(n);
    report.push("equality iff beta = beta_n", equality == exact, alloc::format!("equality {equality}, multinacci {exact}"));
    Ok(OrbitParityReport { n, report, equality, strict })
}

#[derive(Clone, Debug)]
pub struct OrbitOrderReport {
    pub class: BetaClass,
    pub report: Report,
    /// Indices k of Sᵏ1 (k = 0..n−1) sorted by value, ties kept in index order.
    pub sorted: Vec<usize>,
}

/// Checks the full left-to-right arrangement of 0, the S-orbit of 1, the
/// fixed points and 1 for the regime of β.
pub fn orbit_order_check(field: &Arc<AlgebraicField>) -> Result<OrbitOrderReport> {
    let class = classify_beta(field)?;
    let n = class.index();
    let map = PLMap::negative(field);
    let orbit = map.orbit_of_one(n)?;
    let xs = small_fixed_point(field);
    let xl = large_fixed_point(field);
    let pt = |k: usize| (alloc::format!("S^{k}(1)"), orbit.points[k].clone());
    let mut report = Report::new(alloc::format!("S-orbit order, {class}"));

    // (label, value, relation to the next entry)
    let mut chain: Vec<(String, FieldElement, Ordering)> = Vec::new();
    chain.push(("0".into(), field.zero(), Ordering::Less));
    match class {
        BetaClass::SubGolden => {
            chain.push(("x_s".into(), xs.clone(), Ordering::Less));
            let (l, v) = pt(1);
            chain.push((l, v, Ordering::Less));
            chain.push(("1/beta".into(), map.critical_point().clone(), Ordering::Less));
        }
        BetaClass::Gap(_) | BetaClass::Exact(_) => {
            let exact = matches!(class, BetaClass::Exact(_));
            for k in (1..=n.saturating_sub(2)).filter(|k| k % 2 == 1) {
                let (l, v) = pt(k);
                chain.push((l, v, Ordering::Less));
            }
            let last = pt(n - 1);
            if !exact {
                chain.push(("x_s".into(), xs.clone(), Ordering::Less));
                chain.push((last.0, last.1, Ordering::Less));
                chain.push(("x_l".into(), xl.clone(), Ordering::Less));
            } else if n % 2 == 0 {
                chain.push((last.0, last.1, Ordering::Equal));
                chain.push(("x_s".into(), xs.clone(), Ordering::Less));
                chain.push(("x_l".into(), xl.clone(), Ordering::Less));
            } else {
                chain.push(("x_s".into(), xs.clone(), Ordering::Less));
                chain.push((last.0, last.1, Ordering::Equal));
                chain.push(("x_l".into(), xl.clone(), Ordering::Less));
            }
            let mut evens: Vec<usize> = (2..=n.saturating_sub(2)).filter(|k| k % 2 == 0).collect();
            evens.reverse();
            for k in evens {
                let (l, v) = pt(k);
                chain.push((l, v, Ordering::Less));
            }
        }
    }
    chain.push(("1".into(), field.one(), Ordering::Equal));
    for w in chain.windows(2) {
        let o = w[0].1.compare(&w[1].1)?;
        report.push(
            alloc::format!("{} {} {}", w[0].0, rel(w[0].2), w[1].0),
            o == w[0].2,
            alloc::format!("observed {}", rel(o)),
        );
    }

    let count = n.max(2);
    let mut sorted: Vec<usize> = (0..count).collect();
    let mut failure = None;
    sorted.sort_by(|&a, &b| match orbit.points[a].compare(&orbit.points[b]) {
        Ok(Ordering::Equal) => a.cmp(&b),
        Ok(o) => o,
        Err(e) => {
            failure = Some(e);
            Ordering::Equal
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(OrbitOrderReport { class, report, sorted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{multinacci_field, rational_field};

    #[test]
    fn closed_form_small_cases() {
        let f = multinacci_field(5).unwrap();
        let b = f.beta();
        assert_eq!(s_closed_form(&f, 1).unwrap(), &f.from_integer(2) - &b);
        assert_eq!(s_closed_form(&f, 2).unwrap(), &(&b.pow(2) - &(&b * &f.from_integer(2))) + &f.one());
        let orbit = PLMap::negative(&f).orbit_of_one(4).unwrap();
        for k in 1..=4 {
            assert_eq!(s_closed_form(&f, k).unwrap(), orbit.points[k], "k = {k}");
        }
        assert!(matches!(s_closed_form(&f, 5), Err(Error::Range(_))));
        assert!(matches!(s_closed_form(&f, 0), Err(Error::Range(_))));
    }

    #[test]
    fn parity_at_small_multinacci() {
        let r2 = verify_orbit_parity(&multinacci_field(2).unwrap(), 2).unwrap();
        assert!(r2.report.all_passed() && r2.equality);
        let r3 = verify_orbit_parity(&multinacci_field(3).unwrap(), 3).unwrap();
        assert!(r3.report.all_passed() && r3.equality);
        let r4 = verify_orbit_parity(&multinacci_field(4).unwrap(), 4).unwrap();
        assert!(r4.report.all_passed() && r4.equality && !r4.strict);
        let above = verify_orbit_parity(&multinacci_field(5).unwrap(), 4).unwrap();
        assert!(above.report.all_passed() && above.strict && !above.equality);
    }

    #[test]
    fn parity_hypothesis_enforced() {
        let f = rational_field(17, 10).unwrap();
        assert!(matches!(verify_orbit_parity(&f, 3), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn order_examples() {
        let r = orbit_order_check(&multinacci_field(4).unwrap()).unwrap();
        assert!(r.report.all_passed(), "{}", r.report);
        assert_eq!(r.sorted, alloc::vec![1, 3, 2, 0]);
        let r = orbit_order_check(&rational_field(17, 10).unwrap()).unwrap();
        assert!(r.report.all_passed(), "{}", r.report);
        assert_eq!(r.sorted, alloc::vec![1, 2, 0]);
        let r = orbit_order_check(&rational_field(3, 2).unwrap()).unwrap();
        assert!(r.report.all_passed(), "{}", r.report);
    }
}
