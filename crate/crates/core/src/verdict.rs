//! The isomorphism decision between T and S.
//!
//! Multinacci β gets a Markov-matrix certificate. Otherwise ψₙ⁺ and ψₙ⁻ are
//! compared level set by level set: a value k whose level set has positive
//! length for one map and zero length for the other rules out a measurable
//! isomorphism, since both invariant measures are equivalent to Lebesgue
//! measure and an isomorphism carries Iₙ⁺(k) onto Iₙ⁻(k).

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::classify::{classify_beta, BetaClass};
use crate::error::Result;
use crate::field::{AlgebraicField, FieldElement};
use crate::markov::{certify_isomorphism, Certificate};
use crate::maps::{Orientation, PLMap};
use crate::monotone::{decompose, split_case, PreimageSpectrum, SplitCase};

/// A value of ψₙ with level sets of lengths `length_plus` (T) and `length_minus` (S).
#[derive(Clone, Debug)]
pub struct Witness {
    pub k: u64,
    pub length_plus: FieldElement,
    pub length_minus: FieldElement,
}

#[derive(Clone, Debug)]
pub enum Verdict {
    IsomorphicMultinacci(Box<Certificate>),
    NotIsomorphic {
        /// The iterate n at which the spectra were compared.
        iterate: usize,
        class: BetaClass,
        /// Every k with one level set of positive length and the other of length zero.
        witnesses: Vec<Witness>,
        /// Position of S^{n−1}1 against 1/β (None below the golden ratio).
        case: Option<SplitCase>,
        /// Values of k expected to separate the maps in this regime.
        predicted: Vec<u64>,
        /// Some predicted k is among the witnesses.
        consistent: bool,
    },
    Inconclusive {
        iterate: usize,
        class: BetaClass,
    },
}

impl Verdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, Verdict::IsomorphicMultinacci(_))
    }

    pub fn is_not_isomorphic(&self) -> bool {
        matches!(self, Verdict::NotIsomorphic { .. })
    }

    /// The witness for `k`, if any.
    pub fn witness(&self, k: u64) -> Option<&Witness> {
        match self {
            Verdict::NotIsomorphic { witnesses, .. } => witnesses.iter().find(|w| w.k == k),
            _ => None,
        }
    }
}

/// Separating values of k expected from the case analysis of the regime.
pub fn predicted_witnesses(class: BetaClass, case: Option<SplitCase>, iterate: usize) -> Vec<u64> {
    let n = iterate as u32;
    let p = |e: u32| 1u64 << e;
    match (class, case) {
        (BetaClass::SubGolden, _) if iterate == 3 => vec![2],
        (BetaClass::Gap(3), Some(SplitCase::OddBelow)) if iterate == 3 => vec![6],
        (BetaClass::Gap(3), Some(SplitCase::OddAt)) if iterate == 3 => vec![3, 6],
        (BetaClass::Gap(3), Some(SplitCase::OddAbove)) if iterate == 3 => vec![3],
        (BetaClass::Gap(m), Some(c)) if m >= 4 && m == iterate => match c {
            SplitCase::EvenBelow => vec![p(n) - 3, p(n - 1)],
            SplitCase::OddAbove => vec![p(n) - 3, p(n - 2) + p(n - 1)],
            _ => vec![p(n) - 2],
        },
        _ => Vec::new(),
    }
}

/// All k with a positive-length level set on one side and an empty one on the other.
pub fn separating_values(plus: &PreimageSpectrum, minus: &PreimageSpectrum) -> Result<Vec<Witness>> {
    let lp = plus.lengths_by_value();
    let lm = minus.lengths_by_value();
    let field = plus.beta_n().field();
    let keys: BTreeSet<u64> = lp.keys().chain(lm.keys()).copied().collect();
    let mut out = Vec::new();
    for k in keys {
        let a = lp.get(&k).cloned().unwrap_or_else(|| field.zero());
        let b = lm.get(&k).cloned().unwrap_or_else(|| field.zero());
        let pa = a.sign()? == Ordering::Greater;
        let pb = b.sign()? == Ordering::Greater;
        if pa != pb {
            out.push(Witness { k, length_plus: a, length_minus: b });
        }
    }
    Ok(out)
}

/// Iterate used for the spectrum comparison: 3 below the golden ratio, the
/// regime index otherwise.
pub fn default_iterate(class: BetaClass) -> Option<usize> {
    match class {
        BetaClass::SubGolden => Some(3),
        BetaClass::Gap(n) => Some(n),
        BetaClass::Exact(_) => None,
    }
}

/// Decides isomorphism of T and S at β. `forced_n` overrides the iterate
/// for non-multinacci β.
pub fn obstruction_check(field: &Arc<AlgebraicField>, forced_n: Option<usize>) -> Result<Verdict> {
    let class = classify_beta(field)?;
    let Some(auto) = default_iterate(class) else {
        return Ok(Verdict::IsomorphicMultinacci(Box::new(certify_isomorphism(field)?)));
    };
    let iterate = forced_n.unwrap_or(auto);
    let plus = decompose(&PLMap::new(field, Orientation::Positive), iterate)?.spectrum();
    let minus = decompose(&PLMap::new(field, Orientation::Negative), iterate)?.spectrum();
    let witnesses = separating_values(&plus, &minus)?;
    if witnesses.is_empty() {
        return Ok(Verdict::Inconclusive { iterate, class });
    }
    let case = match class {
        BetaClass::Gap(n) if n == iterate => Some(split_case(field, n)?),
        _ => None,
    };
    let predicted = predicted_witnesses(class, case, iterate);
    let consistent = predicted.iter().any(|k| witnesses.iter().any(|w| w.k == *k));
    Ok(Verdict::NotIsomorphic { iterate, class, witnesses, case, predicted, consistent })
}
