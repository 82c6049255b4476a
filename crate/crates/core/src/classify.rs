//! Multinacci numbers and the regime of β relative to them.

use alloc::sync::Arc;
use alloc::vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{make_field, AlgebraicField, FieldElement};
use crate::interval::RationalInterval;
use crate::poly::IntPolynomial;

/// Upper bound on the multinacci index searched by [`classify_beta`].
const MAX_CLASS_INDEX: usize = 100_000;

/// `xⁿ − xⁿ⁻¹ − ⋯ − x − 1`.
pub fn multinacci_poly(n: usize) -> Result<IntPolynomial> {
    if n < 2 {
        return Err(Error::InvalidArgument(alloc::format!("multinacci index must be >= 2, got {n}")));
    }
    let mut c = vec![-1i64; n];
    c.push(1);
    Ok(IntPolynomial::from_i64(&c))
}

pub fn multinacci_field(n: usize) -> Result<Arc<AlgebraicField>> {
    make_field(&multinacci_poly(n)?, None)
}

/// ℚ with β = p/q.
pub fn rational_field(p: i64, q: i64) -> Result<Arc<AlgebraicField>> {
    if q == 0 {
        return Err(Error::DivisionByZero);
    }
    make_field(&IntPolynomial::from_i64(&[-p, q]), None)
}

pub fn rational_field_big(r: &BigRational) -> Result<Arc<AlgebraicField>> {
    make_field(&IntPolynomial::new(vec![-r.numer().clone(), r.denom().clone()]), None)
}

/// Position of β among the multinacci numbers β₂ < β₃ < ⋯ → 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BetaClass {
    /// β = βₙ.
    Exact(usize),
    /// βₙ₋₁ < β < βₙ, n ≥ 3.
    Gap(usize),
    /// 1 < β < β₂.
    SubGolden,
}

impl BetaClass {
    /// n for `Exact(n)` and `Gap(n)`; 2 below the golden ratio.
    pub fn index(&self) -> usize {
        match *self {
            BetaClass::Exact(n) | BetaClass::Gap(n) => n,
            BetaClass::SubGolden => 2,
        }
    }

    pub fn is_multinacci(&self) -> bool {
        matches!(self, BetaClass::Exact(_))
    }
}

impl fmt::Display for BetaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BetaClass::Exact(n) => write!(f, "multinacci(n={n})"),
            BetaClass::Gap(n) => write!(f, "gap(n={n})"),
            BetaClass::SubGolden => f.write_str("subgolden"),
        }
    }
}

/// pₙ(β) for n ≥ 1 via pₙ = β·pₙ₋₁ − 1, p₁ = β − 1.
pub fn multinacci_value(field: &Arc<AlgebraicField>, n: usize) -> FieldElement {
    let beta = field.beta();
    let one = field.one();
    let mut p = &beta - &one;
    for _ in 1..n {
        p = &(&beta * &p) - &one;
    }
    p
}

pub fn classify_beta(field: &Arc<AlgebraicField>) -> Result<BetaClass> {
    let beta = field.beta();
    let one = field.one();
    if beta.compare(&one)? != Ordering::Greater || beta.compare(&field.from_integer(2))? != Ordering::Less {
        return Err(Error::Domain("beta must lie strictly between 1 and 2".into()));
    }
    let mut p = &beta - &one;
    for n in 2..=MAX_CLASS_INDEX {
        p = &(&beta * &p) - &one;
        match p.sign()? {
            Ordering::Equal => return Ok(BetaClass::Exact(n)),
            Ordering::Less if n == 2 => return Ok(BetaClass::SubGolden),
            Ordering::Less => return Ok(BetaClass::Gap(n)),
            Ordering::Greater => {}
        }
    }
    Err(Error::Classification("beta too close to 2".into()))
}

/// `true` iff β ≥ βₙ.
pub fn at_least_multinacci(field: &Arc<AlgebraicField>, n: usize) -> Result<bool> {
    Ok(multinacci_value(field, n).sign()? != Ordering::Less)
}

/// A short rational sample of each regime: 3/2 below the golden ratio, and
/// for n ≥ 3 the decimal with fewest digits in the middle half of (βₙ₋₁, βₙ),
/// nearest the midpoint.
pub fn gap_sample(n: usize) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::InvalidArgument("gap index must be >= 2".into()));
    }
    if n == 2 {
        return Ok(BigRational::new(BigInt::from(3), BigInt::from(2)));
    }
    let w = BigRational::new(BigInt::one(), BigInt::from(1u128 << 100));
    let a = multinacci_field(n - 1)?.refine_beta(&w)?;
    let b = multinacci_field(n)?.refine_beta(&w)?;
    let four = BigRational::from_integer(BigInt::from(4));
    let three = BigRational::from_integer(BigInt::from(3));
    // inner bounds of [a + (b−a)/4, a + 3(b−a)/4]
    let lo = (&three * &a.hi + &b.hi) / &four;
    let hi = (&a.lo + &three * &b.lo) / &four;
    let window = RationalInterval::new(lo, hi);
    let mid = window.mid();
    let mut scale = BigInt::one();
    loop {
        scale *= 10;
        let unit = BigRational::from_integer(scale.clone());
        let first = (&window.lo * &unit).ceil().to_integer();
        let last = (&window.hi * &unit).floor().to_integer();
        if first > last {
            continue;
        }
        // nearest to the midpoint among the shortest decimals
        let near = (&mid * &unit).round().to_integer().clamp(first, last);
        return Ok(BigRational::new(near, scale));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn polynomial_shape() {
        assert_eq!(multinacci_poly(2).unwrap(), IntPolynomial::from_i64(&[-1, -1, 1]));
        assert_eq!(multinacci_poly(3).unwrap(), IntPolynomial::from_i64(&[-1, -1, -1, 1]));
        assert_eq!(multinacci_poly(5).unwrap(), IntPolynomial::from_i64(&[-1, -1, -1, -1, -1, 1]));
        assert!(matches!(multinacci_poly(1), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn recurrence_matches_polynomial() {
        let f = rational_field(19, 10).unwrap();
        for n in 2..8 {
            let p = multinacci_poly(n).unwrap().to_rational();
            assert_eq!(multinacci_value(&f, n), f.eval_at_beta(&p), "n = {n}");
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_beta(&multinacci_field(3).unwrap()).unwrap(), BetaClass::Exact(3));
        assert_eq!(classify_beta(&rational_field(3, 2).unwrap()).unwrap(), BetaClass::SubGolden);
        assert_eq!(classify_beta(&rational_field(19, 10).unwrap()).unwrap(), BetaClass::Gap(4));
        assert_eq!(classify_beta(&rational_field(17, 10).unwrap()).unwrap(), BetaClass::Gap(3));
        // p2(1.9) = 0.71, p3(1.9) = 0.349, p4(1.9) = -0.2561 by plain floats
        let p = |x: f64, n: i32| x.powi(n) - (0..n).map(|i| x.powi(i)).sum::<f64>();
        assert!(p(1.9, 2) > 0.0 && p(1.9, 3) > 0.0 && p(1.9, 4) < 0.0);
    }

    #[test]
    fn gap_samples_are_short_decimals() {
        assert_eq!(gap_sample(2).unwrap(), r(3, 2));
        assert_eq!(gap_sample(3).unwrap(), r(17, 10));
        assert_eq!(gap_sample(4).unwrap(), r(19, 10));
        assert_eq!(gap_sample(5).unwrap(), r(195, 100));
        for n in 3..=10 {
            let s = gap_sample(n).unwrap();
            let f = rational_field_big(&s).unwrap();
            assert_eq!(classify_beta(&f).unwrap(), BetaClass::Gap(n));
        }
    }
}
