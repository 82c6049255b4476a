//! Rigorous enclosures of natural logarithms of positive rationals.
//!
//! x = 2ᵏ·m with m ∈ [1, 2), ln m = 2·atanh((m − 1)/(m + 1)) and
//! ln 2 = 2·atanh(1/3). Partial sums are rounded outward to dyadics and the
//! series tail is bounded by z^{2N+1} / ((2N + 1)(1 − z²)).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::RationalInterval;

fn dyadic(bits: u32) -> BigRational {
    BigRational::from_integer(BigInt::one() << bits)
}

fn round_down(x: &BigRational, bits: u32) -> BigRational {
    let s = dyadic(bits);
    (x * &s).floor() / s
}

fn round_up(x: &BigRational, bits: u32) -> BigRational {
    let s = dyadic(bits);
    (x * &s).ceil() / s
}

/// Enclosure of atanh(z) for 0 ≤ z ≤ 1/2, width about 2^-bits.
fn atanh_enclosure(z: &BigRational, bits: u32) -> RationalInterval {
    let work = bits + 16;
    let z2 = z * z;
    let one = BigRational::one();
    let tol = BigRational::new(BigInt::one(), BigInt::one() << (bits + 4));
    let (mut lo, mut hi) = (BigRational::zero(), BigRational::zero());
    let (mut p_lo, mut p_hi) = (z.clone(), z.clone());
    let mut i: i64 = 0;
    loop {
        let d = BigRational::from_integer(BigInt::from(2 * i + 1));
        lo += round_down(&(&p_lo / &d), work);
        hi += round_up(&(&p_hi / &d), work);
        i += 1;
        p_lo = round_down(&(&p_lo * &z2), work);
        p_hi = round_up(&(&p_hi * &z2), work);
        let d = BigRational::from_integer(BigInt::from(2 * i + 1));
        let tail = &p_hi / (d * (&one - &z2));
        if tail <= tol {
            hi += round_up(&tail, work);
            return RationalInterval { lo, hi };
        }
    }
}

/// Enclosure of ln x with width at most about 2^-bits.
pub fn ln_enclosure(x: &BigRational, bits: u32) -> Result<RationalInterval> {
    if !x.is_positive() {
        return Err(Error::Domain("logarithm of a non-positive number".into()));
    }
    if x.is_one() {
        return Ok(RationalInterval::point(BigRational::zero()));
    }
    let mut k: i64 = x.numer().bits() as i64 - x.denom().bits() as i64;
    let two = BigRational::from_integer(BigInt::from(2));
    let pow2 = |e: i64| {
        if e >= 0 {
            dyadic(e as u32)
        } else {
            BigRational::new(BigInt::one(), BigInt::one() << (-e) as u32)
        }
    };
    let mut m = x / pow2(k);
    while m < BigRational::one() {
        m *= &two;
        k -= 1;
    }
    while m >= two {
        m /= &two;
        k += 1;
    }
    let extra = 64 - (k.unsigned_abs().max(1)).leading_zeros();
    let z = (&m - BigRational::one()) / (&m + BigRational::one());
    let at = atanh_enclosure(&z, bits + 2);
    let ln2 = atanh_enclosure(&BigRational::new(BigInt::one(), BigInt::from(3)), bits + 2 + extra);
    let ln2 = RationalInterval { lo: &ln2.lo * &two, hi: &ln2.hi * &two };
    let kq = BigRational::from_integer(BigInt::from(k));
    let part = ln2.scale(&kq);
    Ok(RationalInterval { lo: &part.lo + &at.lo * &two, hi: &part.hi + &at.hi * &two })
}

/// ln over a positive interval, by monotonicity.
pub fn ln_interval(x: &RationalInterval, bits: u32) -> Result<RationalInterval> {
    let lo = ln_enclosure(&x.lo, bits)?;
    let hi = ln_enclosure(&x.hi, bits)?;
    Ok(RationalInterval { lo: lo.lo, hi: hi.hi })
}
