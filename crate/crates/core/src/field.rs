//! Exact arithmetic in ℚ(β) for a real algebraic β in (1, 2).
//!
//! Elements are residues modulo the (certified irreducible) defining
//! polynomial, so an element is zero exactly when its residue is the zero
//! polynomial. Signs of nonzero elements are found by evaluating the residue
//! in interval arithmetic over an isolating interval for β, bisecting the
//! interval until the enclosure excludes zero.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::RationalInterval;
use crate::irreducible::certify_irreducible;
use crate::poly::{IntPolynomial, QPoly};

pub const DEFAULT_PRECISION_LIMIT: u32 = 4096;

/// Width exponent of the isolating interval stored at construction.
const INITIAL_BITS: u32 = 64;

#[derive(Debug)]
enum Root {
    Rational(BigRational),
    Isolated {
        interval: RationalInterval,
        /// Sign of the modulus at the left end of any refinement of `interval`.
        left_sign: Ordering,
    },
}

/// The number field ℚ(β) together with an isolating interval for β.
#[derive(Debug)]
pub struct AlgebraicField {
    defining: IntPolynomial,
    modulus: QPoly,
    root: Root,
    precision_limit: u32,
}

/// Builds the field for the root of `p` in `hint` (default window (1, 2)).
pub fn make_field(p: &IntPolynomial, hint: Option<RationalInterval>) -> Result<Arc<AlgebraicField>> {
    AlgebraicField::new(p, hint, DEFAULT_PRECISION_LIMIT)
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn two_pow_neg(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2).pow(bits))
}

impl AlgebraicField {
    pub fn new(p: &IntPolynomial, hint: Option<RationalInterval>, precision_limit: u32) -> Result<Arc<Self>> {
        if p.degree().unwrap_or(0) == 0 {
            return Err(Error::InvalidArgument("defining polynomial must be nonconstant".into()));
        }
        if precision_limit < INITIAL_BITS {
            return Err(Error::InvalidArgument("precision limit must be at least 64 bits".into()));
        }
        let window = match hint {
            Some(h) => {
                if h.lo < q(1) || h.hi > q(2) || h.lo >= h.hi {
                    return Err(Error::InvalidArgument(alloc::format!(
                        "hint {h} must satisfy 1 <= lo < hi <= 2"
                    )));
                }
                h
            }
            None => RationalInterval::new(q(1), q(2)),
        };

        let sqf = p.to_rational().squarefree();
        let rational = sqf
            .rational_roots()
            .ok_or_else(|| Error::Uncertified("coefficients too large for rational-root search".into()))?;
        let mut rest = sqf.clone();
        let mut inside = Vec::new();
        for r in &rational {
            rest = rest.div_rem(&QPoly::new(alloc::vec![-r, BigRational::one()])).0;
            if &window.lo < r && r < &window.hi {
                inside.push(r.clone());
            }
        }
        let mut count = inside.len();
        if rest.degree().unwrap_or(0) > 0 {
            count += rest.sturm_count(&window.lo, &window.hi);
            // sturm_count is over (lo, hi]; irrational `rest` cannot vanish at hi
        }
        match count {
            0 => return Err(Error::NoRoot),
            1 => {}
            n => return Err(Error::AmbiguousRoot { count: n }),
        }

        if let Some(r) = inside.pop() {
            let modulus = QPoly::new(alloc::vec![-&r, BigRational::one()]);
            return Ok(Arc::new(AlgebraicField {
                defining: modulus.to_primitive_int(),
                modulus,
                root: Root::Rational(r),
                precision_limit,
            }));
        }

        let defining = rest.to_primitive_int();
        if !certify_irreducible(&defining) {
            return Err(Error::Uncertified(alloc::format!(
                "{defining} has no modular degree-pattern certificate; supply the irreducible factor of beta"
            )));
        }
        let modulus = rest.monic();
        let left_sign = sign_of(&modulus.eval(&window.lo));
        let mut interval = window;
        let target = two_pow_neg(INITIAL_BITS);
        while interval.width() > target {
            interval = bisect(&modulus, &interval, left_sign);
        }
        Ok(Arc::new(AlgebraicField { defining, modulus, root: Root::Isolated { interval, left_sign }, precision_limit }))
    }

    /// Primitive integer form of the irreducible polynomial of β.
    pub fn defining_polynomial(&self) -> &IntPolynomial {
        &self.defining
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(1)
    }

    pub fn precision_limit(&self) -> u32 {
        self.precision_limit
    }

    /// β itself when it is rational.
    pub fn rational_beta(&self) -> Option<&BigRational> {
        match &self.root {
            Root::Rational(r) => Some(r),
            Root::Isolated { .. } => None,
        }
    }

    /// Current isolating interval for β.
    pub fn beta_interval(&self) -> RationalInterval {
        match &self.root {
            Root::Rational(r) => RationalInterval::point(r.clone()),
            Root::Isolated { interval, .. } => interval.clone(),
        }
    }

    /// An isolating interval for β of width at most `width`.
    pub fn refine_beta(&self, width: &BigRational) -> Result<RationalInterval> {
        self.check_width(width)?;
        match &self.root {
            Root::Rational(r) => Ok(RationalInterval::point(r.clone())),
            Root::Isolated { interval, left_sign } => {
                let mut iv = interval.clone();
                while &iv.width() > width {
                    iv = bisect(&self.modulus, &iv, *left_sign);
                }
                Ok(iv)
            }
        }
    }

    fn check_width(&self, width: &BigRational) -> Result<()> {
        if !width.is_positive() {
            return Err(Error::InvalidArgument("width must be positive".into()));
        }
        if width < &two_pow_neg(self.precision_limit) {
            return Err(Error::PrecisionExceeded { limit: self.precision_limit });
        }
        Ok(())
    }

    pub fn same_as(&self, other: &AlgebraicField) -> bool {
        if core::ptr::eq(self, other) {
            return true;
        }
        if self.modulus != other.modulus {
            return false;
        }
        let (a, b) = (self.beta_interval(), other.beta_interval());
        a.lo <= b.hi && b.lo <= a.hi
    }

    pub fn element(self: &Arc<Self>, residue: QPoly) -> FieldElement {
        let residue = if residue.degree().unwrap_or(0) >= self.degree() { residue.rem(&self.modulus) } else { residue };
        FieldElement { residue, field: Arc::clone(self) }
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        self.element(QPoly::zero())
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_integer(1)
    }

    pub fn from_integer(self: &Arc<Self>, n: i64) -> FieldElement {
        self.element(QPoly::constant(q(n)))
    }

    pub fn from_rational(self: &Arc<Self>, r: BigRational) -> FieldElement {
        self.element(QPoly::constant(r))
    }

    /// The generator β.
    pub fn beta(self: &Arc<Self>) -> FieldElement {
        match &self.root {
            Root::Rational(r) => self.from_rational(r.clone()),
            Root::Isolated { .. } => self.element(QPoly::monomial(1, BigRational::one())),
        }
    }

    /// Evaluates an integer polynomial at β.
    pub fn eval_at_beta(self: &Arc<Self>, p: &QPoly) -> FieldElement {
        let beta = self.beta();
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * &beta) + &self.from_rational(c.clone());
        }
        acc
    }

    fn sign_of_residue(&self, r: &QPoly) -> Result<Ordering> {
        if r.is_zero() {
            return Ok(Ordering::Equal);
        }
        match &self.root {
            Root::Rational(b) => Ok(sign_of(&r.eval(b))),
            Root::Isolated { interval, left_sign } => {
                let mut iv = interval.clone();
                let mut bits = INITIAL_BITS;
                let ints = integer_coefficients(r);
                loop {
                    if let Some(s) = interval_sign(&ints, &iv) {
                        return Ok(s);
                    }
                    if bits >= self.precision_limit {
                        return Err(Error::UndecidableComparison);
                    }
                    iv = bisect(&self.modulus, &iv, *left_sign);
                    bits += 1;
                }
            }
        }
    }

    fn enclose_residue(&self, r: &QPoly, width: &BigRational) -> Result<RationalInterval> {
        self.check_width(width)?;
        if r.is_zero() {
            return Ok(RationalInterval::point(BigRational::zero()));
        }
        match &self.root {
            Root::Rational(b) => Ok(RationalInterval::point(r.eval(b))),
            Root::Isolated { interval, left_sign } => {
                let mut iv = interval.clone();
                let mut bits = INITIAL_BITS;
                loop {
                    let e = r.eval_interval(&iv);
                    if &e.width() <= width {
                        return Ok(e);
                    }
                    if bits >= self.precision_limit {
                        return Err(Error::PrecisionExceeded { limit: self.precision_limit });
                    }
                    iv = bisect(&self.modulus, &iv, *left_sign);
                    bits += 1;
                }
            }
        }
    }
}

fn sign_of(x: &BigRational) -> Ordering {
    if x.is_positive() {
        Ordering::Greater
    } else if x.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

/// Coefficients of a positive integer multiple of `r`.
fn integer_coefficients(r: &QPoly) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in r.coeffs() {
        lcm = num_integer::Integer::lcm(&lcm, c.denom());
    }
    r.coeffs().iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect()
}

/// Sign of a polynomial over a positive interval when it is constant there,
/// by Horner's rule on integers scaled by powers of a common denominator.
fn interval_sign(coeffs: &[BigInt], iv: &RationalInterval) -> Option<Ordering> {
    let d = num_integer::Integer::lcm(iv.lo.denom(), iv.hi.denom());
    let a = (&iv.lo * BigRational::from_integer(d.clone())).to_integer();
    let b = (&iv.hi * BigRational::from_integer(d.clone())).to_integer();
    debug_assert!(a.is_positive());
    let mut lo = coeffs.last()?.clone();
    let mut hi = lo.clone();
    let mut dpow = BigInt::one();
    for c in coeffs.iter().rev().skip(1) {
        dpow *= &d;
        let t = c * &dpow;
        // [lo, hi]·[a, b] with 0 < a ≤ b
        let nlo = if lo.is_negative() { &lo * &b } else { &lo * &a };
        let nhi = if hi.is_negative() { &hi * &a } else { &hi * &b };
        lo = nlo + &t;
        hi = nhi + &t;
    }
    if lo.is_positive() {
        Some(Ordering::Greater)
    } else if hi.is_negative() {
        Some(Ordering::Less)
    } else {
        None
    }
}

fn bisect(modulus: &QPoly, iv: &RationalInterval, left_sign: Ordering) -> RationalInterval {
    let mid = iv.mid();
    let s = sign_of(&modulus.eval(&mid));
    if s == left_sign {
        RationalInterval { lo: mid, hi: iv.hi.clone() }
    } else {
        RationalInterval { lo: iv.lo.clone(), hi: mid }
    }
}

/// An exact element of ℚ(β).
#[derive(Clone)]
pub struct FieldElement {
    residue: QPoly,
    field: Arc<AlgebraicField>,
}

impl FieldElement {
    pub fn residue(&self) -> &QPoly {
        &self.residue
    }

    pub fn field(&self) -> &Arc<AlgebraicField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    fn check_field(&self, other: &FieldElement) {
        assert!(self.field.same_as(&other.field), "field elements from different fields");
    }

    /// Exact sign of the element.
    pub fn sign(&self) -> Result<Ordering> {
        self.field.sign_of_residue(&self.residue)
    }

    /// Exact sign of `self − other`.
    pub fn compare(&self, other: &FieldElement) -> Result<Ordering> {
        if !self.field.same_as(&other.field) {
            return Err(Error::FieldMismatch);
        }
        if self.residue == other.residue {
            return Ok(Ordering::Equal);
        }
        (self - other).sign()
    }

    pub fn lt(&self, other: &FieldElement) -> Result<bool> {
        Ok(self.compare(other)? == Ordering::Less)
    }

    pub fn gt(&self, other: &FieldElement) -> Result<bool> {
        Ok(self.compare(other)? == Ordering::Greater)
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &self.field.root {
            Root::Rational(_) => {
                let c = self.residue.coeff(0);
                Ok(self.field.from_rational(c.recip()))
            }
            Root::Isolated { .. } => {
                let (g, s) = QPoly::gcd_cofactor(&self.residue, &self.field.modulus);
                debug_assert_eq!(g.degree(), Some(0));
                Ok(self.field.element(s))
            }
        }
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> FieldElement {
        let mut result = self.field.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Rational enclosure of width at most `width`.
    pub fn refine(&self, width: &BigRational) -> Result<RationalInterval> {
        self.field.enclose_residue(&self.residue, width)
    }

    /// The residue written as a polynomial in `b` (the generator β).
    pub fn to_poly_string(&self) -> String {
        match &self.field.root {
            Root::Rational(_) => self.residue.coeff(0).to_string(),
            Root::Isolated { .. } => self.residue.to_string_in("b"),
        }
    }

    /// The value rounded to `sig` significant digits in plain decimal notation.
    pub fn to_decimal(&self, sig: u32) -> Result<String> {
        if self.is_zero() {
            return Ok("0".into());
        }
        let sig = sig.max(1);
        let mut width = two_pow_neg(INITIAL_BITS);
        let mut enclosure = self.refine(&width)?;
        while enclosure.sign().is_none() {
            width = &width / q(1 << 16);
            enclosure = self.refine(&width)?;
        }
        let e = decimal_exponent(&enclosure.mid().abs());
        let needed = pow10_rational(e - sig as i64 - 2);
        if enclosure.width() > needed {
            enclosure = self.refine(&needed)?;
        }
        Ok(format_decimal(&enclosure.mid(), sig))
    }
}

fn pow10_rational(e: i64) -> BigRational {
    let p = BigInt::from(10).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// `floor(log10(x))` for `x > 0`.
fn decimal_exponent(x: &BigRational) -> i64 {
    let mut e: i64 = (x.numer().bits() as i64 - x.denom().bits() as i64) * 30103 / 100000;
    while &pow10_rational(e) > x {
        e -= 1;
    }
    while &pow10_rational(e + 1) <= x {
        e += 1;
    }
    e
}

/// Formats a nonzero rational to `sig` significant digits, trimming trailing zeros.
pub fn format_decimal(x: &BigRational, sig: u32) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let negative = x.is_negative();
    let a = x.abs();
    let mut e = decimal_exponent(&a);
    let mut scale = sig as i64 - 1 - e;
    let mut digits = (a * pow10_rational(scale)).round().to_integer();
    if digits >= BigInt::from(10).pow(sig) {
        e += 1;
        scale -= 1;
        digits = (x.abs() * pow10_rational(scale)).round().to_integer();
    }
    let _ = e;
    let mut s = digits.to_string();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if scale <= 0 {
        out.push_str(&s);
        for _ in 0..(-scale) {
            out.push('0');
        }
        return out;
    }
    let scale = scale as usize;
    if s.len() <= scale {
        let mut padded = String::new();
        for _ in 0..(scale - s.len() + 1) {
            padded.push('0');
        }
        padded.push_str(&s);
        s = padded;
    }
    let (int_part, frac_part) = s.split_at(s.len() - scale);
    let frac = frac_part.trim_end_matches('0');
    out.push_str(int_part);
    if !frac.is_empty() {
        out.push('.');
        out.push_str(frac);
    }
    out
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_as(&other.field) && self.residue == other.residue
    }
}

impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({})", self.to_poly_string())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_poly_string())
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.check_field(rhs);
        FieldElement { residue: &self.residue + &rhs.residue, field: Arc::clone(&self.field) }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.check_field(rhs);
        FieldElement { residue: &self.residue - &rhs.residue, field: Arc::clone(&self.field) }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.check_field(rhs);
        let product = &self.residue * &rhs.residue;
        self.field.element(product)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { residue: -&self.residue, field: Arc::clone(&self.field) }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn golden() -> Arc<AlgebraicField> {
        make_field(&IntPolynomial::from_i64(&[-1, -1, 1]), None).unwrap()
    }

    #[test]
    fn golden_ratio_interval_bisection_oracle() {
        // Oracle: plain bisection of x^2 - x - 1 on [1, 2] to width 1e-6.
        let (mut lo, mut hi) = (1.0f64, 2.0f64);
        while hi - lo > 1e-6 {
            let m = 0.5 * (lo + hi);
            if m * m - m - 1.0 < 0.0 {
                lo = m
            } else {
                hi = m
            }
        }
        let iv = golden().refine_beta(&r(1, 1_000_000)).unwrap();
        assert!(iv.lo <= BigRational::from_float(hi).unwrap());
        assert!(iv.hi >= BigRational::from_float(lo).unwrap());
        assert!(iv.contains(&r(16180, 10000)) || iv.lo > r(16180, 10000));
        assert!(iv.hi < r(16181, 10000));
    }

    #[test]
    fn gamma_polynomial_root() {
        let f = make_field(&IntPolynomial::from_i64(&[-1, 0, -1, 1]), None).unwrap();
        let iv = f.refine_beta(&r(1, 1_000_000)).unwrap();
        assert!(iv.lo > r(14655, 10000) && iv.hi < r(14658, 10000));
    }

    #[test]
    fn linear_polynomial_gives_rational_field() {
        let f = make_field(&IntPolynomial::from_i64(&[-3, 2]), None).unwrap();
        assert_eq!(f.rational_beta(), Some(&r(3, 2)));
        assert_eq!(f.degree(), 1);
        let b = f.beta();
        assert_eq!(b.to_poly_string(), "3/2");
    }

    #[test]
    fn rational_root_inside_reducible_input_is_found() {
        // (2x - 3)(x^2 + 1)
        let f = make_field(&IntPolynomial::from_i64(&[-3, 2, -3, 2]), None).unwrap();
        assert_eq!(f.rational_beta(), Some(&r(3, 2)));
    }

    #[test]
    fn field_construction_errors() {
        assert_eq!(make_field(&IntPolynomial::from_i64(&[1, 0, 1]), None).unwrap_err(), Error::NoRoot);
        // (x - 5/4)(x - 7/4)
        let two = IntPolynomial::from_i64(&[35, -48, 16]);
        assert_eq!(make_field(&two, None).unwrap_err(), Error::AmbiguousRoot { count: 2 });
        let hinted = make_field(&two, Some(RationalInterval::new(r(3, 2), r(2, 1)))).unwrap();
        assert_eq!(hinted.rational_beta(), Some(&r(7, 4)));
        assert!(matches!(make_field(&IntPolynomial::from_i64(&[3]), None), Err(Error::InvalidArgument(_))));
        // (x^2 - x - 1)(x^2 + 1)
        let reducible = IntPolynomial::from_i64(&[-1, -1, 0, -1, 1]);
        assert!(matches!(make_field(&reducible, None), Err(Error::Uncertified(_))));
    }

    #[test]
    fn squarefree_part_taken_automatically() {
        // (x^2 - x - 1)^2
        let p = IntPolynomial::from_i64(&[1, 2, -1, -2, 1]);
        let f = make_field(&p, None).unwrap();
        assert_eq!(f.defining_polynomial(), &IntPolynomial::from_i64(&[-1, -1, 1]));
        let g = QPoly::gcd(f.modulus(), &f.modulus().derivative());
        assert_eq!(g.degree(), Some(0));
    }

    #[test]
    fn compare_examples() {
        let f = golden();
        let b = f.beta();
        let m = &(&(&b * &b) - &b) - &f.one();
        assert_eq!(m.sign().unwrap(), Ordering::Equal);
        assert!(m.is_zero());
        // T1 = beta - 1 = 1/beta
        let t1 = &b - &f.one();
        assert_eq!(t1.compare(&b.inv().unwrap()).unwrap(), Ordering::Equal);

        let h = make_field(&IntPolynomial::from_i64(&[-3, 2]), None).unwrap();
        let b = h.beta();
        let s1 = &h.from_integer(2) - &b;
        let xs = (&b + &h.one()).inv().unwrap();
        assert_eq!(s1.compare(&xs).unwrap(), Ordering::Greater);
    }

    #[test]
    fn refine_examples() {
        let f = golden();
        let iv = f.beta().refine(&r(1, 10_000)).unwrap();
        assert!(iv.width() <= r(1, 10_000));
        assert!(iv.lo > r(16170, 10000) && iv.hi < r(16190, 10000));
        assert_eq!(f.zero().refine(&r(1, 10)).unwrap(), RationalInterval::point(r(0, 1)));
        let h = make_field(&IntPolynomial::from_i64(&[-3, 2]), None).unwrap();
        let xl = h.from_integer(2).div(&(&h.beta() + &h.one())).unwrap();
        assert!(xl.refine(&r(1, 1000)).unwrap().contains(&r(4, 5)));
        assert!(matches!(f.beta().refine(&two_pow_neg(5000)), Err(Error::PrecisionExceeded { .. })));
        assert!(matches!(f.beta().refine(&r(0, 1)), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn inverse_round_trips() {
        let f = make_field(&IntPolynomial::from_i64(&[-1, -1, -1, -1, 1]), None).unwrap();
        let x = f.element(QPoly::new(alloc::vec![r(3, 7), r(-2, 1), r(0, 1), r(5, 3)]));
        assert_eq!(&x * &x.inv().unwrap(), f.one());
        assert_eq!(f.zero().inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn decimal_formatting() {
        let f = golden();
        assert_eq!(f.beta().to_decimal(12).unwrap(), "1.61803398875");
        assert_eq!(format_decimal(&r(1, 4), 12), "0.25");
        assert_eq!(format_decimal(&r(-1, 8000), 3), "-0.000125");
        assert_eq!(format_decimal(&r(99999, 1), 3), "100000");
        assert_eq!(format_decimal(&r(1, 3), 4), "0.3333");
    }
}
