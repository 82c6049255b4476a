//! Dense univariate polynomials over ℤ and ℚ, ascending coefficient order.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::interval::RationalInterval;

/// Integer polynomial, coefficients in ascending degree. Trailing zeros are
/// trimmed so the leading coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_rational(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// Parses the comma-separated ascending-degree format, e.g. `"-1,-1,1"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        for part in text.split(',') {
            let part = part.trim();
            let c: BigInt = part
                .parse()
                .map_err(|_| Error::Parse(alloc::format!("bad integer coefficient {part:?}")))?;
            coeffs.push(c);
        }
        Ok(Self::new(coeffs))
    }

    /// Inverse of [`IntPolynomial::parse`].
    pub fn to_csv(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        parts.join(",")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.to_rational();
        f.write_str(&q.to_string_in("x"))
    }
}

/// Polynomial with exact rational coefficients; residues of field elements
/// are stored in this form.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::new(vec![c])
    }

    /// `c·x^deg`
    pub fn monomial(deg: usize, c: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        QPoly::new(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &QPoly) -> (QPoly, QPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * d;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (QPoly::new(quot), QPoly::new(rem))
    }

    pub fn rem(&self, divisor: &QPoly) -> QPoly {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let r = x.rem(&y);
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Returns `(g, s)` with `s·a ≡ g (mod m)` and `g = gcd(a, m)` monic.
    pub fn gcd_cofactor(a: &QPoly, m: &QPoly) -> (QPoly, QPoly) {
        let (mut r0, mut r1) = (a.clone(), m.clone());
        let (mut s0, mut s1) = (QPoly::constant(BigRational::one()), QPoly::zero());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        match r0.leading() {
            None => (QPoly::zero(), QPoly::zero()),
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), s0.scale(&inv))
            }
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation in interval arithmetic: an enclosure of the range
    /// of the polynomial over `x`.
    pub fn eval_interval(&self, x: &RationalInterval) -> RationalInterval {
        let mut acc = RationalInterval::point(BigRational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add_scalar(c);
        }
        acc
    }

    /// Squarefree part `p / gcd(p, p')`, made monic.
    pub fn squarefree(&self) -> QPoly {
        let g = QPoly::gcd(self, &self.derivative());
        if g.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        self.div_rem(&g).0.monic()
    }

    /// Scales to a primitive integer polynomial with positive leading coefficient.
    pub fn to_primitive_int(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::new(Vec::new());
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        let sign = if ints.last().is_some_and(|l| l.is_negative()) { -BigInt::one() } else { BigInt::one() };
        IntPolynomial::new(ints.into_iter().map(|c| &c / &g * &sign).collect())
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`,
    /// counted with a Sturm sequence. `self` must be squarefree.
    pub fn sturm_count(&self, a: &BigRational, b: &BigRational) -> usize {
        let seq = self.sturm_sequence();
        let va = sign_variations(&seq, a);
        let vb = sign_variations(&seq, b);
        va.saturating_sub(vb)
    }

    fn sturm_sequence(&self) -> Vec<QPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(-&r);
        }
        seq
    }

    /// Renders the polynomial with the given variable name, highest degree first.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let unit = mag.is_one();
            match i {
                0 => out.push_str(&mag.to_string()),
                _ => {
                    if !unit {
                        out.push_str(&mag.to_string());
                        out.push('*');
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push('^');
                        out.push_str(&i.to_string());
                    }
                }
            }
        }
        out
    }

    /// All rational roots, found with the rational root theorem. Returns
    /// `None` when the coefficients are too large to enumerate divisors.
    pub fn rational_roots(&self) -> Option<Vec<BigRational>> {
        let ip = self.to_primitive_int();
        let coeffs = ip.coeffs();
        if coeffs.is_empty() {
            return Some(Vec::new());
        }
        let mut roots = Vec::new();
        let shift = coeffs.iter().take_while(|c| c.is_zero()).count();
        if shift > 0 {
            roots.push(BigRational::zero());
        }
        let a0 = coeffs[shift].abs();
        let an = coeffs[coeffs.len() - 1].abs();
        let a0 = a0.to_u64().filter(|&v| v <= 1_000_000_000_000)?;
        let an = an.to_u64().filter(|&v| v <= 1_000_000_000_000)?;
        let q = self.clone();
        for p in divisors(a0) {
            for d in divisors(an) {
                if p.gcd(&d) != 1 {
                    continue;
                }
                for sign in [1i64, -1] {
                    let r = BigRational::new(BigInt::from(p) * sign, BigInt::from(d));
                    if q.eval(&r).is_zero() && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
        Some(roots)
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn sign_variations(seq: &[QPoly], x: &BigRational) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for p in seq {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if let Some(prev) = last {
            if prev != pos {
                count += 1;
            }
        }
        last = Some(pos);
    }
    count
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn div_rem_reconstructs_dividend() {
        let a = QPoly::from_i64(&[3, 0, -2, 5, 1]);
        let b = QPoly::from_i64(&[-1, 2, 3]);
        let (quot, rem) = a.div_rem(&b);
        assert!(rem.degree().unwrap_or(0) < 2);
        assert_eq!(&(&quot * &b) + &rem, a);
    }

    #[test]
    fn squarefree_part_drops_repeated_factor() {
        // (x - 1)^2 (x + 2)
        let p = QPoly::from_i64(&[2, -3, 0, 1]);
        assert_eq!(p.squarefree(), QPoly::from_i64(&[-2, 1, 1]));
    }

    #[test]
    fn sturm_counts_golden_ratio_roots() {
        let p = QPoly::from_i64(&[-1, -1, 1]);
        assert_eq!(p.sturm_count(&q(1, 1), &q(2, 1)), 1);
        assert_eq!(p.sturm_count(&q(-1, 1), &q(2, 1)), 2);
        assert_eq!(p.sturm_count(&q(2, 1), &q(5, 1)), 0);
    }

    #[test]
    fn rational_roots_found() {
        // (2x - 3)(x^2 + 1)
        let p = QPoly::from_i64(&[-3, 2, -3, 2]);
        assert_eq!(p.rational_roots().unwrap(), vec![q(3, 2)]);
    }

    #[test]
    fn cofactor_inverts_modulo() {
        let m = QPoly::from_i64(&[-1, -1, 1]);
        let a = QPoly::from_i64(&[1, 1]);
        let (g, s) = QPoly::gcd_cofactor(&a, &m);
        assert_eq!(g, QPoly::from_i64(&[1]));
        assert_eq!((&a * &s).rem(&m), QPoly::from_i64(&[1]));
    }

    #[test]
    fn rendering() {
        assert_eq!(QPoly::from_i64(&[-1, -1, 1]).to_string_in("b"), "b^2 - b - 1");
        assert_eq!(QPoly::new(vec![q(1, 2), q(-3, 1)]).to_string_in("b"), "-3*b + 1/2");
        assert_eq!(IntPolynomial::parse("-1, -1,1").unwrap().to_csv(), "-1,-1,1");
    }
}
