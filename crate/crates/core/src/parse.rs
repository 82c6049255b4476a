//! Text forms of β: `multinacci:n`, `rational:p/q`, `poly:c0,c1,...` or a
//! bare coefficient list.

use alloc::sync::Arc;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::classify::{multinacci_field, rational_field_big};
use crate::error::{Error, Result};
use crate::field::{make_field, AlgebraicField};
use crate::poly::IntPolynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BetaSpec {
    Multinacci(usize),
    Rational(BigRational),
    Polynomial(IntPolynomial),
}

impl BetaSpec {
    pub fn field(&self) -> Result<Arc<AlgebraicField>> {
        match self {
            BetaSpec::Multinacci(n) => multinacci_field(*n),
            BetaSpec::Rational(r) => rational_field_big(r),
            BetaSpec::Polynomial(p) => make_field(p, None),
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(alloc::format!("bad rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for BetaSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("multinacci:") {
            let n: usize = rest.trim().parse().map_err(|_| Error::Parse(alloc::format!("bad multinacci index {rest:?}")))?;
            if n < 2 {
                return Err(Error::InvalidArgument(alloc::format!("multinacci index must be >= 2, got {n}")));
            }
            return Ok(BetaSpec::Multinacci(n));
        }
        if let Some(rest) = s.strip_prefix("rational:") {
            return Ok(BetaSpec::Rational(parse_rational(rest)?));
        }
        let list = s.strip_prefix("poly:").unwrap_or(s);
        if list.is_empty() {
            return Err(Error::Parse("empty beta spec".into()));
        }
        Ok(BetaSpec::Polynomial(IntPolynomial::parse(list)?))
    }
}

impl fmt::Display for BetaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BetaSpec::Multinacci(n) => write!(f, "multinacci:{n}"),
            BetaSpec::Rational(r) => write!(f, "rational:{r}"),
            BetaSpec::Polynomial(p) => write!(f, "poly:{}", p.to_csv()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!("multinacci:4".parse::<BetaSpec>().unwrap(), BetaSpec::Multinacci(4));
        assert_eq!(
            "rational:17/10".parse::<BetaSpec>().unwrap(),
            BetaSpec::Rational(BigRational::new(17.into(), 10.into()))
        );
        let p = IntPolynomial::from_i64(&[-1, -1, 1]);
        assert_eq!("poly:-1,-1,1".parse::<BetaSpec>().unwrap(), BetaSpec::Polynomial(p.clone()));
        assert_eq!("-1, -1, 1".parse::<BetaSpec>().unwrap(), BetaSpec::Polynomial(p));
    }

    #[test]
    fn rejects_garbage() {
        assert!("multinacci:x".parse::<BetaSpec>().is_err());
        assert!("multinacci:1".parse::<BetaSpec>().is_err());
        assert!("rational:1/0".parse::<BetaSpec>().is_err());
        assert!("poly:".parse::<BetaSpec>().is_err());
        assert!("1,a".parse::<BetaSpec>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["multinacci:7", "rational:3/2", "poly:-1,0,-1,1"] {
            assert_eq!(s.parse::<BetaSpec>().unwrap().to_string(), s);
        }
    }
}
