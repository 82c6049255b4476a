//! ψₙ against direct preimage counting in plain rational arithmetic.

use betamorph_core::classify::rational_field;
use betamorph_core::monotone::decompose;
use betamorph_core::{Orientation, PLMap};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

/// Preimages of x in [0,1] under one application of the map.
fn preimages(x: &BigRational, beta: &BigRational, negative: bool) -> Vec<BigRational> {
    let one = BigRational::one();
    let crit = &one / beta;
    let mut out = Vec::new();
    let (a, b) = if negative { (&one - x, &one + &one - x) } else { (x.clone(), x + &one) };
    let left = a / beta;
    if left >= BigRational::zero() && left < crit {
        out.push(left);
    }
    let right = b / beta;
    if right >= crit && right <= one {
        out.push(right);
    }
    out
}

fn count(x: &BigRational, beta: &BigRational, negative: bool, n: usize) -> usize {
    let mut level = vec![x.clone()];
    for _ in 0..n {
        level = level.iter().flat_map(|y| preimages(y, beta, negative)).collect();
    }
    level.len()
}

#[test]
fn spectrum_matches_preimage_counts() {
    for (p, d) in [(3, 2), (17, 10), (19, 10)] {
        let f = rational_field(p, d).unwrap();
        let beta = q(p, d);
        for (orientation, n) in [
            (Orientation::Positive, 3),
            (Orientation::Negative, 3),
            (Orientation::Positive, 4),
            (Orientation::Negative, 4),
        ] {
            let sp = decompose(&PLMap::new(&f, orientation), n).unwrap().spectrum();
            let mut checked = 0;
            for i in 0..1000 {
                let x = q(2 * i + 1, 2001);
                let Some(v) = sp.value_at(&f.from_rational(x.clone())).unwrap() else { continue };
                let c = count(&x, &beta, orientation == Orientation::Negative, n);
                assert_eq!(v as usize, c, "β = {p}/{d}, {orientation:?}, n = {n}, x = {x}");
                checked += 1;
            }
            assert!(checked >= 990);
        }
    }
}
