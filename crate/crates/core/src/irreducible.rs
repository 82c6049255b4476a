//! Irreducibility certificates over ℚ from factorization patterns modulo
//! small primes.
//!
//! A factor of degree `d` over ℚ reduces to a product of factors modulo every
//! prime of good reduction, so `d` must be a subset sum of each modular
//! degree pattern. If no `d` in `1..deg` survives every prime tried, the
//! polynomial is irreducible.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::poly::IntPolynomial;

const PRIMES_TO_TRY: usize = 80;

/// `true` if `p` is certified irreducible over ℚ. `p` must be squarefree
/// with no rational roots; degrees 2 and 3 then qualify immediately.
pub(crate) fn certify_irreducible(p: &IntPolynomial) -> bool {
    let deg = match p.degree() {
        Some(d) => d,
        None => return false,
    };
    if deg <= 3 {
        return true;
    }
    let mut candidates: Vec<bool> = vec![true; deg + 1];
    candidates[0] = false;
    candidates[deg] = false;
    for q in small_primes(PRIMES_TO_TRY) {
        let f = reduce_mod(p.coeffs(), q);
        if f.len() != deg + 1 {
            continue;
        }
        let f = make_monic(&f, q);
        let df = derivative(&f, q);
        if poly_gcd(&f, &df, q).len() > 1 {
            continue;
        }
        let pattern = ddf_pattern(&f, q);
        let sums = subset_sums(&pattern, deg);
        for d in 1..deg {
            if !sums[d] {
                candidates[d] = false;
            }
        }
        if candidates.iter().all(|c| !c) {
            return true;
        }
    }
    false
}

fn small_primes(count: usize) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut n = 3u64;
    while primes.len() < count {
        if primes.iter().take_while(|&&p| p * p <= n).all(|&p| !n.is_multiple_of(p)) {
            primes.push(n);
        }
        n += 2;
    }
    primes
}

fn reduce_mod(coeffs: &[BigInt], q: u64) -> Vec<u64> {
    let qb = BigInt::from(q);
    let mut out: Vec<u64> = coeffs
        .iter()
        .map(|c| {
            let mut r = c % &qb;
            if r < BigInt::zero() {
                r += &qb;
            }
            r.to_u64().unwrap_or(0)
        })
        .collect();
    trim(&mut out);
    out
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1u64;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, q);
        }
        b = mul_mod(b, b, q);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, q: u64) -> u64 {
    pow_mod(a, q - 2, q)
}

fn make_monic(p: &[u64], q: u64) -> Vec<u64> {
    let inv = inv_mod(*p.last().unwrap(), q);
    p.iter().map(|&c| mul_mod(c, inv, q)).collect()
}

fn derivative(p: &[u64], q: u64) -> Vec<u64> {
    let mut out: Vec<u64> = p.iter().enumerate().skip(1).map(|(i, &c)| mul_mod(c, i as u64 % q, q)).collect();
    trim(&mut out);
    out
}

fn poly_sub(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + q - y) % q
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_mul(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, q)) % q;
        }
    }
    trim(&mut out);
    out
}

fn poly_divrem(a: &[u64], b: &[u64], q: u64) -> (Vec<u64>, Vec<u64>) {
    let db = b.len() - 1;
    let inv = inv_mod(b[db], q);
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0u64; rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = mul_mod(rem[i + db], inv, q);
        if c == 0 {
            continue;
        }
        for (j, &d) in b.iter().enumerate() {
            rem[i + j] = (rem[i + j] + q - mul_mod(c, d, q)) % q;
        }
        quot[i] = c;
    }
    rem.truncate(db);
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn poly_gcd(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = poly_divrem(&x, &y, q).1;
        x = y;
        y = r;
    }
    if x.is_empty() {
        x
    } else {
        make_monic(&x, q)
    }
}

fn powmod_poly(base: &[u64], mut e: u64, m: &[u64], q: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = poly_divrem(base, m, q).1;
    while e > 0 {
        if e & 1 == 1 {
            result = poly_divrem(&poly_mul(&result, &b, q), m, q).1;
        }
        b = poly_divrem(&poly_mul(&b, &b, q), m, q).1;
        e >>= 1;
    }
    result
}

/// Degrees of the irreducible factors of a monic squarefree `f` over F_q
/// (distinct-degree factorization).
fn ddf_pattern(f: &[u64], q: u64) -> Vec<usize> {
    let mut pattern = Vec::new();
    let mut rest = f.to_vec();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let mut i = 1usize;
    while rest.len() > 2 * i {
        h = powmod_poly(&h, q, &rest, q);
        let g = poly_gcd(&rest, &poly_sub(&h, &x, q), q);
        let dg = g.len() - 1;
        if dg > 0 {
            for _ in 0..dg / i {
                pattern.push(i);
            }
            rest = poly_divrem(&rest, &g, q).0;
            h = poly_divrem(&h, &rest, q).1;
        }
        i += 1;
    }
    if rest.len() > 1 {
        pattern.push(rest.len() - 1);
    }
    pattern
}

fn subset_sums(parts: &[usize], max: usize) -> Vec<bool> {
    let mut reach = vec![false; max + 1];
    reach[0] = true;
    for &p in parts {
        for s in (p..=max).rev() {
            if reach[s - p] {
                reach[s] = true;
            }
        }
    }
    reach
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multinacci_polynomials_are_certified() {
        for n in 2..=12usize {
            let mut c = vec![-1i64; n];
            c.push(1);
            assert!(certify_irreducible(&IntPolynomial::from_i64(&c)), "n = {n}");
        }
    }

    #[test]
    fn product_of_quadratics_is_not_certified() {
        // (x^2 - x - 1)(x^2 + 1) = x^4 - x^3 - x - 1
        let p = IntPolynomial::from_i64(&[-1, -1, 0, -1, 1]);
        assert!(!certify_irreducible(&p));
    }

    #[test]
    fn ddf_of_split_polynomial() {
        // (x-1)(x-2)(x^2+1) mod 7: x^2 + 1 is irreducible mod 7
        let f = poly_mul(&poly_mul(&[6, 1], &[5, 1], 7), &[1, 0, 1], 7);
        let mut p = ddf_pattern(&f, 7);
        p.sort();
        assert_eq!(p, vec![1, 1, 2]);
    }
}
