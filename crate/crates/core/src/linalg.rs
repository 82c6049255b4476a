//! Small dense linear algebra over ℚ(β) and ℚ.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Result;
use crate::field::FieldElement;
use crate::poly::QPoly;

/// Basis of the right nullspace of `rows` (all rows the same length, at
/// least one row), by exact reduction to row echelon form.
pub fn nullspace(rows: &[Vec<FieldElement>]) -> Result<Vec<Vec<FieldElement>>> {
    let mut a: Vec<Vec<FieldElement>> = rows.to_vec();
    let field = a[0][0].field().clone();
    let cols = a[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv()?;
        for x in &mut a[r][c..cols] {
            *x = &*x * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for k in c..cols {
                    row[k] = &row[k] - &(&factor * &pivot_row[k]);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); cols];
        v[free] = field.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -&a[row][free];
        }
        basis.push(v);
    }
    Ok(basis)
}

/// det(xI − A) for an integer matrix, by the Faddeev–LeVerrier recursion.
pub fn char_poly(a: &[Vec<i64>]) -> QPoly {
    let n = a.len();
    let a: Vec<Vec<BigRational>> =
        a.iter().map(|row| row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()).collect();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::from_integer(BigInt::from(1));
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I
        let mut next = matmul(&a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am = matmul(&a, &m);
        let trace: BigRational = (0..n).map(|i| am[i][i].clone()).fold(BigRational::zero(), |s, x| s + x);
        coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k as i64));
    }
    QPoly::new(coeffs)
}

fn matmul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}
