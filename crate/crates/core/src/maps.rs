//! The positive map T and the negative map S on [0, 1].
//!
//! T x = βx (x < 1/β), βx − 1 (x ≥ 1/β); S x = 1 − βx (x < 1/β), 2 − βx
//! (x ≥ 1/β). The branch point 1/β belongs to the right branch.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{AlgebraicField, FieldElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    /// T: slope +β.
    Positive,
    /// S: slope −β.
    Negative,
}

impl Orientation {
    pub fn symbol(&self) -> &'static str {
        match self {
            Orientation::Positive => "T",
            Orientation::Negative => "S",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// One affine branch `x ↦ slope·x + intercept` on `[left, right)` (closed at 1).
#[derive(Clone, Debug)]
pub struct Branch {
    pub left: FieldElement,
    pub right: FieldElement,
    pub slope: FieldElement,
    pub intercept: FieldElement,
}

#[derive(Clone, Debug)]
pub struct PLMap {
    field: Arc<AlgebraicField>,
    orientation: Orientation,
    beta: FieldElement,
    critical: FieldElement,
    branches: [Branch; 2],
}

impl PLMap {
    pub fn new(field: &Arc<AlgebraicField>, orientation: Orientation) -> Self {
        let beta = field.beta();
        let critical = beta.inv().expect("beta is nonzero");
        let (zero, one) = (field.zero(), field.one());
        let (slope, c0, c1) = match orientation {
            Orientation::Positive => (beta.clone(), field.zero(), -&one),
            Orientation::Negative => (-&beta, one.clone(), field.from_integer(2)),
        };
        let branches = [
            Branch { left: zero, right: critical.clone(), slope: slope.clone(), intercept: c0 },
            Branch { left: critical.clone(), right: one, slope, intercept: c1 },
        ];
        PLMap { field: Arc::clone(field), orientation, beta, critical, branches }
    }

    pub fn positive(field: &Arc<AlgebraicField>) -> Self {
        Self::new(field, Orientation::Positive)
    }

    pub fn negative(field: &Arc<AlgebraicField>) -> Self {
        Self::new(field, Orientation::Negative)
    }

    pub fn field(&self) -> &Arc<AlgebraicField> {
        &self.field
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn beta(&self) -> &FieldElement {
        &self.beta
    }

    /// The branch point 1/β.
    pub fn critical_point(&self) -> &FieldElement {
        &self.critical
    }

    pub fn branches(&self) -> &[Branch; 2] {
        &self.branches
    }

    /// Index of the branch containing `x` (0 or 1).
    pub fn branch_index(&self, x: &FieldElement) -> Result<usize> {
        if x.sign()? == Ordering::Less || x.compare(&self.field.one())? == Ordering::Greater {
            return Err(Error::Domain(alloc::format!("{x} is outside [0, 1]")));
        }
        Ok(if x.compare(&self.critical)? == Ordering::Less { 0 } else { 1 })
    }

    /// Image under branch `b` regardless of where `x` lies.
    pub fn apply_branch(&self, b: usize, x: &FieldElement) -> FieldElement {
        let br = &self.branches[b];
        &(&br.slope * x) + &br.intercept
    }

    pub fn apply(&self, x: &FieldElement) -> Result<FieldElement> {
        let b = self.branch_index(x)?;
        Ok(self.apply_branch(b, x))
    }

    /// Fixed points in [0, 1]: {0} for T, {1/(β+1), 2/(β+1)} for S.
    pub fn fixed_points(&self) -> Result<Vec<FieldElement>> {
        let mut out = Vec::new();
        for (b, br) in self.branches.iter().enumerate() {
            // slope·x + c = x  ⇒  x = c / (1 − slope)
            let x = br.intercept.div(&(&self.field.one() - &br.slope))?;
            if x.sign()? == Ordering::Less || x.compare(&self.field.one())? == Ordering::Greater {
                continue;
            }
            if self.branch_index(&x)? == b {
                out.push(x);
            }
        }
        Ok(out)
    }

    pub fn orbit_of_one(&self, depth: usize) -> Result<OrbitTable> {
        let mut points = Vec::with_capacity(depth + 1);
        points.push(self.field.one());
        for k in 0..depth {
            let next = self.apply(&points[k])?;
            points.push(next);
        }
        Ok(OrbitTable { orientation: self.orientation, points })
    }
}

/// `points[k]` = Fᵏ1.
#[derive(Clone, Debug)]
pub struct OrbitTable {
    pub orientation: Orientation,
    pub points: Vec<FieldElement>,
}

impl OrbitTable {
    pub fn depth(&self) -> usize {
        self.points.len() - 1
    }
}

/// x_s = 1/(β+1), the fixed point of S on the left branch.
pub fn small_fixed_point(field: &Arc<AlgebraicField>) -> FieldElement {
    (&field.beta() + &field.one()).inv().expect("beta + 1 is nonzero")
}

/// x_ℓ = 2/(β+1), the fixed point of S on the right branch.
pub fn large_fixed_point(field: &Arc<AlgebraicField>) -> FieldElement {
    &small_fixed_point(field) * &field.from_integer(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{multinacci_field, rational_field};
    use num_rational::BigRational;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn golden_boundary_values() {
        let f = multinacci_field(2).unwrap();
        let t = PLMap::positive(&f);
        let s = PLMap::negative(&f);
        let b = f.beta();
        assert_eq!(t.apply(&f.one()).unwrap(), b.inv().unwrap());
        let x = b.pow(2).inv().unwrap();
        assert_eq!(s.apply(&x).unwrap(), x);
        assert_eq!(t.apply(t.critical_point()).unwrap(), f.zero());
        assert_eq!(s.apply(s.critical_point()).unwrap(), f.one());
        assert_eq!(s.apply(&f.zero()).unwrap(), f.one());
    }

    #[test]
    fn rational_examples() {
        let f = rational_field(3, 2).unwrap();
        let t = PLMap::positive(&f);
        let s = PLMap::negative(&f);
        assert_eq!(s.apply(&f.one()).unwrap(), f.from_rational(r(1, 2)));
        assert_eq!(t.apply(&f.from_rational(r(3, 4))).unwrap(), f.from_rational(r(1, 8)));
        let orbit = t.orbit_of_one(3).unwrap();
        let want = [r(1, 1), r(1, 2), r(3, 4), r(1, 8)];
        for (p, w) in orbit.points.iter().zip(want) {
            assert_eq!(p, &f.from_rational(w));
        }
        assert!(matches!(t.apply(&f.from_integer(2)), Err(Error::Domain(_))));
        assert!(matches!(t.apply(&f.from_integer(-1)), Err(Error::Domain(_))));
    }

    #[test]
    fn golden_orbits() {
        let f = multinacci_field(2).unwrap();
        let t = PLMap::positive(&f).orbit_of_one(2).unwrap();
        assert_eq!(t.points[2], f.zero());
        let s = PLMap::negative(&f).orbit_of_one(2).unwrap();
        assert_eq!(s.points[1], small_fixed_point(&f));
        assert_eq!(s.points[2], s.points[1]);
    }

    #[test]
    fn fixed_points() {
        for f in [rational_field(3, 2).unwrap(), multinacci_field(4).unwrap()] {
            let s = PLMap::negative(&f);
            let fp = s.fixed_points().unwrap();
            assert_eq!(fp, alloc::vec![small_fixed_point(&f), large_fixed_point(&f)]);
            for x in &fp {
                assert_eq!(&s.apply(x).unwrap(), x);
            }
            let t = PLMap::positive(&f);
            assert_eq!(t.fixed_points().unwrap(), alloc::vec![f.zero()]);
        }
    }
}
