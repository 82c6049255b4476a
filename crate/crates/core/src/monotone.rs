//! Intervals of monotonicity of Fⁿ (F = T or S), their image types, and the
//! preimage-count step function ψₙ(x) = #{y : Fⁿy = x}.
//!
//! Image endpoints of every branch of Fⁿ are 0, 1 or orbit points of 1, so
//! they are interned in a small exactly-sorted [`PointSet`] and branch images
//! are stored as pairs of ids. Domains are kept as exact field elements.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::classify::{classify_beta, BetaClass};
use crate::error::{Error, Result};
use crate::field::{AlgebraicField, FieldElement};
use crate::maps::{Orientation, PLMap};
use crate::poly::QPoly;
use crate::report::Report;

pub const DEFAULT_MAX_ITERATE: usize = 22;

pub type PointId = usize;
pub const ZERO: PointId = 0;
pub const ONE: PointId = 1;
/// The branch point 1/β.
pub const CRIT: PointId = 2;

/// Interned points of [0, 1] kept in exact increasing order.
#[derive(Clone, Debug)]
pub struct PointSet {
    points: Vec<FieldElement>,
    index: BTreeMap<QPoly, PointId>,
    order: Vec<PointId>,
    rank: Vec<usize>,
}

impl PointSet {
    fn new(field: &Arc<AlgebraicField>, critical: &FieldElement) -> Result<Self> {
        let mut set = PointSet { points: Vec::new(), index: BTreeMap::new(), order: Vec::new(), rank: Vec::new() };
        set.intern(field.zero())?;
        set.intern(field.one())?;
        set.intern(critical.clone())?;
        Ok(set)
    }

    pub fn intern(&mut self, x: FieldElement) -> Result<PointId> {
        if let Some(&id) = self.index.get(x.residue()) {
            return Ok(id);
        }
        let (mut lo, mut hi) = (0usize, self.order.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.points[self.order[mid]].compare(&x)? {
                Ordering::Less => lo = mid + 1,
                _ => hi = mid,
            }
        }
        let id = self.points.len();
        self.index.insert(x.residue().clone(), id);
        self.points.push(x);
        self.order.insert(lo, id);
        self.rank.resize(self.points.len(), 0);
        for (r, &p) in self.order.iter().enumerate().skip(lo) {
            self.rank[p] = r;
        }
        Ok(id)
    }

    pub fn find(&self, x: &FieldElement) -> Option<PointId> {
        self.index.get(x.residue()).copied()
    }

    pub fn get(&self, id: PointId) -> &FieldElement {
        &self.points[id]
    }

    pub fn rank(&self, id: PointId) -> usize {
        self.rank[id]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Ids in increasing order of value.
    pub fn sorted(&self) -> &[PointId] {
        &self.order
    }
}

/// Fⁿ restricted to one interval of monotonicity: `x ↦ ±βᵉ·x + intercept`.
#[derive(Clone, Debug)]
pub struct MonotoneBranch {
    pub domain: (FieldElement, FieldElement),
    pub decreasing: bool,
    pub exponent: u32,
    pub intercept: FieldElement,
    /// Image endpoints (left, right) as point ids.
    pub image: (PointId, PointId),
    pub type_id: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

/// A piece of a branch after splitting: domain, image endpoints, side of 1/β.
type Piece = ((FieldElement, FieldElement), (PointId, PointId), Side);

#[derive(Clone, Debug)]
pub struct BranchDecomposition {
    map: PLMap,
    n: usize,
    points: PointSet,
    branches: Vec<MonotoneBranch>,
    /// `orbit[j]` = id of Fʲ1 for j = 0..=n.
    orbit: Vec<PointId>,
    succ: BTreeMap<PointId, PointId>,
    inv_beta_powers: Vec<FieldElement>,
}

/// Branches of Fⁿ with the default budget.
pub fn decompose(map: &PLMap, n: usize) -> Result<BranchDecomposition> {
    decompose_with_budget(map, n, DEFAULT_MAX_ITERATE)
}

pub fn decompose_with_budget(map: &PLMap, n: usize, max_iterate: usize) -> Result<BranchDecomposition> {
    if n == 0 {
        return Err(Error::InvalidArgument("iterate must be >= 1".into()));
    }
    if n > max_iterate {
        return Err(Error::BranchBudget { iterate: n, max_iterate });
    }
    let mut d = BranchDecomposition::identity(map)?;
    for _ in 0..n {
        d.step()?;
    }
    Ok(d)
}

impl BranchDecomposition {
    /// F⁰ = id on (0, 1).
    pub fn identity(map: &PLMap) -> Result<Self> {
        let field = map.field();
        let points = PointSet::new(field, map.critical_point())?;
        let branch = MonotoneBranch {
            domain: (field.zero(), field.one()),
            decreasing: false,
            exponent: 0,
            intercept: field.zero(),
            image: (ZERO, ONE),
            type_id: Some(0),
        };
        Ok(BranchDecomposition {
            map: map.clone(),
            n: 0,
            points,
            branches: vec![branch],
            orbit: vec![ONE],
            succ: BTreeMap::new(),
            inv_beta_powers: vec![field.one()],
        })
    }

    pub fn map(&self) -> &PLMap {
        &self.map
    }

    pub fn orientation(&self) -> Orientation {
        self.map.orientation()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn branches(&self) -> &[MonotoneBranch] {
        &self.branches
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    /// Fʲ1 for j ≤ n.
    pub fn orbit_point(&self, j: usize) -> &FieldElement {
        self.points.get(self.orbit[j])
    }

    pub fn orbit_ids(&self) -> &[PointId] {
        &self.orbit
    }

    /// Least j in 1..=n with Fʲ1 = point.
    pub fn orbit_index(&self, id: PointId) -> Option<usize> {
        self.orbit.iter().skip(1).position(|&p| p == id).map(|j| j + 1)
    }

    fn successor(&mut self, p: PointId) -> Result<PointId> {
        if let Some(&s) = self.succ.get(&p) {
            return Ok(s);
        }
        let image = self.map.apply(self.points.get(p))?;
        let s = self.points.intern(image)?;
        self.succ.insert(p, s);
        Ok(s)
    }

    fn endpoint_image(&mut self, p: PointId, side: Side) -> Result<PointId> {
        if p != CRIT {
            return self.successor(p);
        }
        // one-sided limits at 1/β
        Ok(match (self.map.orientation(), side) {
            (Orientation::Positive, Side::Left) | (Orientation::Negative, Side::Right) => ONE,
            (Orientation::Positive, Side::Right) | (Orientation::Negative, Side::Left) => ZERO,
        })
    }

    /// Refines Fⁿ into Fⁿ⁺¹.
    pub fn step(&mut self) -> Result<()> {
        let m = self.n;
        let critical = self.map.critical_point().clone();
        let next_inv = &self.inv_beta_powers[m] * &critical;
        self.inv_beta_powers.push(next_inv);
        let old = core::mem::take(&mut self.branches);
        let mut out = Vec::with_capacity(old.len() * 2);
        for b in old {
            let (a, c) = b.image;
            let (ra, rc, rcc) = (self.points.rank(a), self.points.rank(CRIT), self.points.rank(c));
            let mut pieces: Vec<Piece> = Vec::with_capacity(2);
            if ra < rc && rc < rcc {
                // f(y) = ±βᵐ·y + c0 = 1/β
                let mut y = &(&critical - &b.intercept) * &self.inv_beta_powers[m];
                if b.decreasing {
                    y = -&y;
                }
                let (lo, hi) = b.domain.clone();
                if b.decreasing {
                    pieces.push(((lo, y.clone()), (CRIT, c), Side::Right));
                    pieces.push(((y, hi), (a, CRIT), Side::Left));
                } else {
                    pieces.push(((lo, y.clone()), (a, CRIT), Side::Left));
                    pieces.push(((y, hi), (CRIT, c), Side::Right));
                }
            } else {
                let side = if rcc <= rc { Side::Left } else { Side::Right };
                pieces.push((b.domain.clone(), (a, c), side));
            }
            for (domain, (u, v), side) in pieces {
                let gu = self.endpoint_image(u, side)?;
                let gv = self.endpoint_image(v, side)?;
                let branch = &self.map.branches()[if side == Side::Left { 0 } else { 1 }];
                let image = match self.map.orientation() {
                    Orientation::Positive => (gu, gv),
                    Orientation::Negative => (gv, gu),
                };
                let intercept = &(&branch.slope * &b.intercept) + &branch.intercept;
                out.push(MonotoneBranch {
                    domain,
                    decreasing: b.decreasing != (self.map.orientation() == Orientation::Negative),
                    exponent: b.exponent + 1,
                    intercept,
                    image,
                    type_id: None,
                });
            }
        }
        self.branches = out;
        let last = self.orbit[m];
        let next = self.successor(last)?;
        self.orbit.push(next);
        self.n = m + 1;
        Ok(())
    }

    pub fn slope(&self, b: &MonotoneBranch) -> FieldElement {
        let s = self.map.beta().pow(b.exponent);
        if b.decreasing {
            -&s
        } else {
            s
        }
    }

    /// Image endpoints as field elements.
    pub fn image_of(&self, b: &MonotoneBranch) -> (FieldElement, FieldElement) {
        (self.points.get(b.image.0).clone(), self.points.get(b.image.1).clone())
    }

    /// Type of a branch of Fⁿ. T: image (0, Tʲ1) has type j, (0, 1) type 0.
    /// S: (0, 1) has type 0; otherwise the largest orbit index among the
    /// image endpoints other than 0 and 1.
    pub fn type_of(&self, b: &MonotoneBranch) -> Result<usize> {
        let (a, c) = b.image;
        if (a, c) == (ZERO, ONE) {
            return Ok(0);
        }
        let unexpected = || {
            Error::Classification(alloc::format!(
                "{} image ({}, {}) has no type at iterate {}",
                self.map.orientation(),
                self.points.get(a),
                self.points.get(c),
                self.n
            ))
        };
        match self.map.orientation() {
            Orientation::Positive => {
                if a != ZERO {
                    return Err(unexpected());
                }
                self.orbit_index(c).ok_or_else(unexpected)
            }
            Orientation::Negative => {
                let mut best: Option<usize> = None;
                for p in [a, c] {
                    if p == ZERO || p == ONE {
                        continue;
                    }
                    let j = self.orbit_index(p).ok_or_else(unexpected)?;
                    best = Some(best.map_or(j, |x: usize| x.max(j)));
                }
                best.ok_or_else(unexpected)
            }
        }
    }

    pub fn assign_types(&mut self) -> Result<()> {
        let types: Vec<usize> = self.branches.iter().map(|b| self.type_of(b)).collect::<Result<_>>()?;
        for (b, t) in self.branches.iter_mut().zip(types) {
            b.type_id = Some(t);
        }
        Ok(())
    }

    /// counts[j] = number of branches of type j, j = 0..=n.
    pub fn type_census(&self) -> Result<Vec<u64>> {
        let mut counts = vec![0u64; self.n + 1];
        for b in &self.branches {
            counts[self.type_of(b)?] += 1;
        }
        Ok(counts)
    }

    pub fn spectrum(&self) -> PreimageSpectrum {
        PreimageSpectrum::from_decomposition(self)
    }

    /// Domains are disjoint, increasing, and cover [0, 1]; each image is the
    /// affine image of its domain.
    pub fn check_structure(&self) -> Result<Report> {
        let field = self.map.field();
        let mut report = Report::new(alloc::format!("{}^{} branch structure", self.map.orientation(), self.n));
        let mut contiguous = self.branches.first().is_some_and(|b| b.domain.0.is_zero());
        let mut total = field.zero();
        let mut images_ok = true;
        let mut positive = true;
        for (i, b) in self.branches.iter().enumerate() {
            let len = &b.domain.1 - &b.domain.0;
            positive &= len.sign()? == Ordering::Greater;
            total = &total + &len;
            if let Some(next) = self.branches.get(i + 1) {
                contiguous &= next.domain.0 == b.domain.1;
            }
            let slope = self.slope(b);
            let f0 = &(&slope * &b.domain.0) + &b.intercept;
            let f1 = &(&slope * &b.domain.1) + &b.intercept;
            let (lo, hi) = if b.decreasing { (f1, f0) } else { (f0, f1) };
            let (ia, ib) = self.image_of(b);
            images_ok &= lo == ia && hi == ib;
        }
        contiguous &= self.branches.last().is_some_and(|b| b.domain.1 == field.one());
        report.push("domains contiguous from 0 to 1", contiguous, "");
        report.push("domains have positive length", positive, "");
        report.push("total domain length is 1", total == field.one(), "");
        report.push("images are affine images of domains", images_ok, "");
        Ok(report)
    }
}

/// κⱼ(m): number of branches of Tᵐ with image (0, Tʲ1), for βₙ₋₁ < β < βₙ.
pub fn kappa_closed(j: usize, m: usize, n: usize) -> u64 {
    if m == 0 || m > n || j > m {
        return 0;
    }
    if m < n {
        if j == m {
            1
        } else {
            1u64 << (m - 1 - j)
        }
    } else if j == 0 {
        (1u64 << (n - 1)) - 1
    } else if j == n {
        1
    } else {
        1u64 << (n - 1 - j)
    }
}

/// ιⱼ(m): number of type-j branches of Sᵐ for m below the regime index.
pub fn iota_closed(j: usize, m: usize) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidArgument("iterate must be >= 1".into()));
    }
    if j > m {
        return Ok(0);
    }
    if m == 1 {
        return Ok(1);
    }
    Ok(match j {
        0 => 1u64 << (m - 2),
        _ if j == m => 1,
        _ if j == m - 1 => 2,
        _ => 3 * (1u64 << (m - 2 - j)),
    })
}

/// Position of S^{n−1}1 relative to 1/β, together with the parity of n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplitCase {
    EvenBelow,
    EvenAt,
    EvenAbove,
    OddBelow,
    OddAt,
    OddAbove,
}

impl SplitCase {
    pub fn new(n: usize, relation: Ordering) -> Self {
        match (n.is_multiple_of(2), relation) {
            (true, Ordering::Less) => SplitCase::EvenBelow,
            (true, Ordering::Equal) => SplitCase::EvenAt,
            (true, Ordering::Greater) => SplitCase::EvenAbove,
            (false, Ordering::Less) => SplitCase::OddBelow,
            (false, Ordering::Equal) => SplitCase::OddAt,
            (false, Ordering::Greater) => SplitCase::OddAbove,
        }
    }

    pub fn is_even(&self) -> bool {
        matches!(self, SplitCase::EvenBelow | SplitCase::EvenAt | SplitCase::EvenAbove)
    }

    /// S^{n−1}1 = 1/β: the orbit closes on the branch point.
    pub fn is_boundary(&self) -> bool {
        matches!(self, SplitCase::EvenAt | SplitCase::OddAt)
    }

    pub fn tag(&self) -> &'static str {
        match self {
            SplitCase::EvenBelow => "even-below",
            SplitCase::EvenAt => "even-at",
            SplitCase::EvenAbove => "even-above",
            SplitCase::OddBelow => "odd-below",
            SplitCase::OddAt => "odd-at",
            SplitCase::OddAbove => "odd-above",
        }
    }

    /// Shape of the image of the type-n branch of Sⁿ, if there is one.
    pub fn type_n_image(&self) -> Option<ImageShape> {
        match self {
            SplitCase::EvenBelow => Some(ImageShape::FromZero),
            SplitCase::EvenAbove => Some(ImageShape::FromFirst),
            SplitCase::OddBelow | SplitCase::OddAbove => Some(ImageShape::ToOne),
            SplitCase::EvenAt | SplitCase::OddAt => None,
        }
    }
}

impl fmt::Display for SplitCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Image of the type-n branch of Sⁿ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImageShape {
    /// (0, Sⁿ1)
    FromZero,
    /// (S1, Sⁿ1)
    FromFirst,
    /// (Sⁿ1, 1)
    ToOne,
}

/// Case of S^{n−1}1 against 1/β at β.
pub fn split_case(field: &Arc<AlgebraicField>, n: usize) -> Result<SplitCase> {
    if n < 2 {
        return Err(Error::InvalidArgument("iterate must be >= 2".into()));
    }
    let map = PLMap::negative(field);
    let orbit = map.orbit_of_one(n - 1)?;
    Ok(SplitCase::new(n, orbit.points[n - 1].compare(map.critical_point())?))
}

/// ιⱼ(n) at the regime index n, corrected for the position of S^{n−1}1.
pub fn iota_n_closed(case: SplitCase, j: usize, n: usize) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidArgument("iterate must be >= 2".into()));
    }
    if case.is_even() != n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(alloc::format!("case {case} does not match the parity of n = {n}")));
    }
    let base = iota_closed(j, n)?;
    Ok(match case {
        SplitCase::EvenAt | SplitCase::OddAt if j == n => 0,
        SplitCase::EvenAbove if j == 1 => {
            if n < 3 {
                return Err(Error::InvalidArgument("even-above case needs n >= 4".into()));
            }
            3 * (1u64 << (n - 3)) - 1
        }
        SplitCase::OddBelow if j == 0 => (1u64 << (n - 2)) - 1,
        _ => base,
    })
}

/// One row of a census table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub m: usize,
    pub observed: Vec<u64>,
    pub expected: Vec<u64>,
    pub branches: usize,
}

impl CensusRow {
    pub fn matches(&self) -> bool {
        self.observed == self.expected
    }
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub orientation: Orientation,
    pub n: usize,
    pub case: Option<SplitCase>,
    pub rows: Vec<CensusRow>,
    pub report: Report,
}

impl CensusReport {
    pub fn all_match(&self) -> bool {
        self.report.all_passed()
    }
}

/// Regime index for which the census closed forms apply, or an error for
/// multinacci β.
pub fn census_index(field: &Arc<AlgebraicField>) -> Result<usize> {
    match classify_beta(field)? {
        BetaClass::Exact(n) => Err(Error::WrongRegime(alloc::format!("beta = beta_{n} lies on a boundary"))),
        class => Ok(class.index()),
    }
}

/// Compares the observed type counts of Fᵐ, m = 1..=n, with the closed forms.
/// `n` defaults to the regime index of β and must equal it when given.
pub fn verify_census(field: &Arc<AlgebraicField>, orientation: Orientation, n: Option<usize>) -> Result<CensusReport> {
    let index = census_index(field)?;
    let n = n.unwrap_or(index);
    if n != index {
        return Err(Error::WrongRegime(alloc::format!("beta lies in regime {index}, not {n}")));
    }
    let map = PLMap::new(field, orientation);
    let case = if orientation == Orientation::Negative { Some(split_case(field, n)?) } else { None };
    let mut d = BranchDecomposition::identity(&map)?;
    let mut rows = Vec::new();
    let mut report = Report::new(alloc::format!("{orientation} type census, n = {n}"));
    for m in 1..=n {
        d.step()?;
        let observed = d.type_census()?;
        let expected = (0..=m)
            .map(|j| match (orientation, case) {
                (Orientation::Positive, _) => Ok(kappa_closed(j, m, n)),
                (Orientation::Negative, Some(c)) if m == n => iota_n_closed(c, j, n),
                (Orientation::Negative, _) => iota_closed(j, m),
            })
            .collect::<Result<Vec<u64>>>()?;
        let row = CensusRow { m, observed, expected, branches: d.branches().len() };
        report.push(
            alloc::format!("m = {m}"),
            row.matches(),
            alloc::format!("observed {:?}, closed form {:?}, {} branches", row.observed, row.expected, row.branches),
        );
        rows.push(row);
    }
    if let Some(c) = case {
        let shapes: Vec<ImageShape> = d
            .branches()
            .iter()
            .filter(|b| d.type_of(b).ok() == Some(n))
            .filter_map(|b| {
                let (a, c2) = b.image;
                let sn = d.orbit_ids()[n];
                if (a, c2) == (ZERO, sn) {
                    Some(ImageShape::FromZero)
                } else if (a, c2) == (d.orbit_ids()[1], sn) {
                    Some(ImageShape::FromFirst)
                } else if (a, c2) == (sn, ONE) {
                    Some(ImageShape::ToOne)
                } else {
                    None
                }
            })
            .collect();
        let want: Vec<ImageShape> = c.type_n_image().into_iter().collect();
        report.push(
            alloc::format!("type-{n} image shape ({c})"),
            shapes == want,
            alloc::format!("observed {shapes:?}, expected {want:?}"),
        );
    }
    Ok(CensusReport { orientation, n, case, rows, report })
}

/// ψₙ as a step function over the sorted image endpoints.
#[derive(Clone, Debug)]
pub struct PreimageSpectrum {
    pub orientation: Orientation,
    pub n: usize,
    /// Sorted breakpoints 0 = b₀ < ⋯ < b_r = 1.
    pub breakpoints: Vec<FieldElement>,
    /// Orbit index of each breakpoint (None for 0 and 1 unless they lie on the orbit).
    pub labels: Vec<Option<usize>>,
    /// `values[i]` on the open cell (bᵢ, bᵢ₊₁).
    pub values: Vec<u64>,
    beta_n: FieldElement,
}

/// A union of open cells where ψₙ takes one value.
#[derive(Clone, Debug)]
pub struct LevelSet {
    pub k: u64,
    pub cells: Vec<(FieldElement, FieldElement)>,
    pub length: FieldElement,
}

impl PreimageSpectrum {
    fn from_decomposition(d: &BranchDecomposition) -> Self {
        let pts = d.points();
        let mut used = vec![false; pts.len()];
        used[ZERO] = true;
        used[ONE] = true;
        for b in d.branches() {
            used[b.image.0] = true;
            used[b.image.1] = true;
        }
        let ids: Vec<PointId> = pts.sorted().iter().copied().filter(|&p| used[p]).collect();
        let mut pos = vec![usize::MAX; pts.len()];
        for (i, &p) in ids.iter().enumerate() {
            pos[p] = i;
        }
        let mut diff = vec![0i64; ids.len()];
        for b in d.branches() {
            diff[pos[b.image.0]] += 1;
            diff[pos[b.image.1]] -= 1;
        }
        let mut values = Vec::with_capacity(ids.len() - 1);
        let mut acc = 0i64;
        for v in diff.iter().take(ids.len() - 1) {
            acc += v;
            values.push(acc as u64);
        }
        let label = |p: PointId| {
            if p == ONE {
                Some(0)
            } else {
                d.orbit_index(p)
            }
        };
        PreimageSpectrum {
            orientation: d.orientation(),
            n: d.n(),
            breakpoints: ids.iter().map(|&p| pts.get(p).clone()).collect(),
            labels: ids.iter().map(|&p| label(p)).collect(),
            values,
            beta_n: d.map().beta().pow(d.n() as u32),
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = (&FieldElement, &FieldElement, u64)> {
        self.values.iter().enumerate().map(move |(i, &v)| (&self.breakpoints[i], &self.breakpoints[i + 1], v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Name of breakpoint i: "0", "1" or "F^j(1)".
    pub fn breakpoint_name(&self, i: usize) -> String {
        if self.breakpoints[i].is_zero() {
            return "0".into();
        }
        match self.labels[i] {
            Some(0) => "1".into(),
            Some(j) => alloc::format!("{}^{j}(1)", self.orientation.symbol()),
            None => alloc::format!("{}", self.breakpoints[i]),
        }
    }

    /// ψₙ(x), or None when x is a breakpoint.
    pub fn value_at(&self, x: &FieldElement) -> Result<Option<u64>> {
        let (mut lo, mut hi) = (0usize, self.breakpoints.len());
        // first breakpoint >= x
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.breakpoints[mid].compare(x)? {
                Ordering::Less => lo = mid + 1,
                _ => hi = mid,
            }
        }
        if lo < self.breakpoints.len() && &self.breakpoints[lo] == x {
            return Ok(None);
        }
        if lo == 0 || lo == self.breakpoints.len() {
            return Err(Error::Domain(alloc::format!("{x} is outside [0, 1]")));
        }
        Ok(Some(self.values[lo - 1]))
    }

    pub fn level_set(&self, k: u64) -> LevelSet {
        let field = self.beta_n.field();
        let mut cells = Vec::new();
        let mut length = field.zero();
        for (a, b, v) in self.cells() {
            if v == k {
                length = &length + &(b - a);
                cells.push((a.clone(), b.clone()));
            }
        }
        LevelSet { k, cells, length }
    }

    /// Total length of each value taken on a cell.
    pub fn lengths_by_value(&self) -> BTreeMap<u64, FieldElement> {
        let mut out: BTreeMap<u64, FieldElement> = BTreeMap::new();
        for (a, b, v) in self.cells() {
            let len = b - a;
            match out.get_mut(&v) {
                Some(acc) => *acc = &*acc + &len,
                None => {
                    out.insert(v, len);
                }
            }
        }
        out
    }

    pub fn max_value(&self) -> u64 {
        self.values.iter().copied().max().unwrap_or(0)
    }

    /// Σ cell length × value.
    pub fn mass(&self) -> FieldElement {
        let field = self.beta_n.field();
        let mut acc = field.zero();
        for (a, b, v) in self.cells() {
            acc = &acc + &(&(b - a) * &field.from_integer(v as i64));
        }
        acc
    }

    /// βⁿ; the mass of every spectrum equals it.
    pub fn beta_n(&self) -> &FieldElement {
        &self.beta_n
    }

    pub fn mass_identity_holds(&self) -> bool {
        self.mass() == self.beta_n
    }

    pub fn is_nonincreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] >= w[1])
    }
}

/// Evenness of ψₙ⁺ between T^{n−1}1 and Tⁿ1, oddness elsewhere, the extreme
/// values, and the separation of odd from even values.
pub fn parity_profile(spectrum: &PreimageSpectrum) -> Result<Report> {
    if spectrum.orientation != Orientation::Positive {
        return Err(Error::InvalidArgument("parity profile applies to T".into()));
    }
    let n = spectrum.n;
    if n < 2 {
        return Err(Error::InvalidArgument("parity profile needs n >= 2".into()));
    }
    let field = Arc::clone(spectrum.beta_n.field());
    let map = PLMap::positive(&field);
    let orbit = map.orbit_of_one(n)?;
    let (a, b) = (&orbit.points[n - 1], &orbit.points[n]);
    let mut report = Report::new(alloc::format!("T parity profile, n = {n}"));
    let mut parity_ok = true;
    let mut bad = String::new();
    for (i, (l, r, v)) in spectrum.cells().enumerate() {
        let inside = l.compare(a)? != Ordering::Less && r.compare(b)? != Ordering::Greater;
        if (v % 2 == 0) != inside {
            parity_ok = false;
            bad = alloc::format!("cell {i} has value {v}");
        }
    }
    report.push("even exactly on (T^{n-1}1, T^n1)", parity_ok, bad);
    let max = (1u64 << n) - 1;
    let first = spectrum.values.first().copied().unwrap_or(0);
    let first_ok = first == max && &spectrum.breakpoints[1] == a;
    report.push("2^n - 1 on (0, T^{n-1}1)", first_ok, alloc::format!("first cell value {first}"));
    let min = (1u64 << (n - 1)) - 1;
    let last = spectrum.values.last().copied().unwrap_or(0);
    report.push(
        "2^{n-1} - 1 on the last cell",
        last == min && spectrum.values.iter().all(|&v| v >= min),
        alloc::format!("last cell value {last}"),
    );
    let odd_max = spectrum.values.iter().copied().filter(|v| v % 2 == 1 && *v != max).max();
    let even_min = spectrum.values.iter().copied().filter(|v| v % 2 == 0).min();
    let sep = match (odd_max, even_min) {
        (Some(o), Some(e)) => o < e,
        _ => true,
    };
    report.push(
        "non-maximal odd values lie below even values",
        sep,
        alloc::format!("largest non-maximal odd {odd_max:?}, smallest even {even_min:?}"),
    );
    Ok(report)
}
