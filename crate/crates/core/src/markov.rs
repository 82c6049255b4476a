//! Markov partitions of T and S, their 0/1 transition matrices, the maximal
//! Markov measure, and the matrix-identity isomorphism certificate for
//! multinacci β.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::classify::{classify_beta, BetaClass};
use crate::error::{Error, Result};
use crate::field::{AlgebraicField, FieldElement};
use crate::interval::RationalInterval;
use crate::linalg::{char_poly, nullspace};
use crate::log::{ln_enclosure, ln_interval};
use crate::maps::{Orientation, PLMap};
use crate::poly::QPoly;
use crate::report::Report;

type Interval = (FieldElement, FieldElement);

/// Cut points 0 = a₀ < ⋯ < a_q = 1 with a state label per interval.
#[derive(Clone, Debug)]
pub struct MarkovPartition {
    map: PLMap,
    cuts: Vec<FieldElement>,
    /// `labels[i]` = state of (aᵢ, aᵢ₊₁).
    labels: Vec<usize>,
    /// `covers[i][k]`: interval k lies in the image of interval i.
    covers: Vec<Vec<bool>>,
}

/// A maximal piece of a partition interval on which the map is affine.
#[derive(Clone, Debug)]
struct Piece {
    lo: FieldElement,
    hi: FieldElement,
    branch: usize,
}

fn pieces(map: &PLMap, lo: &FieldElement, hi: &FieldElement) -> Result<Vec<Piece>> {
    let c = map.critical_point();
    if lo.lt(c)? && c.lt(hi)? {
        return Ok(vec![
            Piece { lo: lo.clone(), hi: c.clone(), branch: 0 },
            Piece { lo: c.clone(), hi: hi.clone(), branch: 1 },
        ]);
    }
    let branch = if hi.compare(c)? != Ordering::Greater { 0 } else { 1 };
    Ok(vec![Piece { lo: lo.clone(), hi: hi.clone(), branch }])
}

/// Image of a piece as an ordered pair, using the branch formula up to its
/// endpoints (one-sided limits at 1/β).
fn piece_image(map: &PLMap, p: &Piece) -> (FieldElement, FieldElement) {
    let a = map.apply_branch(p.branch, &p.lo);
    let b = map.apply_branch(p.branch, &p.hi);
    match map.orientation() {
        Orientation::Positive => (a, b),
        Orientation::Negative => (b, a),
    }
}

/// Sorts and deduplicates exactly.
fn sort_points(mut pts: Vec<FieldElement>) -> Result<Vec<FieldElement>> {
    let mut failure = None;
    pts.sort_by(|a, b| {
        a.compare(b).unwrap_or_else(|e| {
            failure = Some(e);
            Ordering::Equal
        })
    });
    if let Some(e) = failure {
        return Err(e);
    }
    pts.dedup();
    Ok(pts)
}

/// Interval-level covering relation if `cuts` form a Markov partition.
fn markov_covers(map: &PLMap, cuts: &[FieldElement]) -> Result<Option<Vec<Vec<bool>>>> {
    let index: BTreeMap<&QPoly, usize> = cuts.iter().enumerate().map(|(i, c)| (c.residue(), i)).collect();
    let q = cuts.len() - 1;
    let mut covers = vec![vec![false; q]; q];
    for i in 0..q {
        for p in pieces(map, &cuts[i], &cuts[i + 1])? {
            let (u, v) = piece_image(map, &p);
            let (Some(&iu), Some(&iv)) = (index.get(u.residue()), index.get(v.residue())) else {
                return Ok(None);
            };
            for cell in covers[i].iter_mut().take(iv).skip(iu) {
                if *cell {
                    // images of the two pieces overlap: not injective
                    return Ok(None);
                }
                *cell = true;
            }
        }
    }
    Ok(Some(covers))
}

impl MarkovPartition {
    /// Partition with the given cut points (sorted internally) and identity labels.
    pub fn new(map: &PLMap, cuts: Vec<FieldElement>) -> Result<Self> {
        let cuts = sort_points(cuts)?;
        let field = map.field();
        if cuts.len() < 2 || !cuts[0].is_zero() || cuts[cuts.len() - 1] != field.one() {
            return Err(Error::NotMarkov("cut points must start at 0 and end at 1".into()));
        }
        let covers =
            markov_covers(map, &cuts)?.ok_or_else(|| Error::NotMarkov("an image is not a union of intervals".into()))?;
        let labels = (0..cuts.len() - 1).collect();
        Ok(MarkovPartition { map: map.clone(), cuts, labels, covers })
    }

    pub fn map(&self) -> &PLMap {
        &self.map
    }

    pub fn cuts(&self) -> &[FieldElement] {
        &self.cuts
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn states(&self) -> usize {
        self.labels.len()
    }

    /// Relabels intervals; `labels[i]` is the state of interval i.
    pub fn with_labels(mut self, labels: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; self.states()];
        if labels.len() != self.states() {
            return Err(Error::InvalidArgument("one label per interval required".into()));
        }
        for &l in &labels {
            if l >= seen.len() || seen[l] {
                return Err(Error::InvalidArgument("labels must be a permutation".into()));
            }
            seen[l] = true;
        }
        self.labels = labels;
        Ok(self)
    }

    /// Interval of state s.
    pub fn state_interval(&self, s: usize) -> (FieldElement, FieldElement) {
        let i = self.labels.iter().position(|&l| l == s).expect("state in range");
        (self.cuts[i].clone(), self.cuts[i + 1].clone())
    }

    pub fn transition_matrix(&self) -> TransitionMatrix {
        let q = self.states();
        let mut m = vec![vec![0u8; q]; q];
        for i in 0..q {
            for k in 0..q {
                if self.covers[i][k] {
                    m[self.labels[i]][self.labels[k]] = 1;
                }
            }
        }
        TransitionMatrix { entries: m }
    }
}

/// Finds a Markov partition whose cut points come from the orbit of 1 (closed
/// exactly within `max_depth` steps), falling back to adding 1/β and then the
/// fixed points.
pub fn detect_markov(map: &PLMap, max_depth: usize) -> Result<Option<MarkovPartition>> {
    if max_depth == 0 {
        return Err(Error::InvalidArgument("depth must be >= 1".into()));
    }
    let field = map.field();
    let mut seen: BTreeSet<QPoly> = BTreeSet::new();
    let mut orbit = vec![field.one()];
    seen.insert(field.one().residue().clone());
    let mut closed = false;
    for _ in 0..max_depth {
        let next = map.apply(orbit.last().expect("nonempty"))?;
        if !seen.insert(next.residue().clone()) {
            closed = true;
            break;
        }
        orbit.push(next);
    }
    if !closed {
        return Ok(None);
    }
    let mut base = orbit;
    base.push(field.zero());
    let mut candidates = vec![base.clone()];
    base.push(map.critical_point().clone());
    candidates.push(base.clone());
    base.extend(map.fixed_points()?);
    candidates.push(base);
    for c in candidates {
        let cuts = sort_points(c)?;
        if markov_covers(map, &cuts)?.is_some() {
            return MarkovPartition::new(map, cuts).map(Some);
        }
    }
    Ok(None)
}

/// Interval endpoints of the standard states E₁..Eₙ at β = βₙ.
///
/// T: E₁ = (0, T^{n−1}1), Eⱼ = (T^{n−j+1}1, T^{n−j}1) for 2 ≤ j ≤ n.
/// S: Eⱼ spans S^{n−j+1}1 and S^{n−j−1}1, reading S⁻¹1 as 0 and Sⁿ1 as S^{n−1}1;
/// for even n this starts E₁ = (x_s, S^{n−2}1), for odd n E₁ = (S^{n−2}1, x_ℓ).
pub fn multinacci_states(map: &PLMap, n: usize) -> Result<Vec<(FieldElement, FieldElement)>> {
    let field = map.field();
    let orbit = map.orbit_of_one(n)?;
    let p = |k: usize| orbit.points[k].clone();
    let mut out = Vec::with_capacity(n);
    match map.orientation() {
        Orientation::Positive => {
            out.push((field.zero(), p(n - 1)));
            for j in 2..=n {
                out.push((p(n - j + 1), p(n - j)));
            }
        }
        Orientation::Negative => {
            for j in 1..=n {
                let a = if j == 1 { p(n - 1) } else { p(n - j + 1) };
                let b = if j == n { field.zero() } else { p(n - j - 1) };
                let (a, b) = if a.lt(&b)? { (a, b) } else { (b, a) };
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

/// Labels a partition with the standard multinacci states.
pub fn multinacci_labeling(partition: &MarkovPartition, n: usize) -> Result<Vec<usize>> {
    let states = multinacci_states(partition.map(), n)?;
    if states.len() != partition.states() {
        return Err(Error::NotMarkov(alloc::format!(
            "{} intervals but {} standard states",
            partition.states(),
            states.len()
        )));
    }
    let mut labels = vec![usize::MAX; states.len()];
    for (j, (a, b)) in states.iter().enumerate() {
        let i = (0..partition.states())
            .find(|&i| &partition.cuts[i] == a && &partition.cuts[i + 1] == b)
            .ok_or_else(|| Error::NotMarkov(alloc::format!("state E{} = ({a}, {b}) is not a partition interval", j + 1)))?;
        labels[i] = j;
    }
    Ok(labels)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TransitionMatrix {
    pub entries: Vec<Vec<u8>>,
}

impl TransitionMatrix {
    pub fn new(entries: Vec<Vec<u8>>) -> Self {
        TransitionMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i][j] != 0
    }

    /// First row all ones, ones on the subdiagonal, zeros elsewhere.
    pub fn standard(n: usize) -> Self {
        let mut m = vec![vec![0u8; n]; n];
        m[0] = vec![1; n];
        for j in 1..n {
            m[j][j - 1] = 1;
        }
        TransitionMatrix { entries: m }
    }

    pub fn is_standard(&self) -> bool {
        *self == Self::standard(self.size())
    }

    fn as_i64(&self) -> Vec<Vec<i64>> {
        self.entries.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect()
    }

    pub fn char_poly(&self) -> QPoly {
        char_poly(&self.as_i64())
    }

    /// Number of admissible words of length `len` (sum of entries of M^{len−1}).
    pub fn word_count(&self, len: usize) -> u64 {
        let n = self.size();
        if len == 0 {
            return 1;
        }
        let mut v = vec![1u64; n];
        for _ in 1..len {
            v = (0..n).map(|i| (0..n).filter(|&j| self.get(i, j)).map(|j| v[j]).sum()).collect();
        }
        v.iter().sum()
    }

    pub fn is_irreducible(&self) -> bool {
        let n = self.size();
        let reach = |forward: bool| {
            let mut seen = vec![false; n];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(i) = stack.pop() {
                for (j, s) in seen.iter_mut().enumerate() {
                    let e = if forward { self.get(i, j) } else { self.get(j, i) };
                    if e && !*s {
                        *s = true;
                        stack.push(j);
                    }
                }
            }
            seen.iter().all(|&s| s)
        };
        n > 0 && reach(true) && reach(false)
    }

    /// Ones in every row form one contiguous block.
    pub fn rows_contiguous(&self) -> bool {
        self.entries.iter().all(|row| {
            let ones: Vec<usize> = row.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i).collect();
            ones.windows(2).all(|w| w[1] == w[0] + 1)
        })
    }

    /// Some simultaneous row/column permutation of `other` equals `self`.
    pub fn permutation_equivalent(&self, other: &TransitionMatrix) -> bool {
        let n = self.size();
        if other.size() != n {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            if (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == other.entries[perm[i]][perm[j]])) {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

impl fmt::Display for TransitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| alloc::format!("{x}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct R1Report {
    pub irreducible: bool,
    pub contiguous: bool,
    /// The defining polynomial of β divides det(xI − M).
    pub char_poly_divisible: bool,
    pub positive_eigenvector: bool,
    pub char_poly: QPoly,
}

impl R1Report {
    /// Irreducible, nonnegative, with a positive β-eigenvector: β is the
    /// spectral radius.
    pub fn spectral_radius_ok(&self) -> bool {
        self.irreducible && self.char_poly_divisible && self.positive_eigenvector
    }

    pub fn passed(&self) -> bool {
        self.contiguous && self.spectral_radius_ok()
    }

    pub fn to_report(&self) -> Report {
        let mut r = Report::new("matrix conditions");
        r.push("irreducible", self.irreducible, "");
        r.push("row ones contiguous", self.contiguous, "");
        r.push("minimal polynomial divides characteristic polynomial", self.char_poly_divisible, "");
        r.push("positive eigenvector for beta", self.positive_eigenvector, "");
        r.push("spectral radius is beta", self.spectral_radius_ok(), "");
        r
    }
}

fn shifted(m: &TransitionMatrix, field: &Arc<AlgebraicField>, transpose: bool) -> Vec<Vec<FieldElement>> {
    let n = m.size();
    let beta = field.beta();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = if transpose { m.get(j, i) } else { m.get(i, j) };
                    let x = field.from_integer(e as i64);
                    if i == j {
                        &x - &beta
                    } else {
                        x
                    }
                })
                .collect()
        })
        .collect()
}

/// A β-eigenvector with all entries positive, when one exists.
fn positive_eigenvector(m: &TransitionMatrix, field: &Arc<AlgebraicField>, left: bool) -> Result<Option<Vec<FieldElement>>> {
    let basis = nullspace(&shifted(m, field, left))?;
    if basis.len() != 1 {
        return Ok(None);
    }
    let mut v = basis.into_iter().next().expect("one vector");
    let sign = v.iter().find(|x| !x.is_zero()).map(|x| x.sign()).transpose()?;
    if sign == Some(Ordering::Less) {
        v = v.iter().map(|x| -x).collect();
    }
    for x in &v {
        if x.sign()? != Ordering::Greater {
            return Ok(None);
        }
    }
    Ok(Some(v))
}

pub fn check_r1(m: &TransitionMatrix, field: &Arc<AlgebraicField>) -> Result<R1Report> {
    let cp = m.char_poly();
    let divisible = field.modulus().degree().is_some() && cp.rem(field.modulus()).is_zero();
    Ok(R1Report {
        irreducible: m.is_irreducible(),
        contiguous: m.rows_contiguous(),
        char_poly_divisible: divisible,
        positive_eigenvector: m.size() > 0 && positive_eigenvector(m, field, false)?.is_some(),
        char_poly: cp,
    })
}

/// Stochastic matrix P and stationary vector q of the maximal Markov measure.
#[derive(Clone, Debug)]
pub struct MarkovMeasure {
    pub p: Vec<Vec<FieldElement>>,
    pub q: Vec<FieldElement>,
    field: Arc<AlgebraicField>,
}

/// P_ij = M_ij v_j / (β v_i), q_i = u_i v_i / Σ u_k v_k for the positive
/// right and left β-eigenvectors v, u.
pub fn parry_measure(m: &TransitionMatrix, field: &Arc<AlgebraicField>) -> Result<MarkovMeasure> {
    if field.beta().compare(&field.one())? != Ordering::Greater {
        return Err(Error::Domain("beta must exceed 1".into()));
    }
    let v = positive_eigenvector(m, field, false)?
        .ok_or_else(|| Error::Certificate("no positive right eigenvector for beta".into()))?;
    let u = positive_eigenvector(m, field, true)?
        .ok_or_else(|| Error::Certificate("no positive left eigenvector for beta".into()))?;
    let n = m.size();
    let beta = field.beta();
    let mut p = vec![vec![field.zero(); n]; n];
    for i in 0..n {
        let denom = (&beta * &v[i]).inv()?;
        for j in 0..n {
            if m.get(i, j) {
                p[i][j] = &v[j] * &denom;
            }
        }
    }
    let total = (0..n).fold(field.zero(), |s, k| &s + &(&u[k] * &v[k]));
    let inv = total.inv()?;
    let q = (0..n).map(|i| &(&u[i] * &v[i]) * &inv).collect();
    Ok(MarkovMeasure { p, q, field: Arc::clone(field) })
}

impl MarkovMeasure {
    pub fn states(&self) -> usize {
        self.q.len()
    }

    pub fn row_sums_are_one(&self) -> bool {
        let one = self.field.one();
        self.p.iter().all(|row| row.iter().fold(self.field.zero(), |s, x| &s + x) == one)
    }

    /// qP = q.
    pub fn is_stationary(&self) -> bool {
        let n = self.states();
        (0..n).all(|j| (0..n).fold(self.field.zero(), |s, i| &s + &(&self.q[i] * &self.p[i][j])) == self.q[j])
    }

    pub fn q_sums_to_one(&self) -> bool {
        self.q.iter().fold(self.field.zero(), |s, x| &s + x) == self.field.one()
    }

    pub fn q_positive(&self) -> Result<bool> {
        for x in &self.q {
            if x.sign()? != Ordering::Greater {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// q_{a₁}·P_{a₁a₂}⋯P_{a_{k−1}a_k}; zero for forbidden words.
    pub fn cylinder(&self, word: &[usize]) -> Result<FieldElement> {
        let Some(&first) = word.first() else {
            return Err(Error::InvalidArgument("empty word".into()));
        };
        if word.iter().any(|&s| s >= self.states()) {
            return Err(Error::InvalidArgument("state out of range".into()));
        }
        let mut acc = self.q[first].clone();
        for w in word.windows(2) {
            acc = &acc * &self.p[w[0]][w[1]];
        }
        Ok(acc)
    }

    /// Enclosure of −Σ qᵢ Σⱼ Pᵢⱼ log Pᵢⱼ of width at most `width`.
    pub fn entropy(&self, width: &BigRational) -> Result<RationalInterval> {
        if width <= &BigRational::zero() {
            return Err(Error::InvalidArgument("width must be positive".into()));
        }
        let mut bits = 64u32;
        loop {
            let w = BigRational::new(BigInt::one(), BigInt::one() << bits);
            let mut total = RationalInterval::point(BigRational::zero());
            let mut ok = true;
            for (i, row) in self.p.iter().enumerate() {
                let qi = self.q[i].refine(&w)?;
                for pij in row {
                    if pij.is_zero() || *pij == self.field.one() {
                        continue;
                    }
                    let pe = pij.refine(&w)?;
                    if pe.lo <= BigRational::zero() {
                        ok = false;
                        break;
                    }
                    let neg_log = ln_interval(&pe, bits)?.neg();
                    total = total.add(&qi.mul(&pe).mul(&neg_log));
                }
            }
            if ok && &total.width() <= width {
                return Ok(total);
            }
            bits += 32;
            if bits > self.field.precision_limit() {
                return Err(Error::PrecisionExceeded { limit: self.field.precision_limit() });
            }
        }
    }
}

/// Enclosure of log β of width at most 2^-bits.
pub fn log_beta(field: &Arc<AlgebraicField>, bits: u32) -> Result<RationalInterval> {
    let iv = field.refine_beta(&BigRational::new(BigInt::one(), BigInt::one() << (bits + 2)))?;
    if let Some(b) = field.rational_beta() {
        return ln_enclosure(b, bits);
    }
    ln_interval(&iv, bits + 2)
}

#[derive(Clone, Debug)]
pub struct CodingReport {
    pub report: Report,
    /// Number of cylinder cells of each word length 1..=depth.
    pub counts: Vec<usize>,
}

/// Builds the cylinder cells ∩ F^{−(i−1)} E_{wᵢ} for admissible words up to
/// `depth` and checks they tile [0, 1], match the admissible words of M and
/// are compatible with the shift.
pub fn coding_check(partition: &MarkovPartition, m: &TransitionMatrix, depth: usize) -> Result<CodingReport> {
    let map = partition.map();
    let field = map.field();
    let q = partition.states();
    let mut report = Report::new(alloc::format!("{} coding to depth {depth}", map.orientation()));
    let state_pieces: Vec<Vec<Piece>> = (0..q)
        .map(|s| {
            let (a, b) = partition.state_interval(s);
            pieces(map, &a, &b)
        })
        .collect::<Result<_>>()?;
    let mut level: BTreeMap<Vec<usize>, (FieldElement, FieldElement)> =
        (0..q).map(|s| (vec![s], partition.state_interval(s))).collect();
    let mut counts = Vec::new();
    let mut unique = true;
    let mut shift_ok = true;
    for len in 1..=depth {
        if len > 1 {
            let mut next = BTreeMap::new();
            for (s, pieces) in state_pieces.iter().enumerate() {
                for (tail, (u, v)) in &level {
                    let mut found = Vec::new();
                    for p in pieces {
                        let br = &map.branches()[p.branch];
                        let inv = br.slope.inv()?;
                        let x1 = &(u - &br.intercept) * &inv;
                        let x2 = &(v - &br.intercept) * &inv;
                        let (x1, x2) = if x1.lt(&x2)? { (x1, x2) } else { (x2, x1) };
                        let lo = if x1.gt(&p.lo)? { x1 } else { p.lo.clone() };
                        let hi = if x2.lt(&p.hi)? { x2 } else { p.hi.clone() };
                        if lo.lt(&hi)? {
                            let (fa, fb) = {
                                let a = map.apply_branch(p.branch, &lo);
                                let b = map.apply_branch(p.branch, &hi);
                                if a.lt(&b)? {
                                    (a, b)
                                } else {
                                    (b, a)
                                }
                            };
                            shift_ok &= fa.compare(u)? != Ordering::Greater && fb.compare(v)? != Ordering::Less;
                            found.push((lo, hi));
                        }
                    }
                    unique &= found.len() <= 1;
                    if let Some(cell) = found.into_iter().next() {
                        let mut w = vec![s];
                        w.extend_from_slice(tail);
                        next.insert(w, cell);
                    }
                }
            }
            level = next;
        }
        counts.push(level.len());
        let admissible = level.keys().all(|w| w.windows(2).all(|p| m.get(p[0], p[1])));
        report.push(
            alloc::format!("length {len}: realized words are admissible"),
            admissible,
            alloc::format!("{} cells", level.len()),
        );
        let expected = m.word_count(len);
        report.push(
            alloc::format!("length {len}: cell count equals admissible word count"),
            level.len() as u64 == expected,
            alloc::format!("{} cells, {expected} words", level.len()),
        );
        let cells = sort_points(level.values().map(|c| c.0.clone()).collect())?;
        let mut sorted: Vec<&(FieldElement, FieldElement)> = level.values().collect();
        sorted.sort_by_key(|c| cells.iter().position(|x| x == &c.0));
        let mut tiles = sorted.first().is_some_and(|c| c.0.is_zero())
            && sorted.last().is_some_and(|c| c.1 == field.one())
            && cells.len() == sorted.len();
        for w in sorted.windows(2) {
            tiles &= w[0].1 == w[1].0;
        }
        let total = sorted.iter().fold(field.zero(), |s, c| &s + &(&c.1 - &c.0));
        report.push(
            alloc::format!("length {len}: cells are disjoint with total length 1"),
            tiles && total == field.one(),
            "",
        );
    }
    report.push("each word has a single cell", unique, "");
    report.push("F(cell(w)) contains cell(shift w)", shift_ok, "");
    Ok(CodingReport { report, counts })
}

/// Everything established for β = βₙ.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub n: usize,
    pub matrix_t: TransitionMatrix,
    pub matrix_s: TransitionMatrix,
    /// State intervals E₁..Eₙ for T and for S.
    pub states_t: Vec<(FieldElement, FieldElement)>,
    pub states_s: Vec<(FieldElement, FieldElement)>,
    pub r1_t: R1Report,
    pub r1_s: R1Report,
    pub matrices_equal: bool,
    pub standard_pattern: bool,
    /// Permutation equivalence, checked only when the labeled matrices differ.
    pub permutation_equivalent: Option<bool>,
    pub measure: MarkovMeasure,
    pub entropy: RationalInterval,
    pub log_beta: RationalInterval,
    pub coding_t: CodingReport,
    pub coding_s: CodingReport,
}

pub const CERTIFICATE_CODING_DEPTH: usize = 3;

impl Certificate {
    pub fn report(&self) -> Result<Report> {
        let mut r = Report::new(alloc::format!("isomorphism certificate, n = {}", self.n));
        r.push("T and S matrices identical", self.matrices_equal, "");
        r.push("matrix has the standard multinacci pattern", self.standard_pattern, "");
        for (name, x) in [("T", &self.r1_t), ("S", &self.r1_s)] {
            for c in x.to_report().checks {
                r.push(alloc::format!("{name}: {}", c.name), c.passed, c.detail);
            }
        }
        r.push("row sums of P are 1", self.measure.row_sums_are_one(), "");
        r.push("qP = q", self.measure.is_stationary(), "");
        r.push("q is a positive probability vector", self.measure.q_positive()? && self.measure.q_sums_to_one(), "");
        r.push(
            "entropy enclosure contains log beta",
            self.entropy.lo <= self.log_beta.lo && self.log_beta.hi <= self.entropy.hi,
            alloc::format!("entropy width {}", crate::field::format_decimal(&self.entropy.width(), 3)),
        );
        r.extend(self.coding_t.report.clone());
        r.extend(self.coding_s.report.clone());
        Ok(r)
    }
}

/// Entropy enclosure width used by certificates: 10⁻¹⁰.
pub fn certificate_entropy_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10_000_000_000u64))
}

/// Builds and checks the T and S Markov models for β = βₙ.
pub fn certify_isomorphism(field: &Arc<AlgebraicField>) -> Result<Certificate> {
    let n = match classify_beta(field)? {
        BetaClass::Exact(n) => n,
        other => return Err(Error::WrongRegime(alloc::format!("beta is not multinacci ({other})"))),
    };
    let build = |o: Orientation| -> Result<(MarkovPartition, TransitionMatrix, Vec<Interval>)> {
        let map = PLMap::new(field, o);
        let part = detect_markov(&map, 2 * n + 4)?
            .ok_or_else(|| Error::Certificate(alloc::format!("{o} has no Markov partition from the orbit of 1")))?;
        let labels = multinacci_labeling(&part, n).map_err(|e| Error::Certificate(alloc::format!("{o}: {e}")))?;
        let part = part.with_labels(labels)?;
        let m = part.transition_matrix();
        let states = (0..n).map(|s| part.state_interval(s)).collect();
        Ok((part, m, states))
    };
    let (part_t, matrix_t, states_t) = build(Orientation::Positive)?;
    let (part_s, matrix_s, states_s) = build(Orientation::Negative)?;
    let matrices_equal = matrix_t == matrix_s;
    let permutation_equivalent =
        if !matrices_equal && n <= 8 { Some(matrix_t.permutation_equivalent(&matrix_s)) } else { None };
    let r1_t = check_r1(&matrix_t, field)?;
    let r1_s = check_r1(&matrix_s, field)?;
    let measure = parry_measure(&matrix_t, field)?;
    let entropy = measure.entropy(&certificate_entropy_width())?;
    let log_beta = log_beta(field, 80)?;
    let coding_t = coding_check(&part_t, &matrix_t, CERTIFICATE_CODING_DEPTH)?;
    let coding_s = coding_check(&part_s, &matrix_s, CERTIFICATE_CODING_DEPTH)?;
    let cert = Certificate {
        n,
        standard_pattern: matrix_t.is_standard() && matrix_s.is_standard(),
        matrix_t,
        matrix_s,
        states_t,
        states_s,
        r1_t,
        r1_s,
        matrices_equal,
        permutation_equivalent,
        measure,
        entropy,
        log_beta,
        coding_t,
        coding_s,
    };
    let report = cert.report()?;
    if !report.all_passed() {
        let names: Vec<String> = report.failures().map(|c| c.name.clone()).collect();
        return Err(Error::Certificate(names.join("; ")));
    }
    Ok(cert)
}
