//! Vectors and arcs of `V_k(F_q)`.
//!
//! An arc is an ordered list of vectors in which every `k`-subset is a basis.
//! The order is fixed at construction; every subset is read in increasing
//! arc order, and all determinant signs below follow that convention.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rand::Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::gf::{Elem, GaloisField};
use crate::subsets::{Subset, Subsets};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArcError {
    #[error("dimension k = {0} is below 3")]
    DimensionTooSmall(usize),
    #[error("vector {index} has {got} coordinates, expected {expected}")]
    DimensionMismatch { index: usize, expected: usize, got: usize },
    #[error("vector {0} is the zero vector")]
    ZeroVector(usize),
    #[error("{size} vectors exceed the maximum arc size q + k - 1 = {max}")]
    TooLarge { size: usize, max: usize },
    #[error("not an arc: the vectors at positions {0:?} are linearly dependent")]
    NotAnArc(Subset),
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
}

/// Determinant of the square matrix whose rows are `rows`.
pub fn det(f: &GaloisField, rows: &[&[Elem]]) -> Elem {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "determinant needs a square matrix");
    let mut m: Vec<Elem> = rows.iter().flat_map(|r| r.iter().copied()).collect();
    let mut acc = Elem::ONE;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r * n + c].is_zero()) else {
            return Elem::ZERO;
        };
        if p != c {
            for j in 0..n {
                m.swap(p * n + j, c * n + j);
            }
            acc = f.neg(acc);
        }
        let pivot = m[c * n + c];
        acc = f.mul(acc, pivot);
        let pinv = f.inv(pivot).expect("pivot is nonzero");
        for r in c + 1..n {
            let lead = m[r * n + c];
            if lead.is_zero() {
                continue;
            }
            let factor = f.neg(f.mul(lead, pinv));
            for j in c..n {
                let v = f.mul(factor, m[c * n + j]);
                m[r * n + j] = f.add(m[r * n + j], v);
            }
        }
    }
    acc
}

/// Coefficients `z` of the linear form `y ↦ det(y, v_1, …, v_{k-1})`, i.e.
/// `z_i = (-1)^(i-1) · det(v_1, …, v_{k-1} with coordinate i deleted)`.
pub fn dual_coords(f: &GaloisField, vs: &[&[Elem]]) -> Vec<Elem> {
    let k = vs.len() + 1;
    (0..k)
        .map(|i| {
            let minors: Vec<Vec<Elem>> = vs
                .iter()
                .map(|v| v.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect())
                .collect();
            let refs: Vec<&[Elem]> = minors.iter().map(Vec::as_slice).collect();
            f.mul(f.sign(i), det(f, &refs))
        })
        .collect()
}

pub fn dot(f: &GaloisField, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(Elem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// Scales `v` so its first nonzero coordinate is one; `None` for zero.
pub fn normalize(f: &GaloisField, v: &[Elem]) -> Option<Vec<Elem>> {
    let lead = *v.iter().find(|x| !x.is_zero())?;
    let inv = f.inv(lead).ok()?;
    Some(v.iter().map(|&x| f.mul(x, inv)).collect())
}

/// Rank of a list of vectors.
pub fn rank_of(f: &GaloisField, vs: &[&[Elem]]) -> usize {
    let Some(first) = vs.first() else { return 0 };
    let k = first.len();
    let mut rows: Vec<Vec<Elem>> = vs.iter().map(|v| v.to_vec()).collect();
    let mut rank = 0;
    for c in 0..k {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pinv = f.inv(rows[rank][c]).expect("pivot is nonzero");
        for r in rank + 1..rows.len() {
            let factor = f.neg(f.mul(rows[r][c], pinv));
            if factor.is_zero() {
                continue;
            }
            let (top, rest) = rows.split_at_mut(r);
            for (x, &p) in rest[0][c..k].iter_mut().zip(&top[rank][c..k]) {
                *x = f.add(*x, f.mul(factor, p));
            }
        }
        rank += 1;
    }
    rank
}

/// A nonzero dual vector, scaled so its first nonzero coefficient is one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm(Vec<Elem>);

impl LinearForm {
    /// Canonical form of `coeffs`; `None` for the zero vector.
    pub fn new(f: &GaloisField, coeffs: &[Elem]) -> Option<Self> {
        normalize(f, coeffs).map(LinearForm)
    }

    /// The form whose kernel is spanned by the `k - 1` vectors `vs`.
    pub fn through(f: &GaloisField, vs: &[&[Elem]]) -> Option<Self> {
        Self::new(f, &dual_coords(f, vs))
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.0
    }

    pub fn eval(&self, f: &GaloisField, x: &[Elem]) -> Elem {
        dot(f, &self.0, x)
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form{:?}", self.0)
    }
}

/// Number of points of `PG(k-1, q)`.
pub fn projective_point_count(q: u32, k: usize) -> u128 {
    let q = q as u128;
    (q.pow(k as u32) - 1) / (q - 1)
}

/// Normalized representatives of all points of `PG(k-1, q)` in
/// lexicographic order (zero sorts below every nonzero element).
pub fn projective_points(f: &GaloisField, k: usize) -> impl Iterator<Item = Vec<Elem>> + '_ {
    let q = f.q() as u64;
    (0..k).rev().flat_map(move |lead| {
        let free = k - lead - 1;
        let count = q.pow(free as u32);
        (0..count).map(move |mut code| {
            let mut v = vec![Elem::ZERO; k];
            v[lead] = Elem::ONE;
            for j in (lead + 1..k).rev() {
                v[j] = f.element((code % q) as u32);
                code /= q;
            }
            v
        })
    })
}

/// An ordered arc of `V_k(F_q)`.
#[derive(Clone)]
pub struct ArcConfig {
    field: Arc<GaloisField>,
    k: usize,
    points: Vec<Vec<Elem>>,
}

impl fmt::Debug for ArcConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ArcConfig")
            .field("q", &self.field.q())
            .field("k", &self.k)
            .field("points", &self.points)
            .finish()
    }
}

impl PartialEq for ArcConfig {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.k == other.k && self.points == other.points
    }
}

impl ArcConfig {
    /// Validates and wraps an ordered list of vectors.
    pub fn new(field: Arc<GaloisField>, k: usize, points: Vec<Vec<Elem>>) -> Result<Self, ArcError> {
        if k < 3 {
            return Err(ArcError::DimensionTooSmall(k));
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != k {
                return Err(ArcError::DimensionMismatch {
                    index: i,
                    expected: k,
                    got: p.len(),
                });
            }
            if p.iter().all(|x| x.is_zero()) {
                return Err(ArcError::ZeroVector(i));
            }
        }
        let max = field.q() as usize + k - 1;
        if points.len() > max {
            return Err(ArcError::TooLarge {
                size: points.len(),
                max,
            });
        }
        if let Some(w) = find_dependent(&field, k, &points) {
            return Err(ArcError::NotAnArc(w));
        }
        Ok(ArcConfig { field, k, points })
    }

    fn trusted(field: Arc<GaloisField>, k: usize, points: Vec<Vec<Elem>>) -> Self {
        debug_assert!(find_dependent(&field, k, &points).is_none());
        ArcConfig { field, k, points }
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<Elem>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[Elem] {
        &self.points[i]
    }

    /// `t = q + k - 1 - |S|`: the number of co-secants through each
    /// `(k-2)`-subset.
    pub fn t(&self) -> usize {
        self.field.q() as usize + self.k - 1 - self.points.len()
    }

    /// The first `n` points, as an arc.
    pub fn prefix(&self, n: usize) -> ArcConfig {
        Self::trusted(self.field.clone(), self.k, self.points[..n].to_vec())
    }

    /// The points at the given positions, in that order.
    pub fn sub_arc(&self, idx: &[usize]) -> ArcConfig {
        Self::trusted(
            self.field.clone(),
            self.k,
            idx.iter().map(|&i| self.points[i].clone()).collect(),
        )
    }

    /// Appends `v`, failing if the result is not an arc.
    pub fn extended(&self, v: Vec<Elem>) -> Result<ArcConfig, ArcError> {
        let mut pts = self.points.clone();
        pts.push(v);
        Self::new(self.field.clone(), self.k, pts)
    }

    pub fn det_full(&self, rows: &[&[Elem]]) -> Elem {
        det(&self.field, rows)
    }

    /// `det(u, C)` with the members of `C` in increasing arc order.
    pub fn det_u_c(&self, u: &[Elem], c: &Subset) -> Elem {
        let mut rows: Vec<&[Elem]> = Vec::with_capacity(self.k);
        rows.push(u);
        rows.extend(c.iter().map(|&i| self.points[i].as_slice()));
        det(&self.field, &rows)
    }

    /// `d_A(u, v) = det(u, v, A)` with `A` in increasing arc order.
    pub fn d_a(&self, a: &Subset, u: &[Elem], v: &[Elem]) -> Elem {
        let mut rows: Vec<&[Elem]> = Vec::with_capacity(self.k);
        rows.push(u);
        rows.push(v);
        rows.extend(a.iter().map(|&i| self.points[i].as_slice()));
        det(&self.field, &rows)
    }

    /// Two standard basis vectors completing the `k - 2` points of `a` to a
    /// basis.
    fn pencil_complement(&self, a: &Subset) -> (Vec<Elem>, Vec<Elem>) {
        let f = &self.field;
        let mut chosen: Vec<Vec<Elem>> = a.iter().map(|&i| self.points[i].clone()).collect();
        let base = chosen.len();
        for i in 0..self.k {
            if chosen.len() == base + 2 {
                break;
            }
            let mut e = vec![Elem::ZERO; self.k];
            e[i] = Elem::ONE;
            chosen.push(e);
            let refs: Vec<&[Elem]> = chosen.iter().map(Vec::as_slice).collect();
            if rank_of(f, &refs) < chosen.len() {
                chosen.pop();
            }
        }
        assert_eq!(chosen.len(), base + 2, "A must span a (k-2)-space");
        let q2 = chosen.pop().unwrap();
        let q1 = chosen.pop().unwrap();
        (q1, q2)
    }

    /// The `q + 1` hyperplanes through `⟨A⟩`, each paired with a vector of
    /// that hyperplane outside `⟨A⟩`, sorted by form.
    pub fn pencil_points(&self, a: &Subset) -> Vec<(LinearForm, Vec<Elem>)> {
        assert_eq!(a.len(), self.k - 2, "pencil needs a (k-2)-subset");
        let f = &self.field;
        let (p1, p2) = self.pencil_complement(a);
        let a_rows: Vec<&[Elem]> = a.iter().map(|&i| self.points[i].as_slice()).collect();
        let mut out: Vec<(LinearForm, Vec<Elem>)> = std::iter::once(p2.clone())
            .chain(
                f.elements()
                    .map(|mu| p1.iter().zip(&p2).map(|(&x, &y)| f.add(x, f.mul(mu, y))).collect()),
            )
            .map(|x: Vec<Elem>| {
                let mut vs: Vec<&[Elem]> = vec![&x];
                vs.extend(a_rows.iter().copied());
                (LinearForm::through(f, &vs).expect("x and A are independent"), x)
            })
            .collect();
        out.sort_by(|l, r| l.0.cmp(&r.0));
        out
    }

    /// The `q + 1` hyperplanes containing `⟨A⟩`.
    pub fn pencil_through(&self, a: &Subset) -> Vec<LinearForm> {
        self.pencil_points(a).into_iter().map(|(l, _)| l).collect()
    }

    /// The co-secants through `A`: hyperplanes meeting the arc exactly in `A`.
    pub fn cosecants_through(&self, a: &Subset) -> Vec<LinearForm> {
        self.pencil_through(a)
            .into_iter()
            .filter(|l| {
                (0..self.len())
                    .filter(|&i| !a.contains(i))
                    .all(|i| !l.eval(&self.field, &self.points[i]).is_zero())
            })
            .collect()
    }

    /// Forms of the hyperplanes spanned by each `(k-1)`-subset.
    fn secant_forms(&self) -> Vec<LinearForm> {
        Subsets::new(self.len(), self.k - 1)
            .map(|c| {
                let rows: Vec<&[Elem]> = c.iter().map(|&i| self.points[i].as_slice()).collect();
                LinearForm::through(&self.field, &rows).expect("arc subsets are independent")
            })
            .collect()
    }

    /// Whether `v` extends the arc.
    pub fn extends_with(&self, v: &[Elem]) -> bool {
        let f = &self.field;
        if v.iter().all(|x| x.is_zero()) {
            return false;
        }
        if self.len() + 1 < self.k {
            let mut rows: Vec<&[Elem]> = self.points.iter().map(Vec::as_slice).collect();
            rows.push(v);
            return rank_of(f, &rows) == rows.len();
        }
        self.secant_forms().iter().all(|l| !l.eval(f, v).is_zero())
    }

    /// Every projective point (normalized representative) that extends the
    /// arc, in lexicographic order.
    pub fn extensions_of(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        if self.len() >= f.q() as usize + self.k - 1 {
            return Vec::new();
        }
        if self.len() + 1 < self.k {
            return projective_points(f, self.k).filter(|v| self.extends_with(v)).collect();
        }
        let forms = self.secant_forms();
        let pts: Vec<Vec<Elem>> = projective_points(f, self.k).collect();
        pts.into_par_iter()
            .filter(|v| forms.iter().all(|l| !l.eval(f, v).is_zero()))
            .collect()
    }

    /// Sizes of all complete arcs containing this arc (exhaustive).
    pub fn complete_sizes(&self, node_budget: u64) -> Result<BTreeSet<usize>, ArcError> {
        let search = Search::new(self, node_budget);
        search.run(Goal::CompleteSizes)
    }

    /// All arcs of exactly `target` points containing this arc, each listed
    /// once with the added points in lexicographic order, stopping after
    /// `limit` results. An empty result with no error is an exhaustion proof.
    pub fn arcs_of_size(&self, target: usize, limit: usize, node_budget: u64) -> Result<Vec<ArcConfig>, ArcError> {
        if target < self.len() {
            return Ok(Vec::new());
        }
        if target == self.len() {
            return Ok(vec![self.clone()]);
        }
        let search = Search::new(self, node_budget);
        search.run_target(target, limit)
    }
}

/// First dependent `k`-subset (or dependent subset of a too-small set).
fn find_dependent(f: &GaloisField, k: usize, points: &[Vec<Elem>]) -> Option<Subset> {
    if points.len() < k {
        let rows: Vec<&[Elem]> = points.iter().map(Vec::as_slice).collect();
        if rank_of(f, &rows) < rows.len() {
            // find a minimal witness: a dependent pair or the whole set
            for i in 0..points.len() {
                for j in i + 1..points.len() {
                    if rank_of(f, &[&points[i], &points[j]]) < 2 {
                        return Some(Subset::new(vec![i, j]));
                    }
                }
            }
            return Some(Subset::new((0..points.len()).collect()));
        }
        return None;
    }
    Subsets::new(points.len(), k).find(|s| {
        let rows: Vec<&[Elem]> = s.iter().map(|&i| points[i].as_slice()).collect();
        det(f, &rows).is_zero()
    })
}

/// `Ok(())` when every `k`-subset of `points` is a basis, otherwise the
/// first dependent subset in colex order.
pub fn validate_arc(f: &GaloisField, k: usize, points: &[Vec<Elem>]) -> Result<(), Subset> {
    match find_dependent(f, k, points) {
        None => Ok(()),
        Some(w) => Err(w),
    }
}

enum Goal {
    CompleteSizes,
}

struct Search<'a> {
    base: &'a ArcConfig,
    candidates: Vec<Vec<Elem>>,
    budget: u64,
    nodes: AtomicU64,
}

impl<'a> Search<'a> {
    fn new(base: &'a ArcConfig, budget: u64) -> Self {
        Search {
            base,
            candidates: base.extensions_of(),
            budget,
            nodes: AtomicU64::new(0),
        }
    }

    fn tick(&self) -> Result<(), ArcError> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(ArcError::BudgetExceeded(self.budget));
        }
        Ok(())
    }

    /// Candidates (as indices into `self.candidates`) that remain valid after
    /// adding candidate `v` to an arc whose added points are `added`.
    fn filter(&self, arc: &[&[Elem]], v: usize, pool: &[usize]) -> Vec<usize> {
        let f = &self.base.field;
        let k = self.base.k;
        let vp = self.candidates[v].as_slice();
        // hyperplanes through v and each (k-2)-subset of the current arc
        let forms: Vec<LinearForm> = Subsets::new(arc.len(), k - 2)
            .map(|b| {
                let mut rows: Vec<&[Elem]> = vec![vp];
                rows.extend(b.iter().map(|&i| arc[i]));
                LinearForm::through(f, &rows).expect("arc plus candidate is independent")
            })
            .collect();
        pool.iter()
            .copied()
            .filter(|&c| c != v)
            .filter(|&c| {
                let cp = &self.candidates[c];
                forms.iter().all(|l| !l.eval(f, cp).is_zero())
            })
            .collect()
    }

    fn run(&self, _goal: Goal) -> Result<BTreeSet<usize>, ArcError> {
        let arc: Vec<&[Elem]> = self.base.points.iter().map(Vec::as_slice).collect();
        let pool: Vec<usize> = (0..self.candidates.len()).collect();
        if pool.is_empty() {
            return Ok(BTreeSet::from([self.base.len()]));
        }
        let parts: Result<Vec<BTreeSet<usize>>, ArcError> = pool
            .par_iter()
            .map(|&v| {
                self.tick()?;
                let mut arc = arc.clone();
                let next = self.filter(&arc, v, &pool);
                arc.push(&self.candidates[v]);
                let mut sizes = BTreeSet::new();
                self.sizes_rec(&mut arc, v, &next, &mut sizes)?;
                Ok(sizes)
            })
            .collect();
        Ok(parts?.into_iter().flatten().collect())
    }

    /// `pool` holds every candidate compatible with `arc`; only those after
    /// `last` may be added to avoid revisiting the same set.
    fn sizes_rec<'s>(
        &'s self,
        arc: &mut Vec<&'s [Elem]>,
        last: usize,
        pool: &[usize],
        sizes: &mut BTreeSet<usize>,
    ) -> Result<(), ArcError> {
        if pool.is_empty() {
            sizes.insert(arc.len());
            return Ok(());
        }
        for &v in pool.iter().filter(|&&v| v > last) {
            self.tick()?;
            let next = self.filter(arc, v, pool);
            arc.push(&self.candidates[v]);
            self.sizes_rec(arc, v, &next, sizes)?;
            arc.pop();
        }
        Ok(())
    }

    fn run_target(&self, target: usize, limit: usize) -> Result<Vec<ArcConfig>, ArcError> {
        let mut arc: Vec<&[Elem]> = self.base.points.iter().map(Vec::as_slice).collect();
        let pool: Vec<usize> = (0..self.candidates.len()).collect();
        let mut found = Vec::new();
        let mut chosen = Vec::new();
        self.target_rec(&mut arc, &mut chosen, None, &pool, target, limit, &mut found)?;
        Ok(found)
    }

    #[allow(clippy::too_many_arguments)]
    fn target_rec<'s>(
        &'s self,
        arc: &mut Vec<&'s [Elem]>,
        chosen: &mut Vec<usize>,
        last: Option<usize>,
        pool: &[usize],
        target: usize,
        limit: usize,
        found: &mut Vec<ArcConfig>,
    ) -> Result<(), ArcError> {
        if arc.len() == target {
            let mut pts = self.base.points.clone();
            pts.extend(chosen.iter().map(|&c| self.candidates[c].clone()));
            found.push(ArcConfig::trusted(self.base.field.clone(), self.base.k, pts));
            return Ok(());
        }
        let allowed: Vec<usize> = pool.iter().copied().filter(|&v| last.is_none_or(|l| v > l)).collect();
        if arc.len() + allowed.len() < target {
            return Ok(());
        }
        for (pos, &v) in allowed.iter().enumerate() {
            if found.len() >= limit {
                break;
            }
            if arc.len() + allowed.len() - pos < target {
                break;
            }
            self.tick()?;
            let next = self.filter(arc, v, pool);
            arc.push(&self.candidates[v]);
            chosen.push(v);
            self.target_rec(arc, chosen, Some(v), &next, target, limit, found)?;
            chosen.pop();
            arc.pop();
        }
        Ok(())
    }
}

/// Standard arcs used as fixtures and by the scanners.
pub mod constructions {
    use super::*;

    /// `e_1, …, e_k` followed by the all-ones vector.
    pub fn frame(field: Arc<GaloisField>, k: usize) -> ArcConfig {
        let mut pts: Vec<Vec<Elem>> = (0..k)
            .map(|i| {
                let mut e = vec![Elem::ZERO; k];
                e[i] = Elem::ONE;
                e
            })
            .collect();
        pts.push(vec![Elem::ONE; k]);
        ArcConfig::new(field, k, pts).expect("a frame is an arc")
    }

    /// The normal rational curve `{(1, s, …, s^(k-1))} ∪ {(0, …, 0, 1)}`:
    /// an arc of size `q + 1`. For `k = 3` this is a conic.
    pub fn normal_rational_curve(field: Arc<GaloisField>, k: usize) -> ArcConfig {
        let f = field.clone();
        let mut pts: Vec<Vec<Elem>> = f
            .elements()
            .map(|s| {
                let mut v = Vec::with_capacity(k);
                let mut x = Elem::ONE;
                for _ in 0..k {
                    v.push(x);
                    x = f.mul(x, s);
                }
                v
            })
            .collect();
        let mut inf = vec![Elem::ZERO; k];
        inf[k - 1] = Elem::ONE;
        pts.push(inf);
        ArcConfig::new(field, k, pts).expect("normal rational curve is an arc")
    }

    /// Conic plus its nucleus in `PG(2, q)`, `q` even: a hyperoval of
    /// `q + 2 = q + k - 1` points, so `t = 0`.
    pub fn hyperoval(field: Arc<GaloisField>) -> ArcConfig {
        assert!(field.is_even(), "hyperovals need even q");
        let mut pts: Vec<Vec<Elem>> = field.elements().map(|s| vec![Elem::ONE, s, field.mul(s, s)]).collect();
        pts.push(vec![Elem::ZERO, Elem::ZERO, Elem::ONE]);
        pts.push(vec![Elem::ZERO, Elem::ONE, Elem::ZERO]);
        ArcConfig::new(field, 3, pts).expect("conic plus nucleus is a hyperoval")
    }

    /// A uniformly grown random arc: starts from `seed_points` and adds
    /// random vectors (with random nonzero scaling) until `size` is reached.
    /// Returns `None` if it gets stuck on a complete arc `max_restarts` times.
    pub fn random_arc<R: Rng>(
        field: Arc<GaloisField>,
        k: usize,
        size: usize,
        rng: &mut R,
        max_restarts: usize,
    ) -> Option<ArcConfig> {
        let f = field.clone();
        let q = f.q();
        'restart: for _ in 0..max_restarts.max(1) {
            let mut arc = ArcConfig::new(field.clone(), k, Vec::new()).ok()?;
            while arc.len() < size {
                let mut tries = 0;
                loop {
                    tries += 1;
                    if tries > 64 * q as usize {
                        continue 'restart;
                    }
                    let v: Vec<Elem> = (0..k)
                        .map(|_| f.from_int(rng.gen_range(0..q)).expect("in range"))
                        .collect();
                    if arc.extends_with(&v) {
                        let mut pts = arc.points.clone();
                        pts.push(v);
                        arc = ArcConfig::trusted(field.clone(), k, pts);
                        break;
                    }
                }
            }
            return Some(arc);
        }
        None
    }
}
