//! Certification matrices `M_n` and what can be read from them.
//!
//! Given an arc `G` and `0 <= n <= |G| - k`, `M_n` has a row for every
//! `(k-1)`-subset `C` of `G` and a column for every pair `(A, E)` with
//! `|E| = |G| - n` and `A ⊆ E`, `|A| = k - 2`. Its `(C, (A, E))` entry is
//! `Π_{u ∈ G∖E} det(u, C)` when `A ⊂ C` and zero otherwise.
//!
//! If `G` extends to an arc `S` of size `q + 2k + n - 1 - |G|`, the vector
//! `v_G` with coordinates `α_C Π_{z ∈ G∖C} det(z, C)^{-1}` is a left null
//! vector of `M_n` with no zero coordinate. So a unit vector in the column
//! space forbids that extension, and weight-two vectors in the column space
//! fix ratios of tangent-function values, which pins down the co-secants of
//! any such `S` through `G`.

use std::collections::HashMap;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arcgeom::{constructions, ArcConfig, ArcError, LinearForm};
use crate::gf::{Elem, GaloisField, GfError};
use crate::matrix::{GfMatrix, LeftNullBasis};
use crate::subsets::{binomial, Subset, Subsets};
use crate::tangentfns::{alpha_table, Interpolant};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertError {
    #[error("n = {n} out of range: need 0 <= n <= |G| - k = {max}")]
    SizeOutOfRange { n: usize, max: isize },
    #[error("no weight-one vector for any n in 0..={max_n}")]
    NoCertificate { max_n: usize, steps: Vec<ScanStep> },
    #[error("Property W fails for {} subsets A", .0.len())]
    PropertyWMissing(Vec<Subset>),
    #[error("{0}")]
    NotApplicable(String),
    #[error("search budget of {0} exceeded")]
    BudgetExceeded(u64),
    #[error(transparent)]
    Arc(#[from] ArcError),
    #[error(transparent)]
    Field(#[from] GfError),
}

/// `M_n` together with its row and column indexing.
#[derive(Debug, Clone)]
pub struct CertMatrix {
    g: ArcConfig,
    n: usize,
    rows: Vec<Subset>,
    cols: Vec<(Subset, Subset)>,
    matrix: GfMatrix,
}

/// `Π_{u ∈ G ∖ C} det(u, C)` for every `(k-1)`-subset, indexed by colex rank.
fn det_products(g: &ArcConfig, rows: &[Subset]) -> Vec<Vec<Elem>> {
    rows.iter()
        .map(|c| (0..g.len()).map(|u| g.det_u_c(g.point(u), c)).collect())
        .collect()
}

pub fn build_mn(g: &ArcConfig, n: usize) -> Result<CertMatrix, CertError> {
    let k = g.k();
    if g.len() < k + n {
        return Err(CertError::SizeOutOfRange {
            n,
            max: g.len() as isize - k as isize,
        });
    }
    let f = g.field();
    let size = g.len();
    let rows: Vec<Subset> = Subsets::new(size, k - 1).collect();
    let dets = det_products(g, &rows);
    let es: Vec<Subset> = Subsets::new(size, size - n).collect();
    let per_e = binomial(size - n, k - 2);

    let blocks: Vec<Vec<(usize, usize, Elem)>> = es
        .par_iter()
        .enumerate()
        .map(|(ei, e)| {
            let outside = e.complement(size);
            let mut entries = Vec::new();
            for (ai, a_local) in Subsets::new(e.len(), k - 2).enumerate() {
                let a = Subset::new(a_local.iter().map(|&i| e[i]).collect());
                let col = ei * per_e + ai;
                for x in (0..size).filter(|&x| !a.contains(x)) {
                    let c = a.with(x);
                    let r = c.rank();
                    let v = f.product(outside.iter().map(|&u| dets[r][u]));
                    entries.push((r, col, v));
                }
            }
            entries
        })
        .collect();

    let mut matrix = GfMatrix::zeros(f.clone(), rows.len(), es.len() * per_e);
    for (r, c, v) in blocks.into_iter().flatten() {
        matrix.set(r, c, v);
    }
    let cols = es
        .iter()
        .flat_map(|e| {
            Subsets::new(e.len(), k - 2).map(move |a| (Subset::new(a.iter().map(|&i| e[i]).collect()), e.clone()))
        })
        .collect();
    Ok(CertMatrix {
        g: g.clone(),
        n,
        rows,
        cols,
        matrix,
    })
}

impl CertMatrix {
    pub fn arc(&self) -> &ArcConfig {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &GfMatrix {
        &self.matrix
    }

    pub fn row_subsets(&self) -> &[Subset] {
        &self.rows
    }

    pub fn col_pairs(&self) -> &[(Subset, Subset)] {
        &self.cols
    }

    /// Row of the `(k-1)`-subset `c` (its colex rank).
    pub fn row_index(&self, c: &Subset) -> usize {
        c.rank()
    }

    /// Column of `(A, E)`: `E` in colex order, then `A` by colex rank of its
    /// positions inside `E`.
    pub fn col_index(&self, a: &Subset, e: &Subset) -> usize {
        let local: Vec<usize> = a
            .iter()
            .map(|x| e.iter().position(|y| y == x).expect("A ⊆ E"))
            .collect();
        let per_e = binomial(e.len(), self.g.k() - 2);
        e.rank() * per_e + Subset::new(local).rank()
    }

    /// `t = |G| - k - n`, the co-secant count of a putative extension.
    pub fn t(&self) -> usize {
        self.g.len() - self.g.k() - self.n
    }

    /// The arc size this matrix can rule out: `q + 2k + n - 1 - |G|`.
    pub fn forbidden_size(&self) -> usize {
        forbidden_size(&self.g, self.n)
    }

    pub fn analyze(self) -> MnAnalysis {
        let null = self.matrix.left_null_basis();
        MnAnalysis { cm: self, null }
    }
}

pub fn forbidden_size(g: &ArcConfig, n: usize) -> usize {
    g.field().q() as usize + 2 * g.k() + n - 1 - g.len()
}

/// `M_n` with its left null space computed once.
#[derive(Debug, Clone)]
pub struct MnAnalysis {
    pub cm: CertMatrix,
    pub null: LeftNullBasis,
}

impl MnAnalysis {
    pub fn new(g: &ArcConfig, n: usize) -> Result<Self, CertError> {
        Ok(build_mn(g, n)?.analyze())
    }

    pub fn rows(&self) -> usize {
        self.cm.rows.len()
    }

    pub fn rank(&self) -> usize {
        self.rows() - self.null.nullity()
    }

    pub fn nullity(&self) -> usize {
        self.null.nullity()
    }

    pub fn weight_one_row(&self) -> Option<Subset> {
        self.null.weight_one().map(|r| self.cm.rows[r].clone())
    }

    pub fn certificate(&self) -> Option<NonExtendabilityCertificate> {
        self.weight_one_row().map(|c| NonExtendabilityCertificate {
            n: self.cm.n,
            row: c,
            forbidden_size: self.cm.forbidden_size(),
        })
    }

    /// Nonzero `(a, b)` with `a·e_C + b·e_C'` in the column space.
    pub fn weight_two(&self, c1: &Subset, c2: &Subset) -> Option<(Elem, Elem)> {
        self.null.weight_two(c1.rank(), c2.rank())
    }
}

/// A weight-one vector `e_C` in the column space of `M_n`: `G` lies in no
/// arc of `forbidden_size` points (nor any larger arc).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonExtendabilityCertificate {
    pub n: usize,
    pub row: Subset,
    pub forbidden_size: usize,
}

pub fn weight_one_test(g: &ArcConfig, n: usize) -> Result<Option<NonExtendabilityCertificate>, CertError> {
    Ok(MnAnalysis::new(g, n)?.certificate())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanStep {
    pub n: usize,
    pub rows: usize,
    pub rank: usize,
    pub nullity: usize,
    pub weight_one: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundScan {
    /// Least `n` with a weight-one vector in the column space of `M_n`.
    pub n0: usize,
    pub certificate: NonExtendabilityCertificate,
    /// Largest size an arc containing `G` can have: `forbidden_size - 1`.
    pub max_size_bound: usize,
    pub steps: Vec<ScanStep>,
}

/// Raises `n` from zero until `M_n` has a weight-one vector.
pub fn bound_scan(g: &ArcConfig) -> Result<BoundScan, CertError> {
    let k = g.k();
    if g.len() < k {
        return Err(CertError::SizeOutOfRange {
            n: 0,
            max: g.len() as isize - k as isize,
        });
    }
    let max_n = g.len() - k;
    let mut steps = Vec::new();
    for n in 0..=max_n {
        let an = MnAnalysis::new(g, n)?;
        let cert = an.certificate();
        steps.push(ScanStep {
            n,
            rows: an.rows(),
            rank: an.rank(),
            nullity: an.nullity(),
            weight_one: cert.is_some(),
        });
        if let Some(certificate) = cert {
            return Ok(BoundScan {
                n0: n,
                max_size_bound: certificate.forbidden_size - 1,
                certificate,
                steps,
            });
        }
    }
    Err(CertError::NoCertificate { max_n, steps })
}

/// One weight-two vector `a·e_{A∪x} + b·e_{A∪y}` in the column space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightTwoWitness {
    pub y: usize,
    #[serde(skip)]
    pub a: Elem,
    #[serde(skip)]
    pub b: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AWitness {
    pub a: Subset,
    /// Smallest `x` admitting enough partners; `None` when none does.
    pub pivot: Option<usize>,
    pub partners: Vec<WeightTwoWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyWReport {
    pub n: usize,
    pub holds: bool,
    /// Partners needed per subset: `|G| - n - k + 1`.
    pub required: usize,
    pub witnesses: Vec<AWitness>,
}

impl PropertyWReport {
    pub fn failing(&self) -> Vec<Subset> {
        self.witnesses
            .iter()
            .filter(|w| w.pivot.is_none())
            .map(|w| w.a.clone())
            .collect()
    }
}

pub fn property_w(g: &ArcConfig, n: usize) -> Result<PropertyWReport, CertError> {
    let an = MnAnalysis::new(g, n)?;
    Ok(property_w_from(&an))
}

pub fn property_w_from(an: &MnAnalysis) -> PropertyWReport {
    let g = &an.cm.g;
    let k = g.k();
    let n = an.cm.n;
    let required = g.len() - n - k + 1;
    let witnesses: Vec<AWitness> = Subsets::new(g.len(), k - 2)
        .map(|a| {
            let others: Vec<usize> = (0..g.len()).filter(|&x| !a.contains(x)).collect();
            for &x in &others {
                let cx = a.with(x);
                let partners: Vec<WeightTwoWitness> = others
                    .iter()
                    .filter(|&&y| y != x)
                    .filter_map(|&y| {
                        an.weight_two(&cx, &a.with(y)).map(|(ca, cb)| {
                            assert!(!ca.is_zero() && !cb.is_zero(), "weight-two coefficients are nonzero");
                            WeightTwoWitness { y, a: ca, b: cb }
                        })
                    })
                    .take(required)
                    .collect();
                if partners.len() == required {
                    return AWitness {
                        a,
                        pivot: Some(x),
                        partners,
                    };
                }
            }
            AWitness {
                a,
                pivot: None,
                partners: Vec::new(),
            }
        })
        .collect();
    PropertyWReport {
        n,
        holds: witnesses.iter().all(|w| w.pivot.is_some()),
        required,
        witnesses,
    }
}

/// `M_n` has rank one less than full row rank and no weight-one vector.
pub fn nullity_one_route(g: &ArcConfig, n: usize) -> Result<bool, CertError> {
    let an = MnAnalysis::new(g, n)?;
    Ok(nullity_one_route_from(&an))
}

pub fn nullity_one_route_from(an: &MnAnalysis) -> bool {
    an.nullity() == 1 && an.weight_one_row().is_none()
}

/// Whether the dual hypersurface of an extension is determined by `G`:
/// always for even `q`, and when `2n >= |G| - k - 1` for odd `q`.
pub fn hypersurface_licensed(g: &ArcConfig, n: usize) -> bool {
    g.field().is_even() || 2 * n + g.k() + 1 >= g.len()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RecoveryStatus {
    /// `f_A` has exactly `t` distinct linear factors.
    Split,
    /// Fewer than `t` roots in the pencil through `A`.
    NonSplitting { roots: usize },
    /// A root hyperplane passes through another point of `G`, or the
    /// redundant ratios disagree with the interpolant.
    Inconsistent,
}

#[derive(Debug, Clone, Serialize)]
pub struct APrediction {
    pub a: Subset,
    pub pivot: usize,
    /// `(e, f_A(e) / f_A(pivot))` for every point whose ratio is known.
    #[serde(skip)]
    pub ratios: Vec<(usize, Elem)>,
    pub status: RecoveryStatus,
    /// Root hyperplanes of the recovered `f_A`: the predicted co-secants.
    #[serde(skip)]
    pub forms: Vec<LinearForm>,
    #[serde(skip)]
    interpolant: Interpolant,
}

impl APrediction {
    /// The recovered `f_A`, normalized to one at the pivot.
    pub fn eval(&self, g: &ArcConfig, x: &[Elem]) -> Elem {
        self.interpolant.eval(g, x)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CosecantPrediction {
    pub n: usize,
    pub t: usize,
    pub per_a: Vec<APrediction>,
}

impl CosecantPrediction {
    pub fn all_split(&self) -> bool {
        self.per_a.iter().all(|p| p.status == RecoveryStatus::Split)
    }

    pub fn get(&self, a: &Subset) -> Option<&APrediction> {
        self.per_a.iter().find(|p| &p.a == a)
    }

    /// The map `A ↦ f_A(e)` for points of `G`, usable wherever tangent values
    /// of the extension are needed.
    pub fn tangent_values(&self, g: &ArcConfig) -> HashMap<(Subset, usize), Elem> {
        let mut out = HashMap::new();
        for p in &self.per_a {
            for e in 0..g.len() {
                out.insert((p.a.clone(), e), p.eval(g, g.point(e)));
            }
        }
        out
    }
}

/// Where the ratios `v_{A∪y} / v_{A∪x}` come from.
pub enum RecoverySource<'a> {
    PropertyW(&'a PropertyWReport),
    /// A one-dimensional left null space: its basis vector is `v_G` up to
    /// scale.
    NullityOne,
    /// A left null vector with no zero coordinate, taken as `v_G`.
    Vector(&'a [Elem]),
}

/// Recovers every `f_A` (up to scale) and its root hyperplanes.
pub fn recover_cosecants(an: &MnAnalysis, source: RecoverySource<'_>) -> Result<CosecantPrediction, CertError> {
    let g = &an.cm.g;
    let f = g.field();
    let t = an.cm.t();
    if t == 0 {
        return Err(CertError::NotApplicable("recovery needs t = |G| - k - n >= 1".into()));
    }
    // Π_{z ∈ G∖C} det(z, C), the factor between v_C and α_C.
    let det_prod = |c: &Subset| -> Elem {
        f.product(
            (0..g.len())
                .filter(|z| !c.contains(*z))
                .map(|z| g.det_u_c(g.point(z), c)),
        )
    };

    let per_a_inputs: Vec<RatioInput> = match source {
        RecoverySource::PropertyW(report) => {
            if !report.holds {
                return Err(CertError::PropertyWMissing(report.failing()));
            }
            report
                .witnesses
                .iter()
                .map(|w| {
                    let x = w.pivot.expect("Property W holds");
                    // a·v_{A∪x} + b·v_{A∪y} = 0
                    let ratios = w
                        .partners
                        .iter()
                        .map(|p| (p.y, f.neg(f.div(p.a, p.b).expect("b is nonzero"))))
                        .collect();
                    (w.a.clone(), x, ratios)
                })
                .collect()
        }
        RecoverySource::NullityOne => {
            if an.nullity() != 1 {
                return Err(CertError::NotApplicable(format!("nullity is {}, not 1", an.nullity())));
            }
            ratios_from_vector(g, &an.null.basis()[0])
        }
        RecoverySource::Vector(v) => {
            if v.len() != an.rows() || !annihilates(&an.cm, v) {
                return Err(CertError::NotApplicable(
                    "vector is not a left null vector of M_n".into(),
                ));
            }
            ratios_from_vector(g, v)
        }
    };

    let per_a = per_a_inputs
        .into_par_iter()
        .map(|(a, x, v_ratios)| {
            let cx = a.with(x);
            let px = det_prod(&cx);
            let dx = a.count_after(x);
            let mut ratios = vec![(x, Elem::ONE)];
            for (y, vr) in v_ratios {
                let cy = a.with(y);
                // α_{A∪y} / α_{A∪x} = (v_y / v_x) · P(C_y) / P(C_x)
                let alpha_ratio = f.mul(vr, f.div(det_prod(&cy), px).expect("arc determinants are nonzero"));
                let dy = a.count_after(y);
                let sign = f.sign((dx + dy) * (t + 1));
                ratios.push((y, f.mul(sign, alpha_ratio)));
            }
            predict_one(g, &a, x, t, ratios)
        })
        .collect();
    Ok(CosecantPrediction { n: an.cm.n, t, per_a })
}

/// `(A, pivot x, [(y, v_{A∪y} / v_{A∪x})])`.
type RatioInput = (Subset, usize, Vec<(usize, Elem)>);

/// Pivot and ratios `v_{A∪y} / v_{A∪x}` read straight off a null vector.
fn ratios_from_vector(g: &ArcConfig, v: &[Elem]) -> Vec<RatioInput> {
    let f = g.field();
    Subsets::new(g.len(), g.k() - 2)
        .map(|a| {
            let others: Vec<usize> = (0..g.len()).filter(|&x| !a.contains(x)).collect();
            let x = others[0];
            let vx = v[a.with(x).rank()];
            let ratios = others[1..]
                .iter()
                .map(|&y| (y, f.div(v[a.with(y).rank()], vx).unwrap_or(Elem::ZERO)))
                .collect();
            (a, x, ratios)
        })
        .collect()
}

fn predict_one(g: &ArcConfig, a: &Subset, x: usize, t: usize, ratios: Vec<(usize, Elem)>) -> APrediction {
    let f = g.field();
    let interpolant = Interpolant::new(g, a, &ratios[..t + 1], t).expect("t + 1 interpolation nodes");
    let consistent = ratios[t + 1..]
        .iter()
        .all(|&(e, r)| interpolant.eval(g, g.point(e)) == r)
        && ratios.iter().all(|&(_, r)| !r.is_zero());
    let forms: Vec<LinearForm> = g
        .pencil_points(a)
        .into_iter()
        .filter(|(_, pt)| interpolant.eval(g, pt).is_zero())
        .map(|(l, _)| l)
        .collect();
    let hits_g = forms.iter().any(|l| {
        (0..g.len())
            .filter(|&i| !a.contains(i))
            .any(|i| l.eval(f, g.point(i)).is_zero())
    });
    let status = if !consistent || hits_g {
        RecoveryStatus::Inconsistent
    } else if forms.len() == t {
        RecoveryStatus::Split
    } else {
        RecoveryStatus::NonSplitting { roots: forms.len() }
    };
    APrediction {
        a: a.clone(),
        pivot: x,
        ratios,
        status,
        forms,
        interpolant,
    }
}

/// The vector `v_G` for `G` = the first `g_len` points of the arc `s`, with
/// `α` computed from the tangent functions of `s`.
pub fn v_g_vector(s: &ArcConfig, g_len: usize) -> Vec<Elem> {
    let f = s.field();
    let k = s.k();
    let table = alpha_table(s, g_len);
    let g = s.prefix(g_len);
    Subsets::new(g_len, k - 1)
        .map(|c| {
            let p = f.product(
                (0..g_len)
                    .filter(|z| !c.contains(*z))
                    .map(|z| g.det_u_c(g.point(z), &c)),
            );
            f.div(table.c(&c), p).expect("arc determinants are nonzero")
        })
        .collect()
}

/// Whether `v_G · M_n = 0` for `G` = the first `g_len` points of `s`, where
/// `|S| = q + 2k + n - 1 - |G|`.
pub fn v_g_check(s: &ArcConfig, g_len: usize, n: usize) -> Result<bool, CertError> {
    let g = s.prefix(g_len);
    if forbidden_size(&g, n) != s.len() {
        return Err(CertError::NotApplicable(format!(
            "|S| = {} but q + 2k + n - 1 - |G| = {}",
            s.len(),
            forbidden_size(&g, n)
        )));
    }
    let cm = build_mn(&g, n)?;
    let v = v_g_vector(s, g_len);
    Ok(annihilates(&cm, &v))
}

pub fn annihilates(cm: &CertMatrix, v: &[Elem]) -> bool {
    cm.matrix
        .left_mul_vec(v)
        .map(|w| w.iter().all(|x| x.is_zero()))
        .unwrap_or(false)
}

/// Nullity of `M_n` over even `q` compared with `C(|G| - n - 1, k - 1)`.
pub fn even_nullity_check(g: &ArcConfig, n: usize) -> Result<bool, CertError> {
    if !g.field().is_even() {
        return Err(CertError::NotApplicable("the nullity law is for even q".into()));
    }
    let an = MnAnalysis::new(g, n)?;
    Ok(an.nullity() == expected_even_nullity(g, n))
}

pub fn expected_even_nullity(g: &ArcConfig, n: usize) -> usize {
    binomial(g.len() - n - 1, g.k() - 1)
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureStats {
    pub p: u32,
    pub h: u32,
    pub k: usize,
    pub n: usize,
    pub arc_size: usize,
    /// `k <= p + n(p - 2)`.
    pub in_range: bool,
    /// All arcs containing a fixed frame were examined (every arc of this
    /// size is projectively equivalent to one of them).
    pub exhaustive: bool,
    pub examined: usize,
    pub certified: usize,
    /// Arcs without a certificate, as point lists.
    #[serde(skip)]
    pub uncertified: Vec<ArcConfig>,
}

impl ConjectureStats {
    pub fn fraction_certified(&self) -> f64 {
        if self.examined == 0 {
            return 0.0;
        }
        self.certified as f64 / self.examined as f64
    }

    /// Arcs that contradict the conjecture: uncertified while in range.
    pub fn counterexamples(&self) -> &[ArcConfig] {
        if self.in_range {
            &self.uncertified
        } else {
            &[]
        }
    }
}

/// Checks whether arcs of size `2k - 3 + n` over GF(p^h) have a weight-one
/// vector in the column space of `M_n`.
///
/// Arcs of size at most `k + 1` are all projectively equivalent to a frame
/// prefix, and larger ones to an arc extending the frame; when at most
/// `budget` such extensions exist they are all examined. Otherwise
/// `samples` random arcs are drawn with the given seed.
pub fn conjecture_scan(
    p: u32,
    h: u32,
    k: usize,
    n: usize,
    samples: usize,
    budget: u64,
    seed: u64,
) -> Result<ConjectureStats, CertError> {
    let field = Arc::new(GaloisField::new(p, h, None)?);
    if field.is_even() {
        return Err(CertError::NotApplicable("the conjecture concerns odd q".into()));
    }
    let size = 2 * k + n - 3;
    let frame = constructions::frame(field.clone(), k);
    let exhaustive_arcs: Option<Vec<ArcConfig>> = if size <= k + 1 {
        Some(vec![frame.prefix(size)])
    } else {
        match frame.arcs_of_size(size, budget as usize, budget.saturating_mul(64)) {
            Ok(arcs) if arcs.len() < budget as usize => Some(arcs),
            Ok(_) | Err(ArcError::BudgetExceeded(_)) => None,
            Err(e) => return Err(e.into()),
        }
    };
    let exhaustive = exhaustive_arcs.is_some();
    let arcs = match exhaustive_arcs {
        Some(a) => a,
        None => random_arcs(field.clone(), k, size, samples, seed)?,
    };
    scan_arcs(p, h, k, n, exhaustive, arcs)
}

/// The same check on `samples` random arcs, regardless of budget.
pub fn conjecture_sample(
    p: u32,
    h: u32,
    k: usize,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<ConjectureStats, CertError> {
    let field = Arc::new(GaloisField::new(p, h, None)?);
    let size = 2 * k + n - 3;
    let arcs = random_arcs(field, k, size, samples, seed)?;
    scan_arcs(p, h, k, n, false, arcs)
}

fn random_arcs(
    field: Arc<GaloisField>,
    k: usize,
    size: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<ArcConfig>, CertError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            constructions::random_arc(field.clone(), k, size, &mut rng, 1000)
                .ok_or_else(|| CertError::NotApplicable(format!("could not grow a random arc of size {size}")))
        })
        .collect()
}

fn scan_arcs(
    p: u32,
    h: u32,
    k: usize,
    n: usize,
    exhaustive: bool,
    arcs: Vec<ArcConfig>,
) -> Result<ConjectureStats, CertError> {
    let size = 2 * k + n - 3;
    let results: Vec<(ArcConfig, bool)> = arcs
        .into_par_iter()
        .map(|g| {
            let ok = weight_one_test(&g, n).map(|c| c.is_some());
            ok.map(|ok| (g, ok))
        })
        .collect::<Result<_, _>>()?;
    let examined = results.len();
    let certified = results.iter().filter(|(_, ok)| *ok).count();
    let uncertified = results.into_iter().filter(|(_, ok)| !ok).map(|(g, _)| g).collect();
    Ok(ConjectureStats {
        p,
        h,
        k,
        n,
        arc_size: size,
        in_range: k <= p as usize + n * (p as usize - 2),
        exhaustive,
        examined,
        certified,
        uncertified,
    })
}
