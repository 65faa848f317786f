//! Tangent functions of an arc and the signed coefficients built from them.
//!
//! For a `(k-2)`-subset `A` of an arc `S`, the tangent function `f_A` is the
//! product of the `t` canonically scaled linear forms whose kernels meet `S`
//! exactly in `A`. The coefficients `α_A` and `α_C` combine tangent-function
//! values so that the sum-zero relations depend only on `(k-1)`-subsets.
//! The `check_*` functions evaluate each identity exactly; they return the
//! raw left-hand side (or a boolean) so that tests can assert and perturb.

use std::collections::HashMap;

use crate::arcgeom::{ArcConfig, LinearForm};
use crate::gf::{Elem, GaloisField};
use crate::subsets::{permutation_parity, Subset, Subsets};

/// `f_A`, stored as its factor list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentFn {
    pub a: Subset,
    pub forms: Vec<LinearForm>,
}

impl TangentFn {
    pub fn degree(&self) -> usize {
        self.forms.len()
    }

    pub fn eval(&self, f: &GaloisField, x: &[Elem]) -> Elem {
        f.product(self.forms.iter().map(|l| l.eval(f, x)))
    }
}

pub fn tangent_fn(s: &ArcConfig, a: &Subset) -> TangentFn {
    assert_eq!(a.len(), s.k() - 2, "tangent functions are indexed by (k-2)-subsets");
    TangentFn {
        a: a.clone(),
        forms: s.cosecants_through(a),
    }
}

/// Interpolation of `f_A` from its values at `t + 1` points of `E ∖ A`:
///
/// `f_A(x) = Σ_e f_A(e) Π_{u ∈ E∖(A∪{e})} d_A(u, x) / d_A(u, e)`.
#[derive(Debug, Clone)]
pub struct Interpolant {
    a: Subset,
    /// `(e, f_A(e) / Π_u d_A(u, e))` for each node `e`.
    nodes: Vec<(usize, Elem)>,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum InterpolationError {
    #[error("expected {expected} interpolation nodes, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("interpolation node {0} lies in A")]
    NodeInA(usize),
}

impl Interpolant {
    /// `values` maps each point `e ∈ E ∖ A` (by arc position) to `f_A(e)`;
    /// the node set is `E ∖ A` and must have `degree + 1` members.
    pub fn new(s: &ArcConfig, a: &Subset, values: &[(usize, Elem)], degree: usize) -> Result<Self, InterpolationError> {
        if values.len() != degree + 1 {
            return Err(InterpolationError::SizeMismatch {
                expected: degree + 1,
                got: values.len(),
            });
        }
        if let Some(&(e, _)) = values.iter().find(|(e, _)| a.contains(*e)) {
            return Err(InterpolationError::NodeInA(e));
        }
        let f = s.field();
        let nodes = values
            .iter()
            .map(|&(e, fe)| {
                let denom = f.product(
                    values
                        .iter()
                        .filter(|&&(u, _)| u != e)
                        .map(|&(u, _)| s.d_a(a, s.point(u), s.point(e))),
                );
                let w = f.div(fe, denom).expect("arc points give nonzero d_A");
                (e, w)
            })
            .collect();
        Ok(Interpolant { a: a.clone(), nodes })
    }

    pub fn eval(&self, s: &ArcConfig, x: &[Elem]) -> Elem {
        let f = s.field();
        f.sum(self.nodes.iter().map(|&(e, w)| {
            let num = f.product(
                self.nodes
                    .iter()
                    .filter(|&&(u, _)| u != e)
                    .map(|&(u, _)| s.d_a(&self.a, s.point(u), x)),
            );
            f.mul(w, num)
        }))
    }
}

/// Lagrange interpolation of `f_A` from its values on `E ∖ A`, where
/// `E ⊇ A` has `t + k - 1` members.
pub fn interpolate_fa(
    s: &ArcConfig,
    a: &Subset,
    e: &Subset,
    values: &HashMap<usize, Elem>,
) -> Result<Interpolant, InterpolationError> {
    let t = e.len() + 1 - s.k();
    let nodes: Vec<(usize, Elem)> = e
        .minus(a)
        .iter()
        .map(|&i| (i, values.get(&i).copied().unwrap_or(Elem::ZERO)))
        .collect();
    Interpolant::new(s, a, &nodes, t)
}

/// `Σ_{e ∈ E∖A} f_A(e) Π_{u ∈ E∖(A∪{e})} d_A(u, e)^{-1}` with `f_A(e)`
/// supplied by `fa`. Zero for genuine arcs when `|E| = t + k`.
pub fn sum_zero_lhs(s: &ArcConfig, a: &Subset, e: &Subset, fa: impl Fn(usize) -> Elem) -> Elem {
    let f = s.field();
    let rest = e.minus(a);
    f.sum(rest.iter().map(|&ei| {
        let denom = f.product(
            rest.iter()
                .filter(|&&u| u != ei)
                .map(|&u| s.d_a(a, s.point(u), s.point(ei))),
        );
        f.div(fa(ei), denom).expect("arc points give nonzero d_A")
    }))
}

pub fn check_sum_zero(s: &ArcConfig, a: &Subset, e: &Subset) -> Elem {
    let f = s.field();
    let fa = tangent_fn(s, a);
    sum_zero_lhs(s, a, e, |i| fa.eval(f, s.point(i)))
}

/// Both sides of the lemma of tangents for `D` and distinct `x, y, z`:
/// `f_{D∪x}(y) f_{D∪z}(x) / f_{D∪x}(z)` against
/// `(-1)^(t+1) f_{D∪y}(x) f_{D∪z}(y) / f_{D∪y}(z)`.
pub fn segre_sides(
    s: &ArcConfig,
    d: &Subset,
    x: usize,
    y: usize,
    z: usize,
    fa: &impl Fn(&Subset, usize) -> Elem,
) -> (Elem, Elem) {
    let f = s.field();
    let side = |x: usize, y: usize| {
        let num = f.mul(fa(&d.with(x), y), fa(&d.with(z), x));
        f.div(num, fa(&d.with(x), z))
            .expect("tangent values at arc points are nonzero")
    };
    let lhs = side(x, y);
    let rhs = f.mul(f.sign(s.t() + 1), side(y, x));
    (lhs, rhs)
}

/// Evaluates the lemma of tangents exactly. With `x = y` both sides vanish,
/// since `f_{D∪x}(x) = 0`.
pub fn check_segre_sign(s: &ArcConfig, d: &Subset, x: usize, y: usize, z: usize) -> bool {
    assert!(z != x && z != y, "z must differ from x and y");
    let cache = TangentCache::new(s);
    let fa = |a: &Subset, e: usize| cache.value(a, e);
    let (l, r) = segre_sides(s, d, x, y, z, &fa);
    l == r
}

/// Memoized `f_A(e)` for arc points `e`.
pub struct TangentCache<'a> {
    s: &'a ArcConfig,
    fns: std::cell::RefCell<HashMap<Subset, TangentFn>>,
}

impl<'a> TangentCache<'a> {
    pub fn new(s: &'a ArcConfig) -> Self {
        TangentCache {
            s,
            fns: Default::default(),
        }
    }

    pub fn value(&self, a: &Subset, e: usize) -> Elem {
        let mut fns = self.fns.borrow_mut();
        let fa = fns.entry(a.clone()).or_insert_with(|| tangent_fn(self.s, a));
        fa.eval(self.s.field(), self.s.point(e))
    }
}

/// `α` values for every `(k-2)`- and `(k-1)`-subset of an index range,
/// relative to `F` = the first `k - 2` points.
#[derive(Debug, Clone)]
pub struct AlphaTable {
    pub t: usize,
    pub k: usize,
    /// Number of arc positions covered (subsets of `0..n`).
    pub n: usize,
    pub alpha_a: HashMap<Subset, Elem>,
    pub alpha_c: HashMap<Subset, Elem>,
}

impl AlphaTable {
    pub fn f_set(&self) -> Subset {
        Subset::new((0..self.k - 2).collect())
    }

    pub fn a(&self, a: &Subset) -> Elem {
        self.alpha_a[a]
    }

    pub fn c(&self, c: &Subset) -> Elem {
        self.alpha_c[c]
    }
}

/// `(-1)^((r+s)(t+1))` times the telescoping product that moves `F` to `A`
/// one element at a time, where `A ∖ F = {x_1 < … < x_r}` and
/// `F ∖ A = {z_1 < … < z_r}`.
fn alpha_of(f: &GaloisField, k: usize, t: usize, a: &Subset, fa: &impl Fn(&Subset, usize) -> Elem) -> Elem {
    let fset = Subset::new((0..k - 2).collect());
    let d = a.intersect(&fset);
    let xs = a.minus(&fset);
    let zs = fset.minus(a);
    let r = xs.len();
    debug_assert_eq!(r, zs.len());
    let mut order: Vec<usize> = d.to_vec();
    order.extend(zs.iter().copied());
    let s_par = permutation_parity(&order);
    let mut acc = f.sign((r + s_par) * (t + 1));
    for i in 1..=r {
        // numerator: f_{D ∪ {z_r..z_i} ∪ {x_1..x_{i-1}}}(x_i)
        let mut num_set = d.clone();
        for &z in &zs[i - 1..] {
            num_set = num_set.with(z);
        }
        for &x in &xs[..i - 1] {
            num_set = num_set.with(x);
        }
        // denominator: f_{D ∪ {z_r..z_{i+1}} ∪ {x_1..x_i}}(z_i)
        let mut den_set = d.clone();
        for &z in &zs[i..] {
            den_set = den_set.with(z);
        }
        for &x in &xs[..i] {
            den_set = den_set.with(x);
        }
        let num = fa(&num_set, xs[i - 1]);
        let den = fa(&den_set, zs[i - 1]);
        acc = f.mul(acc, f.div(num, den).expect("tangent values at arc points are nonzero"));
    }
    acc
}

/// `α_C`: with `x_{r+1}` the last member of `C ∖ F`,
/// `α_C = α_{C ∖ {x_{r+1}}} · f_{C ∖ {x_{r+1}}}(x_{r+1})` where the sign
/// exponent uses the `r` and `s` of `C`.
fn alpha_c_of(f: &GaloisField, k: usize, t: usize, c: &Subset, fa: &impl Fn(&Subset, usize) -> Elem) -> Elem {
    let fset = Subset::new((0..k - 2).collect());
    let xs = c.minus(&fset);
    let last = *xs.last().expect("a (k-1)-subset has a member outside F");
    let rest = c.without(last);
    // C and C∖{x_{r+1}} share D, r and s, so the α of the smaller set
    // carries the whole sign.
    f.mul(alpha_of(f, k, t, &rest, fa), fa(&rest, last))
}

/// `α_A` and `α_C` for individual subsets of an arc, computed on demand.
pub struct AlphaOracle<'a> {
    s: &'a ArcConfig,
    cache: TangentCache<'a>,
}

impl<'a> AlphaOracle<'a> {
    pub fn new(s: &'a ArcConfig) -> Self {
        AlphaOracle {
            s,
            cache: TangentCache::new(s),
        }
    }

    pub fn a(&self, a: &Subset) -> Elem {
        let fa = |a: &Subset, e: usize| self.cache.value(a, e);
        alpha_of(self.s.field(), self.s.k(), self.s.t(), a, &fa)
    }

    pub fn c(&self, c: &Subset) -> Elem {
        let fa = |a: &Subset, e: usize| self.cache.value(a, e);
        alpha_c_of(self.s.field(), self.s.k(), self.s.t(), c, &fa)
    }

    pub fn tangent_value(&self, a: &Subset, e: usize) -> Elem {
        self.cache.value(a, e)
    }
}

/// Builds the α table for the first `n` points of `s` (`n = |S|` for the
/// whole arc), using tangent functions of `s`.
pub fn alpha_table(s: &ArcConfig, n: usize) -> AlphaTable {
    let cache = TangentCache::new(s);
    let fa = |a: &Subset, e: usize| cache.value(a, e);
    alpha_table_with(s.field(), s.k(), s.t(), n, &fa)
}

/// α table from arbitrary tangent values `fa(A, e)`.
pub fn alpha_table_with(
    f: &GaloisField,
    k: usize,
    t: usize,
    n: usize,
    fa: &impl Fn(&Subset, usize) -> Elem,
) -> AlphaTable {
    let alpha_a = Subsets::new(n, k - 2)
        .map(|a| {
            let v = alpha_of(f, k, t, &a, fa);
            (a, v)
        })
        .collect();
    let alpha_c = Subsets::new(n, k - 1)
        .map(|c| {
            let v = alpha_c_of(f, k, t, &c, fa);
            (c, v)
        })
        .collect();
    AlphaTable {
        t,
        k,
        n,
        alpha_a,
        alpha_c,
    }
}

/// `α_{A∪{e}} = (-1)^(d(t+1)) α_A f_A(e)`, with `d` the number of members
/// of `A` after `e`.
pub fn check_atoc(s: &ArcConfig, table: &AlphaTable, a: &Subset, e: usize) -> bool {
    let f = s.field();
    let fe = tangent_fn(s, a).eval(f, s.point(e));
    let d = a.count_after(e);
    let rhs = f.mul(f.sign(d * (table.t + 1)), f.mul(table.a(a), fe));
    table.c(&a.with(e)) == rhs
}

/// `Σ_{A ⊂ C ⊆ E, |C| = k-1} α_C Π_{u ∈ E∖C} det(u, C)^{-1}`, with α from
/// `alpha_c`. Zero for genuine arcs when `|E| = k + t`.
pub fn theeqn_lhs(s: &ArcConfig, e: &Subset, a: &Subset, alpha_c: impl Fn(&Subset) -> Elem) -> Elem {
    let f = s.field();
    f.sum(e.minus(a).iter().map(|&x| {
        let c = a.with(x);
        let denom = f.product(e.minus(&c).iter().map(|&u| s.det_u_c(s.point(u), &c)));
        f.div(alpha_c(&c), denom).expect("arc determinants are nonzero")
    }))
}

pub fn check_theeqn(s: &ArcConfig, table: &AlphaTable, e: &Subset, a: &Subset) -> Elem {
    theeqn_lhs(s, e, a, |c| table.c(c))
}
