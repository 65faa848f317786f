//! The dual hypersurface `φ_S` of an arc.
//!
//! For an arc `S` with `t = q + k - 1 - |S|` and a subset `E ⊆ S` of size
//! `k + t - 1` (q even) or `k + 2t - 1` (q odd),
//!
//! `φ_S(Y) = Σ_{C ⊆ E, |C| = k-1} w_C Π_{z ∈ E∖C} det(z, Y) / det(z, C)`
//!
//! with `w_C = α_C` for even `q` and `α_C²` for odd `q`. Since
//! `det(z, Y_1, …, Y_{k-1}) = z · Z(Y)` for the dual coordinates `Z(Y)`,
//! `φ_S` is a form of degree `|E| - k + 1` in `Z`, vanishing at the dual of
//! every co-secant hyperplane.

use std::sync::Arc;

use thiserror::Error;

use crate::arcgeom::{dot, dual_coords, ArcConfig};
use crate::gf::{Elem, GaloisField};
use crate::subsets::{Subset, Subsets};
use crate::tangentfns::{tangent_fn, AlphaOracle};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HyperError {
    #[error("arc has {have} points but E needs {needed}")]
    ArcTooSmall { needed: usize, have: usize },
    #[error("E must be a subset of the arc of size {expected}, got {got:?}")]
    BadSubset { expected: usize, got: Subset },
    #[error("dual vector is zero")]
    ZeroVector,
}

#[derive(Debug, Clone)]
struct Term {
    c: Subset,
    /// `w_C / Π_{z ∈ E∖C} det(z, C)`.
    coeff: Elem,
    /// `E ∖ C`.
    outside: Vec<usize>,
}

/// `φ_S`, stored as its terms and evaluated on demand.
#[derive(Debug, Clone)]
pub struct DualSurface {
    s: ArcConfig,
    e: Subset,
    terms: Vec<Term>,
}

/// `|E|` for an arc: `k + t - 1` for even `q`, `k + 2t - 1` for odd `q`.
pub fn e_size(s: &ArcConfig) -> usize {
    let t = s.t();
    if s.field().is_even() {
        s.k() + t - 1
    } else {
        s.k() + 2 * t - 1
    }
}

/// Builds `φ_S` with `E` the first admissible prefix of `S`.
pub fn build_surface(s: &ArcConfig) -> Result<DualSurface, HyperError> {
    let needed = e_size(s);
    if s.len() < needed {
        return Err(HyperError::ArcTooSmall { needed, have: s.len() });
    }
    build_surface_with(s, Subset::new((0..needed).collect()))
}

pub fn build_surface_with(s: &ArcConfig, e: Subset) -> Result<DualSurface, HyperError> {
    let needed = e_size(s);
    if s.len() < needed {
        return Err(HyperError::ArcTooSmall { needed, have: s.len() });
    }
    if e.len() != needed || e.last().is_some_and(|&i| i >= s.len()) {
        return Err(HyperError::BadSubset {
            expected: needed,
            got: e,
        });
    }
    let f = s.field();
    let even = f.is_even();
    let alpha = AlphaOracle::new(s);
    let terms = Subsets::new(e.len(), s.k() - 1)
        .map(|local| {
            let c = Subset::new(local.iter().map(|&i| e[i]).collect());
            let outside: Vec<usize> = e.iter().copied().filter(|&z| !c.contains(z)).collect();
            let a_c = alpha.c(&c);
            let w = if even { a_c } else { f.mul(a_c, a_c) };
            let den = f.product(outside.iter().map(|&z| s.det_u_c(s.point(z), &c)));
            let coeff = f.div(w, den).expect("arc determinants are nonzero");
            Term { c, coeff, outside }
        })
        .collect();
    Ok(DualSurface { s: s.clone(), e, terms })
}

impl DualSurface {
    pub fn arc(&self) -> &ArcConfig {
        &self.s
    }

    pub fn field(&self) -> &Arc<GaloisField> {
        self.s.field()
    }

    pub fn e(&self) -> &Subset {
        &self.e
    }

    pub fn is_even(&self) -> bool {
        self.s.field().is_even()
    }

    /// `t` for even `q`, `2t` for odd `q`.
    pub fn degree(&self) -> usize {
        self.e.len() + 1 - self.s.k()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// `φ_S(Y_1, …, Y_{k-1})`.
    pub fn eval_surface(&self, ys: &[Vec<Elem>]) -> Elem {
        assert_eq!(ys.len(), self.s.k() - 1, "φ_S takes k - 1 vectors");
        let rows: Vec<&[Elem]> = ys.iter().map(Vec::as_slice).collect();
        let z = dual_coords(self.field(), &rows);
        self.eval_z(&z)
    }

    /// `φ_S` as a form in the dual coordinates.
    pub fn eval_dual(&self, z: &[Elem]) -> Result<Elem, HyperError> {
        assert_eq!(z.len(), self.s.k(), "dual vectors have length k");
        if z.iter().all(|x| x.is_zero()) {
            return Err(HyperError::ZeroVector);
        }
        Ok(self.eval_z(z))
    }

    fn eval_z(&self, z: &[Elem]) -> Elem {
        let f = self.field();
        let pts: Vec<Elem> = (0..self.s.len())
            .map(|i| {
                if self.e.contains(i) {
                    dot(f, self.s.point(i), z)
                } else {
                    Elem::ZERO
                }
            })
            .collect();
        f.sum(
            self.terms
                .iter()
                .map(|t| f.mul(t.coeff, f.product(t.outside.iter().map(|&i| pts[i])))),
        )
    }

    /// The `(k-1)`-subsets of `E` indexing the terms.
    pub fn term_subsets(&self) -> impl Iterator<Item = &Subset> {
        self.terms.iter().map(|t| &t.c)
    }
}

/// Per-subset outcome of the identity `φ_S(X, A) = α_A f_A(X)` (squared
/// for odd `q`) over the pencil of hyperplanes through `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentIdentityOutcome {
    pub a: Subset,
    pub checked: usize,
    pub mismatches: usize,
}

impl TangentIdentityOutcome {
    pub fn holds(&self) -> bool {
        self.mismatches == 0
    }
}

/// Checks the identity at a representative of each of the `q + 1`
/// hyperplanes through `⟨A⟩`. Both sides vanish on `⟨A⟩` and are constant
/// multiples of a degree-`deg` form along each pencil line, so agreement
/// at these points pins the restriction to every line.
pub fn tangent_identity_check(surface: &DualSurface, a: &Subset) -> TangentIdentityOutcome {
    let s = surface.arc();
    let f = s.field();
    let alpha = AlphaOracle::new(s);
    let alpha_a = alpha.a(a);
    let fa = tangent_fn(s, a);
    let pencil = s.pencil_points(a);
    let mut mismatches = 0;
    for (_, x) in &pencil {
        let mut ys = vec![x.clone()];
        ys.extend(a.iter().map(|&i| s.point(i).to_vec()));
        let lhs = surface.eval_surface(&ys);
        let base = f.mul(alpha_a, fa.eval(f, x));
        let rhs = if surface.is_even() { base } else { f.mul(base, base) };
        if lhs != rhs {
            mismatches += 1;
        }
    }
    TangentIdentityOutcome {
        a: a.clone(),
        checked: pencil.len(),
        mismatches,
    }
}

/// Co-secant forms through `A` at which `φ_S` fails to vanish, as a count
/// of `(checked, nonzero)`.
pub fn cosecant_zero_audit(surface: &DualSurface, a: &Subset) -> (usize, usize) {
    let forms = surface.arc().cosecants_through(a);
    let nonzero = forms
        .iter()
        .filter(|l| !surface.eval_dual(l.coeffs()).expect("forms are nonzero").is_zero())
        .count();
    (forms.len(), nonzero)
}

/// For odd `q`: the restriction of `φ_S` to the dual line of `⟨A⟩` is the
/// square of `α_A f_A`, so each co-secant through `A` is a double zero.
/// Returns `None` for even `q`.
pub fn restriction_is_square(surface: &DualSurface, a: &Subset) -> Option<bool> {
    if surface.is_even() {
        return None;
    }
    let s = surface.arc();
    let f = s.field();
    let alpha = AlphaOracle::new(s);
    let alpha_a = alpha.a(a);
    let fa = tangent_fn(s, a);
    let a_rows: Vec<&[Elem]> = a.iter().map(|&i| s.point(i)).collect();
    Some(s.pencil_points(a).iter().all(|(_, x)| {
        let mut rows = vec![x.as_slice()];
        rows.extend(a_rows.iter().copied());
        let z = dual_coords(f, &rows);
        let g = f.mul(alpha_a, fa.eval(f, x));
        surface.eval_z(&z) == f.mul(g, g)
    }))
}
