//! The dual hypersurface: evaluation forms, symmetry, and its zeros.

mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use arclab_core::arcgeom::dual_coords;
use arclab_core::hypersurf::{
    build_surface, build_surface_with, cosecant_zero_audit, tangent_identity_check, HyperError,
};
use arclab_core::subsets::Subsets;
use arclab_core::{ArcConfig, Elem, Subset};
use common::*;

fn random_vec(s: &ArcConfig, rng: &mut ChaCha8Rng) -> Vec<Elem> {
    let f = s.field();
    (0..s.k())
        .map(|_| f.from_int(rng.gen_range(0..f.q())).unwrap())
        .collect()
}

#[test]
fn dual_form_matches_vector_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for s in [conic(7, 1), nrc(11, 1, 4), arc(HYPERCONIC_F8), conic(3, 2)] {
        let surface = build_surface(&s).unwrap();
        let f = s.field();
        for _ in 0..40 {
            let ys: Vec<Vec<Elem>> = (0..s.k() - 1).map(|_| random_vec(&s, &mut rng)).collect();
            let rows: Vec<&[Elem]> = ys.iter().map(Vec::as_slice).collect();
            let z = dual_coords(f, &rows);
            let direct = surface.eval_surface(&ys);
            match surface.eval_dual(&z) {
                Ok(v) => assert_eq!(v, direct),
                Err(HyperError::ZeroVector) => assert!(direct.is_zero()),
                Err(e) => panic!("{e}"),
            }
        }
    }
}

#[test]
fn swapping_two_arguments_scales_by_fixed_sign() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for s in [nrc(11, 1, 4), nrc(13, 1, 5), conic(5, 1)] {
        let surface = build_surface(&s).unwrap();
        let f = s.field();
        let factor = f.sign(surface.e().len() - s.k() + 1);
        for _ in 0..20 {
            let mut ys: Vec<Vec<Elem>> = (0..s.k() - 1).map(|_| random_vec(&s, &mut rng)).collect();
            let before = surface.eval_surface(&ys);
            ys.swap(0, s.k() - 2);
            assert_eq!(surface.eval_surface(&ys), f.mul(factor, before));
        }
    }
}

#[test]
fn conic_secants_are_not_zeros() {
    let s = arc(CONIC_F5);
    let surface = build_surface(&s).unwrap();
    let f = s.field();
    for c in Subsets::new(s.len(), 2) {
        let rows: Vec<&[Elem]> = c.iter().map(|&i| s.point(i)).collect();
        let z = dual_coords(f, &rows);
        assert!(!surface.eval_dual(&z).unwrap().is_zero(), "secant {c:?}");
    }
}

#[test]
fn identity_outside_e() {
    // q = 13 arc of size 12: t = 3, |E| = 3 + 6 - 1 = 8, so A can avoid E
    let s = conic(13, 1)
        .prefix(5)
        .arcs_of_size(12, 1, 50_000_000)
        .unwrap()
        .remove(0);
    let surface = build_surface(&s).unwrap();
    assert_eq!(surface.e().len(), 8);
    for i in 0..s.len() {
        let a = Subset::new(vec![i]);
        assert!(tangent_identity_check(&surface, &a).holds(), "A = {a:?}");
        assert_eq!(cosecant_zero_audit(&surface, &a), (3, 0));
    }
    // a different choice of E gives the same zeros
    let other = build_surface_with(&s, Subset::new(vec![1, 2, 4, 5, 7, 8, 10, 11])).unwrap();
    for i in 0..s.len() {
        assert_eq!(cosecant_zero_audit(&other, &Subset::new(vec![i])).1, 0);
    }
}

#[test]
fn hyperconic_even_branch() {
    let s = arc(HYPERCONIC_F8);
    let surface = build_surface(&s).unwrap();
    assert!(surface.is_even());
    assert_eq!(surface.degree(), s.t());
    // the conic alone: t = 1, degree-one surface through every tangent dual
    let c = s.prefix(9);
    let surface = build_surface(&c).unwrap();
    assert_eq!(surface.degree(), 1);
    for i in 0..c.len() {
        let a = Subset::new(vec![i]);
        assert!(tangent_identity_check(&surface, &a).holds());
        assert_eq!(cosecant_zero_audit(&surface, &a), (1, 0));
    }
}

#[test]
fn bad_subsets_rejected() {
    let s = conic(7, 1);
    assert!(matches!(
        build_surface_with(&s, Subset::new(vec![0, 1])),
        Err(HyperError::BadSubset { expected: 4, .. })
    ));
    assert!(matches!(
        build_surface_with(&s, Subset::new(vec![0, 1, 2, 9])),
        Err(HyperError::BadSubset { .. })
    ));
}
