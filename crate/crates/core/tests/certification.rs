//! Certification matrices on the sample arcs, cross-checked against
//! exhaustive search and against known extensions.

mod common;

use arclab_core::arcgeom::{projective_points, validate_arc};
use arclab_core::certifier::{
    bound_scan, build_mn, even_nullity_check, expected_even_nullity, nullity_one_route, property_w, property_w_from,
    recover_cosecants, v_g_vector, weight_one_test, CertError, MnAnalysis, RecoverySource, RecoveryStatus,
};
use arclab_core::ArcConfig;
use common::*;

/// No projective point extends `s` (checked point by point, independently
/// of the search code).
fn is_complete(s: &ArcConfig) -> bool {
    let f = s.field();
    projective_points(f, s.k()).all(|v| {
        let mut pts = s.points().to_vec();
        pts.push(v);
        validate_arc(f, s.k(), &pts).is_err()
    })
}

fn assert_predictions_match(g: &ArcConfig, s: &ArcConfig, pred: &arclab_core::certifier::CosecantPrediction) {
    for p in &pred.per_a {
        assert_eq!(p.status, RecoveryStatus::Split, "A = {:?}", p.a);
        let mut expected = s.cosecants_through(&p.a);
        expected.sort();
        let mut got = p.forms.clone();
        got.sort();
        assert_eq!(got, expected, "A = {:?} of {:?}", p.a, g);
    }
}

#[test]
fn q11_seven_points() {
    let g = arc(Q11_SEVEN);
    let an = MnAnalysis::new(&g, 2).unwrap();
    assert_eq!((an.rows(), an.rank()), (21, 20));
    let cert = an.certificate().unwrap();
    assert_eq!(cert.forbidden_size, 11);
    let scan = bound_scan(&g).unwrap();
    assert_eq!((scan.n0, scan.max_size_bound), (2, 10));
    assert!(g.arcs_of_size(11, 1, 10_000_000).unwrap().is_empty());
    assert_eq!(g.arcs_of_size(10, 1, 10_000_000).unwrap().len(), 1);
}

#[test]
fn q81_eleven_points() {
    let g = arc(Q81_ELEVEN);
    let an = MnAnalysis::new(&g, 1).unwrap();
    assert_eq!((an.rows(), an.cm.matrix().cols(), an.rank()), (462, 2310, 461));
    assert!(an.weight_one_row().is_none());
    assert!(nullity_one_route(&g, 1).unwrap());
    let pred = recover_cosecants(&an, RecoverySource::NullityOne).unwrap();
    assert_eq!(pred.t, 4);
    assert!(pred.per_a.iter().all(|p| p.status != RecoveryStatus::Inconsistent));
    let split = pred.per_a.iter().filter(|p| p.status == RecoveryStatus::Split).count();
    assert_eq!(split, 7);
}

#[test]
fn size_k_arc_scans_to_zero() {
    for p in [5, 7, 11] {
        let g = conic(p, 1).prefix(3);
        assert_eq!(bound_scan(&g).unwrap().n0, 0);
    }
}

#[test]
fn certificates_never_contradicted_by_search() {
    let mut certified = 0;
    for (i, (p, size)) in [(5, 4), (7, 5), (7, 6), (11, 6), (11, 7), (13, 7), (13, 8), (9, 5)]
        .into_iter()
        .enumerate()
    {
        let (p, h) = if p == 9 { (3, 2) } else { (p, 1) };
        for seed in 0..4 {
            let g = random(p, h, 3, size, 100 * i as u64 + seed);
            for n in 0..=(size - 3) {
                if let Some(cert) = weight_one_test(&g, n).unwrap() {
                    certified += 1;
                    let found = g.arcs_of_size(cert.forbidden_size, 1, 20_000_000).unwrap();
                    assert!(
                        found.is_empty(),
                        "{g:?} extends to {} despite certificate",
                        cert.forbidden_size
                    );
                }
            }
        }
    }
    assert!(certified > 20);
}

#[test]
fn even_q_law() {
    let cases: Vec<(ArcConfig, usize)> = vec![
        (arc(HYPERCONIC_F8).prefix(6), 1),
        (conic(2, 2).prefix(5), 0),
        (conic(2, 3), 2),
        (random(2, 3, 3, 7, 1), 3),
        (random(2, 2, 3, 4, 2), 1),
    ];
    for (g, n) in &cases {
        assert!(even_nullity_check(g, *n).unwrap(), "{g:?} n = {n}");
    }
    assert_eq!(expected_even_nullity(&cases[0].0, 1), 6);
    assert_eq!(expected_even_nullity(&cases[1].0, 0), 6);
    assert!(matches!(
        bound_scan(&arc(HYPERCONIC_F8)),
        Err(CertError::NoCertificate { .. })
    ));
    assert!(even_nullity_check(&conic(5, 1), 0).is_err());
}

#[test]
fn property_w_when_size_is_k_plus_n() {
    for g in [conic(2, 3).prefix(5), random(2, 2, 3, 4, 9)] {
        let n = g.len() - 3;
        let an = MnAnalysis::new(&g, n).unwrap();
        assert_eq!(an.nullity(), 1);
        assert!(property_w_from(&an).holds);
    }
}

#[test]
fn six_points_over_f13() {
    let g = arc(Q13_SIX);
    let sizes = g.complete_sizes(50_000_000).unwrap();
    assert_eq!(sizes.into_iter().collect::<Vec<_>>(), vec![8, 9, 10, 12, 14]);
    for size in [8, 9, 10, 12, 14] {
        let s = g.arcs_of_size(size, 200, 50_000_000).unwrap();
        assert!(s.iter().any(is_complete), "no complete arc of size {size}");
    }

    let an = MnAnalysis::new(&g, 2).unwrap();
    let w = property_w_from(&an);
    assert!(w.holds);
    let pred = recover_cosecants(&an, RecoverySource::PropertyW(&w)).unwrap();
    let conics = g.arcs_of_size(14, 10, 50_000_000).unwrap();
    assert_eq!(conics.len(), 1);
    assert_predictions_match(&g, &conics[0], &pred);
}

#[test]
fn nine_points_over_f13() {
    let g = arc(Q13_NINE);
    let report = property_w(&g, 3).unwrap();
    assert!(!report.holds);
    assert_eq!(report.failing().len(), 7);
    let twelve = g.arcs_of_size(12, 5, 50_000_000).unwrap();
    assert_eq!(twelve.len(), 1);
    // the null vector built from the completion still pins the co-secants
    let an = MnAnalysis::new(&g, 3).unwrap();
    assert_eq!(an.nullity(), 2);
    let v = v_g_vector(&twelve[0], 9);
    let pred = recover_cosecants(&an, RecoverySource::Vector(&v)).unwrap();
    assert_predictions_match(&g, &twelve[0], &pred);
    assert!(matches!(
        recover_cosecants(&an, RecoverySource::PropertyW(&report)),
        Err(CertError::PropertyWMissing(a)) if a.len() == 7
    ));
}

#[test]
fn recovery_from_known_extensions() {
    // 12-arcs over F_13 found by search, G = first 8 points, n = 2, t = 3
    let base = conic(13, 1).prefix(5);
    let mut checked = 0;
    for s in base.arcs_of_size(12, 40, 50_000_000).unwrap().iter().step_by(8) {
        let g = s.prefix(8);
        let an = MnAnalysis::new(&g, 2).unwrap();
        let v = v_g_vector(s, 8);
        let pred = recover_cosecants(&an, RecoverySource::Vector(&v)).unwrap();
        assert_predictions_match(&g, s, &pred);
        let w = property_w_from(&an);
        if w.holds {
            let pred = recover_cosecants(&an, RecoverySource::PropertyW(&w)).unwrap();
            assert_predictions_match(&g, s, &pred);
        }
        checked += 1;
    }
    assert!(checked >= 3);
}

#[test]
fn recovery_rejects_foreign_vectors() {
    let g = arc(Q13_SIX);
    let an = MnAnalysis::new(&g, 2).unwrap();
    let junk = vec![g.field().exp(1); an.rows()];
    assert!(matches!(
        recover_cosecants(&an, RecoverySource::Vector(&junk)),
        Err(CertError::NotApplicable(_))
    ));
}

#[test]
fn shape_formula() {
    let g = arc(Q11_SEVEN);
    for n in 0..=4 {
        let cm = build_mn(&g, n).unwrap();
        let rows = arclab_core::subsets::binomial(7, 2);
        let cols = arclab_core::subsets::binomial(7, 7 - n) * arclab_core::subsets::binomial(7 - n, 1);
        assert_eq!((cm.matrix().rows(), cm.matrix().cols()), (rows, cols));
        for (j, (a, e)) in cm.col_pairs().iter().enumerate() {
            assert_eq!(cm.col_index(a, e), j);
        }
    }
}
