use num_bigint::BigInt;
use z2index::catalog;
use z2index::complexes::{AuxData, LambdaScalar};
use z2index::decider::{
    decide, isotropic_parity_witness, square_form, DecideConfig, DeciderError, IndexStatus, WarningKind,
    WitnessOutcome,
};
use z2index::exactalg::IntMatrix;

fn l(a: i64, b: i64) -> LambdaScalar {
    LambdaScalar::new(a, b)
}

#[test]
fn catalog_verdicts_match_expected_indices() {
    for name in catalog::list() {
        let e = catalog::get(name).unwrap();
        if let Some(k) = e.expected.index {
            let v = decide(&e.complex, &DecideConfig::default()).unwrap();
            assert_eq!(v.status, IndexStatus::Exact(k), "{name}");
            assert!(!v.certificates.is_empty(), "{name}");
        }
    }
}

#[test]
fn kirby_square_form_and_witness() {
    let c = catalog::get("kirby").unwrap().complex;
    let p = square_form(&c, 8).unwrap();
    assert_eq!(p.gram, IntMatrix::from_rows(2, &[[0, 1], [1, 0]]));
    assert_eq!(p.parity, vec![0, 1]);
    assert_eq!(p.value(&[0, 1]), BigInt::from(0));
    assert_eq!(p.value(&[1, 1]), BigInt::from(2));
    assert_eq!(isotropic_parity_witness(&p), WitnessOutcome::Witness(vec![0, 1]));

    let v = decide(&c, &DecideConfig::default()).unwrap();
    let last = v.certificates.last().unwrap();
    assert_eq!(last.witness["s"], serde_json::json!([0, 1]));
    assert!(v.warnings.iter().any(|w| w.kind == WarningKind::UnverifiedAuxData));
}

#[test]
fn aux_basis_change_is_undone() {
    let mut c = catalog::get("kirby").unwrap().complex;
    // a1' = a1 + a2, a2' = a2; the form becomes P G P^T with P = [[1, 1], [0, 1]]
    c.aux.basis_cocycles = Some(vec![vec![l(1, -1), l(1, 0)], vec![l(0, 0), l(1, 0)]]);
    c.aux.square_form = Some(vec![vec![2, 1], vec![1, 0]]);
    let p = square_form(&c, 8).unwrap();
    assert_eq!(p.gram, IntMatrix::from_rows(2, &[[0, 1], [1, 0]]));
    assert_eq!(decide(&c, &DecideConfig::default()).unwrap().status, IndexStatus::Exact(2));
}

#[test]
fn symmetric_aux_class_is_rejected() {
    let mut c = catalog::get("kirby").unwrap().complex;
    c.aux.basis_cocycles = Some(vec![vec![l(1, 1), l(0, 0)], vec![l(0, 0), l(1, 0)]]);
    assert!(matches!(square_form(&c, 8), Err(DeciderError::BasisMatchFailure(_))));
}

#[test]
fn missing_square_form_gives_a_range() {
    let c = catalog::get("kirby").unwrap().complex.with_aux(AuxData::default());
    let v = decide(&c, &DecideConfig::default()).unwrap();
    assert_eq!(v.status, IndexStatus::Range(2, 3));
    assert!(v.warnings.iter().any(|w| w.kind == WarningKind::MissingAuxData));
}

#[test]
fn without_the_manifold_claim_upper_bound_stays_four() {
    let kirby = catalog::get("kirby").unwrap().complex.claiming_manifold(false);
    assert_eq!(decide(&kirby, &DecideConfig::default()).unwrap().status, IndexStatus::Range(2, 4));
    let c = catalog::get("s1s3_c").unwrap().complex.claiming_manifold(false);
    assert_eq!(decide(&c, &DecideConfig::default()).unwrap().status, IndexStatus::Range(3, 4));
    // the index-1 criterion needs no manifold hypothesis
    let a = catalog::get("s1s3_a").unwrap().complex.claiming_manifold(false);
    assert_eq!(decide(&a, &DecideConfig::default()).unwrap().status, IndexStatus::Exact(1));
}

#[test]
fn cross_check_does_not_change_the_verdict() {
    let c = catalog::get("kirby").unwrap().complex;
    let on = decide(&c, &DecideConfig::default()).unwrap();
    let off = decide(
        &c,
        &DecideConfig {
            cross_check: false,
            ..DecideConfig::default()
        },
    )
    .unwrap();
    assert_eq!(on, off);
}

#[test]
fn verdicts_are_deterministic() {
    for name in ["kirby", "sphere4", "s1s3_d"] {
        let c = catalog::get(name).unwrap().complex;
        let a = serde_json::to_string(&decide(&c, &DecideConfig::default()).unwrap()).unwrap();
        let b = serde_json::to_string(&decide(&c, &DecideConfig::default()).unwrap()).unwrap();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn low_dimensional_fixtures_are_rejected() {
    for name in ["circle", "torus2", "rp3", "rp5"] {
        let c = catalog::get(name).unwrap().complex;
        assert!(matches!(decide(&c, &DecideConfig::default()), Err(DeciderError::NotFourDimensional(_))), "{name}");
    }
}
