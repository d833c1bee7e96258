use approx::assert_abs_diff_eq;
use monogamy::bounds::{AlphaGrid, Foci, TheoremId};
use monogamy::figures::{wclass_breakdown, figure};
use monogamy::gallery::{self, Family, StateSpec};
use monogamy::measures::pair_measures;
use monogamy::qcore::SubsystemSet;
use monogamy::report::{fmt_sig, sweep_csv, verify_csv, VerifyRow, SWEEP_COLUMNS, VERIFY_COLUMNS};
use monogamy::runner::{sweep, verify, SweepConfig};
use monogamy::{measures::concurrence_pure, Error};
use proptest::prelude::*;

#[test]
fn figure_rows() {
    let f1 = figure(1).unwrap();
    assert_eq!(f1.columns, ["alpha", "lhs", "thm1", "jin"]);
    assert_eq!(f1.rows.len(), 100);
    assert_abs_diff_eq!(f1.value_at(1.0, "lhs").unwrap(), 0.692_820_3, epsilon = 1e-6);
    assert_abs_diff_eq!(f1.value_at(1.0, "thm1").unwrap(), 0.8, epsilon = 1e-6);
    assert_abs_diff_eq!(f1.value_at(1.0, "jin").unwrap(), 0.848_528_1, epsilon = 1e-6);

    let f3 = figure(3).unwrap();
    assert_eq!(f3.columns, ["alpha", "lhs", "thm4", "jin11"]);
    assert_abs_diff_eq!(f3.value_at(2.0, "lhs").unwrap(), 8.0 / 9.0, epsilon = 1e-12);
    assert_abs_diff_eq!(f3.value_at(2.0, "thm4").unwrap(), 4.0 / 3.0, epsilon = 1e-12);

    let f2 = figure(2).unwrap();
    assert_eq!(f2.columns, ["alpha", "y1", "y2"]);
    assert_abs_diff_eq!(f2.value_at(2.0, "y1").unwrap(), f2.value_at(2.0, "y2").unwrap(), epsilon = 1e-9);

    assert!(figure(4).is_err());
}

#[test]
fn example2_matched_ordering() {
    for k in 1..100 {
        let c = wclass_breakdown(0.02 * k as f64).unwrap();
        assert!(c.descending_order_feasible);
        assert!(c.y2_matched >= -1e-12);
        assert!(c.y1_matched <= c.y2_matched + 1e-12);
    }
}

#[test]
fn gsd3_examples() {
    let psi = gallery::gsd3(gallery::gsd3_default(), 0.0).unwrap();
    assert_abs_diff_eq!(
        concurrence_pure(&psi, &SubsystemSet::single(0)).unwrap().value,
        2.0 * 3f64.sqrt() / 5.0,
        epsilon = 1e-12
    );
    let psi = gallery::gsd3([0.0, 0.6, 0.0, 0.8, 0.0], 0.3).unwrap();
    assert_abs_diff_eq!(concurrence_pure(&psi, &SubsystemSet::single(0)).unwrap().value, 0.0, epsilon = 1e-12);
    for b in [1, 2] {
        let (c, ca) = pair_measures(&psi, 0, b).unwrap();
        assert_abs_diff_eq!(c, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(ca, 0.0, epsilon = 1e-12);
    }
}

#[test]
fn wclass_examples() {
    let ab = SubsystemSet::new([0, 1]).unwrap();
    let w = gallery::wclass4(gallery::wclass4_default()).unwrap();
    assert_abs_diff_eq!(concurrence_pure(&w, &ab).unwrap().value, 39f64.sqrt() / 8.0, epsilon = 1e-12);
    let w = gallery::wclass4([0.6, 0.8, 0.0, 0.0]).unwrap();
    assert_abs_diff_eq!(concurrence_pure(&w, &ab).unwrap().value, 0.0, epsilon = 1e-12);
}

#[test]
fn named_cut_values() {
    fn one(psi: &monogamy::qcore::PureState, q: &[usize]) -> f64 {
        concurrence_pure(psi, &SubsystemSet::new(q.iter().copied()).unwrap()).unwrap().value
    }
    assert_abs_diff_eq!(one(&gallery::thm2_saturating(), &[0, 1]), 1.0, epsilon = 1e-12);
    // The entangled pair (0, 2) sits inside the ABC1 block.
    assert_abs_diff_eq!(one(&gallery::cor_a(), &[0, 1, 2]), 0.0, epsilon = 1e-12);
    assert_abs_diff_eq!(one(&gallery::cor_a(), &[0, 1]), 1.0, epsilon = 1e-12);
    assert_abs_diff_eq!(one(&gallery::cor_b(), &[0, 1, 2]), 1.0, epsilon = 1e-12);
    assert_abs_diff_eq!(one(&gallery::ghz(3).unwrap(), &[0]), 1.0, epsilon = 1e-12);
}

#[test]
fn state_spec_round_trip() {
    for f in &Family::ALL {
        let spec = StateSpec::named(*f);
        let back = StateSpec::from_json(&spec.to_json()).unwrap();
        assert_eq!(spec, back);
        assert!(back.build().is_ok(), "{f}");
    }
    let spec = StateSpec::from_json(r#"{"kind":"amplitudes","n":1,"re":[0.6,0.8]}"#).unwrap();
    assert_eq!(spec.build().unwrap().num_qubits(), 1);
    assert!(StateSpec::from_json(r#"{"kind":"amplitudes","n":1,"re":[1.0,1.0]}"#)
        .unwrap()
        .build()
        .is_err());
    assert!(StateSpec::from_json("{not json").is_err());
    assert!(StateSpec::from_json(r#"{"kind":"named","family":"nope"}"#).is_err());
}

#[test]
fn csv_layout() {
    let psi = gallery::gsd3(gallery::gsd3_default(), 0.0).unwrap();
    let grid = AlphaGrid::single(1.0).unwrap();
    let reports = verify(&psi, &[TheoremId::Thm1], &grid, &Foci::default()).unwrap();
    let rows: Vec<VerifyRow> = reports
        .into_iter()
        .map(|report| VerifyRow { state: "gsd3".into(), report })
        .collect();
    let csv = verify_csv(&rows);
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), VERIFY_COLUMNS.join(","));
    let fields: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&fields[..5], ["gsd3", "thm1", "1", "0.692820323028", "0.8"]);
    assert_eq!(fields[6], "satisfied");

    let cfg = SweepConfig {
        qubits: 3,
        samples: 4,
        seed: 7,
        theorems: vec![TheoremId::Thm1, TheoremId::Ckw],
        grid: "1:2:1".parse().unwrap(),
        foci: Foci::default(),
    };
    let a = sweep_csv(&sweep(&cfg).unwrap());
    assert!(a.starts_with(&SWEEP_COLUMNS.join(",")));
    assert_eq!(a, sweep_csv(&sweep(&cfg).unwrap()));
    assert_eq!(fmt_sig(1.0 / 3.0), "0.333333333333");
}

#[test]
fn unknown_family() {
    assert!(matches!("dicke".parse::<Family>(), Err(Error::UnknownFamily(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn gsd3_closed_forms_match(l in prop::array::uniform5(0.01f64..1.0), phi in 0.0f64..6.3) {
        let norm = l.iter().map(|x| x * x).sum::<f64>().sqrt();
        let l = l.map(|x| x / norm);
        let psi = gallery::gsd3(l, phi).unwrap();
        let cf = gallery::gsd3_closed_forms(l);
        let (c_ab, ca_ab) = pair_measures(&psi, 0, 1).unwrap();
        let (c_ac, ca_ac) = pair_measures(&psi, 0, 2).unwrap();
        prop_assert!((c_ab - cf.c_ab).abs() < 1e-9);
        prop_assert!((c_ac - cf.c_ac).abs() < 1e-9);
        prop_assert!((ca_ab - cf.ca_ab).abs() < 1e-9);
        prop_assert!((ca_ac - cf.ca_ac).abs() < 1e-9);
        let cut = concurrence_pure(&psi, &SubsystemSet::single(0)).unwrap().value;
        prop_assert!((cut - cf.c_a_bc).abs() < 1e-9);
    }

    #[test]
    fn wclass_closed_forms_match(l in prop::array::uniform4(0.01f64..1.0)) {
        let norm = l.iter().map(|x| x * x).sum::<f64>().sqrt();
        let l = l.map(|x| x / norm);
        let psi = gallery::wclass4(l).unwrap();
        let cf = gallery::wclass4_closed_forms(l);
        let cut = concurrence_pure(&psi, &SubsystemSet::new([0, 1]).unwrap()).unwrap().value;
        prop_assert!((cut - cf.c_ab_cut).abs() < 1e-9);
        prop_assert!((pair_measures(&psi, 0, 1).unwrap().0 - cf.c_ab).abs() < 1e-9);
        prop_assert!((pair_measures(&psi, 0, 2).unwrap().0 - cf.c_ac1).abs() < 1e-9);
        prop_assert!((pair_measures(&psi, 0, 3).unwrap().0 - cf.c_ac2).abs() < 1e-9);
    }
}
