use cyalg::checks::*;

#[test]
fn unknown_check_is_a_usage_error() {
    assert!(matches!(
        run_check("nope", &Options::default()),
        Err(cyalg::Error::Usage(_))
    ));
}

#[test]
fn pbw_aggregate_passes() {
    let r = verify_pbw().unwrap();
    assert!(r.passed(), "{}", r.summary_line());
    assert_eq!(r.details["triples"].as_object().unwrap().len(), 16);
}

#[test]
fn differential_is_deterministic() {
    let a = verify_differential(7, 10).unwrap();
    let b = verify_differential(7, 10).unwrap();
    assert!(a.passed(), "{}", a.summary_line());
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn omega_image_without_symbolic_mode_is_not_a_symbolic_pass() {
    let r = verify_omega_image(&Options::default()).unwrap();
    assert!(r.passed());
    assert_eq!(r.note.as_deref(), Some("symbolic mode not run"));
}
