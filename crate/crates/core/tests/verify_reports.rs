use rtamari::verify::{run_all, VerificationReport, VerifyConfig, VerifyError, IDENTITY_NAMES};

fn cfg(names: &[&str], n: Option<usize>, r: Option<u32>) -> VerifyConfig {
    VerifyConfig {
        names: names.iter().map(|s| s.to_string()).collect(),
        n,
        r,
        ..Default::default()
    }
}

#[test]
fn small_identities_pass() {
    let reports = run_all(&cfg(&["counts", "intervals", "dimension", "frobenius", "polya", "fundamental", "subste"], Some(3), None)).unwrap();
    assert!(!reports.is_empty());
    for r in &reports {
        assert!(r.pass, "{}", r.summary());
    }
}

#[test]
fn order_follows_request() {
    let reports = run_all(&cfg(&["dimension", "intervals"], Some(3), Some(1))).unwrap();
    let names: Vec<&str> = reports.iter().map(|r| r.identity.as_str()).collect();
    assert_eq!(names, ["dimension", "intervals"]);
}

#[test]
fn unknown_identity_is_an_error() {
    assert!(matches!(run_all(&cfg(&["nope"], None, None)), Err(VerifyError::UnknownIdentity(_))));
}

#[test]
fn timings_only_on_request() {
    let mut c = cfg(&["intervals"], Some(2), Some(1));
    assert!(run_all(&c).unwrap()[0].runtime.is_none());
    c.timings = true;
    assert!(run_all(&c).unwrap()[0].runtime.is_some());
}

#[test]
fn reports_round_trip_through_json() {
    let reports = run_all(&cfg(&["frobenius"], Some(3), Some(1))).unwrap();
    let text = serde_json::to_string(&reports).unwrap();
    let back: Vec<VerificationReport> = serde_json::from_str(&text).unwrap();
    assert_eq!(back, reports);
    assert_eq!(reports[0].lhs, serde_json::json!({"S[111]": "13", "S[21]": "9", "S[3]": "1"}));
}

#[test]
fn every_name_has_jobs() {
    for name in IDENTITY_NAMES {
        let c = cfg(&[name], Some(2), Some(2));
        let reports = run_all(&c).unwrap();
        assert!(reports.iter().all(|r| r.pass), "{name}");
    }
}
