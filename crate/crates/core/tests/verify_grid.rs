use acm_core::oracle::{verify_all, Limits};

#[test]
fn default_grid_has_no_failures() {
    let report = verify_all(Limits::default());
    assert!(report.passed(), "{:#?}", report.failures);
    assert!(report.checks_run > 10_000, "only {} checks", report.checks_run);
}
