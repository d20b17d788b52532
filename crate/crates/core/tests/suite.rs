use std::collections::{BTreeMap, BTreeSet};

use fracdiff_core::verify::{analytic_only, family_names, run_identity_suite, Report, MANIFEST};

#[test]
fn suite_is_deterministic() {
    let sel: BTreeSet<String> = [
        "laplace_M",
        "series_forms",
        "finite_steady_state",
        "space_frac_reductions",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let a = Report::new(run_identity_suite(&sel, &BTreeMap::new()).unwrap());
    let b = Report::new(run_identity_suite(&sel, &BTreeMap::new()).unwrap());
    assert_eq!(a, b);
    assert!(a.all_passed());
}

#[test]
fn every_family_and_untested_statement_is_anchored() {
    assert_eq!(family_names().len(), MANIFEST.len());
    assert!(MANIFEST.iter().all(|f| !f.anchor.trim().is_empty()));
    let names: BTreeSet<String> = analytic_only().into_iter().map(|a| a.name).collect();
    assert!(names.contains("fourier_K_delta_term"));
}
