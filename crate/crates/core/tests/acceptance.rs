//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test --release -p origami-core --test acceptance -- --nocapture`.

use origami_core::verify::*;

fn report(criterion: &str, results: &[CheckResult]) {
    let mut all = true;
    for r in results {
        println!(
            "[{}] {criterion} :: {} — {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.details
        );
        all &= r.passed;
    }
    assert!(all, "criterion {criterion} failed");
}

#[test]
fn criterion_01_golden_butterfly_h2() {
    let results = golden_suite();
    report("1 golden H(2)", &results[0..1]);
}

#[test]
fn criterion_02_golden_butterfly_h4() {
    let results = golden_suite();
    report("2 golden H(4)", &results[1..2]);
}

#[test]
fn criterion_03_golden_butterfly_h6() {
    let results = golden_suite();
    report("3 golden H(6)", &results[2..3]);
}

#[test]
fn criterion_04_orbit_cardinalities() {
    report("4 orbit cardinalities", &cardinality_suite());
}

#[test]
fn criterion_05_hlk_constancy_and_tables() {
    report("5 HLK invariants", &hlk_suite());
}

#[test]
fn criterion_06_component_structure() {
    report("6 component structure", &components_suite());
}

#[test]
fn criterion_07_reduction_complexity() {
    report("7 reduction complexity", &reduction_suite());
}

#[test]
fn criterion_08_commutation_soundness() {
    report("8 commutation", &commutation_suite());
}

#[test]
fn criterion_09_hl_algorithm() {
    report("9 HL algorithm", &hl_suite());
}

#[test]
fn criterion_10_diameter_bound() {
    let (results, records) = bounds_suite(10.0);
    assert!(!records.is_empty());
    report("10 diameter bound", &results);
}

#[test]
fn criterion_11_cross_component_h6() {
    let results = golden_suite();
    report("11 cross-component H(6)", &results[3..5]);
}

#[test]
fn supporting_census_and_orbit_consistency() {
    report("census coverage", &census_suite());
    report("orbit consistency", &orbit_consistency_suite());
}
