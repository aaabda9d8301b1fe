//! The acceptance gate: runs every verification criterion at its exact
//! tolerance and stated budget, printing one pass/fail line per criterion.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use hermitian_semigroups::verify::{criteria, run_criterion};

#[test]
fn all_criteria_pass() {
    let mut failures = Vec::new();
    for criterion in criteria() {
        let report = run_criterion(&criterion);
        println!("{}", report.line());
        if !report.passed {
            failures.push(report.line());
        }
    }
    assert!(
        failures.is_empty(),
        "failed criteria:\n{}",
        failures.join("\n")
    );
}
