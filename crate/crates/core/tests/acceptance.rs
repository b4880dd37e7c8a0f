//! Full verification battery.  Each criterion prints one line with its
//! outcome and timing; the test fails if any criterion fails.

use hecke_core::suite::run_suite;

#[test]
fn all_criteria_pass() {
    let results = run_suite();
    assert_eq!(results.len(), 12);
    let mut failed = Vec::new();
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("{} {:<40} {:>7} ms  {}", status, r.name, r.millis, r.detail);
        if !r.passed {
            failed.push(format!("{}: {}", r.name, r.detail));
        }
    }
    assert!(failed.is_empty(), "failed criteria:\n{}", failed.join("\n"));
}
