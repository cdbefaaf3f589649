//! End-to-end acceptance run: executes every named verification check at
//! full range and prints one PASS/FAIL line per numbered criterion.
//!
//! The run is expected to be all green except criterion 4: the stored
//! printed (q,t) tables are graded by coarea in `t`, while the defining
//! statistic is the longest-chain distance, and the two disagree from
//! size 3 on.  `tamari.qt-fixture-match` reports that discrepancy instead
//! of papering over it, so this test fails on exactly that check.

use fusscat_core::verify::{run_all, CheckOutcome, VerifyConfig};
use std::collections::BTreeMap;
use std::path::PathBuf;

const CRITERION_LABELS: [(u8, &str); 12] = [
    (1, "path counts"),
    (2, "interval counts"),
    (3, "Mobius range"),
    (4, "(q,t)-interval polynomials"),
    (5, "parking counts"),
    (6, "standardization blocks"),
    (7, "statistics examples"),
    (8, "pair counts"),
    (9, "symmetric-function kernel"),
    (10, "module characters"),
    (11, "series identities"),
    (12, "shuffle machinery"),
];

#[test]
fn acceptance() {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let config = VerifyConfig::new(fixtures);
    let outcomes = run_all(&config).expect("the verification run itself must not error");

    let mut by_criterion: BTreeMap<u8, Vec<&CheckOutcome>> = BTreeMap::new();
    for outcome in &outcomes {
        by_criterion.entry(outcome.criterion).or_default().push(outcome);
    }

    let mut failures: Vec<String> = Vec::new();
    for (number, label) in CRITERION_LABELS {
        let group = by_criterion.get(&number).map(Vec::as_slice).unwrap_or(&[]);
        assert!(!group.is_empty(), "criterion {number} has no checks registered");
        let failed: Vec<&&CheckOutcome> = group.iter().filter(|o| !o.passed).collect();
        if failed.is_empty() {
            let summaries: Vec<&str> = group.iter().map(|o| o.details.as_str()).collect();
            println!("criterion {number:2} PASS — {label}: {}", summaries.join("; "));
        } else {
            let problems: Vec<String> = failed
                .iter()
                .map(|o| format!("{}: {}", o.id, o.details))
                .collect();
            println!("criterion {number:2} FAIL — {label}: {}", problems.join("; "));
            failures.push(format!("criterion {number} ({label})"));
        }
    }

    assert!(
        failures.is_empty(),
        "failing criteria: {}",
        failures.join(", ")
    );
}
