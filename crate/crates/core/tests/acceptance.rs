//! Runs every acceptance criterion at full size and prints one line per criterion.

use ke_core::parallel::Execution;
use ke_core::verify::{run_all_timed, SweepConfig};

#[test]
fn acceptance_criteria() {
    let results = run_all_timed(&SweepConfig::FULL, Execution::Parallel);
    for (report, took) in &results {
        println!("{report} [{} ms]", took.as_millis());
    }
    let failed: Vec<u32> = results
        .iter()
        .filter(|(r, _)| !r.passed)
        .map(|(r, _)| r.id)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
