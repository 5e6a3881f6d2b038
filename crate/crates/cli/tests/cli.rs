//! End-to-end tests of the `ke` binary.

use std::process::{Command, Output};

use ke_cli::{
    EnumerationReport, HomologyReport, TruncationReport, VerifyReport, ZetaReport, SCHEMA,
};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn ke(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ke"))
        .args(args)
        .env_remove("KE_SWEEP_BOUND")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Parses the JSON output and checks that rendering the parsed value reproduces it.
fn round_trip<T: DeserializeOwned + Serialize>(o: &Output) -> T {
    let text = stdout(o);
    let value: T = serde_json::from_str(&text).expect("output matches the schema");
    assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", text);
    value
}

#[test]
fn running_example_agrees_on_all_routes() {
    let o = ke(&[
        "homology", "--family", "c", "--lam", "1", "--d", "1", "--k", "1", "--route", "all",
        "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: HomologyReport = round_trip(&o);
    assert_eq!(report.schema, SCHEMA);
    assert!(report.agree);
    assert_eq!(report.routes.len(), 3);
    for h in report.routes.values() {
        assert_eq!(h.summands.len(), 1);
        assert_eq!(h.summands[0].weight, report.routes["g"].summands[0].weight);
    }
    assert_eq!(
        report.routes["g"].summands[0]
            .mu
            .as_ref()
            .unwrap()
            .to_string(),
        "(1,1,1)"
    );
}

#[test]
fn homology_with_window_adds_finite_paths() {
    let o = ke(&[
        "homology", "--family", "c", "--lam", "1", "--d", "1", "--k", "1", "--n", "4", "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: HomologyReport = round_trip(&o);
    assert!(report.agree);
    assert!(report.routes.contains_key("truncation") && report.routes.contains_key("direct"));
    let o = ke(&[
        "homology", "--family", "a", "--lam", "1|1", "--d", "2", "--k", "2", "--route", "enright",
        "--m", "2", "--n", "2",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("agree: true"));
}

#[test]
fn enumerate_weyl_counts() {
    let o = ke(&[
        "enumerate-weyl",
        "--family",
        "a",
        "--k",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: EnumerationReport = round_trip(&o);
    assert_eq!(report.count, 3);
    assert_eq!(report.elements.len(), 3);
    let o = ke(&["enumerate-weyl", "--family", "d", "--k", "6"]);
    assert!(stdout(&o).starts_with("W0(d, k=6): 4 elements"));
}

#[test]
fn zeta_example() {
    let o = ke(&["zeta", "--family", "c", "--lam", "2,1", "--d", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("ζ head: (-1,-3)"), "{text}");
    assert!(text.contains("ζ̄ head: (4,2)"), "{text}");
    assert!(text.contains("J = ℕ ∖ {1,2,3,5,7}"), "{text}");
    assert!(text.contains("J⁰ = ℕ ∖ {1,2,5,7}"), "{text}");
    let o = ke(&[
        "zeta", "--family", "a", "--lam", "1|1", "--d", "2", "--format", "json",
    ]);
    let report: ZetaReport = round_trip(&o);
    assert_eq!(report.data.label.to_string(), "(a, ((1), (1)), 2)");
}

#[test]
fn truncate_reports_survivors() {
    let o = ke(&[
        "truncate", "--family", "c", "--lam", "1", "--d", "1", "--n", "2", "--k", "1", "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: TruncationReport = round_trip(&o);
    assert_eq!(report.candidates.len(), 1);
    assert!(!report.candidates[0].kept);
    assert!(report.truncation.is_empty() && report.agree);
}

#[test]
fn generic_regime_truncation() {
    let o = ke(&[
        "truncate", "--family", "d", "--lam", "", "--d", "5/2", "--n", "3", "--k", "1",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(
        text.contains("Generic") && text.contains("agree: true"),
        "{text}"
    );
}

#[test]
fn input_errors_exit_with_two_and_name_the_field() {
    let cases: [(&[&str], &str); 6] = [
        (
            &["homology", "--family", "x", "--d", "1", "--k", "1"],
            "family",
        ),
        (
            &[
                "homology", "--family", "c", "--lam", "1", "--d", "1/3", "--k", "1",
            ],
            "d",
        ),
        (
            &[
                "homology", "--family", "c", "--lam", "1,x", "--d", "1", "--k", "1",
            ],
            "lam",
        ),
        (
            &[
                "homology", "--family", "c", "--lam", "1", "--d", "1", "--k", "1", "--route",
                "enright",
            ],
            "n",
        ),
        (
            &[
                "homology", "--family", "c", "--lam", "1,1", "--d", "1", "--k", "0",
            ],
            "D(g)",
        ),
        (
            &["homology", "--family", "c", "--lam", "1", "--d", "1"],
            "--k",
        ),
    ];
    for (args, needle) in cases {
        let o = ke(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(needle), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn verify_quick_passes_and_is_deterministic() {
    let first = ke(&["verify", "--quick", "--format", "json"]);
    assert_eq!(first.status.code(), Some(0), "{}", stdout(&first));
    let report: VerifyReport = round_trip(&first);
    assert!(report.passed);
    assert_eq!(report.criteria.len(), 8);
    let second = ke(&["verify", "--quick", "--format", "json", "--sequential"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn sweep_bound_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_ke"))
        .args(["verify", "--quick", "--format", "json"])
        .env("KE_SWEEP_BOUND", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let report: VerifyReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report.config.max_size, 2);
    let o = Command::new(env!("CARGO_BIN_EXE_ke"))
        .args(["verify", "--quick"])
        .env("KE_SWEEP_BOUND", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("KE_SWEEP_BOUND"));
}
