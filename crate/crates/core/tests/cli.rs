use std::path::Path;

use nodalgaps::cli::{run_sweep, run_with, Report, SweepCheck, SweepSpec};
use nodalgaps::constructions::{collinear_config, pencil};
use nodalgaps::exactmath::q;
use nodalgaps::semigroups::MaxVariant;
use serde_json::json;

/// Exit code, standard output and standard error of one invocation.
fn invoke(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(
        std::iter::once("nodalgaps").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn exit(args: &[&str]) -> i32 {
    invoke(args).0
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn exit_code_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(
        dir.path(),
        "good.json",
        &collinear_config(5, 2, true, 0).unwrap().to_json(),
    );
    let degenerate = pencil(MaxVariant::Max, 5, 2, 0)
        .unwrap()
        .member_at(&q(1), &q(0))
        .unwrap();
    let bad = write(dir.path(), "bad.json", &degenerate.to_json());
    let junk = write(dir.path(), "junk.json", "{\"d\": 5");
    let empty_sweep = write(
        dir.path(),
        "sweep.json",
        r#"{"check": "pencil", "d": [6, 5], "delta": [1, 2]}"#,
    );

    let cases: &[(&[&str], i32)] = &[
        (
            &["semigroup", "--family", "n1", "--d", "6", "--delta", "2"],
            0,
        ),
        (
            &[
                "semigroup",
                "--family",
                "row",
                "--d",
                "6",
                "--delta",
                "3",
                "--row",
                "2",
            ],
            0,
        ),
        (
            &["semigroup", "--family", "row", "--d", "6", "--delta", "3"],
            2,
        ),
        (
            &[
                "semigroup",
                "--family",
                "row",
                "--d",
                "6",
                "--delta",
                "3",
                "--row",
                "9",
            ],
            2,
        ),
        (
            &["semigroup", "--family", "max", "--d", "2", "--delta", "1"],
            2,
        ),
        (&["semigroup", "--family", "bogus", "--d", "6"], 2),
        (&["table", "--d", "6"], 0),
        (&["table"], 2),
        (&["verify", "--config", &good], 0),
        (&["verify", "--config", &bad], 1),
        (&["verify", "--config", &junk], 2),
        (&["verify", "--config", "/nonexistent/cfg.json"], 2),
        (&["gaps", "--config", &good], 0),
        (&["gaps", "--config", &bad], 1),
        (&["classify", "--config", &good], 0),
        (
            &[
                "construct",
                "--kind",
                "lines",
                "--d",
                "5",
                "--delta",
                "3",
                "--seed",
                "1",
            ],
            0,
        ),
        (
            &[
                "construct",
                "--kind",
                "pencil-max",
                "--d",
                "6",
                "--delta",
                "3",
            ],
            2,
        ),
        (
            &[
                "construct",
                "--kind",
                "collinear",
                "--d",
                "5",
                "--delta",
                "2",
                "--include-p",
            ],
            0,
        ),
        (&["construct", "--certify-only", &good], 0),
        (&["construct", "--certify-only", &bad], 1),
        (&["construct", "--kind", "lines"], 2),
        (&["sweep", "--spec", &empty_sweep], 0),
        (&["sweep", "--spec", &junk], 2),
        (&["--version"], 0),
        (&["--help"], 0),
        (&[], 2),
    ];
    for (args, code) in cases {
        let (got, out, err) = invoke(args);
        assert_eq!(got, *code, "{args:?}: {err}");
        if got != 2 && !args.starts_with(&["--version"]) && !args.starts_with(&["--help"]) {
            let report: Report = serde_json::from_str(&out).unwrap();
            assert_eq!(report.command, args[0]);
        }
        if got == 2 && !args.is_empty() {
            assert!(
                err.contains("--") || err.contains("usage"),
                "{args:?}: {err}"
            );
        }
    }
}

#[test]
fn usage_errors_name_the_flag() {
    let (code, _, err) = invoke(&["semigroup", "--family", "max", "--d", "2", "--delta", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("--d 2"), "{err}");
    let (_, _, err) = invoke(&["semigroup", "--family", "row", "--d", "6", "--delta", "3"]);
    assert!(err.contains("--row"), "{err}");
}

#[test]
fn semigroup_report_contents() {
    let (code, out, _) = invoke(&["semigroup", "--family", "n1", "--d", "6", "--delta", "2"]);
    assert_eq!(code, 0);
    let report: Report = serde_json::from_str(&out).unwrap();
    assert_eq!(report.results["gaps"], json!([1, 2, 3, 4, 7, 8, 9, 13]));
    let (_, out, _) = invoke(&["table", "--d", "6"]);
    let report: Report = serde_json::from_str(&out).unwrap();
    let rows = report.results.as_array().unwrap();
    assert_eq!(rows.len(), 18);
    assert!(rows.iter().all(|r| r.get("condition").is_some()));
}

#[test]
fn uncertified_gaps_report_a_diagnostic() {
    let dir = tempfile::tempdir().unwrap();
    let degenerate = pencil(MaxVariant::Max, 5, 2, 0)
        .unwrap()
        .member_at(&q(1), &q(0))
        .unwrap();
    let bad = write(dir.path(), "bad.json", &degenerate.to_json());
    let (code, _, err) = invoke(&["gaps", "--config", &bad]);
    assert_eq!(code, 1);
    assert!(err.contains("not certified"), "{err}");
}

#[test]
fn replaying_seeds_reproduces_results() {
    let args = [
        "construct",
        "--kind",
        "pencil-max2",
        "--d",
        "4",
        "--delta",
        "2",
        "--seed",
        "5",
    ];
    let first: Report = serde_json::from_str(&invoke(&args).1).unwrap();
    let second: Report = serde_json::from_str(&invoke(&args).1).unwrap();
    assert_eq!(first.seeds, vec![5]);
    assert_eq!(first.results, second.results);
}

#[test]
fn report_round_trips() {
    let report = Report {
        command: "gaps".into(),
        inputs: json!({"config": "cfg.json", "seed": 4}),
        results: json!({"gaps": [1, 2, 3, 7], "row": "N^(2)_{d,2}"}),
        seeds: vec![4],
        wall_ms: 12,
        version: env!("CARGO_PKG_VERSION").into(),
    };
    let text = serde_json::to_string(&report).unwrap();
    assert_eq!(serde_json::from_str::<Report>(&text).unwrap(), report);
}

#[test]
fn sweep_spec_round_trips() {
    let spec: SweepSpec =
        serde_json::from_str(r#"{"check": "max-semigroup-iff", "d": [3, 20], "delta": [1, 9], "variants": ["max", "max2"]}"#)
            .unwrap();
    assert_eq!(spec.check, SweepCheck::MaxSemigroupIff);
    assert_eq!(spec.seeds, vec![0]);
    let back: SweepSpec = serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
    assert_eq!(back, spec);
}

#[test]
fn semigroup_sweep_matches_criterion_and_is_ordered() {
    let spec = SweepSpec {
        check: SweepCheck::MaxSemigroupIff,
        d: [3, 20],
        delta: Some([1, 9]),
        variants: vec![MaxVariant::Max, MaxVariant::Max2],
        seeds: vec![0],
        csv: None,
    };
    let cells = run_sweep(&spec);
    assert_eq!(cells.len(), 18 * 9 * 2);
    assert!(
        cells.iter().all(|c| c.verdict),
        "{:?}",
        cells.iter().find(|c| !c.verdict)
    );
    let keys: Vec<_> = cells
        .iter()
        .map(|c| (c.d, c.delta, c.variant.clone(), c.seed))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn sweep_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("cells.csv");
    let spec = json!({"check": "degeneration", "d": [4, 4], "seeds": [0, 1], "csv": csv});
    let spec_path = write(dir.path(), "spec.json", &spec.to_string());
    assert_eq!(exit(&["sweep", "--spec", &spec_path]), 0);
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "d,delta,variant,seed,verdict,gaps,weight,wall_ms"
    );
    // δ ranges over 0..=3 for quartics, two seeds each
    assert_eq!(lines.filter(|l| l.contains(",true,")).count(), 8);
}
