//! Driving the command-line frontend in-process and reading its JSON report.

use nodalgaps::cli::{run_with, Report};

fn main() {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let args = [
        "nodalgaps",
        "semigroup",
        "--family",
        "max2",
        "--d",
        "6",
        "--delta",
        "3",
    ];
    let code = run_with(args, &mut out, &mut err);
    let report: Report = serde_json::from_slice(&out).expect("valid report");
    println!(
        "exit {code}: {} gaps {}",
        report.command, report.results["gaps"]
    );

    // degrees below 3 are rejected as usage errors naming the flags
    err.clear();
    let code = run_with(
        [
            "nodalgaps",
            "semigroup",
            "--family",
            "max",
            "--d",
            "2",
            "--delta",
            "1",
        ],
        &mut Vec::new(),
        &mut err,
    );
    println!("exit {code}: {}", String::from_utf8_lossy(&err).trim());
}
