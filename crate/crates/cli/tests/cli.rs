use std::process::{Command, Output};

use hookstat_cli::schema::{
    CellStatus, CoreReport, CoresCountReport, DecomposeReport, HooksReport, NoCheckReport,
    TableReport, VerifyReport,
};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn hookstat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hookstat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = hookstat(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Parses into `T` and checks re-serialising gives back the same document.
fn round_trip<T: DeserializeOwned + Serialize>(args: &[&str]) -> T {
    let text = stdout(args);
    let parsed: T = serde_json::from_str(&text).unwrap();
    let original: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_value(&parsed).unwrap(), original, "{args:?}");
    parsed
}

#[test]
fn hooks_text() {
    let out = stdout(&["hooks", "3,2,1"]);
    assert!(out.starts_with("5 3 1\n3 1\n1\n"), "{out}");
    assert!(out.contains("h_2 = 0"));
    assert!(out.contains("h_3 = 2"));
    assert!(out.contains("dim = 16"));
}

#[test]
fn hooks_json() {
    let report: HooksReport = round_trip(&["hooks", "3,2,1", "--t", "3", "--format", "json"]);
    assert_eq!(report.rows, vec![vec![5, 3, 1], vec![3, 1], vec![1]]);
    assert_eq!(report.multiset, vec![5, 3, 3, 1, 1, 1]);
    assert_eq!(report.t_hooks.len(), 1);
    assert_eq!((report.t_hooks[0].t, report.t_hooks[0].count), (3, 2));
    assert_eq!(report.dimension, "16");
}

#[test]
fn decompose_json() {
    let report: DecomposeReport = round_trip(&["decompose", "5,3,2,1", "--t", "3"]);
    assert_eq!(report.core, vec![2]);
    assert_eq!(report.quotient, vec![vec![], vec![1, 1], vec![1]]);
    assert_eq!(report.t_hooks, 3);
    assert!(report.holds);
    assert_eq!(report.check, "11 = 2 + 3·3");
}

#[test]
fn core_json() {
    let report: CoreReport = round_trip(&["core", "5,3,2,1", "--t", "3", "--format", "json"]);
    assert_eq!(report.core, vec![2]);
    assert_eq!(report.core_size, 2);
    assert_eq!(report.canonical_abacus, vec![0, 0, 1]);
    assert_eq!(report.removed_hooks, 3);
}

#[test]
fn cores_count_methods_agree() {
    let report: CoresCountReport = round_trip(&[
        "cores-count",
        "--t",
        "3",
        "--n",
        "10",
        "--witnesses",
        "--format",
        "json",
    ]);
    assert_eq!(report.count, "2");
    assert!(report.agree);
    assert!(report.methods.iter().all(|m| m.count == "2"));
    assert_eq!(report.witnesses.unwrap().len(), 2);
}

#[test]
fn table_csv_header_and_rows() {
    let out = stdout(&["table", "--n", "300"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines,
        [
            "n,a,count,proportion",
            "300,0,6798149530273048,0.7347",
            "300,1,2454933406450554,0.2653",
            "300,2,0,0.0000",
        ]
    );
}

#[test]
fn table_json_counts_sum_to_partition_number() {
    let report: TableReport = round_trip(&["table", "--n", "100", "--format", "json"]);
    let total: u64 = report
        .rows
        .iter()
        .map(|r| r.count.parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 190_569_292);
}

#[test]
fn verify_sweeps_exit_zero() {
    for theorem in ["part1", "part2"] {
        let report: VerifyReport =
            round_trip(&["verify", theorem, "--nmax", "200", "--format", "json"]);
        assert!(report.verified);
        assert!(!report.cells.is_empty());
        assert!(report
            .cells
            .iter()
            .all(|c| c.status == CellStatus::Verified));
    }
}

#[test]
fn verify_identity_checks() {
    for theorem in ["no-identity", "core-formulas"] {
        let report: VerifyReport = round_trip(&[
            "verify", theorem, "--nmax", "60", "--mmax", "6", "--format", "json",
        ]);
        assert!(report.verified, "{theorem}");
        assert!(report.checks.iter().all(|c| c.passed), "{theorem}");
    }
}

#[test]
fn no_check_specializations() {
    let report: NoCheckReport = round_trip(&["no-check", "--mmax", "6", "--format", "json"]);
    assert!(report.verified);
    assert_eq!(report.degrees.len(), 7);
    assert_eq!(report.z2, ["1", "-1", "-1", "0", "0", "1", "0"]);
    assert_eq!(report.z4, ["1", "-3", "0", "5", "0", "0", "-7"]);
}

#[test]
fn output_is_independent_of_thread_count() {
    let args = ["verify", "part1", "--nmax", "300", "--format", "json"];
    let default = stdout(&args);
    let mut single = args.to_vec();
    single.extend(["--threads", "1"]);
    assert_eq!(stdout(&single), default);
    assert_eq!(stdout(&args), default);
}

#[test]
fn out_writes_file() {
    let dir = std::env::temp_dir().join(format!("hookstat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let printed = stdout(&["table", "--n", "300"]);
    let silent = stdout(&["table", "--n", "300", "--out", path.to_str().unwrap()]);
    assert!(silent.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), printed);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["hooks", "3,4"],
        &["hooks", "a,b"],
        &["decompose", "3,2", "--t", "1"],
        &["decompose", "3,2", "--t", "2", "--format", "csv"],
        &["verify", "part1", "--ell", "4"],
        &["verify", "part2", "--ell", "7"],
        &["verify", "part1", "--a1", "1"],
        &["verify", "no-identity", "--mmax", "13"],
        &["table", "--threads", "0"],
        &["frobnicate"],
        &[],
    ];
    for args in cases {
        let out = hookstat(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn large_guard_can_be_lifted() {
    let out = hookstat(&["no-check", "--mmax", "13", "--allow-large"]);
    assert_eq!(out.status.code(), Some(0));
}
