//! The `steadycoh` binary end to end.

use std::path::PathBuf;
use std::process::{Command, Output};

use steadycoh_cli::{RawConfig, SweepSpec, HEADER};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_steadycoh")).args(args).output().expect("binary runs")
}

fn configs_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs")
}

const RESONANT: [&str; 10] = ["--omega", "30", "--xi", "2", "--delta", "0", "--ta", "10", "--tb", "60"];

fn point(extra: &[&str]) -> Vec<String> {
    let mut args = vec!["point"];
    args.extend(RESONANT);
    args.extend(extra);
    let out = bin(&args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), HEADER.join(","));
    let row: Vec<String> = lines.next().unwrap().split(',').map(String::from).collect();
    assert!(lines.next().is_none());
    row
}

fn column(row: &[String], name: &str) -> f64 {
    let k = HEADER.iter().position(|h| *h == name).unwrap();
    row[k].parse().unwrap()
}

#[test]
fn secular_point_has_no_coherence() {
    let row = point(&["--case", "A", "--secular", "on"]);
    assert_eq!(column(&row, "coherence_abs"), 0.0);
    assert_eq!(row[12], "");
}

#[test]
fn collective_point_has_no_coherence() {
    let row = point(&["--case", "D", "--secular", "off"]);
    assert!(column(&row, "coherence_abs") < 1e-10);
}

#[test]
fn nonsecular_point_matches_library_value() {
    let row = point(&["--case", "A", "--secular", "off"]);
    // 0.11023609706595544 to twelve significant digits
    assert_eq!(row[8], "1.10236097066e-1");
    let flux = column(&row, "flux12");
    assert!((flux + 8.0 * column(&row, "rho32_im")).abs() < 1e-11);
}

#[test]
fn validation_errors_exit_with_2() {
    for args in [
        vec!["point", "--case", "A", "--omega", "30", "--xi", "0", "--ta", "1", "--tb", "2"],
        vec!["point", "--case", "A", "--omega", "30", "--ta", "1", "--tb", "2"],
        vec!["sweep", "--case", "A", "--omega", "30", "--xi", "2", "--delta-t", "5", "--axis1", "Ta:1:2:1"],
        vec!["point", "--case", "E"],
        vec!["point", "--config", "/nonexistent/run.toml"],
    ] {
        let out = bin(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn all_points_failing_exits_with_3() {
    let out = bin(&[
        "sweep",
        "--case",
        "D",
        "--omega",
        "30",
        "--xi",
        "2",
        "--delta-t",
        "40",
        "--axis1",
        "Ta:1:5:3",
        "--degenerate",
        "error",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().skip(1).all(|l| l.contains("null space has dimension 2")));
    assert!(String::from_utf8_lossy(&out.stderr).contains("3 of 3 points failed"));
}

#[test]
fn sweep_output_is_independent_of_thread_count() {
    let dir = tempfile::tempdir().unwrap();
    let run = |threads: &str, name: &str| {
        let path = dir.path().join(name);
        let out = bin(&[
            "sweep",
            "--config",
            configs_dir().join("fig4.toml").to_str().unwrap(),
            "--axis1",
            "DeltaT:0:100:13",
            "--axis2",
            "Ta:0.1:20:11",
            "--threads",
            threads,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        std::fs::read(path).unwrap()
    };
    let one = run("1", "one.csv");
    assert_eq!(one, run("4", "four.csv"));
    assert_eq!(one, run("1", "again.csv"));
    assert_eq!(String::from_utf8(one).unwrap().lines().count(), 1 + 13 * 11);
}

#[test]
fn flags_override_config_file() {
    // `point` drops the file's axes and takes the swept quantities from flags
    let out = bin(&[
        "point",
        "--config",
        configs_dir().join("fig3.toml").to_str().unwrap(),
        "--ta",
        "10",
        "--tb",
        "60",
        "--outputs",
        "coherence_abs",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().nth(1).unwrap().split(',').nth(8), Some("1.10236097066e-1"));

    let out = bin(&[
        "sweep",
        "--config",
        configs_dir().join("fig3.toml").to_str().unwrap(),
        "--axis1",
        "DeltaT:50:60:2",
        "--axis2",
        "Ta:10:11:2",
        "--secular",
        "on",
        "--outputs",
        "coherence_abs",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let first: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(first[..3], ["5.00000000000e1", "1.00000000000e1", ""]);
    assert_eq!(first[8], "0.00000000000e0");
}

#[test]
fn shipped_configs_are_valid() {
    let mut seen = 0;
    for entry in std::fs::read_dir(configs_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "toml") {
            let spec = SweepSpec::try_from(RawConfig::from_file(&path).unwrap())
                .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            assert!(spec.axis1.is_some(), "{}", path.display());
            seen += 1;
        }
    }
    assert_eq!(seen, 6);
}
