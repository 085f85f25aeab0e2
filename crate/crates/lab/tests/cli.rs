use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use shephard_core::group::builtin;
use shephard_lab::catalog_file::load_catalog;
use shephard_lab::checks::CHECKS;
use shephard_lab::report::{Status, VerificationReport};

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shephard-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn shipped_catalog() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../catalog")
}

#[test]
fn list_shows_metadata() {
    let o = lab(&["list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("3[3]3  order 24  degrees 4,6"));
    assert_eq!(text.lines().count(), builtin().len());
}

#[test]
fn list_filters() {
    let o = lab(&["list", "xyz"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "");
    let o = lab(&["list", "--family", "wreath"]);
    let text = stdout(&o);
    assert!(!text.is_empty());
    assert!(text.lines().all(|l| l.contains("family wreath")));
}

#[test]
fn verify_exit_codes() {
    let o = lab(&["verify", "B2", "--check", "sign-graded,sign-ungraded"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("class of element"));

    let o = lab(&["verify", "3[2]3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("braid length"));

    let o = lab(&["verify", "B2", "--check", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));

    let o = lab(&["verify", "Z9"]);
    assert_eq!(o.status.code(), Some(2));

    let o = lab(&["verify", "G(3,1,2)", "--element-cap", "10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn every_listed_check_runs_alone() {
    let o = lab(&["verify", "--list-checks"]);
    let listed: Vec<String> = stdout(&o)
        .lines()
        .map(|l| l.split_whitespace().next().unwrap().to_string())
        .collect();
    assert_eq!(listed.len(), CHECKS.len());
    for id in listed {
        let o = lab(&["verify", "G(2,1,2)", "--check", &id, "--format", "json"]);
        assert!(o.status.success(), "{id}");
        let r = VerificationReport::from_json(&stdout(&o)).unwrap();
        assert_eq!(r.checks.len(), 1);
        assert_eq!(r.checks[0].id, id);
        assert_eq!(r.checks[0].status, Status::Pass);
    }
}

#[test]
fn json_reports_are_reproducible() {
    let args = [
        "verify",
        "G(3,1,2)",
        "--check",
        "all",
        "--seed",
        "3",
        "--format",
        "json",
        "--no-timing",
    ];
    let a = stdout(&lab(&args));
    let b = stdout(&lab(&args));
    assert_eq!(a, b);
    let r = VerificationReport::from_json(&a).unwrap();
    assert_eq!(r.schema, 1);
    assert_eq!(r.to_json(), a);
    assert!(r.passed());
}

#[test]
fn report_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = lab(&[
        "verify",
        "C3",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "");
    let r = VerificationReport::from_json(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(r.group, "C3");
}

#[test]
fn stretch_needs_flag() {
    let o = lab(&["verify", "3[3]3[3]3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn export_complex_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g4.txt");
    let o = lab(&["export-complex", "3[3]3", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(out).unwrap();
    assert_eq!(
        text.lines().filter(|l| l.starts_with("vertex ")).count(),
        16
    );
    assert_eq!(
        text.lines().filter(|l| l.starts_with("face 1 ")).count(),
        24
    );
    assert!(text.ends_with("betti 0 9\n"));
}

#[test]
fn shipped_catalog_matches_builtin() {
    assert_eq!(load_catalog(&shipped_catalog()).unwrap(), builtin());
}

#[test]
fn dump_and_reload_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let o = lab(&["dump-catalog", "--out", dir.path().to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(load_catalog(dir.path()).unwrap(), builtin());
    let o = lab(&[
        "--catalog",
        dir.path().to_str().unwrap(),
        "verify",
        "C4",
        "--check",
        "presentation",
    ]);
    assert!(o.status.success());

    std::fs::write(dir.path().join("99-broken.toml"), "name = \"broken\"\n").unwrap();
    let o = lab(&["--catalog", dir.path().to_str().unwrap(), "list"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("99-broken.toml"));
}
