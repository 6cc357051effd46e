//! CLI output against the files in `tests/golden`.

use std::process::Command;

fn run(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_alt-hecke"))
        .args(args)
        .env_remove("ALT_HECKE_CACHE")
        .output()
        .expect("binary runs");
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn tables_match_golden_json() {
    assert_eq!(
        run(&["table", "-n", "3"]),
        include_str!("golden/table_n3.json")
    );
    assert_eq!(
        run(&["table", "-n", "4"]),
        include_str!("golden/table_n4.json")
    );
    assert_eq!(
        run(&["table", "-n", "5", "--format", "json"]),
        include_str!("golden/table_n5.json")
    );
}

#[test]
fn table_n3_matches_golden_csv() {
    assert_eq!(
        run(&["table", "-n", "3", "--format", "csv"]),
        include_str!("golden/table_n3.csv")
    );
}

#[test]
fn first_example_matches_golden() {
    let out = run(&["tau-char", "--shape", "3,3,3", "--word", "8,5,1,2,3,4,6,7"]);
    assert_eq!(out, include_str!("golden/first_example.json"));
}

#[test]
fn base_case_pretty_rendering() {
    let out = run(&[
        "--format", "pretty", "tau-char", "--shape", "2,1", "--word", "1,2",
    ]);
    assert!(
        out.starts_with("χ^(2,1)(T[1,2]τ) = √-1·q^(-3/2)·√[3]\n"),
        "{out}"
    );
    assert!(out.contains("meta.convention = oracle"));
}

#[test]
fn literal_convention_is_tagged_and_flips_odd_m() {
    let oracle = run(&[
        "--format", "pretty", "tau-char", "--shape", "2,1", "--word", "1,2",
    ]);
    let literal = run(&[
        "--format",
        "pretty",
        "--convention",
        "paper",
        "tau-char",
        "--shape",
        "2,1",
        "--word",
        "1,2",
    ]);
    assert!(literal.contains("meta.convention = paper"));
    assert!(
        literal.starts_with("χ^(2,1)(T[1,2]τ) = -√-1·q^(-3/2)·√[3]\n"),
        "{literal}"
    );
    assert_ne!(oracle, literal);
}

#[test]
fn resource_guard_and_bad_flags_fail() {
    let bin = env!("CARGO_BIN_EXE_alt-hecke");
    let guarded = Command::new(bin)
        .args(["table", "-n", "13"])
        .output()
        .unwrap();
    assert!(!guarded.status.success());
    assert!(String::from_utf8_lossy(&guarded.stderr).contains("--force"));
    let bad = Command::new(bin)
        .args(["table", "--bogus"])
        .output()
        .unwrap();
    assert!(!bad.status.success());
    assert!(String::from_utf8_lossy(&bad.stderr).contains("Usage"));
}

#[test]
fn verify_greene_suite_passes() {
    let out = run(&[
        "--format", "pretty", "verify", "--suite", "greene", "--cases", "200", "--seed", "7",
    ]);
    assert!(
        out.starts_with("PASS greene: 200 checks, 0 failed"),
        "{out}"
    );
}

#[test]
fn cache_directory_round_trips() {
    let dir = std::env::temp_dir().join(format!("alt-hecke-cache-{}", std::process::id()));
    let run_cached = || {
        Command::new(env!("CARGO_BIN_EXE_alt-hecke"))
            .args(["basis", "-n", "3", "--which", "b"])
            .env("ALT_HECKE_CACHE", &dir)
            .output()
            .unwrap()
    };
    let first = run_cached();
    assert!(dir.join("basis-B-n3.json").exists());
    let second = run_cached();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, run(&["basis", "-n", "3"]).into_bytes());
    std::fs::remove_dir_all(&dir).unwrap();
}
