//! End-to-end command-line tests: exit codes, the pinned JSON schema, DOT
//! output and cache behavior.

use std::path::PathBuf;
use std::process::{Command, Output};

fn itg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_itg"))
        .args(args)
        .env_remove("ITG_CACHE")
        .output()
        .expect("run itg")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn classify_exit_codes() {
    // success
    let ok = itg(&["classify", "--curve", "[1,-1,1,-1,-14]"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("label: T4^1"));
    // parse error
    let bad = itg(&["classify", "--curve", "[1,2,3]"]);
    assert_eq!(bad.status.code(), Some(2));
    let none = itg(&["classify"]);
    assert_eq!(none.status.code(), Some(2));
    // singular curve
    let sing = itg(&["classify", "--curve", "[0,0,0,0,0]"]);
    assert_eq!(sing.status.code(), Some(3));
    let sing2 = itg(&["classify", "--family", "Z7", "--t", "0"]);
    assert_eq!(sing2.status.code(), Some(3));
}

#[test]
fn classify_json_matches_golden_schema() {
    let out = itg(&["classify", "--curve", "[1,-1,1,-1,-14]", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = include_str!("golden/classify_17a.json");
    assert_eq!(stdout(&out).trim(), expected.trim());
    // parse(export(r)) round-trips
    let parsed: itg_cli::report::ClassReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(serde_json::to_string_pretty(&parsed).unwrap().trim(), expected.trim());
}

#[test]
fn classify_equation_and_j_inputs() {
    let eq = itg(&["classify", "--curve", "y^2=x^3-x"]);
    assert_eq!(eq.status.code(), Some(0));
    assert!(stdout(&eq).contains("shape: T4"));
    // j = -2^15 lies in the L2(11) table
    let j = itg(&["classify", "--j", "-32768"]);
    assert_eq!(j.status.code(), Some(0));
    let s = stdout(&j);
    assert!(s.contains("shape: L2(11)"), "{s}");
    assert!(s.contains("finiteness: finite"), "{s}");
    // family input
    let f = itg(&["classify", "--family", "Z12", "--t", "1/3"]);
    assert_eq!(f.status.code(), Some(0));
    assert!(stdout(&f).contains("label: S^1"));
}

#[test]
fn classify_dot_output() {
    let out = itg(&["classify", "--curve", "[1,-1,1,-1,-14]", "--dot"]);
    let dot = stdout(&out);
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches("--").count(), 3);
    assert_eq!(dot.matches("label=\"2\"").count(), 3);
    assert!(dot.contains("Z/2Z × Z/2Z"));
    // single-node graph
    let l1 = itg(&["classify", "--curve", "[0,0,0,6,1]", "--dot"]);
    let dot1 = stdout(&l1);
    assert!(dot1.contains("v0"));
    assert!(!dot1.contains("--") || dot1.matches("--").count() == 0);
}

#[test]
fn cache_round_trip_byte_identical() {
    let dir = std::env::temp_dir().join(format!("itg-cli-cache-{}", std::process::id()));
    let _ = std::fs::remove_file(&dir);
    let path: PathBuf = dir.clone();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_itg"))
            .args([
                "classify",
                "--curve",
                "[0,-1,1,0,0]",
                "--json",
                "--cache",
                path.to_str().unwrap(),
            ])
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(first.status.code(), Some(0));
    assert!(std::fs::metadata(&dir).is_ok(), "cache file created");
    let second = run();
    assert_eq!(first.stdout, second.stdout, "cache hit must be byte-identical");
    // the second run must not have grown the cache
    let len_after_two = std::fs::metadata(&dir).unwrap().len();
    let _ = run();
    assert_eq!(std::fs::metadata(&dir).unwrap().len(), len_after_two);
    let _ = std::fs::remove_file(&dir);
}

#[test]
fn predict_named_and_raw() {
    let named = itg(&["predict", "--named", "H_98e"]);
    assert_eq!(named.status.code(), Some(0));
    let s = stdout(&named);
    assert!(s.contains("predicted label: T6^1"), "{s}");
    assert!(s.contains("([2,4],[8],[4],[2,2],[2],[2])"), "{s}");
    // raw generators: B_7 at level 7
    let raw = itg(&[
        "predict", "--level", "7", "--gens", "1,1,0,1;1,0,0,3",
    ]);
    assert_eq!(raw.status.code(), Some(0));
    assert!(stdout(&raw).contains("([7],[1])"));
    // <B_7, -Id> flips the configuration
    let tw = itg(&[
        "predict", "--level", "7", "--gens", "1,1,0,1;1,0,0,3;6,0,0,6",
    ]);
    assert!(stdout(&tw).contains("([1],[1])"));
    assert!(stdout(&tw).contains("L2^2(7)"));
}

#[test]
fn predict_error_paths() {
    // non-invertible generator
    let bad = itg(&["predict", "--level", "4", "--gens", "2,0,0,1"]);
    assert_eq!(bad.status.code(), Some(2));
    // non-full-determinant image rejected
    let nfd = itg(&["predict", "--level", "5", "--gens", "1,0,0,1"]);
    assert_eq!(nfd.status.code(), Some(2));
    // unpaired flags
    let unpaired = itg(&["predict", "--level", "7"]);
    assert_eq!(unpaired.status.code(), Some(2));
    // unknown suite
    let vs = itg(&["verify", "nope"]);
    assert_eq!(vs.status.code(), Some(2));
}

#[test]
fn verify_lemmas_suite_passes() {
    let out = itg(&["verify", "lemmas"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(s.lines().filter(|l| l.starts_with("PASS")).count() >= 16);
    assert!(!s.contains("FAIL"));
}

#[test]
fn predict_composite_s_graph() {
    // full lift of B_4 at level 8 times B_3: the rational-12-torsion image
    // generators: B_4 lifted entrywise plus the kernel I + 4 E_ij
    let out = itg(&[
        "predict",
        "--level", "8",
        "--gens", "1,1,0,1;1,0,0,3;5,0,0,1;1,4,0,1;1,0,4,1;1,0,0,5",
        "--level", "3",
        "--gens", "1,1,0,1;1,0,0,2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(s.contains("predicted label: S^1"), "{s}");
    assert!(
        s.contains("([2,6],[2,2],[12],[4],[6],[2],[6],[2])"),
        "{s}"
    );
}
