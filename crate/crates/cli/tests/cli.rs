use std::path::Path;
use std::process::{Command, Output};

use kschur::LinComb;

fn kschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kschur")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn core_conversions() {
    let out = kschur(&["core", "to-core", "--k", "3", "3,2,1,1,1"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let core = stdout(&out).trim().to_string();
    let back = kschur(&["core", "to-partition", "--k", "3", &core]);
    assert_eq!(stdout(&back).trim(), "3,2,1,1,1");
}

#[test]
fn expand_methods_agree() {
    let args = ["expand", "--k", "4", "--lambda", "2,2,2,1", "--format", "json"];
    let mut results = Vec::new();
    for method in ["corollary", "oracle"] {
        let out = kschur(&[&args[..], &["--method", method]].concat());
        assert!(out.status.success(), "{}", stderr(&out));
        results.push(LinComb::from_json(stdout(&out).trim()).unwrap());
    }
    assert_eq!(results[0], results[1]);

    let rec = kschur(&["expand", "--k", "4", "--lambda", "2,2,2,1", "--method", "recursion"]);
    assert_eq!(stdout(&rec).trim(), "s4(2,2,2,1)");

    let checked = kschur(&["expand", "--k", "3", "--lambda", "3,2,1,1", "--check"]);
    assert!(checked.status.success(), "{}", stderr(&checked));
    assert!(stderr(&checked).contains("check passed"));
}

#[test]
fn output_is_deterministic() {
    let args = ["expand", "--k", "5", "--lambda", "3,2,2,1", "--method", "corollary"];
    let first = kschur(&args);
    for _ in 0..3 {
        assert_eq!(kschur(&args).stdout, first.stdout);
    }
}

#[test]
fn json_round_trips_through_the_library() {
    let out = kschur(&["pieri", "--k", "6", "--ell", "4", "--lambda", "4,3,2,2,2,1", "--format", "json"]);
    let text = stdout(&out);
    let f = LinComb::from_json(text.trim()).unwrap();
    assert_eq!(f.len(), 5);
    assert_eq!(f.to_json(), text.trim());
}

#[test]
fn tableaux_count_and_listing() {
    let count = kschur(&["tableaux", "--k", "3", "--shape-core", "8,5,2,1", "--weight", "1,3,1,2,1,1", "--count"]);
    assert_eq!(stdout(&count).trim(), "3");
    let listing = kschur(&["tableaux", "--k", "3", "--shape-core", "8,5,2,1", "--weight", "1,3,1,2,1,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&listing).trim()).unwrap();
    assert_eq!(v["count"], 3);
    assert_eq!(v["tableaux"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_reports_every_suite() {
    let out = kschur(&["verify", "--k", "3", "--max-degree", "5", "--jobs", "2"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    for suite in ["bijection", "pieri", "strips", "recursion", "involution", "oracle"] {
        assert!(text.lines().any(|l| l.starts_with(suite) && l.ends_with(" 0 failed")), "{text}");
    }
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        &["expand", "--k", "3", "--lambda", "4,1"][..],
        &["core", "to-partition", "--k", "2", "2,1"],
        &["pieri", "--k", "3", "--ell", "4", "--lambda", "1"],
        &["tableaux", "--k", "3", "--shape-core", "8,5,2,1", "--weight", "1,1"],
        &["verify", "--k", "2", "--max-degree", "3", "--suite", "everything"],
        &["expand", "--k", "3"],
    ] {
        let out = kschur(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
    }
}

fn cache_round_trip(path: &Path) {
    let path = path.to_str().unwrap();
    let args = ["--cache", path, "expand", "--k", "3", "--lambda", "2,2,1", "--method", "oracle"];
    let first = kschur(&args);
    assert!(first.status.success(), "{}", stderr(&first));
    let second = kschur(&args);
    assert!(stderr(&second).contains("loaded 1 matrices"), "{}", stderr(&second));
    assert_eq!(first.stdout, second.stdout);

    std::fs::write(path, "garbage").unwrap();
    let third = kschur(&args);
    assert!(third.status.success());
    assert!(stderr(&third).contains("ignoring cache"));
    assert_eq!(first.stdout, third.stdout);
}

#[test]
fn cache_file_is_reused_and_corruption_is_tolerated() {
    let dir = tempfile::tempdir().unwrap();
    cache_round_trip(&dir.path().join("kostka.json"));
}
