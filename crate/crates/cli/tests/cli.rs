use std::path::PathBuf;
use std::process::{Command, Output};

use fatpoint::config::{builtin, load_config, BUILTINS};
use serde_json::Value;

fn config(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../configs")
        .join(name)
        .display()
        .to_string()
}

fn fatpoint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fatpoint")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn dim_reports() {
    let out = fatpoint(&["dim", &config("b3.json"), "--degree", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["command"], "dim");
    assert_eq!(v["result"]["system"]["vdim_actual"], 6);
    assert!(v.get("elapsed_ms").is_none());

    let out = fatpoint(&["dim", &config("empty.json"), "--degree", "1", "--timing"]);
    let v = json(&out);
    assert_eq!(v["result"]["system"]["vdim_actual"], 3);
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn text_output() {
    let out = fatpoint(&["--text", "unexpected", &config("b3.json"), "--degree", "4", "--mult", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("UNEXPECTED (vdim 1, edim -1)"), "{text}");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(fatpoint(&["dim", &config("b3.json")]).status.code(), Some(1));
    assert_eq!(fatpoint(&["dim", "/nonexistent.json", "--degree", "2"]).status.code(), Some(1));
    assert_eq!(fatpoint(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(fatpoint(&["export-config", "--builtin", "nope"]).status.code(), Some(1));
    assert_eq!(fatpoint(&["--help"]).status.code(), Some(0));
    assert_eq!(fatpoint(&["--version"]).status.code(), Some(0));
}

#[test]
fn too_few_trials_is_unstable() {
    let out = fatpoint(&["unexpected", &config("b3.json"), "--degree", "4", "--mult", "3", "--trials", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let out = fatpoint(&["indices", &config("b3.json"), "--jmax", "3", "--trials", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn indices_of_b3() {
    let out = fatpoint(&["indices", &config("b3.json"), "--jmax", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let idx = &v["result"]["indices"];
    assert_eq!(idx["multiplicity_index"]["found"], true);
    assert_eq!(idx["multiplicity_index"]["value"], 3);
}

#[test]
fn large_syzygy_inputs_are_refused() {
    let out = fatpoint(&["syzygy", &config("fermat_w.json")]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("error"), "{err}");
    assert_eq!(fatpoint(&["syzygy", &config("b3.json")]).status.code(), Some(1));
}

#[test]
fn verify_single_section() {
    let out = fatpoint(&["verify-paper", "--section", "b3", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["failed"], 0);
    assert!(v["result"]["sections"]["b3"].is_object());
}

#[test]
fn seeds_change_reports() {
    let args = |seed: &'static str| ["unexpected", "", "--degree", "4", "--mult", "3", "--seed", seed];
    let path = config("b3.json");
    let run = |seed| {
        let mut a = args(seed);
        a[1] = &path;
        fatpoint(&a).stdout
    };
    assert_eq!(run("5"), run("5"));
    assert_ne!(run("5"), run("6"));
}

#[test]
fn shipped_configs_are_canonical() {
    for name in BUILTINS {
        let path = config(&format!("{name}.json"));
        let on_disk = std::fs::read_to_string(&path).unwrap();
        let out = fatpoint(&["export-config", "--builtin", name]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(String::from_utf8(out.stdout).unwrap(), on_disk, "{name}");
        assert_eq!(load_config(std::path::Path::new(&path)).unwrap(), builtin(name).unwrap());
    }
}

#[test]
fn export_round_trip_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let second = dir.path().join("second.json");
    let out = fatpoint(&["export-config", &config("fermat_w.json"), "-o", first.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    fatpoint(&["export-config", first.to_str().unwrap(), "-o", second.to_str().unwrap()]);
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"schema": 1, "ambient_dim": 2, "field": "rational", "points": [{"coords": ["1", "w", "0"]}]}"#)
        .unwrap();
    assert_eq!(fatpoint(&["dim", bad.to_str().unwrap(), "--degree", "2"]).status.code(), Some(1));
}
