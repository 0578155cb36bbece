//! Pins the JSON output of one invocation per subcommand. Set
//! `UPDATE_GOLDEN=1` to rewrite the files after an intended change.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

mod common;

use common::CASES;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_infcalc"))
        .args(args)
        .args(["--format", "json"])
        .output()
        .expect("binary runs")
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

#[test]
fn outputs_match_golden_files() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, args) in CASES {
        let out = run(args);
        let text = String::from_utf8(out.stdout).unwrap();
        let path = golden_path(name);
        if update {
            fs::create_dir_all(path.parent().unwrap()).unwrap();
            fs::write(&path, &text).unwrap();
            continue;
        }
        let want = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        assert_eq!(text, want, "{name}");
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    for (name, args) in CASES {
        assert_eq!(run(args).stdout, run(args).stdout, "{name}");
    }
}

#[test]
fn envelope_shape_and_exit_codes() {
    for (name, args) in CASES {
        let out = run(args);
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let ok = v["status"] == "ok";
        assert_eq!(ok, v.get("error").is_none(), "{name}");
        assert_eq!(out.status.code(), Some(if ok { 0 } else { 1 }), "{name}");
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(&keys[..2], ["command", "inputs"], "{name}");
        assert_eq!(v["command"], format!("{} {}", args[0], args[1]), "{name}");
    }
    let usage = Command::new(env!("CARGO_BIN_EXE_infcalc"))
        .args(["fermat", "derive"])
        .output()
        .unwrap();
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn text_is_the_default_format() {
    let out = Command::new(env!("CARGO_BIN_EXE_infcalc"))
        .args(["fermat", "subtangent", "--curve", "y = x^2", "--at", "3"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("result.r: 9\n"), "{text}");
    assert!(text.ends_with("status: ok\n"));
}
