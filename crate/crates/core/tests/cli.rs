use std::io::Write;
use std::process::Command;

use lienil::catalog;
use lienil::cli::render;
use serde_json::Value;

fn lienil(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lienil"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn fixture(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".lie").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn every_command_runs_on_gl2() {
    let f = fixture(&render(&catalog::gl2()));
    let path = f.path().to_str().unwrap();
    for args in [
        vec!["validate", path],
        vec!["info", path],
        vec!["radical", path],
        vec!["killing", path],
        vec!["nilpotent", path, "--element", "0,1,0,0"],
        vec!["oracle", path, "--element", "1,0,0,1", "--witness"],
        vec!["crosscheck", path, "--element", "0,1,0,0", "--depth", "1"],
    ] {
        let (code, text) = lienil(&args);
        assert_eq!(code, 0, "{args:?}: {text}");
        let mut json_args = args.clone();
        json_args.extend(["--format", "json"]);
        let (code, json) = lienil(&json_args);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(text, lienil::cli::flatten(&v), "{args:?}");
    }
}

#[test]
fn oracle_witness_payload() {
    let f = fixture(&render(&catalog::gl2()));
    let path = f.path().to_str().unwrap();
    let (_, json) = lienil(&[
        "oracle",
        path,
        "--element",
        "1,0,0,1",
        "--witness",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["result"]["answer"], false);
    assert_eq!(v["result"]["in_derived"], false);
    assert_eq!(v["witness"]["case"], "derived_character");
    assert_eq!(v["witness"]["dim"], 1);
}

#[test]
fn crosscheck_assert() {
    let f = fixture(&render(&catalog::heisenberg()));
    let path = f.path().to_str().unwrap();
    let (code, json) = lienil(&[
        "crosscheck",
        path,
        "--element",
        "0,0,1",
        "--depth",
        "1",
        "--assert",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["result"]["consistent"], true);
    assert!(v["corpus"]
        .as_array()
        .unwrap()
        .iter()
        .all(|o| o["nilpotent"] == true));
}

#[test]
fn parse_errors_report_position() {
    let f = fixture("dim 2\nbasis a b\n[a,c] = a\n");
    let (code, json) = lienil(&["info", f.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["result"]["error"]["kind"], "parse");
    assert_eq!(v["result"]["error"]["details"]["line"], 3);
    assert_eq!(v["result"]["error"]["details"]["column"], 4);
}

#[test]
fn missing_file_and_usage_errors() {
    assert_eq!(lienil(&["info", "/nonexistent/x.lie"]).0, 1);
    assert_eq!(lienil(&["oracle"]).0, 1);
    assert_eq!(lienil(&["--help"]).0, 0);
}

#[test]
fn catalog_listing_and_rendering() {
    let (code, text) = lienil(&["catalog"]);
    assert_eq!(code, 0);
    for name in catalog::NAMES {
        assert!(text.contains(name), "{name}");
    }
    let (code, text) = lienil(&["catalog", "heisenberg"]);
    assert_eq!(code, 0);
    assert_eq!(text, "dim 3\nbasis x y z\n[x,y] = z\n");
    let (code, json) = lienil(&["catalog", "upper_triangular(2)", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&json).unwrap();
    assert_eq!(
        v["result"]["file"].as_str().unwrap(),
        render(&catalog::upper_triangular(2))
    );
}
