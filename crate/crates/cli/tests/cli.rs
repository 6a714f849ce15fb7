use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z2index"))
        .args(args)
        .env_remove("Z2INDEX_TRUNCATION")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).expect("JSON on stdout");
    (v, out.status.code().unwrap())
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn kirby_index_has_witness_on_second_axis() {
    let (v, code) = json(&["index", "--catalog", "kirby"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["verdict"], "2");
    let last = v["payload"]["certificates"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(last["witness"]["s"], serde_json::json!([0, 1]));
    // the square form comes from aux data, so the warning cannot be absent
    let kinds: Vec<&str> = v["warnings"].as_array().unwrap().iter().map(|w| w["kind"].as_str().unwrap()).collect();
    assert!(kinds.contains(&"unverified_aux_data"));
}

#[test]
fn twisted_second_cohomology_of_kirby() {
    let out = run(&["cohomology", "--catalog", "kirby", "--coeff", "Z-", "--degree", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("group: Z^2"), "{}", stdout(&out));
}

#[test]
fn missing_square_form_is_indeterminate() {
    let text = std::fs::read_to_string(data("kirby.json")).unwrap();
    let mut doc: Value = serde_json::from_str(&text).unwrap();
    doc.as_object_mut().unwrap().remove("aux");
    let dir = std::env::temp_dir().join(format!("z2index-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("kirby-no-aux.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let (v, code) = json(&["index", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["payload"]["verdict"], "[2, 3]");
    assert!(v["warnings"].as_array().unwrap().iter().any(|w| w["kind"] == "missing_aux_data"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn circle_index_table() {
    for (name, verdict) in [("s1s3_a", "1"), ("s1s3_b", "1"), ("s1s3_c", "3"), ("s1s3_d", "3"), ("sphere4", "4")] {
        let (v, code) = json(&["index", "--catalog", name]);
        assert_eq!((v["payload"]["verdict"].as_str().unwrap(), code), (verdict, 0), "{name}");
    }
}

#[test]
fn worked_files_match_the_catalog() {
    for name in ["kirby", "sphere4"] {
        let file = data(&format!("{name}.json"));
        let (from_file, _) = json(&["index", file.to_str().unwrap()]);
        let (from_catalog, _) = json(&["index", "--catalog", name]);
        assert_eq!(from_file["payload"], from_catalog["payload"], "{name}");
        assert_eq!(from_file["input"]["sha256"], from_catalog["input"]["sha256"], "{name}");
        let export = run(&["catalog", "export", name]);
        assert_eq!(stdout(&export), std::fs::read_to_string(&file).unwrap(), "{name}");
    }
}

#[test]
fn text_agrees_with_json() {
    for args in [
        &["index", "--catalog", "kirby"][..],
        &["obstructions", "--catalog", "s1s3_d"][..],
        &["ss", "--catalog", "kirby", "--page", "3"][..],
    ] {
        let (v, _) = json(args);
        let text = stdout(&run(args));
        assert!(text.contains(v["input"]["sha256"].as_str().unwrap()));
        for w in v["warnings"].as_array().unwrap() {
            assert!(text.contains(w["message"].as_str().unwrap()), "{args:?}");
        }
        // every scalar leaf of the payload appears in the text
        let mut leaves = Vec::new();
        collect_leaves(&v["payload"], &mut leaves);
        for leaf in leaves {
            assert!(text.contains(&leaf), "{args:?}: {leaf}");
        }
    }
}

fn collect_leaves(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => m.values().for_each(|x| collect_leaves(x, out)),
        Value::Array(a) => a.iter().for_each(|x| collect_leaves(x, out)),
        Value::String(s) => out.push(s.clone()),
        other => out.push(other.to_string()),
    }
}

#[test]
fn malformed_input_reports_a_pointer() {
    let text = std::fs::read_to_string(data("kirby.json")).unwrap().replace("[-1, 1]", "[-1, \"x\"]");
    let path = std::env::temp_dir().join(format!("z2index-bad-{}.json", std::process::id()));
    std::fs::write(&path, text).unwrap();
    let (v, code) = json(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "parse_error");
    assert_eq!(v["error"]["pointer"], "/boundaries/0/0/0/1");
    std::fs::remove_file(&path).ok();
}

#[test]
fn invalid_complex_exits_with_two() {
    let text = std::fs::read_to_string(data("kirby.json"))
        .unwrap()
        .replace("\"boundaries\": [[[[-1, 1]]]", "\"boundaries\": [[[[1, 1]]]");
    let path = std::env::temp_dir().join(format!("z2index-invalid-{}.json", std::process::id()));
    std::fs::write(&path, text).unwrap();
    let (v, code) = json(&["validate", path.to_str().unwrap()]);
    assert_eq!((v["payload"]["valid"].clone(), code), (Value::Bool(false), 2));
    let (_, code) = json(&["index", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    std::fs::remove_file(&path).ok();
}

#[test]
fn truncation_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_z2index"))
        .args(["--json", "ss", "--catalog", "kirby", "--page", "2"])
        .env("Z2INDEX_TRUNCATION", "5")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["payload"]["truncation"], 5);
    // a window beyond the truncation is a usage error
    let (_, code) = json(&["ss", "--catalog", "kirby", "--page", "3", "--trunc", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn unknown_catalog_entry() {
    let (v, code) = json(&["index", "--catalog", "nope"]);
    assert_eq!((v["error"]["kind"].as_str(), code), (Some("unknown_entry"), 2));
    let (v, code) = json(&["catalog", "list"]);
    assert_eq!(code, 0);
    assert!(v["payload"]["entries"].as_array().unwrap().iter().any(|e| e["name"] == "kirby"));
}
