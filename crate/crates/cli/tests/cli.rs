use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn validator() -> jsonschema::Validator {
    let text = std::fs::read_to_string(manifest_dir().join("../../docs/report-schema.json")).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

/// Runs the binary; returns exit code and the schema-checked document.
fn cayint(args: &[&str]) -> (i32, Value) {
    cayint_env(args, &[])
}

fn cayint_env(args: &[&str], env: &[(&str, &str)]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_cayint")).args(args).envs(env.iter().copied()).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let doc: Value = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{args:?}: not JSON ({e}):\n{stdout}"));
    let errors: Vec<String> = validator().iter_errors(&doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?}: schema violations {errors:?}");
    let code = out.status.code().unwrap();
    assert_eq!(doc["exitCode"], code, "{args:?}");
    (code, doc)
}

fn floats(v: &Value) -> Vec<f64> {
    v.as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect()
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], i32, &str)] = &[
        (&["info", "Q8 x E(4)"], 0, "ok"),
        (&["info", "Dic(E(9) x C(6))"], 0, "ok"),
        (&["spectrum", "Q8", "--set", "i,-i"], 0, "ok"),
        (&["spectrum", "D(8)", "--set", "ab,b"], 1, "nonintegral"),
        (&["gk", "Q8", "--k", "3"], 0, "ok"),
        (&["gk", "D(8)", "--k", "2"], 1, "nonmember"),
        (&["gk", "H16", "--k", "3", "--full"], 1, "nonmember"),
        (&["symbol", "H16", "--subgroup", "a,c", "--pin", "1,b", "--set", "ba,ba^-1c,b"], 1, "nonintegral"),
        (&["symbol", "A4", "--subgroup", "a,b", "--pin", "1,c,c^-1", "--set", "a"], 0, "ok"),
        (&["verify", "witnesses"], 0, "ok"),
        (&["info", "D(7)"], 2, "usage-error"),
        (&["info", "Q8 x"], 2, "usage-error"),
        (&["info", "C(20) x C(20)"], 2, "usage-error"),
        (&["info", "Dic(E(4))"], 2, "usage-error"),
        (&["spectrum", "Q8", "--set", "i"], 2, "usage-error"),
        (&["spectrum", "Q8", "--set", "q"], 2, "usage-error"),
        (&["gk", "Q8", "--k", "0"], 2, "usage-error"),
        (&["gk", "Q8"], 2, "usage-error"),
        (&["symbol", "Q8", "--subgroup", "i,j", "--set", "i,-i"], 2, "usage-error"),
        (&["frobnicate"], 2, "usage-error"),
        (&["verify", "everything"], 2, "usage-error"),
        (&[], 2, "usage-error"),
    ];
    for (args, code, status) in cases {
        let (c, doc) = cayint(args);
        assert_eq!(c, *code, "{args:?}: {doc}");
        assert_eq!(doc["status"], *status, "{args:?}");
        assert_eq!(doc["error"].is_null(), *code < 2, "{args:?}");
    }
}

#[test]
fn dicyclic_in_g5() {
    let (code, doc) = cayint(&["gk", "Dic(E(3) x C(6))", "--k", "5"]);
    assert_eq!(code, 0);
    assert_eq!(doc["result"]["decision"], "member");
    assert_eq!(doc["result"]["setsExamined"], 307);
    assert_eq!(doc["group"]["order"], 36);
}

#[test]
fn eight_cycle_spectrum() {
    let (code, doc) = cayint(&["spectrum", "D(8)", "--set", "ab,b"]);
    assert_eq!(code, 1);
    let s = floats(&doc["result"]["floatSpectrum"]);
    let r2 = 2f64.sqrt();
    assert!(s.iter().any(|x| (x - r2).abs() < 1e-9) && s.iter().any(|x| (x + r2).abs() < 1e-9));
    assert!(s.windows(2).all(|w| w[0] <= w[1]));
    assert!(doc["result"]["integerSpectrum"].is_null());
}

#[test]
fn nonmember_report_carries_witness() {
    let (_, doc) = cayint(&["gk", "H16", "--k", "3"]);
    let w = doc["result"]["witnessLabels"].as_array().unwrap();
    assert!(!w.is_empty() && w.len() <= 3);
    let set = w.iter().map(|s| s.as_str().unwrap()).collect::<Vec<_>>().join(",");
    let (code, _) = cayint(&["spectrum", "H16", "--set", &set]);
    assert_eq!(code, 1);
}

#[test]
fn syntax_error_is_positioned() {
    let (_, doc) = cayint(&["info", "Q8 x F(2)"]);
    let e = &doc["error"];
    assert_eq!(e["kind"], "syntax");
    assert_eq!((e["line"].as_u64(), e["column"].as_u64()), (Some(1), Some(6)));
    assert!(!e["expected"].as_array().unwrap().is_empty());
}

#[test]
fn unknown_label_suggests() {
    let (_, doc) = cayint(&["spectrum", "D6xZ3", "--set", "xw"]);
    assert_eq!(doc["error"]["kind"], "unknown-label");
    let s = doc["error"]["suggestions"].as_array().unwrap();
    assert!(s.iter().any(|x| x == "x"), "{s:?}");
}

#[test]
fn jobs_from_environment() {
    let (code, a) = cayint_env(&["gk", "A4", "--k", "4"], &[("CAYINT_JOBS", "1")]);
    assert_eq!(code, 1);
    let (_, b) = cayint(&["gk", "A4", "--k", "4", "--jobs", "3"]);
    assert_eq!(a["result"]["witnessLabels"], b["result"]["witnessLabels"]);
    let (code, _) = cayint_env(&["info", "Q8"], &[("CAYINT_JOBS", "many")]);
    assert_eq!(code, 2);
}

#[test]
fn symbol_matches_graph() {
    let (_, doc) = cayint(&["symbol", "H27", "--subgroup", "a,c", "--pin", "1,b,b^-1", "--set", "a,a^-1,b,b^-1"]);
    let r = &doc["result"];
    assert_eq!(r["matchesGraph"], true);
    assert_eq!(r["transversal"], serde_json::json!(["1", "b", "b^2"]));
    assert_eq!(r["characters"].as_array().unwrap().len(), 9);
    assert_eq!(r["symbol"].as_array().unwrap().len(), 3);
}

fn strip_timing(mut v: Value) -> Value {
    v["timing"] = Value::Null;
    v
}

#[test]
fn witness_suite_golden() {
    let (_, doc) = cayint(&["verify", "witnesses"]);
    let path = manifest_dir().join("tests/golden/verify_witnesses.json");
    if std::env::var_os("CAYINT_UPDATE_GOLDENS").is_some() {
        std::fs::write(&path, serde_json::to_string_pretty(&strip_timing(doc.clone())).unwrap() + "\n").unwrap();
    }
    let golden: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(strip_timing(doc), golden);
}

#[test]
fn help_is_plain_text() {
    let out = Command::new(env!("CARGO_BIN_EXE_cayint")).arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("verify"));
}
