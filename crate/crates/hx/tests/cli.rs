use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn hx_in(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hx"));
    cmd.args(args).env_remove("HX_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.env("HX_CACHE_DIR", dir);
    }
    cmd.output().expect("run hx")
}

fn hx(args: &[&str]) -> Output {
    hx_in(args, None)
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    assert_eq!(code(out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"));
    let s: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&s).expect("schema compiles")
}

fn assert_valid(name: &str, doc: &Value) {
    let v = schema(name);
    let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
}

#[test]
fn group_a3() {
    let d = json(&hx(&["group", "--type", "A3", "--json"]));
    assert_eq!(d["order"], 24);
    assert_eq!(d["classes"].as_array().unwrap().len(), 5);
    assert_eq!(d["longest"].as_array().unwrap().len(), 6);
    assert_eq!(d["coxeter_element"], serde_json::json!([0, 1, 2]));
    assert_valid("group", &d);
}

#[test]
fn group_affine_ball_and_gating() {
    let d = json(&hx(&["group", "--type", "~A1", "--max-length", "5"]));
    assert_eq!(d["elements"].as_array().unwrap().len(), 11);
    assert_eq!(d["order"], Value::Null);
    assert_valid("group", &d);
    assert_eq!(code(&hx(&["group", "--type", "~A1"])), 2);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&hx(&["group", "--type", "A2", "--weights", "1,2"])), 1);
    assert_eq!(code(&hx(&["group", "--type", "A2", "--weights", "0,0"])), 1);
    assert_eq!(code(&hx(&["group", "--type", "A2", "--weights", "1"])), 1);
    assert_eq!(code(&hx(&["group", "--type", "Q7"])), 1);
    assert_eq!(code(&hx(&["group"])), 1);
    assert_eq!(code(&hx(&["frobnicate"])), 1);
    assert_eq!(code(&hx(&["group", "--type", "A2", "--jobs", "many"])), 1);
    assert_eq!(code(&hx(&["kl", "basis", "--type", "A2", "--element", "0,7"])), 1);
    assert_eq!(code(&hx(&["kl", "hconst", "--type", "A2", "--element", "0"])), 1);
    assert_eq!(code(&hx(&["--help"])), 0);
}

#[test]
fn gating_errors_exit_two() {
    assert_eq!(code(&hx(&["positivity", "--type", "~A1"])), 2);
    assert_eq!(code(&hx(&["positivity", "--type", "B2", "--weights", "1,2"])), 2);
    assert_eq!(code(&hx(&["kl", "afunction", "--type", "~A1"])), 2);
    assert_eq!(code(&hx(&["jring", "check", "--type", "~A2"])), 2);
    assert_eq!(code(&hx(&["hecke", "fprobe", "--type", "~A1"])), 2);
    assert_eq!(code(&hx(&["kl", "basis", "--type", "~A1"])), 2);
}

#[test]
fn kl_basis_longest_a2() {
    let d = json(&hx(&["kl", "basis", "--type", "A2", "--element", "0,1,0"]));
    assert_valid("kl_basis", &d);
    let terms = d["basis"][0]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 6);
    assert_eq!(terms[0], serde_json::json!([[], [[-3, 1]]]));
    for t in terms {
        let len = t[0].as_array().unwrap().len() as i64;
        assert_eq!(t[1], serde_json::json!([[len - 3, 1]]));
    }
}

#[test]
fn kl_basis_affine_element() {
    let d = json(&hx(&["kl", "basis", "--type", "~A1", "--weights", "1,2", "--element", "0,1,0"]));
    assert_valid("kl_basis", &d);
    assert_eq!(d["basis"][0]["w"], serde_json::json!([0, 1, 0]));
}

#[test]
fn hconst_and_afunction() {
    let d = json(&hx(&["kl", "hconst", "--type", "A1", "--element", "0", "--element", "0"]));
    assert_valid("hconst", &d);
    assert_eq!(d["terms"], serde_json::json!([[[0], [[-1, 1], [1, 1]]]]));
    let d = json(&hx(&["kl", "afunction", "--type", "A2"]));
    assert_valid("afunction", &d);
    let a: Vec<i64> = d["values"].as_array().unwrap().iter().map(|v| v["a"].as_i64().unwrap()).collect();
    assert_eq!(a, vec![0, 1, 1, 1, 1, 3]);
}

#[test]
fn jring_reports() {
    let d = json(&hx(&["jring", "check", "--type", "B2"]));
    assert_valid("jcheck", &d);
    assert_eq!(d["passed"], true);
    assert_eq!(d["triples_checked"], 512);
    assert_eq!(d["mode"], "exhaustive");
    let d = json(&hx(&["jring", "unit", "--type", "A1"]));
    assert_valid("junit", &d);
    assert_eq!(d["unit"], serde_json::json!([[[], 1], [[0], 1]]));
    let d = json(&hx(&["jring", "table", "--type", "A1"]));
    assert_valid("jtable", &d);
    assert_eq!(d["products"], serde_json::json!([[[], [], [], 1], [[0], [0], [0], 1]]));
}

#[test]
fn fprobe_is_monotone_in_radius() {
    let n = |r: &str| {
        let d = json(&hx(&["hecke", "fprobe", "--type", "~A1", "--radius", r]));
        assert_valid("fprobe", &d);
        d["n_emp"].as_i64().unwrap()
    };
    assert!(n("5") <= n("6"));
    let d = json(&hx(&["hecke", "fprobe", "--type", "A2"]));
    assert_eq!(d["n_emp"], 3);
    assert_eq!(d["radius"], Value::Null);
}

#[test]
fn positivity_type_a4() {
    let out = hx(&["positivity", "--type", "A4"]);
    let d = json(&out);
    assert_valid("positivity", &d);
    let positive: Vec<&Value> = d.as_array().unwrap().iter().filter(|r| r["positive"] == true).collect();
    let fixtures: Vec<&Value> = positive.iter().map(|r| &r["fixtures"][0]).collect();
    assert_eq!(fixtures, vec!["identity", "coxeter"]);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("positive classes: 0 (e), 6 (s0s1s2s3)"), "{stderr}");
}

#[test]
fn positivity_b4_to_file() {
    let dir = scratch("positivity_b4");
    let path = dir.join("b4.json");
    let out = hx(&["positivity", "--type", "B4", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let d: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_valid("positivity", &d);
    let reports = d.as_array().unwrap();
    assert_eq!(reports.len(), 20);
    for r in reports {
        for check in ["constant_on_minimal", "even", "centralizer_identity"] {
            assert_eq!(r["checks"][check], true);
        }
    }
    let sizes: i64 = reports.iter().map(|r| r["class_size"].as_i64().unwrap()).sum();
    assert_eq!(sizes, 384);
}

#[test]
fn csv_output() {
    let out = hx(&["positivity", "--type", "A2", "--csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "class,size,min_length,positive,n_at_1");
    assert_eq!(lines[1], "0,1,0,true,6");
    assert_eq!(lines.len(), 4);
    let out = hx(&["kl", "basis", "--type", "A1", "--csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "w,y,p\ne,e,1\ns0,e,v^-1\ns0,s0,1\n");
}

#[test]
fn weights_catalog() {
    let d = json(&hx(&["weights", "--type", "~G2", "--weights", "1,1,9"]));
    assert_valid("weights", &d);
    assert_eq!(d["in_catalog"], true);
    let d = json(&hx(&["weights", "--type", "~G2", "--weights", "2,2,1"]));
    assert_eq!(d["in_catalog"], false);
    let d = json(&hx(&["weights", "--type", "B3"]));
    assert_eq!(d["catalog"], Value::Null);
    assert_eq!(d["equal_parameters"], true);
}

#[test]
fn config_file_defaults_and_overrides() {
    let dir = scratch("config");
    let cfg = dir.join("job.json");
    std::fs::write(&cfg, r#"{ "type": "B2", "weights": "2,1", "format": "json" }"#).unwrap();
    let c = cfg.to_str().unwrap();
    let d = json(&hx(&["kl", "afunction", "--config", c]));
    assert_eq!(d["type"], "B2");
    assert_eq!(d["weights"], serde_json::json!([2, 1]));
    let d = json(&hx(&["kl", "afunction", "--config", c, "--weights", "equal"]));
    assert_eq!(d["weights"], serde_json::json!([1, 1]));
    let d = json(&hx(&["group", "--config", c, "--type", "A2", "--weights", "equal"]));
    assert_eq!(d["order"], 6);
    std::fs::write(&cfg, r#"{ "typo": "B2" }"#).unwrap();
    assert_eq!(code(&hx(&["group", "--config", c])), 1);
    assert_eq!(code(&hx(&["group", "--config", dir.join("missing.json").to_str().unwrap()])), 1);
}

#[test]
fn matrix_input() {
    let dir = scratch("matrix");
    let m = dir.join("a2.json");
    std::fs::write(&m, "[[1, 3], [3, 1]]").unwrap();
    let d = json(&hx(&["group", "--matrix", m.to_str().unwrap()]));
    assert_eq!(d["order"], 6);
    assert_eq!(d["type"], "A2");
    std::fs::write(&m, r#"[[1, "inf"], [null, 1]]"#).unwrap();
    let d = json(&hx(&["group", "--matrix", m.to_str().unwrap(), "--max-length", "3"]));
    assert_eq!(d["type"], "~A1");
    assert_eq!(d["elements"].as_array().unwrap().len(), 7);
    std::fs::write(&m, "[[1, 5], [5, 1]]").unwrap();
    assert_eq!(code(&hx(&["group", "--matrix", m.to_str().unwrap()])), 1);
    std::fs::write(&m, "[[1, 3], [2, 1]]").unwrap();
    assert_eq!(code(&hx(&["group", "--matrix", m.to_str().unwrap()])), 1);
}

#[test]
fn cache_round_trip() {
    let dir = scratch("cache");
    let args = ["kl", "basis", "--type", "B3", "--weights", "2,2,1"];
    let first = hx_in(&args, Some(&dir));
    assert_eq!(code(&first), 0);
    let files: Vec<_> = std::fs::read_dir(&dir).unwrap().collect();
    assert_eq!(files.len(), 1);
    let second = hx_in(&args, Some(&dir));
    assert_eq!(code(&second), 0);
    assert!(String::from_utf8_lossy(&second.stderr).contains("loaded 48 KL elements"));
    assert_eq!(first.stdout, second.stdout);
    let uncached = hx(&args);
    assert_eq!(first.stdout, uncached.stdout);
    // a damaged cache is ignored, not trusted
    let path = files[0].as_ref().unwrap().path();
    std::fs::write(&path, "{ not json").unwrap();
    let third = hx_in(&args, Some(&dir));
    assert_eq!(third.stdout, first.stdout);
    assert!(String::from_utf8_lossy(&third.stderr).contains("ignoring unreadable cache"));
}

#[test]
fn progress_stays_on_stderr() {
    let out = hx(&["positivity", "--type", "A3"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("class 5/5"));
    json(&out);
}
