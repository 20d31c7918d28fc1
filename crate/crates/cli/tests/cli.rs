use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn catdyn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catdyn"))
        .args(args)
        .env_remove("CATDYN_MAX_CARRIER")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn laws(v: &Value) -> Vec<(String, bool)> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|l| (l["law"].as_str().unwrap().to_string(), l["holds"].as_bool().unwrap()))
        .collect()
}

#[test]
fn validate_reports_every_law() {
    let out = catdyn(&["validate", &fixture("z3_rotation.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["all_hold"], true);
    let names: Vec<String> = laws(&v["laws"]).into_iter().map(|(n, _)| n).collect();
    assert!(names.contains(&"flow composition law".to_string()));
    assert!(names.contains(&"semiconjugacy square (rot1)".to_string()));
}

#[test]
fn law_failures_exit_one_with_a_report() {
    let out = catdyn(&["validate", &fixture("corrupted.json")]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["all_hold"], false);
    let failing = v["laws"].as_array().unwrap().iter().find(|l| l["holds"] == false).unwrap();
    assert_eq!(failing["law"], "flow composition law");
    assert_eq!(failing["counterexample"], "((1,1),b)");

    let out = catdyn(&["validate", &fixture("nonassociative.json"), "--text"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("time associativity"), "{text}");
    assert!(text.contains("((1,1),2)"), "{text}");
}

#[test]
fn input_errors_exit_two() {
    for args in [
        vec!["validate".to_string(), fixture("malformed.json")],
        vec!["validate".to_string(), fixture("does_not_exist.json")],
    ] {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let out = catdyn(&args);
        assert_eq!(out.status.code(), Some(2));
        assert!(out.stdout.is_empty());
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    }
}

#[test]
fn schema_violations_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    for (name, body) in [
        ("extra.json", r#"{"monoid":{"elements":["e"],"table":[["e"]],"unit":"e"},"omega":{"elements":["x"]},"flow":[["x"]],"extra":1}"#),
        ("empty.json", r#"{"monoid":{"elements":[],"table":[],"unit":"e"},"omega":{"elements":["x"]},"flow":[]}"#),
        ("label.json", r#"{"monoid":{"elements":["e"],"table":[["e"]],"unit":"e"},"omega":{"elements":["x"]},"flow":[["y"]]}"#),
        ("shape.json", r#"{"monoid":{"elements":["e"],"table":[["e"]],"unit":"e"},"omega":{"elements":["x","y"]},"flow":[["x"]]}"#),
    ] {
        let path = dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        let out = catdyn(&["validate", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn derived_documents_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["z3_rotation.json", "max_idempotent.json", "trivial.json"] {
        for which in ["shift", "transfer"] {
            let out = catdyn(&["derive", &fixture(name), which]);
            assert_eq!(out.status.code(), Some(0), "{name} {which}");
            let v = json(&out);
            let derived = &v["derived"];
            let path = dir.path().join(format!("{which}_{name}"));
            std::fs::write(&path, serde_json::to_string(&derived["system"]).unwrap()).unwrap();
            let again = catdyn(&["validate", path.to_str().unwrap()]);
            assert_eq!(again.status.code(), Some(0));
            let revalidated = laws(&json(&again)["laws"]);
            // the time laws come first, then the same flow laws as the derivation
            let flow_laws = laws(&derived["laws"]);
            assert_eq!(revalidated[revalidated.len() - flow_laws.len()..], flow_laws[..]);
        }
    }
}

#[test]
fn carrier_cap_refuses_large_derivations() {
    let z3 = fixture("z3_rotation.json");
    let out = catdyn(&["derive", &z3, "shift", "--max-carrier", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("27 elements, above the cap of 10"));

    let out = Command::new(env!("CARGO_BIN_EXE_catdyn"))
        .args(["subshift", &z3])
        .env("CATDYN_MAX_CARRIER", "26")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = catdyn(&["derive", &z3, "shift", "--max-carrier", "27"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["derived"]["carrier_size"], 27);
}

#[test]
fn subshift_orbits_and_stationary_states() {
    let v = json(&catdyn(&["subshift", &fixture("z3_rotation.json")]));
    let sub = &v["subshift"];
    assert_eq!(sub["path_space_size"], 27);
    assert_eq!(sub["members"], serde_json::json!(["p[0→a,1→b,2→c]", "p[0→b,1→c,2→a]", "p[0→c,1→a,2→b]"]));
    assert_eq!(sub["iso"]["map"][1], serde_json::json!(["b", "p[0→b,1→c,2→a]"]));

    let v = json(&catdyn(&["orbits", &fixture("z3_rotation.json")]));
    assert_eq!(v["orbits"][2]["values"], serde_json::json!(["c", "a", "b"]));

    let v = json(&catdyn(&["stationary", &fixture("max_idempotent.json")]));
    assert_eq!(v["stationary"]["states"], serde_json::json!(["0", "2"]));
    assert_eq!(v["stationary"]["enriched"], serde_json::json!(["0", "2"]));
}

#[test]
fn export_dot_draws_generator_edges() {
    let out = catdyn(&["export-dot", &fixture("z3_rotation.json")]);
    assert_eq!(out.status.code(), Some(0));
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("digraph flow {\n"));
    assert!(dot.contains("\"a\" -> \"b\" [label=\"1\"];"), "{dot}");
    // only the generator 1 is needed for a cyclic group
    assert!(!dot.contains("label=\"2\""), "{dot}");

    let out = catdyn(&["export-dot", &fixture("corrupted.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!String::from_utf8_lossy(&out.stdout).contains("digraph"));
}

#[test]
fn koopman_is_informational() {
    let out = catdyn(&["derive", &fixture("max_idempotent.json"), "koopman"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["derived"]["informational"], true);
    assert_eq!(v["derived"]["carrier_size"], 8);
}
