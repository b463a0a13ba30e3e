use std::path::Path;
use std::process::{Command, Output};

use kwall_cli::registry::{self, NAMES};
use kwall_cli::scenario::Scenario;
use serde_json::Value;

fn kwall(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kwall")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = kwall(&all);
    assert!(o.status.success(), "{args:?}: {}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn field<'a>(v: &'a Value, key: &str) -> &'a str {
    v["fields"][key].as_str().unwrap_or_else(|| panic!("no field {key} in {v}"))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn quintic_table_has_five_exact_walls() {
    let v = json(&["walls", "quintic"]);
    let cs: Vec<&str> = v["tables"][0]["rows"].as_array().unwrap().iter().map(|r| r["c"].as_str().unwrap()).collect();
    assert_eq!(cs, ["3/7", "8/15", "6/11", "63/115", "54/95"]);
    let text = stdout(&kwall(&["walls", "quintic"]));
    assert!(text.lines().last().unwrap().contains("54/95"));
}

#[test]
fn a12_wall_shows_both_sides() {
    let v = json(&["wall", "--fixture", "a12"]);
    assert_eq!(field(&v, "wall"), "8/15");
    assert_eq!(field(&v, "A(c)"), "15 - 26 c");
    assert_eq!(field(&v, "S(c)"), "51/5 - 17 c");
}

#[test]
fn centroid_fixture_gives_a_c_b() {
    let v = json(&["centroid", "--fixture", "centroid-a12-case1"]);
    let got = [field(&v, "a"), field(&v, "c"), field(&v, "b")];
    assert_eq!(got, ["3/5", "8/15", "1/30"]);
    assert_eq!(field(&v, "outcome"), "unique-c");
}

#[test]
fn direct_commands() {
    assert_eq!(field(&json(&["first-wall", "--degree", "6"]), "c1"), "1/4");
    assert_eq!(field(&json(&["lct", "--germ", "x^2 + y^13"]), "lct"), "15/26");
    assert_eq!(field(&json(&["index-bound", "--degree", "5", "--coeff", "29/50"]), "index bound"), "5");
    let cm = json(&["cm", "--n", "2", "--degree", "5", "--coeff", "1/5"]);
    assert_eq!(field(&cm, "cm degree"), "12/5");
    assert_eq!(field(&cm, "positivity window"), "(0, 3/5)");
    let v = json(&["volume", "--fixture", "p1425-a10"]);
    assert_eq!(field(&v, "engine"), "toric");
    assert_eq!(field(&v, "nef threshold"), "3/25");
    assert_eq!(field(&json(&["git", "binary", "--fixture", "quartic-binary"]), "certificate replays"), "yes");
}

#[test]
fn plane_support_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let q5 = r#"{"name": "q5", "kind": "git-plane",
        "payload": {"degree": 5, "monomials": [[2, 2, 1], [1, 1, 3], [0, 0, 5]], "one_ps": [-1, 1, 0]}}"#;
    let v = json(&["git", "plane", "--file", &write(dir.path(), "q5.json", q5)]);
    assert_eq!(field(&v, "mu"), "0");
    assert_eq!(field(&v, "torus fixed"), "yes");
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["walls", "quintic"],
        vec!["wall", "--fixture", "a11irr", "--json"],
        vec!["centroid", "--fixture", "centroid-a10-case2"],
        vec!["run", "--fixture", "quintic-strata"],
    ] {
        assert_eq!(kwall(&args).stdout, kwall(&args).stdout, "{args:?}");
    }
}

#[test]
fn every_fixture_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    for name in NAMES {
        let s = registry::get(name).unwrap();
        assert_eq!(Scenario::from_json(&s.to_json()).unwrap(), s, "{name}");
        let exported = kwall(&["export", "--fixture", name]);
        assert!(exported.status.success(), "{name}");
        let path = write(dir.path(), &format!("{name}.json"), &stdout(&exported));
        let from_file = kwall(&["run", "--file", &path, "--json"]);
        let from_registry = kwall(&["run", "--fixture", name, "--json"]);
        assert!(from_file.status.success(), "{name}: {}", stderr(&from_file));
        assert_eq!(from_file.stdout, from_registry.stdout, "{name}");
    }
}

#[test]
fn schema_errors_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let bad_alpha = r#"{"name": "x", "kind": "wall-case", "payload": {"alpha": 3, "beta": "5",
        "range": {"lo": "0", "hi": "3/5", "lo_closed": false, "hi_closed": false},
        "a0": "15", "ord_d": "26", "s0": "17/5"}}"#;
    let o = kwall(&["wall", "--file", &write(dir.path(), "a.json", bad_alpha)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("payload.alpha"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());

    let unknown = r#"{"name": "x", "kind": "cm", "payload": {"n": 2, "degree": 5, "coef": "1/5"}}"#;
    let o = kwall(&["run", "--file", &write(dir.path(), "b.json", unknown)]);
    assert!(stderr(&o).contains("coef"), "{}", stderr(&o));

    let kind = r#"{"name": "x", "kind": "quartic", "payload": {}}"#;
    let o = kwall(&["run", "--file", &write(dir.path(), "c.json", kind)]);
    assert!(stderr(&o).contains("kind"), "{}", stderr(&o));
}

#[test]
fn empty_scenario_file_is_diagnosed() {
    let dir = tempfile::tempdir().unwrap();
    let o = kwall(&["run", "--file", &write(dir.path(), "empty.json", "")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("empty"), "{}", stderr(&o));
}

#[test]
fn unknown_fixture_lists_the_registry() {
    let o = kwall(&["wall", "--fixture", "a13"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("a13"));
    for name in NAMES {
        assert!(err.contains(name), "{name}");
    }
}

#[test]
fn wrong_kind_is_rejected() {
    let o = kwall(&["centroid", "--fixture", "a12"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("expected centroid"), "{}", stderr(&o));
}

#[test]
fn corrupted_annotation_is_a_named_failure() {
    let dir = tempfile::tempdir().unwrap();
    let mut s = registry::get("a12").unwrap();
    s.expect.insert("wall".into(), "1/2".into());
    let corrupted = kwall(&["wall", "--file", &write(dir.path(), "bad.json", &s.to_json())]);
    assert_eq!(corrupted.status.code(), Some(1));
    let err = stderr(&corrupted);
    assert!(err.contains("a12") && err.contains("wall annotated as 1/2, computed 8/15"), "{err}");

    // annotations are compared, never returned
    s.expect.clear();
    let bare = kwall(&["wall", "--file", &write(dir.path(), "bare.json", &s.to_json())]);
    assert!(bare.status.success());
    assert_eq!(corrupted.stdout, bare.stdout);
    assert_eq!(bare.stdout, kwall(&["wall", "--fixture", "a12"]).stdout);
}

#[test]
fn verify_all_passes() {
    let o = kwall(&["verify-all"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("passed  11/11"));
}

#[test]
fn rationals_are_never_decimals() {
    for name in NAMES {
        let text = stdout(&kwall(&["run", "--fixture", name, "--json"]));
        let v: Value = serde_json::from_str(&text).unwrap();
        for (k, val) in v["fields"].as_object().unwrap() {
            if k == "source" || k == "provenance" {
                continue;
            }
            let s = val.as_str().unwrap();
            assert!(!s.chars().any(|c| c == '.'), "{name}: {k} = {s}");
        }
    }
}
