use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn iseki(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iseki"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const Z4: &str = r#"{"id":"Z4","n":4,"one":1,"add":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],"mul":[[0,0,0,0],[0,1,2,3],[0,2,0,2],[0,3,2,1]]}"#;

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn validate_accepts_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "z4.json", Z4);
    let out = iseki(&["validate", &good]);
    assert!(out.status.success());
    assert_eq!(json(&out)["valid"], true);

    let bad = write(
        dir.path(),
        "bad.json",
        &Z4.replace("[0,3,2,1]]", "[0,3,2,2]]"),
    );
    let out = iseki(&["validate", &bad]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["valid"], false);
    assert!(v["error"].as_str().unwrap().contains("axiom"), "{v}");

    let narrow = write(
        dir.path(),
        "narrow.json",
        &Z4.replace("[0,1,2,3],[1,2,3,0]", "[0,1,2,3],[1,2,3]"),
    );
    let v = json(&iseki(&["validate", &narrow]));
    assert!(v["error"].as_str().unwrap().contains("add"), "{v}");
}

#[test]
fn unreadable_input_exits_two() {
    let out = iseki(&["ideals", "/nonexistent/semiring.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    let out = iseki(&["topology", "catalog:nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ideals_of_z4() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "z4.json", Z4);
    let out = iseki(&["ideals", &f]);
    assert!(out.status.success());
    let v = json(&out);
    let ideals = v["ideals"].as_array().unwrap();
    assert_eq!(ideals.len(), 2);
    assert_eq!(ideals[0]["members"], serde_json::json!([0]));
    assert_eq!(ideals[0]["prime"], false);
    assert_eq!(
        ideals[0]["witnesses"]["not_prime"],
        serde_json::json!([2, 2])
    );
    assert_eq!(v["jacobson_radical"], serde_json::json!([0, 2]));
}

#[test]
fn spectrum_and_topology() {
    let v = json(&iseki(&["spectrum", "catalog:BxB", "--class", "maximal"]));
    assert_eq!(v["points"], serde_json::json!([[0, 1], [0, 2]]));

    let out = iseki(&["topology", "catalog:BxB", "--class", "maximal"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["t1"], true);
    assert_eq!(v["connected"], false);
    assert!(matches!(v["idempotent"].as_u64(), Some(1 | 2)));

    let v = json(&iseki(&[
        "topology",
        "catalog:C3",
        "--checks",
        "t0,connected",
    ]));
    assert_eq!(v["t0"], true);
    assert_eq!(v["connected"], true);
    assert!(v.get("sober").is_none());

    let out = iseki(&["topology", "catalog:C3", "--checks", "t0,bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn morphisms_report_each_hom() {
    let dir = tempfile::tempdir().unwrap();
    let z4 = write(dir.path(), "z4.json", Z4);
    let out = iseki(&["morphisms", &z4, "catalog:Z2"]);
    assert!(out.status.success());
    let v = json(&out);
    let list = v.as_array().unwrap();
    assert_eq!(list.len(), 1);
    assert_eq!(list[0]["hom"], serde_json::json!([0, 1, 0, 1]));
    assert_eq!(list[0]["homeomorphism_onto_kernel_upset"], true);
    assert_eq!(list[0]["dense"], true);

    // a surjection whose kernel up-set has a point outside the image
    let out = iseki(&["morphisms", "catalog:C3", "catalog:B"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let collapse = v
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["hom"] == serde_json::json!([0, 1, 1]))
        .unwrap();
    assert_eq!(collapse["homeomorphism_onto_kernel_upset"], false);
    assert_eq!(collapse["missing_point"], serde_json::json!([0, 1]));
}

#[test]
fn export_dot_for_chain() {
    let out = iseki(&["export-dot", "catalog:C3", "--class", "prime"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("->").count(), 1);
}

#[test]
fn sweep_is_deterministic_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = |out: &Path, jobs: &str| {
        iseki(&[
            "sweep",
            "--enumerate",
            "2",
            "--classes",
            "prime,proper,maximal",
            "--jobs",
            jobs,
            "--out",
            out.to_str().unwrap(),
        ])
    };
    let ra = args(&a, "1");
    let rb = args(&b, "3");
    assert_eq!(ra.status.code(), rb.status.code());
    let (ta, tb) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert!(!ta.is_empty());
    assert_eq!(ta, tb);
    let v: Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(v["tallies"]["t0"]["failures"], 0);
}

#[test]
fn catalog_dump_feeds_back_in() {
    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("catalog.json");
    let out = iseki(&["catalog", "--out", dump.to_str().unwrap()]);
    assert!(out.status.success());
    let report = dir.path().join("r.json");
    iseki(&[
        "sweep",
        "--no-catalog",
        "--corpus",
        dump.to_str().unwrap(),
        "--classes",
        "prime",
        "--morphism-order",
        "0",
        "--out",
        report.to_str().unwrap(),
    ]);
    let v: Value = serde_json::from_slice(&fs::read(&report).unwrap()).unwrap();
    let builtin: Value = serde_json::from_slice(&iseki(&["catalog"]).stdout).unwrap();
    assert_eq!(v["corpus"]["size"], builtin.as_array().unwrap().len());

    let out = iseki(&["sweep", "--no-catalog"]);
    assert_eq!(out.status.code(), Some(2));
}
