use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use softtop::fixture_files::fixture_document;
use softtop_core::lab::fixtures;

fn softtop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_softtop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture_path(name: &str) -> String {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    root.join(format!("{name}.json")).display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json", "--no-timing"];
    all.extend_from_slice(args);
    let o = softtop(&all);
    (
        o.status.code().unwrap(),
        serde_json::from_slice(&o.stdout).expect("json report"),
    )
}

#[test]
fn shipped_fixture_files_are_current() {
    for f in fixtures() {
        let on_disk = fs::read_to_string(fixture_path(f.name)).expect("fixture file exists");
        assert_eq!(on_disk, fixture_document(&f).to_json(), "{} is stale", f.name);
    }
}

#[test]
fn every_fixture_verifies_and_validates() {
    for f in fixtures() {
        let o = softtop(&["fixtures", "--name", f.name]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
        let o = softtop(&["validate", &fixture_path(f.name)]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
}

#[test]
fn report_schema_and_exit_codes() {
    let path = fixture_path("example-5.2");
    let (code, report) = json(&["check", "--axiom", "soft-t1", &path]);
    assert_eq!(code, 0);
    let keys: Vec<&str> = report.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        [
            "command",
            "inputs",
            "verdict",
            "witness",
            "cases_checked",
            "duration_ms"
        ]
    );
    assert_eq!(report["command"], "check");
    assert_eq!(report["verdict"], true);
    assert_eq!(report["duration_ms"], 0);
    let sep = &report["witness"]["separations"][0];
    assert_eq!(sep["subject"]["points"], serde_json::json!(["x1", "x2"]));
    assert_eq!(sep["left"], serde_json::json!({"e1": ["x1"], "e2": ["x1", "x2"]}));
    assert_eq!(sep["right"], serde_json::json!({"e1": ["x1", "x2"], "e2": ["x2"]}));

    let (code, report) = json(&["check", "--axiom", "t1", "--flavor", "crisp", &path]);
    assert_eq!(code, 1);
    assert_eq!(report["verdict"], false);
    assert_eq!(report["witness"]["slices"].as_array().unwrap().len(), 2);
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(softtop(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        softtop(&["check", "--axiom", "t9", &fixture_path("example-5.2")])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        softtop(&[
            "check",
            "--axiom",
            "soft-t1",
            "--flavor",
            "crisp",
            &fixture_path("example-5.2")
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(softtop(&["validate", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(softtop(&["verify-theorem", "T9.9"]).status.code(), Some(2));
    assert_eq!(
        softtop(&["verify-theorem", "T5.3", "--max-points", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(softtop(&["search", "T5.1"]).status.code(), Some(2));
    assert_eq!(softtop(&["enumerate", "--points", "5"]).status.code(), Some(2));
    assert_eq!(softtop(&["fixtures", "--name", "example-0"]).status.code(), Some(2));
    assert_eq!(softtop(&["--help"]).status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"context\": ").unwrap();
    let o = softtop(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
    fs::write(
        &bad,
        r#"{"context": {"universe": ["a"], "parameters": ["e"]}, "opens": [{"e": []}]}"#,
    )
    .unwrap();
    let o = softtop(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("the whole set is missing"));
    assert_eq!(
        softtop(&["check", "--axiom", "t0", bad.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic() {
    let runs = [
        vec!["--json", "--no-timing", "verify-theorem", "CONV-T5.2"],
        vec!["search", "CONV-T5.1"],
        vec!["enumerate", "--points", "3"],
        vec!["--json", "--no-timing", "fixtures"],
    ];
    for args in runs {
        let a = softtop(&args);
        let b = softtop(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn generate_extract_and_compare_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let sys = format!("{}#system", fixture_path("example-3.1"));
    let product = dir.path().join("product.json");
    let o = softtop(&["generate", "--formula", "1", &sys]);
    assert_eq!(o.status.code(), Some(0));
    fs::write(&product, &o.stdout).unwrap();
    let expected = format!("{}#product", fixture_path("example-3.1"));
    let o = softtop(&["compare", product.to_str().unwrap(), &expected]);
    assert_eq!(stdout(&o).trim(), "verdict: equal");

    let extracted = dir.path().join("extracted.json");
    let o = softtop(&["extract", product.to_str().unwrap()]);
    fs::write(&extracted, &o.stdout).unwrap();
    let o = softtop(&["compare", extracted.to_str().unwrap(), &sys]);
    assert_eq!(stdout(&o).trim(), "verdict: equal");

    let o = softtop(&["extract", "--parameter", "e2", product.to_str().unwrap()]);
    assert!(stdout(&o).contains("\"topology\": ["));

    let (_, r) = json(&["generate", "--associated", &fixture_path("example-3.1")]);
    assert_eq!(r["result"]["opens"].as_array().unwrap().len(), 12);
    let (_, r) = json(&[
        "generate",
        "--closure",
        &format!("{}#subbasis", fixture_path("example-3.1")),
    ]);
    assert_eq!(r["result"]["opens"].as_array().unwrap().len(), 6);
    assert_eq!(softtop(&["generate", &sys]).status.code(), Some(2));
}

#[test]
fn size_guard_needs_the_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("large.json");
    let universe: Vec<String> = (1..=11).map(|i| format!("\"p{i}\"")).collect();
    fs::write(
        &path,
        format!(
            r#"{{"context": {{"universe": [{}], "parameters": ["a", "b"]}}, "soft_sets": [{{"a": ["p1"], "b": []}}]}}"#,
            universe.join(", ")
        ),
    )
    .unwrap();
    let o = softtop(&["generate", "--closure", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("size guard"));
    let o = softtop(&["generate", "--closure", "--allow-large", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn converse_witnesses_replay_through_the_checker() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("CONV-T5.1", "t0", true),
        ("CONV-T5.2", "t1", true),
        ("CONV-T5.4", "regular", false),
    ];
    for (id, axiom, soft_holds) in cases {
        let (code, report) = json(&["search", id]);
        assert_eq!(code, 0);
        assert_eq!(report["verdict"], "counterexample");
        let path: PathBuf = dir.path().join(format!("{id}.json"));
        fs::write(&path, serde_json::to_string(&report["witness"]["instance"]).unwrap()).unwrap();
        let p = path.to_str().unwrap();
        let soft = softtop(&["check", "--axiom", axiom, "--flavor", "soft", p]);
        assert_eq!(soft.status.code(), Some(if soft_holds { 0 } else { 1 }), "{id}");
        let crisp = softtop(&["check", "--axiom", axiom, "--flavor", "crisp", p]);
        assert_eq!(crisp.status.code(), Some(if soft_holds { 1 } else { 0 }), "{id}");
    }
}

#[test]
fn enumerate_counts() {
    for (args, count) in [
        (vec!["enumerate", "--points", "1", "--count"], 1),
        (vec!["enumerate", "--points", "2", "--count"], 4),
        (vec!["enumerate", "--points", "3", "--count"], 29),
        (vec!["enumerate", "--points", "4", "--count"], 355),
        (vec!["enumerate", "--points", "2", "--parameters", "2", "--count"], 355),
    ] {
        let o = softtop(&args);
        assert_eq!(stdout(&o).trim(), format!("count: {count}"));
    }
    let o = softtop(&["enumerate", "--points", "2"]);
    assert_eq!(stdout(&o).lines().count(), 5);
}
