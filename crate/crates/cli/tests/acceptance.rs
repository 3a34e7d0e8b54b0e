//! Acceptance suite: one PASS/FAIL line per criterion, each with a pinned
//! time limit. Set comparisons are exact (zero tolerance). Expected families
//! are written below in the published notation and compared against what
//! the `softtop` binary prints.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use softtop_core::lab::{enumerate_soft_topologies, fixture, search_converse_counterexample, SweepBounds, TheoremId};
use softtop_core::separation::{separable, subject_is_well_formed, Subject};
use softtop_core::set::{from_product_subset, to_product_subset};
use softtop_core::{formula1, generate_soft, AxiomKind, Context, PointSet, SoftSet};

type Family = BTreeSet<BTreeMap<String, BTreeSet<String>>>;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_softtop"))
        .args(args)
        .output()
        .expect("softtop runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn run_json(args: &[&str]) -> Result<(i32, Value), String> {
    let mut all = vec!["--json", "--no-timing"];
    all.extend_from_slice(args);
    let (code, text) = run(&all);
    serde_json::from_str(&text)
        .map(|v| (code, v))
        .map_err(|e| format!("{args:?}: bad JSON report ({e})"))
}

fn fx(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.json"))
        .display()
        .to_string()
}

fn item(name: &str, item: &str) -> String {
    format!("{}#{item}", fx(name))
}

fn expect(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn expect_exit(args: &[&str], code: i32) -> Result<(), String> {
    let (got, text) = run(args);
    expect(got == code, format!("{args:?}: exit {got}, wanted {code}\n{text}"))
}

/// Parses `{(e1,{x1}),(e2,X)}`, `Φ` or `X` over the given universe and
/// parameters.
fn soft_literal(universe: &[&str], params: &[&str], text: &str) -> BTreeMap<String, BTreeSet<String>> {
    let all: BTreeSet<String> = universe.iter().map(|s| s.to_string()).collect();
    let constant = |set: &BTreeSet<String>| params.iter().map(|e| (e.to_string(), set.clone())).collect();
    match text {
        "Φ" => return constant(&BTreeSet::new()),
        "X" => return constant(&all),
        _ => {}
    }
    let body = text
        .strip_prefix("{(")
        .and_then(|t| t.strip_suffix(")}"))
        .expect("literal shape");
    body.split("),(")
        .map(|pair| {
            let (e, value) = pair.split_once(',').expect("parameter and value");
            let points = match value {
                "∅" => BTreeSet::new(),
                "X" => all.clone(),
                v => v
                    .trim_start_matches('{')
                    .trim_end_matches('}')
                    .split(',')
                    .map(str::to_string)
                    .collect(),
            };
            (e.to_string(), points)
        })
        .collect()
}

fn literal(universe: &[&str], sets: &[&str]) -> Family {
    sets.iter().map(|s| soft_literal(universe, &["e1", "e2"], s)).collect()
}

fn family_of(value: &Value) -> Result<Family, String> {
    let list = value.as_array().ok_or("expected a list of soft sets")?;
    list.iter()
        .map(|s| {
            let obj = s.as_object().ok_or("expected a soft set object")?;
            Ok(obj
                .iter()
                .map(|(e, pts)| {
                    let pts = pts
                        .as_array()
                        .map(|a| a.iter().filter_map(|p| p.as_str().map(String::from)).collect());
                    (e.clone(), pts.unwrap_or_default())
                })
                .collect())
        })
        .collect()
}

/// Runs a generating command and returns the opens it printed.
fn generated(args: &[&str]) -> Result<(Family, usize), String> {
    let (code, report) = run_json(args)?;
    expect(code == 0, format!("{args:?}: exit {code}"))?;
    let opens = &report["result"]["opens"];
    let len = opens.as_array().map_or(0, Vec::len);
    Ok((family_of(opens)?, len))
}

fn file_opens(path: &str, name: &str) -> Result<Value, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let doc: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    Ok(doc["items"][name]["opens"].clone())
}

fn workdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("softtop-acceptance-{}", std::process::id()));
    fs::create_dir_all(&dir).expect("temp dir");
    dir
}

fn write_doc(name: &str, universe: &[&str], key: &str, family: Value) -> Result<String, String> {
    let path = workdir().join(name);
    let doc = json!({ "context": { "universe": universe, "parameters": ["e1", "e2"] }, key: family });
    fs::write(&path, doc.to_string()).map_err(|e| e.to_string())?;
    Ok(path.display().to_string())
}

const X3: [&str; 3] = ["x1", "x2", "x3"];

const EX31_SIGMA: [&str; 6] = [
    "Φ",
    "{(e1,{x1}),(e2,∅)}",
    "{(e1,{x1,x2}),(e2,X)}",
    "{(e1,∅),(e2,{x3})}",
    "{(e1,{x1}),(e2,{x3})}",
    "X",
];

const EX31_H: [&str; 12] = [
    "Φ",
    "{(e1,∅),(e2,X)}",
    "{(e1,∅),(e2,{x3})}",
    "{(e1,X),(e2,∅)}",
    "{(e1,X),(e2,{x3})}",
    "{(e1,{x1}),(e2,∅)}",
    "{(e1,{x1}),(e2,X)}",
    "{(e1,{x1}),(e2,{x3})}",
    "{(e1,{x1,x2}),(e2,∅)}",
    "{(e1,{x1,x2}),(e2,X)}",
    "{(e1,{x1,x2}),(e2,{x3})}",
    "X",
];

const EX31_G: [&str; 6] = [
    "Φ",
    "{(e1,{x1}),(e2,{x1})}",
    "{(e1,{x3}),(e2,{x3})}",
    "{(e1,{x1,x2}),(e2,{x1,x2})}",
    "{(e1,{x1,x3}),(e2,{x1,x3})}",
    "X",
];

fn criterion_1() -> Result<String, String> {
    let (t, len) = generated(&["generate", "--formula", "1", &item("example-3.1", "system")])?;
    expect(
        len == 12 && t == literal(&X3, &EX31_H),
        "formula 1 differs from {Φ,H1..H10,X}",
    )?;
    let (t1, len1) = generated(&["generate", "--formula", "2", "--parameter", "e1", &fx("example-3.1")])?;
    let want1 = literal(&X3, &["Φ", "{(e1,{x1}),(e2,{x1})}", "{(e1,{x1,x2}),(e2,{x1,x2})}", "X"]);
    expect(len1 == 4 && t1 == want1, "formula 2 at e1 differs")?;
    let (t2, len2) = generated(&["generate", "--formula", "2", "--parameter", "e2", &fx("example-3.1")])?;
    expect(
        len2 == 3 && t2 == literal(&X3, &["Φ", "{(e1,{x3}),(e2,{x3})}", "X"]),
        "formula 2 at e2 differs",
    )?;

    let (_, r1) = run_json(&["generate", "--formula", "2", "--parameter", "e1", &fx("example-3.1")])?;
    let (_, r2) = run_json(&["generate", "--formula", "2", "--parameter", "e2", &fx("example-3.1")])?;
    let mut union = r1["result"]["opens"].as_array().cloned().unwrap_or_default();
    union.extend(r2["result"]["opens"].as_array().cloned().unwrap_or_default());
    let path = write_doc("c1-union.json", &X3, "soft_sets", Value::Array(union))?;
    let (g, len) = generated(&["generate", "--closure", &path])?;
    expect(
        len == 6 && g == literal(&X3, &EX31_G),
        "closure of the union differs from {Φ,G1..G4,X}",
    )?;
    let (g2, _) = generated(&["generate", "--union-single-set", &item("example-3.1", "system")])?;
    expect(g2 == g, "union-single-set differs from the closure")?;
    Ok("12 / 4 / 3 / 6 sets equal the listings".into())
}

fn compare(a: &str, b: &str) -> Result<String, String> {
    let (code, report) = run_json(&["compare", a, b])?;
    expect(code == 0, format!("compare {a} {b}: exit {code}"))?;
    Ok(report["verdict"].as_str().unwrap_or("").to_string())
}

fn criterion_2() -> Result<String, String> {
    let sigma = fx("example-3.1");
    let (_, t) = run_json(&["generate", "--formula", "1", &item("example-3.1", "system")])?;
    let t_path = write_doc("c2-product.json", &X3, "opens", t["result"]["opens"].clone())?;
    let (_, u) = run_json(&["generate", "--union-single-set", &item("example-3.1", "system")])?;
    let u_path = write_doc("c2-union.json", &X3, "opens", u["result"]["opens"].clone())?;
    let got = [
        compare(&sigma, &t_path)?,
        compare(&sigma, &u_path)?,
        compare(&u_path, &t_path)?,
    ];
    expect(
        got == ["strictly-coarser", "incomparable", "incomparable"],
        format!("verdicts {got:?}"),
    )?;
    Ok(got.join(", "))
}

fn criterion_3() -> Result<String, String> {
    let sigma_prime_lit = literal(
        &X3,
        &[
            "Φ",
            "{(e1,{x1}),(e2,∅)}",
            "{(e1,{x1,x2}),(e2,X)}",
            "{(e1,X),(e2,{x3})}",
            "{(e1,{x1,x2}),(e2,{x3})}",
            "X",
        ],
    );
    let path = fx("example-4.1");
    let sigma = file_opens(&path, "sigma")?;
    let prime = file_opens(&path, "sigma-prime")?;
    expect(
        family_of(&sigma)? == literal(&X3, &EX31_SIGMA),
        "fixture Σ differs from the listing",
    )?;
    expect(
        family_of(&prime)? == sigma_prime_lit,
        "fixture Σ′ differs from the listing",
    )?;
    let mut hat: Vec<Value> = Vec::new();
    for s in sigma
        .as_array()
        .into_iter()
        .flatten()
        .chain(prime.as_array().into_iter().flatten())
    {
        if !hat.contains(s) {
            hat.push(s.clone());
        }
    }
    expect(hat.len() == 8, format!("Σ̂ has {} opens", hat.len()))?;
    let hat_path = write_doc("c3-hat.json", &X3, "opens", Value::Array(hat))?;
    let s_path = write_doc("c3-sigma.json", &X3, "opens", sigma)?;
    let p_path = write_doc("c3-prime.json", &X3, "opens", prime)?;
    for p in [&s_path, &p_path, &hat_path] {
        expect_exit(&["validate", p], 0)?;
    }
    let verdicts = [
        compare(&s_path, &p_path)?,
        compare(&hat_path, &s_path)?,
        compare(&hat_path, &p_path)?,
    ];
    expect(
        verdicts == ["incomparable", "strictly-finer", "strictly-finer"],
        format!("verdicts {verdicts:?}"),
    )?;
    let extracted: Vec<String> = [&s_path, &p_path, &hat_path]
        .iter()
        .map(|p| run(&["extract", p]).1)
        .collect();
    expect(extracted.iter().all(|e| *e == extracted[0]), "extractions differ")?;
    let mut assoc = Vec::new();
    for p in [&s_path, &p_path, &hat_path] {
        assoc.push(generated(&["generate", "--associated", p])?.0);
    }
    expect(
        assoc.iter().all(|a| *a == literal(&X3, &EX31_H)),
        "associated topologies differ",
    )?;
    Ok("Σ̂ has 8 opens; one shared system and associated topology".into())
}

const EX51_LISTED: [&str; 17] = [
    "Φ",
    "{(e1,X),(e2,∅)}",
    "{(e1,{x1}),(e2,∅)}",
    "{(e1,{x2,x3}),(e2,∅)}",
    "{(e1,∅),(e2,X)}",
    "{(e1,{x1}),(e2,X)}",
    "{(e1,{x2,x3}),(e2,X)}",
    "{(e1,∅),(e2,{x1,x2})}",
    "{(e1,X),(e2,{x1,x2})}",
    "{(e1,{x1}),(e2,{x1,x2})}",
    "{(e1,{x1}),(e2,{x2})}",
    "{(e1,{x2,x3}),(e2,{x1,x2})}",
    "{(e1,∅),(e2,{x3})}",
    "{(e1,X),(e2,{x3})}",
    "{(e1,{x1}),(e2,{x3})}",
    "{(e1,{x2,x3}),(e2,{x3})}",
    "X",
];

fn criterion_4() -> Result<String, String> {
    let path = fx("example-5.1-corrected");
    let (t, len) = generated(&["generate", "--formula", "1", &path])?;
    let listed = literal(&X3, &EX51_LISTED);
    let h10 = soft_literal(&X3, &["e1", "e2"], EX51_LISTED[10]);
    let mut corrected = listed.clone();
    corrected.remove(&h10);
    expect(listed.len() == 17 && len == 16, format!("{len} sets generated"))?;
    expect(t == corrected, "formula 1 differs from the listing without H10")?;
    expect(!t.contains(&h10), "H10 generated")?;
    expect_exit(&["check", "--axiom", "soft-t0", &path], 0)?;
    expect_exit(&["check", "--axiom", "crisp-t0", "--parameter", "e1", &path], 1)?;
    expect_exit(&["check", "--axiom", "crisp-t0", "--parameter", "e2", &path], 1)?;
    let (code, report) = run_json(&["fixtures", "--name", "example-5.1-corrected"])?;
    let notes = report["result"][0]["notes"].as_array().cloned().unwrap_or_default();
    expect(
        code == 0 && notes.iter().any(|n| n.as_str().is_some_and(|n| n.contains("H10"))),
        "fixture does not report the H10 discrepancy",
    )?;
    let text = fs::read_to_string(&path).map_err(|e| e.to_string())?;
    expect(
        text.contains("\"notes\"") && text.contains("H10"),
        "fixture file lacks the note",
    )?;
    Ok("16 sets; soft T0; both slices non-T0; H10 noted".into())
}

fn criterion_5() -> Result<String, String> {
    let x2 = ["x1", "x2"];
    let path = fx("example-5.2");
    let (t, len) = generated(&["generate", "--formula", "1", &path])?;
    let want = literal(
        &x2,
        &[
            "Φ",
            "{(e1,∅),(e2,X)}",
            "{(e1,X),(e2,∅)}",
            "{(e1,∅),(e2,{x2})}",
            "{(e1,X),(e2,{x2})}",
            "{(e1,{x1}),(e2,∅)}",
            "{(e1,{x1}),(e2,X)}",
            "{(e1,{x1}),(e2,{x2})}",
            "X",
        ],
    );
    expect(len == 9 && t == want, "formula 1 differs from {Φ,H1..H7,X}")?;
    let (code, report) = run_json(&["check", "--axiom", "soft-t1", &path])?;
    expect(code == 0 && report["verdict"] == true, "soft T1 not confirmed")?;
    let h4 = soft_literal(&x2, &["e1", "e2"], "{(e1,X),(e2,{x2})}");
    let h6 = soft_literal(&x2, &["e1", "e2"], "{(e1,{x1}),(e2,X)}");
    let seps = report["witness"]["separations"].as_array().cloned().unwrap_or_default();
    let pair_found = seps.iter().any(|s| {
        let left = family_of(&json!([s["left"]])).ok();
        let right = family_of(&json!([s["right"]])).ok();
        left == Some([h6.clone()].into()) && right == Some([h4.clone()].into())
    });
    expect(pair_found, "witness pair (H6 for x1, H4 for x2) not reported")?;
    expect_exit(&["check", "--axiom", "crisp-t1", "--parameter", "e1", &path], 1)?;
    expect_exit(&["check", "--axiom", "crisp-t1", "--parameter", "e2", &path], 1)?;
    Ok("9 sets; soft T1 via (H4,H6); both slices non-T1".into())
}

fn criterion_6() -> Result<String, String> {
    let p55 = fx("example-5.5");
    let sigma55 = literal(
        &X3,
        &[
            "Φ",
            "{(e1,∅),(e2,{x3})}",
            "{(e1,{x3}),(e2,∅)}",
            "{(e1,{x2,x3}),(e2,∅)}",
            "{(e1,X),(e2,∅)}",
            "{(e1,{x1,x3}),(e2,∅)}",
            "{(e1,{x3}),(e2,{x3})}",
            "{(e1,{x2,x3}),(e2,{x3})}",
            "{(e1,X),(e2,{x3})}",
            "{(e1,{x1,x3}),(e2,{x3})}",
            "X",
        ],
    );
    let on_file = file_opens(&p55, "sigma")?;
    expect(
        family_of(&on_file)? == sigma55 && sigma55.len() == 11,
        "fixture Σ differs from the listing",
    )?;
    expect_exit(&["validate", &p55], 0)?;
    expect_exit(&["check", "--axiom", "soft-normal", &p55], 0)?;
    expect_exit(&["check", "--axiom", "crisp-normal", "--parameter", "e1", &p55], 1)?;

    let p56 = fx("example-5.6");
    let (t56, len) = generated(&["generate", "--formula", "1", &p56])?;
    let want56 = literal(&["x"], &["Φ", "{(e1,∅),(e2,X)}", "{(e1,X),(e2,∅)}", "X"]);
    expect(len == 4 && t56 == want56, "example 5.6 product differs")?;
    expect_exit(&["check", "--axiom", "soft-regular", &p56], 1)?;
    expect_exit(&["check", "--axiom", "crisp-regular", &p56], 0)?;

    let p57 = fx("example-5.7");
    let (t57, len) = generated(&["generate", "--formula", "1", &p57])?;
    let want57 = literal(
        &X3,
        &[
            "Φ",
            "{(e1,∅),(e2,{x1})}",
            "{(e1,∅),(e2,{x1,x2})}",
            "{(e1,∅),(e2,{x1,x3})}",
            "{(e1,∅),(e2,X)}",
            "{(e1,X),(e2,∅)}",
            "{(e1,X),(e2,{x1})}",
            "{(e1,X),(e2,{x1,x2})}",
            "{(e1,X),(e2,{x1,x3})}",
            "X",
        ],
    );
    expect(len == 10 && t57 == want57, "example 5.7 product differs")?;
    expect_exit(&["check", "--axiom", "soft-normal", &p57], 1)?;
    expect_exit(&["check", "--axiom", "crisp-normal", "--parameter", "e1", &p57], 0)?;
    let (code, report) = run_json(&["check", "--axiom", "crisp-normal", "--parameter", "e2", &p57])?;
    expect(
        code == 1 && report["witness"]["inseparable"]["closed_pair"] == json!([["x2"], ["x3"]]),
        "Σ_e2 witness is not the closed pair {x2}, {x3}",
    )?;

    let f = fixture("example-5.7").ok_or("missing fixture")?;
    let ctx = &f.context;
    let t = formula1(f.system_item("system").ok_or("missing system")?).map_err(|e| e.to_string())?;
    let first = SoftSet::from_slices(&[ctx.empty_set(), ctx.point_set(["x3"]).map_err(|e| e.to_string())?]);
    let second = SoftSet::from_slices(&[ctx.whole(), ctx.point_set(["x2"]).map_err(|e| e.to_string())?]);
    let subject = Subject::ClosedPair { first, second };
    expect(
        subject_is_well_formed(&t, AxiomKind::Normal, &subject) && !separable(&t, AxiomKind::Normal, &subject),
        "published closed pair is separable or not a disjoint closed pair",
    )?;
    let (code, report) = run_json(&["fixtures", "--name", "example-5.7"])?;
    let all_pass = report["result"][0]["checks"]
        .as_array()
        .is_some_and(|c| c.iter().all(|c| c["pass"] == true));
    expect(code == 0 && all_pass, "example-5.7 fixture checks fail")?;
    Ok("5.5 normal / e1 not; 5.6 not regular / slices regular; 5.7 not normal, pair inseparable".into())
}

/// Labeled topologies on `n` points by testing every family of subsets.
fn filter_count(n: usize) -> usize {
    let subsets = 1usize << n;
    let full = subsets - 1;
    (0u64..1 << subsets)
        .filter(|family| {
            let has = |s: usize| family >> s & 1 == 1;
            has(0)
                && has(full)
                && (0..subsets)
                    .filter(|&a| has(a))
                    .all(|a| (0..subsets).filter(|&b| has(b)).all(|b| has(a | b) && has(a & b)))
        })
        .count()
}

fn criterion_7() -> Result<String, String> {
    let mut counts = Vec::new();
    for n in 1..=4 {
        let (code, report) = run_json(&["enumerate", "--points", &n.to_string(), "--count"])?;
        let c = report["cases_checked"].as_u64().unwrap_or(0) as usize;
        expect(code == 0 && c == filter_count(n), format!("n={n}: {c} topologies"))?;
        counts.push(c);
    }
    expect(counts == [1, 4, 29, 355], format!("counts {counts:?}"))?;
    let (_, report) = run_json(&["enumerate", "--points", "2", "--parameters", "2", "--count"])?;
    expect(report["cases_checked"] == 355, "soft census at 2x2 is not 355")?;
    Ok("1, 4, 29, 355; soft 2x2 = 355".into())
}

fn sweep(ids: &[&str], extra: &[&str], cases: u64) -> Result<String, String> {
    for id in ids {
        let mut args = vec!["verify-theorem", *id];
        args.extend_from_slice(extra);
        let (code, report) = run_json(&args)?;
        expect(
            code == 0 && report["verdict"] == "proven-at-scale" && report["cases_checked"] == cases,
            format!("{id}: {} after {} cases", report["verdict"], report["cases_checked"]),
        )?;
    }
    Ok(format!("{n} of {n} proven, {cases} cases each", n = ids.len()))
}

fn criterion_8() -> Result<String, String> {
    sweep(
        &["T5.1", "T5.2", "T5.3", "T5.5", "L3.4", "L3.6"],
        &["--max-points", "3", "--params", "2"],
        841,
    )
}

fn criterion_9() -> Result<String, String> {
    let census = sweep(
        &["L3.3", "L2.7", "C5.1", "C5.2", "R-T3"],
        &["--max-points", "2", "--params", "2"],
        355,
    )?;
    let lift = sweep(&["F2-TRANSFER"], &["--max-points", "3", "--params", "2"], 238)?;
    Ok(format!("{census}; single-set lift: {lift}"))
}

fn criterion_10() -> Result<String, String> {
    let cases = [
        ("CONV-T5.1", "t0", true, 3),
        ("CONV-T5.2", "t1", true, 2),
        ("CONV-T5.4", "regular", false, 1),
    ];
    for (id, axiom, soft_holds, points) in cases {
        let (code, report) = run_json(&["search", id, "--max-points", "3", "--params", "2"])?;
        expect(
            code == 0 && report["verdict"] == "counterexample",
            format!("{id}: no counterexample"),
        )?;
        let instance = &report["witness"]["instance"];
        let universe = instance["context"]["universe"].as_array().map_or(0, Vec::len);
        expect(universe == points, format!("{id}: found on {universe} points"))?;
        let path = workdir().join(format!("c10-{id}.json"));
        fs::write(&path, instance.to_string()).map_err(|e| e.to_string())?;
        let p = path.display().to_string();
        expect_exit(
            &["check", "--axiom", axiom, "--flavor", "soft", &p],
            if soft_holds { 0 } else { 1 },
        )?;
        expect_exit(
            &["check", "--axiom", axiom, "--flavor", "crisp", &p],
            if soft_holds { 1 } else { 0 },
        )?;
        let id = TheoremId::parse(id).map_err(|e| e.to_string())?;
        let outcome = search_converse_counterexample(id, SweepBounds::exhaustive(3, 2)).map_err(|e| e.to_string())?;
        expect(
            outcome.replay() == Ok(true),
            format!("{id}: library replay does not fail"),
        )?;
    }
    Ok("three counterexamples, replayed through check and the library".into())
}

fn soft_sets(n: usize, m: usize) -> impl Iterator<Item = SoftSet> {
    (0u128..1 << (n * m)).map(move |b| SoftSet::from_bits(b, n, m))
}

fn lattice_laws() -> Result<(), String> {
    for n in 1..=9usize {
        for m in 1..=9 / n {
            let sets: Vec<SoftSet> = soft_sets(n, m).collect();
            let (null, top) = (SoftSet::null(n, m), SoftSet::absolute(n, m));
            for &a in &sets {
                let ok = a.complement().complement() == a
                    && a.union(a.complement()) == top
                    && a.intersection(a.complement()) == null
                    && a.union(null) == a
                    && a.intersection(top) == a;
                if !ok {
                    return Err(format!("unary laws fail at {n}x{m}"));
                }
                for &b in &sets {
                    let (u, i) = (a.union(b), a.intersection(b));
                    let ok = u.complement() == a.complement().intersection(b.complement())
                        && i.complement() == a.complement().union(b.complement())
                        && u == b.union(a)
                        && i == b.intersection(a)
                        && a.union(i) == a
                        && a.intersection(u) == a
                        && a.is_subset(b) == (u == b);
                    if !ok {
                        return Err(format!("binary laws fail at {n}x{m}"));
                    }
                    for &c in &sets {
                        let ok = u.union(c) == a.union(b.union(c))
                            && i.intersection(c) == a.intersection(b.intersection(c))
                            && a.intersection(b.union(c)) == i.union(a.intersection(c))
                            && a.union(b.intersection(c)) == u.intersection(a.union(c));
                        if !ok {
                            return Err(format!("ternary laws fail at {n}x{m}"));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn generation_laws() -> Result<(), String> {
    let ctx = Context::synthetic(3, 2).map_err(|e| e.to_string())?;
    for seed in 0..1000u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let size = rng.gen_range(0..7);
        let larger: Vec<SoftSet> = (0..size).map(|_| SoftSet::from_bits(rng.gen::<u128>(), 3, 2)).collect();
        let smaller = &larger[..rng.gen_range(0..=size)];
        let big = generate_soft(&ctx, &larger).map_err(|e| e.to_string())?;
        let small = generate_soft(&ctx, smaller).map_err(|e| e.to_string())?;
        expect(
            larger.iter().all(|s| big.contains(s)),
            format!("not extensive, seed {seed}"),
        )?;
        expect(
            generate_soft(&ctx, big.opens()).as_ref() == Ok(&big),
            format!("not idempotent, seed {seed}"),
        )?;
        expect(small.is_coarser_or_equal(&big), format!("not monotone, seed {seed}"))?;
    }
    Ok(())
}

fn product_round_trip() -> Result<(), String> {
    let ctx = Context::synthetic(2, 2).map_err(|e| e.to_string())?;
    let cells = [(0, 0), (0, 1), (1, 0), (1, 1)];
    for mask in 0u8..16 {
        let pairs: Vec<(usize, usize)> = (0..4).filter(|k| mask >> k & 1 == 1).map(|k| cells[k]).collect();
        let set = from_product_subset(&ctx, &pairs).map_err(|e| e.to_string())?;
        let mut back = to_product_subset(set);
        back.sort();
        expect(back == pairs, format!("pairs {pairs:?} do not round trip"))?;
        let slices_ok = cells
            .iter()
            .all(|&(x, e)| set.slice(e).contains(x) == pairs.contains(&(x, e)));
        expect(slices_ok, "slice membership disagrees with the pairs")?;
    }
    for a in soft_sets(2, 2) {
        expect(
            from_product_subset(&ctx, &to_product_subset(a)) == Ok(a),
            "soft set does not round trip",
        )?;
    }
    let census = enumerate_soft_topologies(2, 2).map_err(|e| e.to_string())?;
    let flat = Context::synthetic(4, 1).map_err(|e| e.to_string())?;
    for t in &census {
        let family: Vec<PointSet> = t
            .opens()
            .iter()
            .map(|&s| {
                to_product_subset(s)
                    .into_iter()
                    .fold(PointSet::empty(4), |p, (x, e)| p.with(x * 2 + e))
            })
            .collect();
        expect(
            softtop_core::is_crisp_topology(&flat, &family).is_ok(),
            "census member is not a product topology",
        )?;
    }
    Ok(())
}

fn criterion_11() -> Result<String, String> {
    lattice_laws()?;
    generation_laws()?;
    product_round_trip()?;
    Ok("lattice laws to 9 bits, 1000 seeded subbases, 2x2 round trip".into())
}

struct Criterion {
    title: &'static str,
    limit: Duration,
    check: fn() -> Result<String, String>,
}

fn main() -> ExitCode {
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let second = Duration::from_secs(1);
    let criteria = [
        Criterion {
            title: "Example 3.1 generation",
            limit: second,
            check: criterion_1,
        },
        Criterion {
            title: "Example 3.1 comparisons",
            limit: second,
            check: criterion_2,
        },
        Criterion {
            title: "Example 4.1 shared associated topology",
            limit: second,
            check: criterion_3,
        },
        Criterion {
            title: "Example 5.1 corrected product",
            limit: second,
            check: criterion_4,
        },
        Criterion {
            title: "Example 5.2 soft T1 from non-T1 slices",
            limit: second,
            check: criterion_5,
        },
        Criterion {
            title: "Examples 5.5-5.7 regularity and normality",
            limit: second,
            check: criterion_6,
        },
        Criterion {
            title: "enumeration oracle",
            limit: Duration::from_secs(10),
            check: criterion_7,
        },
        Criterion {
            title: "system sweeps at 3 points, 2 parameters",
            limit: Duration::from_secs(60),
            check: criterion_8,
        },
        Criterion {
            title: "census sweeps and single-set lift",
            limit: Duration::from_secs(60),
            check: criterion_9,
        },
        Criterion {
            title: "converse counterexamples",
            limit: Duration::from_secs(30),
            check: criterion_10,
        },
        Criterion {
            title: "property suite",
            limit: Duration::from_secs(120),
            check: criterion_11,
        },
    ];
    println!("acceptance: exact set equality, zero tolerance");
    let mut failed = 0;
    for (k, c) in criteria.iter().enumerate() {
        let started = Instant::now();
        let result = (c.check)();
        let elapsed = started.elapsed();
        let timing = format!("{:.2}s, limit {}s", elapsed.as_secs_f64(), c.limit.as_secs());
        let (verdict, detail) = match result {
            Ok(d) if elapsed <= c.limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("too slow: {d}")),
            Err(e) => ("FAIL", e),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("{verdict} {:>2}. {} ({timing}): {detail}", k + 1, c.title);
    }
    let _ = fs::remove_dir_all(workdir());
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
