use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Output {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn gendo_with_input(args: &[&str], input: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gendo"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut stdin = child.stdin.take().unwrap();
    if let Some(text) = input {
        stdin.write_all(text.as_bytes()).unwrap();
    }
    drop(stdin);
    let out = child.wait_with_output().unwrap();
    Output {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn gendo(args: &[&str]) -> Output {
    gendo_with_input(args, None)
}

fn ok(args: &[&str]) -> Value {
    let out = gendo(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.json()
}

fn temp_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn with_w(base: &str, w: Value) -> String {
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(fixture(base)).unwrap()).unwrap();
    v["W"] = w;
    v.to_string()
}

#[test]
fn dims_of_worked_trees() {
    let d = ok(&["dims", &fixture("branched_mixed.json")]);
    assert_eq!(d["domdim"], 3);
    assert_eq!(d["gorenstein"], 5);
    assert_eq!(d["gldim"], "infinity");

    let d = ok(&["dims", &fixture("star5.json")]);
    assert_eq!((d["domdim"].clone(), d["gorenstein"].clone()), (json!(4), json!(6)));

    let d = ok(&["dims", &fixture("branched.json")]);
    assert_eq!(d["domdim"], "infinity");
    assert_eq!(d["gorenstein"], 0);
    assert_eq!(d["convention"], "symmetric");
}

#[test]
fn oracle_dims_match_star_dims() {
    let oracle = ok(&["oracle", "--kupisch", "15,14,15,15,14,15,15", "--dims"]);
    assert_eq!(oracle["domdim"], 4);
    assert_eq!(oracle["gorenstein"], 6);
    assert_eq!(oracle["gldim"], "infinity");
    let star = ok(&["dims", &fixture("star5.json")]);
    for key in ["domdim", "gorenstein", "gldim", "higher_auslander"] {
        assert_eq!(oracle[key], star[key], "{key}");
    }
    // The default mode is --dims.
    assert_eq!(ok(&["oracle", "--kupisch", "15,14,15,15,14,15,15"]), oracle);
}

#[test]
fn oracle_resolution() {
    let r = ok(&["oracle", "--kupisch", "2,3", "--resolve", "0,1"]);
    assert_eq!(r["projective_resolution"]["dimension"], 2);
    assert_eq!(r["projective_resolution"]["terms"][0], json!({ "top": 0, "len": 2 }));
    let r = ok(&["oracle", "--kupisch", "4,4,4", "--resolve", "0,2"]);
    assert_eq!(r["projective_resolution"]["periodic"], true);
    assert_eq!(r["projective_resolution"]["dimension"], "infinity");

    assert_eq!(gendo(&["oracle", "--kupisch", "4,4,4", "--resolve", "0,9"]).code, 1);
    assert_eq!(gendo(&["oracle", "--kupisch", "2,5"]).code, 1);
    assert_eq!(gendo(&["oracle", "--kupisch", "4,4,4", "--resolve", "zero"]).code, 2);
}

#[test]
fn enumerate_counts() {
    let e = ok(&["enumerate", "--kind", "tree", "--n", "2", "--m", "1"]);
    assert_eq!(e["count"], 3);
    assert!(e.get("entries").is_none());

    let e = ok(&["enumerate", "--kind", "tree", "--n", "2", "--m", "1", "--list"]);
    let words: Vec<&str> = e["entries"].as_array().unwrap().iter().map(|x| x["word"].as_str().unwrap()).collect();
    assert_eq!(words, ["bwbw", "bwww", "wwww"]);

    let e = ok(&["enumerate", "--kind", "naka", "--n", "1", "--m", "1", "--list"]);
    assert_eq!(e["count"], 2);
    let auslander = e["entries"].as_array().unwrap().iter().find(|x| x["word"] == "b").unwrap();
    assert_eq!(auslander["kupisch"], json!([3, 2]));
    assert_eq!(auslander["gldim"], 2);

    // Large counts are exact decimal strings.
    let e = ok(&["enumerate", "--kind", "naka", "--n", "100", "--m", "1"]);
    assert!(e["count"].as_str().unwrap().len() > 20);
}

#[test]
fn bounds_exit_three() {
    let out = gendo(&["enumerate", "--kind", "tree", "--n", "13", "--m", "1", "--list"]);
    assert_eq!(out.code, 3, "{}", out.stderr);
    assert!(out.stderr.contains("bound"), "{}", out.stderr);
    assert_eq!(gendo(&["enumerate", "--kind", "naka", "--n", "25", "--m", "1", "--list"]).code, 3);
    assert_eq!(gendo(&["enumerate", "--kind", "naka", "--n", "100000", "--m", "1"]).code, 3);
}

#[test]
fn invariants_and_star_round_trip() {
    let inv = ok(&["invariant", &fixture("branched_mixed.json")]);
    assert_eq!(inv, json!({ "n": 4, "m": 2, "word": "bwwbwwww" }));
    let inv = ok(&["invariant", &fixture("star5.json")]);
    assert_eq!(inv, json!({ "n": 5, "m": 2, "word": "bwwwbwwwww" }));

    for name in ["branched_mixed.json", "star5.json", "branched.json"] {
        let star = gendo(&["star", &fixture(name)]);
        assert_eq!(star.code, 0, "{}", star.stderr);
        let file = temp_file(&star.stdout);
        let path = file.path().to_str().unwrap();
        let cmp = ok(&["invariant", &fixture(name), path]);
        assert_eq!(cmp["equal"], true, "{name}: {cmp}");
        // Reading the representative back from stdin gives the same answer.
        let piped = gendo_with_input(&["invariant", "-"], Some(&star.stdout));
        assert_eq!(piped.json(), cmp["second"]);
    }

    let cmp = ok(&["invariant", &fixture("branched_mixed.json"), &fixture("star5.json")]);
    assert_eq!(cmp["equal"], false);
}

#[test]
fn validation_failures_exit_one() {
    // (0@u) and (0@u0) are consecutive on the walk.
    let adjacent =
        temp_file(&with_w("branched.json", json!([{ "edge": "0", "vertex": "u" }, { "edge": "0", "vertex": "u0" }])));
    let out = gendo(&["dims", adjacent.path().to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("syzygy"), "{}", out.stderr);

    let missing_label = temp_file(&with_w("branched.json", json!([{ "edge": "3", "vertex": "u" }])));
    assert_eq!(gendo(&["validate", missing_label.path().to_str().unwrap()]).code, 1);

    let text = std::fs::read_to_string(fixture("branched.json")).unwrap();
    let bad_order = temp_file(&text.replace(r#""order": ["0", "1", "2"]"#, r#""order": ["0", "1"]"#));
    assert_eq!(gendo(&["validate", bad_order.path().to_str().unwrap()]).code, 1);

    let two_exceptional = temp_file(&text.replace(r#"{"id": "u", "order""#, r#"{"id": "u", "mult": 3, "order""#));
    let out = gendo(&["validate", two_exceptional.path().to_str().unwrap()]);
    assert_eq!(out.code, 1, "{}", out.stderr);

    assert_eq!(gendo(&["ortho", "--n", "3", "--m", "1", "--d", "4"]).code, 1);
}

#[test]
fn io_and_parse_failures_exit_two() {
    assert_eq!(gendo(&["dims", "/nonexistent/tree.json"]).code, 2);
    let broken = temp_file("{ not json");
    assert_eq!(gendo(&["dims", broken.path().to_str().unwrap()]).code, 2);
    let text = std::fs::read_to_string(fixture("branched.json")).unwrap();
    let unknown = temp_file(&text.replace(r#""W": []"#, r#""W": [], "comment": "x""#));
    let out = gendo(&["validate", unknown.path().to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("comment"), "{}", out.stderr);
    assert_eq!(gendo(&["frobnicate"]).code, 2);
}

#[test]
fn presentation_outputs() {
    let q = ok(&["present", &fixture("star5.json")]);
    assert_eq!(q["vertices"].as_array().unwrap().len(), 7);
    let essential = q["arrows"].as_array().unwrap().iter().filter(|a| a["redundant"] == false).count();
    assert_eq!(essential, 7);

    let dot = gendo(&["present", &fixture("branched.json"), "--dot"]);
    assert_eq!(dot.code, 0);
    assert!(dot.stdout.starts_with("digraph"));
    assert_eq!(dot.stdout.matches(" -> ").count(), 8);
    assert!(dot.stdout.contains("// commutation: (2@u) (0@u) (1@u) = (2@v) (3@v) (2@v) (3@v)"));
    for v in ["0", "1", "2", "3"] {
        assert!(dot.stdout.contains(&format!("  \"{v}\";\n")));
    }

    let c = ok(&["cartan", &fixture("branched.json")]);
    let diag: Vec<u64> = (0..4).map(|i| c["entries"][i][i].as_u64().unwrap()).collect();
    assert_eq!(diag, [2, 2, 3, 3]);
    assert_eq!(c["symmetric"], true);

    let k = ok(&["cartan", &fixture("star5.json")]);
    let sums: Vec<u64> = k["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).sum())
        .collect();
    let mut sorted = sums.clone();
    sorted.sort();
    assert_eq!(sorted, [14, 14, 15, 15, 15, 15, 15]);

    let l = ok(&["loewy", &fixture("branched.json")]);
    assert_eq!(l["2"]["shape"], "biserial");
    assert_eq!(l["0"]["shape"], "uniserial");
    assert_eq!(l["2"]["length"], 7);
}

#[test]
fn walks() {
    let w = ok(&["walk", &fixture("branched.json")]);
    assert_eq!(w["edges"], json!(["0", "0", "2", "3", "3", "2", "1", "1"]));
    let w = ok(&["walk", &fixture("branched_mixed.json"), "--enlarged"]);
    assert_eq!(w["length"], 12);
    let mut gaps: Vec<u64> = w["marks"].as_array().unwrap().iter().map(|m| m["gap"].as_u64().unwrap()).collect();
    gaps.sort();
    assert_eq!(gaps, [5, 7]);
    assert_eq!(ok(&["walk", &fixture("branched.json"), "--enlarged"])["marks"], json!([]));
}

#[test]
fn ortho_files_have_equal_gaps() {
    let out = gendo(&["ortho", "--n", "6", "--m", "2", "--d", "4"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let file = temp_file(&out.stdout);
    let d = ok(&["dims", file.path().to_str().unwrap()]);
    // The walk gaps of W on the tree itself are the dimensions.
    assert_eq!((d["domdim"].clone(), d["gorenstein"].clone()), (json!(4), json!(4)));
    assert_eq!(ok(&["validate", file.path().to_str().unwrap()])["W"].as_array().unwrap().len(), 3);
}
