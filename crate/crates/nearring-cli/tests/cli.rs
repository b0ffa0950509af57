//! End-to-end tests against the compiled `nearring` binary: exit codes,
//! JSON round trips, census reproducibility and seeded sampling.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nearring"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

/// Write `content` to a fresh file under the target tmp dir and return its path.
fn fixture(name: &str, content: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    fs::create_dir_all(&dir).expect("tmp dir");
    let path = dir.join(name);
    fs::write(&path, content).expect("fixture written");
    path
}

fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

fn mul_map(n: usize, u: usize) -> Vec<usize> {
    (0..n).map(|k| (k * u) % n).collect()
}

fn z7_scheme_json() -> String {
    json!({
        "group": { "order": 7, "table": cyclic_table(7) },
        "autos": [mul_map(7, 1), mul_map(7, 6)],
        "phi": [0, 1, 6, 0, 0, 1, 6],
    })
    .to_string()
}

#[test]
fn classify_z7_summary_and_exit_zero() {
    let path = fixture("z7_scheme.json", &z7_scheme_json());
    let out = run(&["classify", path.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout_of(&out);
    assert!(text.contains("2-primitive"), "got: {text}");
    assert!(text.contains("no identity"), "got: {text}");
    assert!(text.contains("|N|=7"), "got: {text}");
}

#[test]
fn build_phi_then_classify_z15() {
    let units = [1usize, 2, 4, 7, 8, 11, 13, 14];
    let recipe = json!({
        "group": { "order": 15, "table": cyclic_table(15) },
        "autos": units.iter().map(|&u| mul_map(15, u)).collect::<Vec<_>>(),
        "g": units,
        "reps": [1],
        "j": [0],
    })
    .to_string();
    let recipe_path = fixture("z15_recipe.json", &recipe);
    let out = run(&["--json", "build-phi", recipe_path.to_str().unwrap()]);
    assert!(out.status.success());
    let scheme_path = fixture("z15_scheme.json", stdout_of(&out).trim());

    let out = run(&["classify", scheme_path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("1-primitive"), "got: {text}");
    assert!(text.contains("not 2-primitive"), "got: {text}");
    assert!(text.contains("|N|=15"), "got: {text}");
}

#[test]
fn corrupted_phi_exits_one() {
    // phi is not idempotent on its image: phi(phi(3)) = 0 != 3's image 2
    let bad = json!({
        "group": { "order": 4, "table": cyclic_table(4) },
        "autos": [mul_map(4, 1)],
        "phi": [0, 1, 0, 2],
    })
    .to_string();
    let path = fixture("z4_bad_scheme.json", &bad);
    let out = run(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn malformed_json_exits_one() {
    let path = fixture("garbage.json", "{ not json");
    for cmd in ["classify", "axioms", "build-phi", "build-nearring", "embed"] {
        let out = run(&[cmd, path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(1), "command {cmd}");
    }
}

#[test]
fn over_budget_nearring_exits_three() {
    // Z8, trivial S, phi = id: |N| = 8^7 blows any reasonable cap.
    let scheme = json!({
        "group": { "order": 8, "table": cyclic_table(8) },
        "autos": [mul_map(8, 1)],
        "phi": (0..8).collect::<Vec<usize>>(),
    })
    .to_string();
    let path = fixture("z8_huge_scheme.json", &scheme);
    let out = run(&["build-nearring", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn build_nearring_dump_feeds_axioms() {
    let scheme = json!({
        "group": { "order": 4, "table": cyclic_table(4) },
        "autos": [mul_map(4, 1)],
        "phi": [0, 1, 0, 0],
    })
    .to_string();
    let scheme_path = fixture("z4_small_scheme.json", &scheme);
    let out = run(&["--json", "build-nearring", scheme_path.to_str().unwrap()]);
    assert!(out.status.success());
    let dump: Value = serde_json::from_str(stdout_of(&out).trim()).expect("dump json");
    assert_eq!(dump["elements"].as_array().unwrap().len(), 4);

    let dump_path = fixture("z4_small_dump.json", &dump.to_string());
    let out = run(&["--json", "axioms", dump_path.to_str().unwrap()]);
    assert!(out.status.success());
    let report: Value = serde_json::from_str(stdout_of(&out).trim()).expect("report json");
    assert_eq!(report["pass"], json!(true));
    assert_eq!(report["triples_checked"], json!(64));
}

#[test]
fn embed_recovers_z4_small_scheme() {
    let doc = json!({
        "group": { "order": 4, "table": cyclic_table(4) },
        "elements": [[0, 0, 0, 0], [0, 1, 0, 0], [0, 2, 0, 0], [0, 3, 0, 0]],
    })
    .to_string();
    let path = fixture("z4_small_transformation.json", &doc);
    let out = run(&["--json", "embed", path.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(stdout_of(&out).trim()).expect("embed json");
    assert_eq!(v["scheme"]["phi"], json!([0, 1, 0, 0]));
    assert_eq!(v["pairing"].as_array().unwrap().len(), 4);
}

#[test]
fn embed_rejects_non_type1_nearring() {
    // All constant-on-{1,3} maps vanishing on {0,2}: {0,2} is an N-subgroup,
    // the action is not type 1, so there is nothing to embed.
    let doc = json!({
        "group": { "order": 4, "table": cyclic_table(4) },
        "elements": [[0, 0, 0, 0], [0, 2, 0, 2]],
    })
    .to_string();
    let path = fixture("z4_constants_transformation.json", &doc);
    let out = run(&["--json", "embed", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn search_bound_one_is_empty() {
    let out = run(&["--max-group-order", "1", "search"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).trim().is_empty());
}

#[test]
fn search_bound_four_finds_both_z4_schemes_and_census_refeeds() {
    let out = run(&["--max-group-order", "4", "--sequential", "search"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).expect("census line is standalone JSON"))
        .collect();
    assert!(!lines.is_empty());

    let phi_of = |v: &Value| v["verdict"]["scheme"]["phi"].clone();
    let small = lines
        .iter()
        .find(|v| phi_of(v) == json!([0, 1, 0, 0]))
        .expect("(0,1,0,0) scheme in census");
    let large = lines
        .iter()
        .find(|v| phi_of(v) == json!([0, 1, 2, 0]))
        .expect("(0,1,2,0) scheme in census");
    assert_eq!(small["verdict"]["direct"]["types"]["type2"], json!(false));
    assert_eq!(large["verdict"]["direct"]["types"]["type2"], json!(true));

    // Re-feeding a census line's scheme reproduces its verdict bit-for-bit.
    for (name, line) in [("small", small), ("large", large)] {
        let scheme = line["verdict"]["scheme"].to_string();
        let path = fixture(&format!("census_refeed_{name}.json"), &scheme);
        let out = run(&["--json", "classify", path.to_str().unwrap()]);
        assert!(out.status.success());
        let reclassified: Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
        assert_eq!(
            reclassified.to_string(),
            line["verdict"].to_string(),
            "census line for {name} scheme not reproduced"
        );
    }
}

#[test]
fn search_bound_seven_contains_two_primitive_z7() {
    let out = run(&["--max-group-order", "7", "--sequential", "search"]);
    assert!(out.status.success());
    let found = stdout_of(&out).lines().any(|l| {
        let v: Value = serde_json::from_str(l).expect("census line");
        v["verdict"]["n_size"] == json!(7)
            && v["verdict"]["two_primitive"] == json!(true)
            && v["verdict"]["scheme"]["group"]["order"] == json!(7)
    });
    assert!(found, "no 2-primitive 7-element near-ring on a group of order 7");
}

#[test]
fn sampled_search_is_seed_deterministic() {
    let args = ["--max-group-order", "4", "--sequential", "--seed", "17", "search", "--sample", "5"];
    let first = stdout_of(&run(&args));
    let second = stdout_of(&run(&args));
    assert_eq!(first, second);
    assert_eq!(first.lines().count(), 5);
    let other = stdout_of(&run(&[
        "--max-group-order", "4", "--sequential", "--seed", "18", "search", "--sample", "5",
    ]));
    assert_ne!(first, other);
}

#[test]
fn paper_examples_pass_in_both_formats() {
    let out = run(&["paper-examples"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.lines().count() >= 20);
    assert!(text.lines().all(|l| l.contains(": pass (")), "got: {text}");

    let out = run(&["--json", "paper-examples"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(stdout_of(&out).trim()).expect("claims json");
    assert_eq!(v["pass"], json!(true));
    assert!(v["claims"].as_array().unwrap().len() >= 20);
}
