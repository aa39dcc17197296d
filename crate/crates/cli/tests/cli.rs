use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> simdim::Outcome {
    let mut all = vec!["simdim"];
    all.extend_from_slice(args);
    simdim::run(all)
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = run(&all);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).display().to_string();
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", &path]);
    let out = run(&all);
    assert_eq!(out.code, 0, "{}", out.stderr);
    path
}

fn field(v: &Value, section: &str, key: &str) -> Value {
    v[section][key].clone()
}

#[test]
fn figure_values_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let fig1 = gen(dir.path(), "fig1.fam", &["figure", "fig1"]);
    let v = json(&["dims", "--oracle", &fig1]);
    assert_eq!(field(&v, "family", "sd_s"), 6);
    assert_eq!(field(&v, "family", "verdict"), "AGREE");
    assert_eq!(v["members"].as_array().unwrap().len(), 2);

    let pet = gen(dir.path(), "petersen.fam", &["figure", "petersen"]);
    assert_eq!(field(&json(&["complement-pair", &pet]), "pair", "sd_s_pair"), 9);
    assert_eq!(field(&json(&["dims", &pet]), "family", "sd_s"), 8);

    let c7 = gen(dir.path(), "c7.fam", &["cycle", "7"]);
    let v = json(&["complement-pair", &c7]);
    assert_eq!(field(&v, "pair", "sd_s_pair"), 5);
    assert_eq!(field(&v, "pair", "dim_s"), 4);
}

#[test]
fn table_and_json_agree() {
    let dir = tempfile::tempdir().unwrap();
    let f = gen(dir.path(), "stars.fam", &["stars", "4"]);
    let table = run(&["dims", &f]).stdout;
    let v = json(&["dims", &f]);
    let sd = field(&v, "family", "sd_s").as_u64().unwrap();
    assert_eq!(sd, 4);
    let line = table.lines().find(|l| l.starts_with("sd_s")).unwrap();
    assert_eq!(line.split_whitespace().nth(1), Some("4"));
}

#[test]
fn generated_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let printed = run(&["gen", "random-graph", "9", "0.3", "--seed", "5", "--with-complement"]).stdout;
    let f = gen(dir.path(), "g.fam", &["random-graph", "9", "0.3", "--seed", "5", "--with-complement"]);
    assert_eq!(std::fs::read_to_string(&f).unwrap(), printed);
    let v = json(&["dims", &f]);
    let names: Vec<_> = v["members"].as_array().unwrap().iter().map(|m| m["name"].clone()).collect();
    assert_eq!(names, ["G", "G^c"]);
}

#[test]
fn srgraph_of_a_member_and_of_the_union() {
    let dir = tempfile::tempdir().unwrap();
    let f = gen(dir.path(), "fig1.fam", &["figure", "fig1"]);
    let one = json(&["srgraph", "--graph", "G1", &f]);
    assert_eq!(field(&one, "graph", "cover"), 3);
    let union = json(&["srgraph", &f]);
    assert_eq!(field(&union, "graph", "graph"), "union");
    assert_eq!(field(&union, "graph", "cover"), 6);
    let edges = union["edges"].as_array().unwrap().len() as u64;
    assert_eq!(field(&union, "graph", "sr_edges"), edges);
}

#[test]
fn bounds_and_reduction_reports() {
    let dir = tempfile::tempdir().unwrap();
    let f = gen(dir.path(), "sc.fam", &["star-clique", "3", "2", "2", "--seed", "1"]);
    let v = json(&["bounds", &f]);
    assert_eq!(field(&v, "family", "sd_s"), 3);
    assert_eq!(field(&v, "family", "rho"), 2);
    assert!(v["bounds"].as_array().unwrap().iter().all(|r| r["holds"] == true));

    let fam = gen(dir.path(), "h.fam", &["hsp2", "fig6"]);
    let inst = Path::new(&fam).with_extension("hsp2");
    let v = json(&["verify-reduction", inst.to_str().unwrap()]);
    assert_eq!(field(&v, "reduction", "h_star"), 2);
    assert_eq!(field(&v, "reduction", "sd_s"), 3);
    assert_eq!(field(&v, "reduction", "verdict"), "PASS");
    let reversed = json(&["verify-reduction", "--order", "reversed", inst.to_str().unwrap()]);
    assert_eq!(field(&reversed, "reduction", "verdict"), "PASS");
    // The family file header records the instance.
    let text = std::fs::read_to_string(&fam).unwrap();
    assert!(text.lines().any(|l| l == "# ssdBudget 3"), "{text}");
}

#[test]
fn tree_section_for_trees() {
    let dir = tempfile::tempdir().unwrap();
    let f = gen(dir.path(), "cat.fam", &["caterpillar", "2", "0", "2"]);
    let v = json(&["complement-pair", &f]);
    let value = field(&v, "pair", "sd_s_pair");
    assert_eq!(field(&v, "tree", "refined"), value);
    assert!(field(&v, "tree", "lower").as_u64() <= value.as_u64());
}

fn exit_code(args: &[&str]) -> i32 {
    let out = Command::new(env!("CARGO_BIN_EXE_simdim")).args(args).output().unwrap();
    out.status.code().unwrap()
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let ok = gen(dir.path(), "p.fam", &["path", "5"]);
    assert_eq!(exit_code(&["dims", &ok]), 0);
    assert_eq!(exit_code(&["--help"]), 0);
    assert_eq!(exit_code(&["dims"]), 1);
    assert_eq!(exit_code(&["dims", "/nonexistent/file"]), 1);
    assert_eq!(exit_code(&["gen", "path"]), 1);

    let bad = dir.path().join("bad.fam");
    std::fs::write(&bad, "n 3\ngraph G\n0 1\n1 9\nend\n").unwrap();
    let out = run(&["dims", bad.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains(":4"), "{}", out.stderr);

    // K4 has a disconnected complement.
    let k4 = gen(dir.path(), "k4.fam", &["complete", "4"]);
    assert_eq!(exit_code(&["complement-pair", &k4]), 2);
    let split = dir.path().join("split.fam");
    std::fs::write(&split, "n 4\ngraph G\n0 1\n2 3\nend\n").unwrap();
    assert_eq!(exit_code(&["dims", split.to_str().unwrap()]), 2);
    assert_eq!(exit_code(&["srgraph", "--graph", "H", &k4]), 1);
}

#[test]
fn exact_limit_switches_rho_to_the_heuristic() {
    let dir = tempfile::tempdir().unwrap();
    let f = gen(dir.path(), "q4.fam", &["hypercube", "4"]);
    let v = json(&["--exact-limit", "8", "bounds", &f]);
    assert_eq!(field(&v, "family", "rho_exact"), false);
    let v = json(&["bounds", &f]);
    assert_eq!(field(&v, "family", "rho_exact"), true);
}
