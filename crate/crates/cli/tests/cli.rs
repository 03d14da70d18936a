use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const STAR: &str = "3\n1 2\n1 3\n";

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chordcone"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(o)))
}

fn workspace() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    let files = [
        ("star.txt", STAR),
        ("c4.txt", "4\n1 2\n2 3\n3 4\n1 4\n"),
        (
            "identity.json",
            r#"{"n": 3, "entries": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}"#,
        ),
        (
            "identity4.json",
            r#"{"n": 4, "entries": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]}"#,
        ),
        (
            "e1.json",
            r#"{"graph": "star.txt", "coords": [1, 0, 0, 0, 0]}"#,
        ),
        ("exterior.json", r#"{"coords": [1, 0, 0, 1, -1]}"#),
        (
            "offpattern.json",
            r#"{"n": 3, "entries": [[1, 0, 0], [0, 1, 1], [0, 1, 1]]}"#,
        ),
    ];
    for (name, text) in files {
        fs::write(dir.path().join(name), text).unwrap();
    }
    dir
}

#[test]
fn analyze_star() {
    let dir = workspace();
    let o = run(dir.path(), &["analyze", "star.txt", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    let r = &v["report"];
    assert_eq!(r["min_degree"], 4);
    assert_eq!(r["hom_rank"], 3);
    assert_eq!(r["rog_realizable"], false);
    assert_eq!(r["rog_witness"], 1);
    assert_eq!(r["bound_dimension"], 5);
    assert_eq!(v["cliques"], serde_json::json!([[1, 2], [1, 3]]));
    assert_eq!(v["minimality"]["minimal"], true);

    let text = stdout(&run(dir.path(), &["analyze", "star.txt"]));
    assert!(text.contains("minimal polynomial degree: 4"), "{text}");
    assert!(text.contains("homogeneous rank: 3"), "{text}");
    assert!(text.contains("ROG realizable: no"), "{text}");
}

#[test]
fn analyze_exit_codes() {
    let dir = workspace();
    let o = run(dir.path(), &["analyze", "c4.txt"]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("chordless cycle: 1 2 3 4"));
    assert_eq!(
        json(&run(dir.path(), &["analyze", "c4.txt", "--json"]))["cycle"],
        serde_json::json!([1, 2, 3, 4])
    );
    assert_eq!(code(&run(dir.path(), &["analyze", "missing.txt"])), 1);
    assert_eq!(
        code(&run(dir.path(), &["analyze", "star.txt", "missing.txt"])),
        1
    );
    assert_eq!(
        code(&run(dir.path(), &["analyze", "star.txt", "c4.txt"])),
        2
    );
    fs::write(dir.path().join("bad.txt"), "3\n1 4\n").unwrap();
    assert_eq!(code(&run(dir.path(), &["analyze", "bad.txt"])), 1);
}

#[test]
fn usage_errors_exit_one() {
    let dir = workspace();
    assert_eq!(code(&run(dir.path(), &["frobnicate"])), 1);
    assert_eq!(
        code(&run(
            dir.path(),
            &["member", "star.txt", "identity.json", "--side", "both"]
        )),
        1
    );
    assert_eq!(
        code(&run(dir.path(), &["analyze", "star.txt", "--tol", "-1"])),
        1
    );
    assert_eq!(code(&run(dir.path(), &["--help"])), 0);
}

#[test]
fn member_verdicts() {
    let dir = workspace();
    let o = run(
        dir.path(),
        &["member", "star.txt", "identity.json", "--json"],
    );
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["status"], "interior");

    let o = run(dir.path(), &["member", "star.txt", "e1.json", "--json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["status"], "boundary");

    let o = run(
        dir.path(),
        &["member", "star.txt", "exterior.json", "--json"],
    );
    assert_eq!(code(&o), 3);
    assert_eq!(json(&o)["status"], "exterior");

    let o = run(
        dir.path(),
        &["member", "star.txt", "exterior.json", "--side", "primal"],
    );
    assert_eq!(code(&o), 3);
    assert_eq!(
        code(&run(dir.path(), &["member", "star.txt", "offpattern.json"])),
        1
    );
    assert_eq!(
        code(&run(dir.path(), &["member", "c4.txt", "identity4.json"])),
        2
    );
    assert_eq!(
        code(&run(
            dir.path(),
            &["member", "c4.txt", "identity4.json", "--side", "primal"]
        )),
        0
    );
}

#[test]
fn witness_for_one_clique() {
    let dir = workspace();
    let o = run(dir.path(), &["witness", "star.txt", "--clique", "1,2"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["coords"], serde_json::json!([1.0, -1.0, 0.0, 1.0, 1.0]));
    assert_eq!(v["target_clique"], serde_json::json!([1, 2]));
    assert_eq!(
        code(&run(
            dir.path(),
            &["witness", "star.txt", "--clique", "2,3"]
        )),
        1
    );

    let all = json(&run(dir.path(), &["witness", "star.txt"]));
    assert_eq!(all["degree"], 4);
    assert_eq!(all["witnesses"].as_array().unwrap().len(), 2);
}

#[test]
fn witness_output_is_a_boundary_matrix() {
    let dir = workspace();
    run(
        dir.path(),
        &["witness", "star.txt", "--clique", "1,3", "--out", "w.json"],
    );
    let o = run(dir.path(), &["member", "star.txt", "w.json", "--json"]);
    assert_eq!(json(&o)["status"], "boundary");
}

#[test]
fn rank_of_unit_diagonal() {
    let dir = workspace();
    let o = run(dir.path(), &["rank", "star.txt", "e1.json", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["rank"], 2);
    assert_eq!(v["per_clique"]["1,2"].as_array().unwrap().len(), 2);
    assert!(stdout(&run(dir.path(), &["rank", "star.txt", "e1.json"])).starts_with("rank 2"));
}

#[test]
fn decompose_identity() {
    let dir = workspace();
    let o = run(
        dir.path(),
        &["decompose", "star.txt", "identity.json", "--json"],
    );
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
    assert_eq!(v["max_error"], 0.0);
    assert_eq!(
        code(&run(
            dir.path(),
            &["decompose", "star.txt", "exterior.json"]
        )),
        3
    );
}

#[test]
fn gen_maxdeg_has_degree_sixteen() {
    let dir = workspace();
    assert_eq!(
        code(&run(
            dir.path(),
            &["gen", "--family", "maxdeg", "--n", "7", "--out", "g7.txt"]
        )),
        0
    );
    let v = json(&run(dir.path(), &["analyze", "g7.txt", "--json"]));
    assert_eq!(v["report"]["min_degree"], 16);
    assert_eq!(v["report"]["bound_quadratic"], 16);
}

fn gen_args(family: &str, n: usize) -> Vec<String> {
    [
        "gen",
        "--family",
        family,
        "--n",
        &n.to_string(),
        "--seed",
        &(n as u64 * 31).to_string(),
    ]
    .iter()
    .map(|s| s.to_string())
    .collect()
}

#[test]
fn gen_analyze_round_trip() {
    let dir = workspace();
    for family in ["maxdeg", "cliques", "path", "chordal", "forest"] {
        for n in 3..=30 {
            let args = gen_args(family, n);
            let args: Vec<&str> = args.iter().map(String::as_str).collect();
            let o = run(dir.path(), &args);
            assert_eq!(code(&o), 0, "{family} {n}");
            let text = stdout(&o);
            let path: PathBuf = dir.path().join(format!("{family}-{n}.txt"));
            fs::write(&path, &text).unwrap();
            let edges = text.lines().skip(1).count();

            let o = run(dir.path(), &["analyze", path.to_str().unwrap(), "--json"]);
            assert_eq!(code(&o), 0, "{family} {n}");
            let v = json(&o);
            let r = &v["report"];
            assert_eq!(r["n"], n, "{family} {n}");
            assert_eq!(r["edges"], edges, "{family} {n}");
            let cliques = v["cliques"].as_array().unwrap();
            assert_eq!(r["maximal_cliques"], cliques.len());
            let sum: u64 = cliques
                .iter()
                .map(|c| c.as_array().unwrap().len() as u64)
                .sum();
            assert_eq!(r["min_degree"], sum, "{family} {n}");
            if family == "maxdeg" {
                assert_eq!(r["min_degree"], r["bound_quadratic"]);
            }
            if family == "maxdeg" || family == "cliques" || family == "forest" {
                assert_eq!(r["homogeneous_chordal"], true, "{family} {n}");
            }
        }
    }
}

#[test]
fn output_is_deterministic() {
    let dir = workspace();
    let a = run(
        dir.path(),
        &["gen", "--family", "chordal", "--n", "12", "--seed", "5"],
    );
    let b = run(
        dir.path(),
        &["gen", "--family", "chordal", "--n", "12", "--seed", "5"],
    );
    assert_eq!(a.stdout, b.stdout);
    fs::write(dir.path().join("r.txt"), &a.stdout).unwrap();
    for args in [
        &["analyze", "r.txt", "--json"][..],
        &["witness", "r.txt"][..],
        &["analyze", "r.txt"][..],
    ] {
        assert_eq!(
            run(dir.path(), args).stdout,
            run(dir.path(), args).stdout,
            "{args:?}"
        );
    }
}
