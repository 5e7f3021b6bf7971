use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn semireg(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semireg"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn gen(dir: &Path, family: &str, prefix: &str) {
    let o = semireg(dir, &["gen", family, "--out", prefix]);
    assert!(o.status.success(), "gen {family}: {}", stderr(&o));
}

#[test]
fn gen_paley_writes_pair() {
    let dir = TempDir::new().unwrap();
    let o = semireg(dir.path(), &["gen", "paley:17"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("group order 136"));
    let graph = fs::read_to_string(dir.path().join("paley_17.g")).unwrap();
    assert!(graph.starts_with("graph 17 68\n"));
    let group: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("paley_17.json")).unwrap())
            .unwrap();
    assert_eq!(group["format"], 1);
    assert_eq!(group["degree"], 17);
}

#[test]
fn gen_blowup_accepts_both_spellings() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "blowup:c5,4", "a");
    gen(dir.path(), "blowup:c5x4", "b");
    let a = fs::read_to_string(dir.path().join("a.g")).unwrap();
    assert!(a.starts_with("graph 20 80\n"));
    assert_eq!(a, fs::read_to_string(dir.path().join("b.g")).unwrap());
}

#[test]
fn gen_rejects_bad_family() {
    let dir = TempDir::new().unwrap();
    assert_eq!(
        semireg(dir.path(), &["gen", "petersen:10"]).status.code(),
        Some(1)
    );
    assert_eq!(
        semireg(dir.path(), &["gen", "paley:19"]).status.code(),
        Some(1)
    );
}

#[test]
fn find_paley_and_verify() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "paley:17", "p");
    let o = semireg(dir.path(), &["find", "--graph", "p.g", "--group", "p.json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("order: 17"));

    let o = semireg(
        dir.path(),
        &[
            "find", "--graph", "p.g", "--group", "p.json", "--json", "--out", "c.json",
        ],
    );
    assert!(o.status.success());
    let cert: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(cert["order"], 17);
    assert_eq!(cert["verified"], true);
    assert_eq!(cert["format"], 1);
    assert_eq!(
        fs::read_to_string(dir.path().join("c.json"))
            .unwrap()
            .trim(),
        stdout(&o).trim()
    );

    let o = semireg(
        dir.path(),
        &[
            "verify", "--cert", "c.json", "--graph", "p.g", "--group", "p.json",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verified: true"));
}

#[test]
fn verify_rejects_tampered_certificate() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "paley:17", "p");
    let cert = r#"{"format": 1, "degree": 17, "element": "(1,2)(3,4)", "order": 2, "cycle_length": 2, "branch_trace": [], "verified": true}"#;
    fs::write(dir.path().join("bad.json"), cert).unwrap();
    let o = semireg(
        dir.path(),
        &[
            "verify", "--cert", "bad.json", "--graph", "p.g", "--group", "p.json",
        ],
    );
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("verified: false (NotSemiregular)"));

    let cert = r#"{"element": "(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,17,16)", "order": 17, "cycle_length": 17, "branch_trace": [], "verified": true}"#;
    fs::write(dir.path().join("bad.json"), cert).unwrap();
    let o = semireg(
        dir.path(),
        &[
            "verify", "--cert", "bad.json", "--graph", "p.g", "--group", "p.json", "--json",
        ],
    );
    assert_eq!(o.status.code(), Some(4));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verified"], false);
    assert_eq!(v["reason"], "NotAutomorphism");
}

#[test]
fn find_wrong_valency_is_precondition() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "complete:7", "k7");
    let o = semireg(
        dir.path(),
        &["find", "--graph", "k7.g", "--group", "k7.json"],
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("valency 6 ≠ 8"));
    assert!(!stderr(&o).contains("panicked"));
}

#[test]
fn parse_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("bad.g"), "graph 3 2\n0 1\n").unwrap();
    fs::write(
        dir.path().join("g.json"),
        r#"{"degree": 3, "generators": ["(1,2,3)"]}"#,
    )
    .unwrap();
    let o = semireg(
        dir.path(),
        &["find", "--graph", "bad.g", "--group", "g.json"],
    );
    assert_eq!(o.status.code(), Some(1));
    let o = semireg(
        dir.path(),
        &["find", "--graph", "missing.g", "--group", "g.json"],
    );
    assert_eq!(o.status.code(), Some(1));
    fs::write(dir.path().join("g.json"), "not json").unwrap();
    let o = semireg(dir.path(), &["oracle", "--group", "g.json"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn oracle_reports_json() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "complete:9", "k9");
    let o = semireg(
        dir.path(),
        &[
            "oracle", "--group", "k9.json", "--budget", "1000000", "--json",
        ],
    );
    assert!(o.status.success());
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["format"], 1);
    assert_eq!(r["found"], "(1,2,3)(4,9,8)(5,6,7)");
    assert_eq!(r["budget_exceeded"], false);

    let o = semireg(
        dir.path(),
        &["oracle", "--group", "k9.json", "--budget", "10", "--json"],
    );
    let r: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r["budget_exceeded"], true);
    assert_eq!(r["elements_scanned"], 10);
}

#[test]
fn alternets_of_oriented_blowup() {
    let dir = TempDir::new().unwrap();
    let mut text = String::from("digraph 12 48\n");
    for u in 0..3 {
        for i in 0..4 {
            for j in 0..4 {
                text.push_str(&format!("{} {}\n", u * 4 + i, (u + 1) % 3 * 4 + j));
            }
        }
    }
    fs::write(dir.path().join("d.g"), text).unwrap();
    let o = semireg(
        dir.path(),
        &["alternets", "--digraph", "d.g", "--out", "alg.g"],
    );
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("3 alternet classes"));
    assert!(stdout(&o).contains("loosely attached: false"));
    assert_eq!(
        fs::read_to_string(dir.path().join("alg.g")).unwrap(),
        "digraph 3 3\n0 1\n1 2\n2 0\n"
    );
    let o = semireg(dir.path(), &["alternets", "--digraph", "d.g", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 3);
    assert_eq!(v["loosely_attached"], false);
}

#[test]
fn find_on_digraph() {
    let dir = TempDir::new().unwrap();
    let mut text = String::from("digraph 12 48\n");
    for u in 0..3 {
        for i in 0..4 {
            for j in 0..4 {
                text.push_str(&format!("{} {}\n", u * 4 + i, (u + 1) % 3 * 4 + j));
            }
        }
    }
    fs::write(dir.path().join("d.g"), text).unwrap();
    let group = r#"{"degree": 12, "generators": ["(1,2,3,4)", "(1,2)", "(1,5,9)(2,6,10)(3,7,11)(4,8,12)"]}"#;
    fs::write(dir.path().join("d.json"), group).unwrap();
    let o = semireg(
        dir.path(),
        &["find", "--digraph", "d.g", "--group", "d.json"],
    );
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("element: (1,2,3,4)(5,6,7,8)(9,10,11,12)"));
    assert!(stdout(&o).contains("branch_trace: NotLooselyAttached"));
}

#[test]
fn quotient_and_local_action() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "blowup:c6,4", "b");
    // kernel on the fibres of the blowup: S_4 on each fibre
    let mut gens = Vec::new();
    for u in 0..6 {
        let a = u * 4 + 1;
        gens.push(format!("\"({},{},{},{})\"", a, a + 1, a + 2, a + 3));
        gens.push(format!("\"({},{})\"", a, a + 1));
    }
    let normal = format!("{{\"degree\": 24, \"generators\": [{}]}}", gens.join(", "));
    fs::write(dir.path().join("n.json"), normal).unwrap();
    let o = semireg(
        dir.path(),
        &[
            "quotient", "--graph", "b.g", "--group", "b.json", "--normal", "n.json", "--out", "q.g",
        ],
    );
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("6 orbits, quotient valency Some(2)"));
    assert_eq!(
        fs::read_to_string(dir.path().join("q.g")).unwrap(),
        "graph 6 6\n0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n"
    );

    let o = semireg(
        dir.path(),
        &[
            "local-action",
            "--graph",
            "b.g",
            "--group",
            "b.json",
            "--json",
        ],
    );
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["degree"], 8);

    let o = semireg(
        dir.path(),
        &[
            "local-action",
            "--graph",
            "b.g",
            "--group",
            "b.json",
            "--vertex",
            "99",
        ],
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), "blowup:c6,4", "b");
    let args = ["find", "--graph", "b.g", "--group", "b.json", "--json"];
    let first = stdout(&semireg(dir.path(), &args));
    let second = stdout(&semireg(dir.path(), &args));
    assert!(!first.is_empty());
    assert_eq!(first, second);
}
