use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use eihyper::format::{parse_hypergraph, render_hypergraph};
use eihyper::{ei, generate, FamilySpec, Graph, Hypergraph};
use tempfile::TempDir;

fn eihyper(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eihyper"))
        .args(args)
        .env_remove("EIHYPER_NODE_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, h: &Hypergraph) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, render_hypergraph(h)).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn ei_iterate_on_hypercycle() {
    let dir = TempDir::new().unwrap();
    let input = write(
        &dir,
        "c10_4.txt",
        &generate(FamilySpec::hypercycle(10, 4)).unwrap(),
    );
    let output = dir.path().join("out.txt");
    let out = eihyper(&["ei", "--iterate", "2", s(&input), "-o", s(&output)]);
    assert!(out.status.success());
    assert_eq!(
        fs::read_to_string(&output).unwrap(),
        render_hypergraph(&generate(FamilySpec::hypercycle(10, 2)).unwrap())
    );
    let again = eihyper(&["ei", "--iterate", "2", s(&input)]);
    assert_eq!(stdout(&again), fs::read_to_string(&output).unwrap());
}

#[test]
fn ei_number_of_hyperpath() {
    let dir = TempDir::new().unwrap();
    let input = write(
        &dir,
        "p10_4.txt",
        &generate(FamilySpec::hyperpath(10, 4)).unwrap(),
    );
    let out = eihyper(&["ei-number", s(&input)]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "3");
}

#[test]
fn decide_p6_is_unrealizable() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "p6.txt", &generate(FamilySpec::path(6)).unwrap());
    let out = eihyper(&["decide", s(&input)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("verdict=unrealizable "));
    assert!(stdout(&out).trim_end().ends_with("witness=-"));

    let out = eihyper(&["decide", "--exhaustive", s(&input)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("verdict=unrealizable "));
}

#[test]
fn decide_writes_a_witness() {
    let dir = TempDir::new().unwrap();
    let p7 = generate(FamilySpec::path(7)).unwrap();
    let input = write(&dir, "p7.txt", &p7);
    let witness = dir.path().join("w.txt");
    let out = eihyper(&["decide", s(&input), "-o", s(&witness)]);
    assert!(out.status.success());
    let line = stdout(&out);
    assert!(line.starts_with("verdict=realizable nodes="));
    assert!(line
        .trim_end()
        .ends_with(&format!("witness={}", witness.display())));
    let w = parse_hypergraph(&fs::read_to_string(&witness).unwrap()).unwrap();
    assert!(w.is_k_uniform(3));
    assert_eq!(ei(&w), p7);

    let seq = eihyper(&["--sequential", "decide", s(&input)]);
    let par = eihyper(&["decide", s(&input)]);
    assert_eq!(stdout(&seq), stdout(&par));
}

#[test]
fn node_budget_flag_and_environment() {
    let dir = TempDir::new().unwrap();
    let input = write(&dir, "p8.txt", &generate(FamilySpec::path(8)).unwrap());
    let out = eihyper(&["decide", "--node-budget", "2", s(&input)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));

    let out = Command::new(env!("CARGO_BIN_EXE_eihyper"))
        .args(["decide", s(&input)])
        .env("EIHYPER_NODE_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(env!("CARGO_BIN_EXE_eihyper"))
        .args(["decide", "--node-budget", "1000000", s(&input)])
        .env("EIHYPER_NODE_BUDGET", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn realize_tree_reports_exceptions() {
    let dir = TempDir::new().unwrap();
    let t12 = Graph::from_labels(
        &[1, 2, 3, 4, 5, 6],
        &[(1, 2), (2, 3), (3, 4), (2, 5), (5, 6)],
    )
    .unwrap();
    let input = write(&dir, "t12.txt", t12.as_hypergraph());
    let out = eihyper(&["realize-tree", s(&input)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("T12"));
}

#[test]
fn realize_tree_writes_witness() {
    let dir = TempDir::new().unwrap();
    // spider with legs 1, 3, 4 around vertex 1
    let t = Graph::from_labels(
        &[1, 2, 3, 4, 5, 6, 7, 8, 9],
        &[
            (1, 2),
            (1, 3),
            (3, 4),
            (4, 5),
            (1, 6),
            (6, 7),
            (7, 8),
            (8, 9),
        ],
    )
    .unwrap();
    let input = write(&dir, "t.txt", t.as_hypergraph());
    let witness = dir.path().join("w.txt");
    let out = eihyper(&["realize-tree", s(&input), "-o", s(&witness)]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let w = parse_hypergraph(&fs::read_to_string(&witness).unwrap()).unwrap();
    assert_eq!(ei(&w), *t.as_hypergraph());
}

#[test]
fn generate_family_and_catalog() {
    let out = eihyper(&[
        "generate",
        "--family",
        "hypercycle",
        "--n",
        "10",
        "--d",
        "4",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        render_hypergraph(&generate(FamilySpec::hypercycle(10, 4)).unwrap())
    );

    let tree = eihyper(&["generate", "--catalog", "13"]);
    let realization = eihyper(&["generate", "--catalog", "13", "--realization"]);
    assert!(tree.status.success() && realization.status.success());
    let tree = parse_hypergraph(&stdout(&tree)).unwrap();
    let realization = parse_hypergraph(&stdout(&realization)).unwrap();
    assert_eq!(ei(&realization), tree);

    assert_eq!(
        eihyper(&["generate", "--catalog", "15"]).status.code(),
        Some(2)
    );
    assert_eq!(
        eihyper(&["generate", "--catalog", "12", "--realization"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        eihyper(&["generate", "--family", "hypercycle", "--n", "10"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn helly_exit_codes() {
    let dir = TempDir::new().unwrap();
    let triangle = Hypergraph::from_labels(&[1, 2, 3], &[&[1, 2], &[2, 3], &[1, 3]]).unwrap();
    let pair = Hypergraph::from_labels(&[1, 2, 3, 4], &[&[1, 2, 3], &[2, 3, 4]]).unwrap();
    let t = write(&dir, "triangle.txt", &triangle);
    let p = write(&dir, "pair.txt", &pair);
    for extra in [&[][..], &["--bruteforce"][..]] {
        let mut args = vec!["helly", s(&t)];
        args.extend(extra);
        let out = eihyper(&args);
        assert_eq!(out.status.code(), Some(1));
        assert_eq!(stdout(&out).trim(), "not-helly");
        let mut args = vec!["helly", s(&p)];
        args.extend(extra);
        assert!(eihyper(&args).status.success());
    }
}

#[test]
fn digraph_kinds_and_identity() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("d.txt");
    fs::write(
        &path,
        "vertices 1 2 3 5\narc 1 2\narc 1 3\narc 2 5\narc 3 5\n",
    )
    .unwrap();
    let expected = "vertices 1 2 3 5\nedge 2 3\n";
    for kind in [
        "competition",
        "common-enemy",
        "double-competition",
        "niche",
        "h-prime",
    ] {
        let out = eihyper(&["digraph", s(&path), "--kind", kind]);
        assert!(out.status.success(), "{kind}");
        assert_eq!(stdout(&out), expected, "{kind}");
    }
    let out = eihyper(&["digraph", s(&path), "--check-identity"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("agrees=true"));
}

#[test]
fn laws_sweep_lines() {
    let out = eihyper(&[
        "laws",
        "--law",
        "complete-iterate",
        "--max-n",
        "7",
        "--max-d",
        "5",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(!text.is_empty());
    assert!(text
        .lines()
        .all(|l| l.starts_with("complete-iterate ") && l.ends_with("agrees=true")));
}

#[test]
fn fixture_verification_passes() {
    let out = eihyper(&["verify-paper"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().filter(|l| l.starts_with("PASS ")).count() >= 49);
    assert!(!text.contains("FAIL"));
    assert_eq!(text, stdout(&eihyper(&["--sequential", "verify-paper"])));
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "vertices 1 2\nedge 1 3\n").unwrap();
    assert_eq!(eihyper(&["ei", s(&bad)]).status.code(), Some(2));
    assert_eq!(eihyper(&["ei", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(eihyper(&["frobnicate"]).status.code(), Some(2));

    let not_graph = write(
        &dir,
        "triple.txt",
        &Hypergraph::from_labels(&[1, 2, 3], &[&[1, 2, 3]]).unwrap(),
    );
    assert_eq!(eihyper(&["decide", s(&not_graph)]).status.code(), Some(2));
}
