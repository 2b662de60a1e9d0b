//! End-to-end tests of the `equator` binary.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equator"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn run_json(args: &[&str]) -> serde_json::Value {
    let output = run(args);
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_str(&stdout(&output)).expect("valid JSON")
}

#[test]
fn analyze_petersen_graph6() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("petersen.g6");
    // construct, then analyze the emitted graph6 file
    let out = run(&[
        "construct",
        "moore",
        "--delta",
        "3",
        "--girth",
        "5",
        "--g6-out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report = run_json(&["--json", "analyze", path.to_str().unwrap()]);
    assert_eq!(report["n"], 10);
    assert_eq!(report["girth"], 5);
    assert_eq!(report["diameter"], 2);
    assert_eq!(report["radius"], 2);
    assert_eq!(report["equator"], 5);
    assert_eq!(report["equatorial"], false);
}

#[test]
fn construct_analyze_round_trip_f3520() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f_3_5_20.txt");
    let out = run(&[
        "construct",
        "splice",
        "--delta",
        "3",
        "--girth",
        "5",
        "--j",
        "4",
        "-o",
        path.to_str().unwrap(),
        "--verify",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("[PASS] equator: expected 20, got 20"));
    // provenance header is embedded and the parser skips it
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# equator-tools"));
    let report = run_json(&["--json", "analyze", path.to_str().unwrap(), "--partition"]);
    assert_eq!(report["n"], 40);
    assert_eq!(report["equator"], 20);
    assert_eq!(report["equatorial"], true);
    let sizes: Vec<u64> = report["part_sizes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    let mut window_sums: Vec<u64> = (0..20)
        .map(|j| (0..5).map(|t| sizes[(j + t) % 20]).sum())
        .collect();
    window_sums.dedup();
    assert_eq!(window_sums, vec![10]);
}

#[test]
fn malformed_edge_list_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "3 2\n0 1\n3 x\n").unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "stderr was: {err}");
}

#[test]
fn verify_structure_passes_on_chain_and_fails_on_perturbed() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    run(&[
        "construct",
        "splice",
        "--delta",
        "3",
        "--girth",
        "4",
        "--j",
        "3",
        "-o",
        good.to_str().unwrap(),
    ]);
    let out = run(&["verify", "structure", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    // drop one edge: no longer equatorial
    let g = equator::io::parse_auto(&std::fs::read_to_string(&good).unwrap()).unwrap();
    let (u, v) = g.edges().next().unwrap();
    let broken = g.without_edge(u, v).unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, equator::io::write_edge_list(&broken, &[])).unwrap();
    let out = run(&["verify", "structure", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_lower_bound_on_wheel_reports_regime() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wheel.txt");
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (5, i)));
    let wheel = equator::graph::Graph::from_edges(6, edges).unwrap();
    std::fs::write(&path, equator::io::write_edge_list(&wheel, &[])).unwrap();
    let report = run_json(&["--json", "verify", "lower-bound", path.to_str().unwrap()]);
    // out of regime the theorem is vacuous: reported, exit 0
    assert_eq!(report["pass"], true);
    let detail = report["reports"][0]["clauses"][0]["detail"]
        .as_str()
        .unwrap();
    assert!(detail.contains("regime_ok=false"), "{detail}");
    assert!(detail.contains("satisfied=false"), "{detail}");
}

#[test]
fn verify_brown_properties() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("brown4.txt");
    run(&[
        "construct",
        "brown",
        "--t",
        "4",
        "-o",
        path.to_str().unwrap(),
    ]);
    let report = run_json(&[
        "--json",
        "verify",
        "brown-properties",
        path.to_str().unwrap(),
    ]);
    assert_eq!(report["pass"], true);
    let clauses = report["reports"][0]["clauses"].as_array().unwrap();
    assert_eq!(clauses.len(), 5);
}

#[test]
fn verify_characterize_and_uniqueness_and_retraction() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.txt");
    run(&[
        "construct",
        "splice",
        "--delta",
        "3",
        "--girth",
        "4",
        "--j",
        "3",
        "-o",
        path.to_str().unwrap(),
    ]);
    for theorem in ["characterize", "uniqueness", "retraction", "k-degree"] {
        let out = run(&["verify", theorem, path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{theorem}: {}", stdout(&out));
    }
}

#[test]
fn unknown_theorem_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, "3 3\n0 1\n1 2\n2 0\n").unwrap();
    let out = run(&["verify", "flat-earth", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_finds_the_wheel() {
    let dir = tempfile::tempdir().unwrap();
    let witness_dir = dir.path().join("witnesses");
    let report = run_json(&[
        "--json",
        "search",
        "--delta",
        "3",
        "--girth",
        "3",
        "--equator",
        "5",
        "--max-n",
        "7",
        "--witness-dir",
        witness_dir.to_str().unwrap(),
    ]);
    assert_eq!(report["min_order"], 6);
    let witnesses = report["witnesses_graph6"].as_array().unwrap();
    assert_eq!(witnesses.len(), 1);
    assert!(Path::new(&witness_dir).join("witness_000.g6").exists());
    assert!(Path::new(&witness_dir).join("witness_000.txt").exists());
}

#[test]
fn search_rejects_oversized_specs() {
    let out = run(&[
        "search",
        "--delta",
        "3",
        "--girth",
        "5",
        "--equator",
        "5",
        "--max-n",
        "20",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_errors_surface_family_messages() {
    let out = run(&["construct", "gadget11", "--j", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("j >= 3"));

    let out = run(&["construct", "c4free", "--delta", "5", "--j", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("prime power"));
}

#[test]
fn multiply_and_quotient_round_trip_via_files() {
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("f3412.txt");
    run(&[
        "construct",
        "splice",
        "--delta",
        "3",
        "--girth",
        "4",
        "--j",
        "3",
        "-o",
        base.to_str().unwrap(),
    ]);
    let doubled = dir.path().join("doubled.txt");
    let out = run(&[
        "construct",
        "multiply",
        "--input",
        base.to_str().unwrap(),
        "--j",
        "2",
        "-o",
        doubled.to_str().unwrap(),
        "--verify",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let back = dir.path().join("back.txt");
    let out = run(&[
        "construct",
        "quotient",
        "--input",
        doubled.to_str().unwrap(),
        "-o",
        back.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let g = equator::io::parse_auto(&std::fs::read_to_string(&back).unwrap()).unwrap();
    assert!(equator::iso::are_isomorphic(
        &g,
        &equator::graph::Graph::complete_bipartite(3, 3)
    ));
}

#[test]
fn every_family_passes_its_own_verification() {
    // construct --verify re-derives each family's formula invariants
    let dir = tempfile::tempdir().unwrap();
    let base = dir.path().join("base.txt");
    run(&[
        "construct",
        "splice",
        "--delta",
        "3",
        "--girth",
        "4",
        "--j",
        "3",
        "-o",
        base.to_str().unwrap(),
    ]);
    let cases: Vec<Vec<&str>> = vec![
        vec![
            "construct",
            "splice",
            "--delta",
            "3",
            "--girth",
            "5",
            "--j",
            "3",
            "--verify",
        ],
        vec![
            "construct",
            "splice",
            "--delta",
            "4",
            "--girth",
            "5",
            "--j",
            "3",
            "--cage",
            "--verify",
        ],
        vec![
            "construct",
            "c4free",
            "--delta",
            "3",
            "--j",
            "3",
            "--verify",
        ],
        vec!["construct", "gadget11", "--j", "3", "--verify"],
        vec!["construct", "brown", "--t", "3", "--verify"],
        vec!["construct", "incidence", "--t", "3", "--verify"],
        vec![
            "construct",
            "moore",
            "--delta",
            "7",
            "--girth",
            "5",
            "--verify",
        ],
        vec![
            "construct",
            "cage",
            "--delta",
            "6",
            "--girth",
            "5",
            "--verify",
        ],
        vec![
            "construct",
            "layered3",
            "--q",
            "12",
            "--sizes",
            "1,3,1",
            "--verify",
        ],
        vec![
            "construct",
            "layered4",
            "--q",
            "16",
            "--sizes",
            "1,2,3,2",
            "--verify",
        ],
    ];
    for mut args in cases {
        let out_path = dir.path().join("out.txt");
        let out_str = out_path.to_str().unwrap().to_owned();
        args.push("-o");
        args.push(&out_str);
        let out = run(&args);
        assert!(
            out.status.success(),
            "{args:?} failed:\n{}\n{}",
            stdout(&out),
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(!stdout(&out).contains("FAIL"), "{args:?}: {}", stdout(&out));
    }
    // multiply + quotient, driven through files
    let mult = dir.path().join("mult.txt");
    let out = run(&[
        "construct",
        "multiply",
        "--input",
        base.to_str().unwrap(),
        "--j",
        "2",
        "-o",
        mult.to_str().unwrap(),
        "--verify",
    ]);
    assert!(out.status.success());
    let out = run(&[
        "construct",
        "quotient",
        "--input",
        mult.to_str().unwrap(),
        "-o",
        dir.path().join("q.txt").to_str().unwrap(),
        "--verify",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn capped_analysis_of_large_chain() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f75.txt");
    let out = run(&[
        "construct",
        "splice",
        "--delta",
        "7",
        "--girth",
        "5",
        "--j",
        "3",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report = run_json(&["--json", "analyze", path.to_str().unwrap(), "--cap", "15"]);
    assert_eq!(report["n"], 150);
    assert_eq!(report["equator"], 15);
}
