use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn prclab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prclab"))
        .args(args)
        .env_remove("PRCLAB_CONFIG")
        .output()
        .unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_prclab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn gen_prints_graph6() {
    let out = prclab(&["gen", "wheel:5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "E|fG");
    let out = prclab(&["gen", "cycle:4..6"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 3);
    let out = prclab(&["gen", "f8", "--format", "edges"]);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("8 12\n"));
}

#[test]
fn solve_examples() {
    for (graph, param, want) in [
        ("cycle:9", "prc", 5),
        ("f8", "rc", 3),
        ("complete:6", "chi", 5),
    ] {
        let out = prclab(&["solve", graph, "--param", param]);
        assert_eq!(out.status.code(), Some(0), "{graph}");
        let v = json(&out);
        assert_eq!(v["value"], want, "{graph} {param}");
        assert_eq!(v["exact"], true);
    }
}

#[test]
fn solve_reads_graph6_from_stdin_and_files() {
    let out = with_stdin(&["solve", "-", "--param", "prc"], "IheA@GUAo\n");
    assert_eq!(json(&out)["value"], 4);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.edges");
    std::fs::write(&path, "0 1\n1 2\n2 3\n").unwrap();
    let out = prclab(&["solve", path.to_str().unwrap(), "--param", "rc"]);
    assert_eq!(json(&out)["value"], 3);
}

#[test]
fn bracketed_solve_exits_two() {
    let out = prclab(&["solve", "cycle:11", "--budget-nodes", "10"]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["exact"], false);
    assert!(v["lower"].as_u64().unwrap() <= 6 && v["upper"].as_u64().unwrap() >= 6);
    assert!(!out.stderr.is_empty());
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("w7.json");
    let out = prclab(&["color", "wheel:7", "--method", "wheel"]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::write(&cert, &out.stdout).unwrap();
    let out = prclab(&["verify", "wheel:7", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["is_prc_certificate"], true);

    // Make two spokes clash.
    let mut v: Value = serde_json::from_slice(&std::fs::read(&cert).unwrap()).unwrap();
    v["edges"][1][2] = v["edges"][0][2].clone();
    std::fs::write(&cert, v.to_string()).unwrap();
    let out = prclab(&["verify", "wheel:7", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(r["is_proper"], false);
    assert!(r["proper_violation"].is_array());

    let out = prclab(&["color", "g_kt:2,2", "--method", "gkt"]);
    std::fs::write(&cert, &out.stdout).unwrap();
    let out = prclab(&["verify", "g_kt:2,2", cert.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["is_rainbow_connected"], true);
}

#[test]
fn color_methods() {
    for (graph, method, colours) in [
        ("petersen", "star", 10),
        ("cycle:9", "cycle", 5),
        ("wheel:5", "wheel", 5),
        ("g_kt:3,2", "gkt", 12),
        ("complete:5", "clique-rc", 1),
        // Petersen minus a closed neighbourhood is a 6-cycle: χ′ + 3 colours.
        ("petersen", "hamcomp", 7),
    ] {
        let out = prclab(&["color", graph, "--method", method]);
        assert_eq!(out.status.code(), Some(0), "{method}");
        assert_eq!(json(&out)["k"], colours, "{method}");
    }
    let out = prclab(&["color", "cycle:9", "--method", "hamcomp"]);
    assert_eq!(out.status.code(), Some(3));
    let out = prclab(&["color", "petersen", "--method", "wheel"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bounds_exit_codes() {
    let out = prclab(&["bounds", "petersen"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["values"]["prc"]["value"], 4);
    let out = prclab(&["bounds", "complete:4"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["violations"][0], "clique_gap");
}

#[test]
fn input_and_usage_errors_exit_three() {
    for args in [
        &["solve", "nosuch:3"][..],
        &["solve", "D?"],
        &["solve", "cycle:2"],
        &["solve", "cycle:5", "--param", "xyz"],
        &["solve", "cycle:5", "--budget-nodes", "0"],
        &["frobnicate"],
        &["verify", "cycle:5", "/nonexistent/cert.json"],
        &["sweep"],
    ] {
        let out = prclab(args);
        assert_eq!(out.status.code(), Some(3), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    assert_eq!(prclab(&["--help"]).status.code(), Some(0));
}

#[test]
fn config_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("prclab.toml");
    std::fs::write(&cfg, "node_budget = 10\n").unwrap();
    let run = |extra: &[&str], env: Option<(&str, &str)>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_prclab"));
        cmd.args(["solve", "cycle:11"])
            .args(extra)
            .env("PRCLAB_CONFIG", &cfg);
        cmd.env_remove("PRCLAB_BUDGET_NODES");
        if let Some((k, v)) = env {
            cmd.env(k, v);
        }
        cmd.output().unwrap().status.code()
    };
    // File alone: tiny budget, bracketed.
    assert_eq!(run(&[], None), Some(2));
    // Environment beats file.
    assert_eq!(
        run(&[], Some(("PRCLAB_BUDGET_NODES", "100000000"))),
        Some(0)
    );
    // Flag beats environment.
    assert_eq!(
        run(
            &["--budget-nodes", "10"],
            Some(("PRCLAB_BUDGET_NODES", "100000000"))
        ),
        Some(2)
    );
    std::fs::write(&cfg, "bogus_key = 1\n").unwrap();
    assert_eq!(run(&[], None), Some(3));
}

#[test]
fn sweep_writes_outputs_and_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("out");
    let o = out_dir.to_str().unwrap();
    let out = prclab(&[
        "sweep",
        "--family",
        "cycle:4..12",
        "--claims",
        "cycle_value",
        "--out",
        o,
    ]);
    assert_eq!(out.status.code(), Some(0));
    let s = json(&out);
    assert_eq!(s["processed"], 9);
    assert_eq!(s["claims"]["cycle_value"]["pass"], 9);
    let csv = std::fs::read_to_string(out_dir.join("summary.csv")).unwrap();
    let prc: Vec<&str> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(5).unwrap())
        .collect();
    assert_eq!(prc, ["2", "3", "3", "4", "4", "5", "5", "6", "6"]);

    // Truncate the journal as if killed, then resume.
    let journal = out_dir.join("journal.jsonl");
    let text = std::fs::read_to_string(&journal).unwrap();
    let partial: String = text.lines().take(4).map(|l| format!("{l}\n")).collect();
    std::fs::write(&journal, partial + "{\"index\": 7, \"trunc").unwrap();
    let out = prclab(&[
        "sweep",
        "--family",
        "cycle:4..12",
        "--claims",
        "cycle_value",
        "--out",
        o,
        "--resume",
    ]);
    let mut r = json(&out);
    let mut s = s;
    r["wall_secs"] = 0.into();
    s["wall_secs"] = 0.into();
    assert_eq!(r, s);
}

#[test]
fn sweep_counts_malformed_lines_and_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.g6");
    std::fs::write(&input, "Bw\nnot graph6\nC~\n").unwrap();
    let o = dir.path().join("out");
    let out = prclab(&[
        "sweep",
        "--graph6-file",
        input.to_str().unwrap(),
        "--out",
        o.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let s = json(&out);
    assert_eq!(s["malformed"], 1);
    assert_eq!(s["processed"], 2);
    let v = &s["violations"][0];
    assert_eq!(v["graph6"], "C~");
    assert!(v["reproduce"].as_str().unwrap().contains("prclab solve"));
    assert!(v["solutions"]["prc"]["certificate"]["edges"].is_array());
}
