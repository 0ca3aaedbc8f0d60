use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_perfdiv");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
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

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_figure1() {
    let o = run(&["check", "--name", "figure1"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("perfect: no (odd hole 0-1-2-3-5)"), "{s}");
    assert!(
        s.contains("minimal clique cutsets: {0,5} {4,5} {4,9}"),
        "{s}"
    );
    assert!(s.contains("p5-free: no"), "{s}");
}

#[test]
fn check_c5_and_k2() {
    let s = stdout(&run(&["check", "--name", "c5"]));
    assert!(s.contains("perfectly divisible: yes"));
    assert!(s.contains("2-divisible: no"));
    let s = stdout(&run(&["check", "--edges", "2:0-1"]));
    assert!(s.contains("omega: 2") && s.contains("chi: 2") && s.contains("perfect: yes"));
}

#[test]
fn check_json_reparses() {
    let o = run(&["check", "--name", "petersen", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 10);
    assert_eq!(v["chi"]["value"], 3);
    assert_eq!(v["perfectly_divisible"]["holds"], true);
    let colors: Vec<usize> = serde_json::from_value(v["chi"]["witness"]["colors"].clone()).unwrap();
    let g = perfdiv::catalog::petersen();
    assert!(g.edges().all(|(u, w)| colors[u] != colors[w]));
}

#[test]
fn check_rejects_bad_input() {
    for args in [
        &["check", "not-graph6"][..],
        &["check", "--name", "k4"],
        &["check", "--edges", "3:0-5"],
        &["check", "--edges", "nonsense"],
        &["check"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn scan_examples() {
    let o = run(&["scan", "--conjecture", "C4.1", "--all-n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("scanned 1253,"));
    assert_eq!(
        run(&["scan", "--conjecture", "T1.4", "--all-n", "7"])
            .status
            .code(),
        Some(0)
    );
    // C5 satisfies both directions of C4.6
    let c5 = perfdiv::write_graph6(&perfdiv::catalog::cycle(5).unwrap());
    let o = run_stdin(
        &["scan", "--conjecture", "C4.6", "--input", "-"],
        &format!("{c5}\n"),
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("scanned 1,"));
}

#[test]
fn scan_input_file_and_errors() {
    let dir = std::env::temp_dir().join(format!("perfdiv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.g6");
    std::fs::write(&path, "IhaWOC@BG\n@@@\n").unwrap();
    let o = run(&[
        "scan",
        "--conjecture",
        "C4.2",
        "--input",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["scanned"], 1);
    assert_eq!(v["parse_errors"][0]["line"], 2);
    assert_eq!(
        run(&[
            "scan",
            "--conjecture",
            "C4.2",
            "--input",
            "/nonexistent/x.g6"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&["scan", "--conjecture", "X9.9", "--all-n", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["scan", "--conjecture", "C4.1", "--all-n", "8"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["scan", "--conjecture", "C4.1"]).status.code(),
        Some(2)
    );
}

#[test]
fn scan_over_cap_is_skipped() {
    let big = perfdiv::write_graph6(&perfdiv::Graph::empty(20).unwrap());
    let o = run_stdin(
        &["scan", "--conjecture", "C4.1", "--input", "-"],
        &format!("{big}\n"),
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("scanned 0, skipped 1"));
}

#[test]
fn gen_examples() {
    assert_eq!(stdout(&run(&["gen", "--all-n", "4"])).lines().count(), 11);
    let a = stdout(&run(&["gen", "--random", "10", "0.5", "42"]));
    let b = stdout(&run(&["gen", "--random", "10", "0.5", "42"]));
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 1);
    let glued = stdout(&run(&["gen", "--glued", "4", "4", "2", "0.5", "7"]));
    assert_eq!(glued.lines().count(), 1);
    let g = perfdiv::parse_graph6(glued.trim()).unwrap();
    assert!(perfdiv::decomposition::find_clique_cutset(&g).is_some());
    for args in [
        &["gen", "--all-n", "8"][..],
        &["gen", "--random", "5", "1.5", "1"],
        &["gen", "--glued", "0", "4", "2", "0.5", "1"],
        &["gen", "--random", "x", "0.5", "1"],
        &["gen"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn cap_env_override() {
    let o = Command::new(BIN)
        .args(["check", "--name", "petersen"])
        .env("PERFDIV_CAP", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cap"));
}

#[test]
fn list_has_fourteen_statements() {
    assert_eq!(stdout(&run(&["list"])).lines().count(), 14);
}
