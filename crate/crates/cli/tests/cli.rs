use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;
use sqsum_cli::{run, Io, EXIT_OK, EXIT_OPERATIONAL, EXIT_USAGE};
use sqsum_core::graph::parse_graph6;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn sqsum_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        std::iter::once("sqsum").chain(args.iter().copied()),
        &mut Io {
            stdin: &mut input,
            stdout: &mut out,
            stderr: &mut err,
        },
    );
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn sqsum(args: &[&str]) -> Output {
    sqsum_with_stdin(args, "")
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", o.stdout))
}

fn verdicts<'a>(record: &'a Value, check: &str) -> Vec<&'a Value> {
    record["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|v| v["check"] == check)
        .collect()
}

fn summary<'a>(report: &'a Value, check: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["check"] == check)
        .unwrap()
}

#[test]
fn analyze_triangle() {
    let o = sqsum(&["analyze", "Bw"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let r = json(&o);
    assert_eq!(
        (r["n"].as_u64(), r["m"].as_u64(), r["t"].as_u64()),
        (Some(3), Some(3), Some(1))
    );
    assert_eq!(r["omega"], 3);
    assert!((r["lambda1"].as_f64().unwrap() - 2.0).abs() < 1e-9);
    assert_eq!(r["eigenvalues"].as_array().unwrap().len(), 3);
    assert_eq!(verdicts(&r, "bn")[0]["outcome"], "not_applicable");
    assert_eq!(verdicts(&r, "t11")[0]["outcome"], "holds");
}

#[test]
fn analyze_edgeless_marks_conjectures_not_applicable() {
    let r = json(&sqsum(&["analyze", "A?"]));
    assert_eq!(r["m"], 0);
    for check in ["bn", "general"] {
        let v = verdicts(&r, check);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0]["outcome"], "not_applicable", "{check}");
    }
    assert!(r["lambda_ell"].is_null());
}

#[test]
fn analyze_malformed_is_usage_error() {
    for bad in ["B!", "~~", "Bww"] {
        let o = sqsum(&["analyze", bad]);
        assert_eq!(o.code, EXIT_USAGE, "{bad}");
        assert!(o.stdout.is_empty());
        assert!(o.stderr.starts_with("error:"), "{}", o.stderr);
    }
}

#[test]
fn analyze_files_and_stdin() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.txt");
    std::fs::write(&path, "# the 4-cycle\n4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let r = json(&sqsum(&["analyze", path.to_str().unwrap()]));
    assert_eq!(
        (r["n"].as_u64(), r["m"].as_u64(), r["omega"].as_u64()),
        (Some(4), Some(4), Some(2))
    );

    let r = json(&sqsum_with_stdin(&["analyze", "-"], "DQc\n"));
    assert_eq!(r["graph6"], "DQc");

    let o = sqsum(&["analyze", "Bw", "--format", "csv", "--checks", "t11,bn"]);
    let lines: Vec<&str> = o.stdout.lines().collect();
    assert_eq!(
        lines[0],
        "graph6,n,m,t,omega,nplus,lambda1,lambda2,Lell,check,holds,margin"
    );
    assert_eq!(
        lines[1..],
        [
            "Bw,3,3,1,3,1,2,-1,1.33333333333,t11,true,0",
            "Bw,3,3,1,3,1,2,-1,1.33333333333,bn,na,"
        ]
    );
}

#[test]
fn verify_skips_complete_graphs_for_bn() {
    let corpus = "DF{\nD~{\n"; // K_5 minus an edge, K_5
    let o = sqsum_with_stdin(&["verify", "-", "--checks", "bn"], corpus);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let s = json(&o);
    assert_eq!(s["graphs"], 2);
    let bn = summary(&s, "bn");
    assert_eq!(
        (bn["holds"].as_u64(), bn["not_applicable"].as_u64()),
        (Some(1), Some(1))
    );
}

#[test]
fn verify_fan_corpus_under_improved_bound() {
    let generated = sqsum(&["generate", "fan:51", "--count", "51"]);
    assert_eq!(generated.stdout.lines().count(), 51);
    let o = sqsum_with_stdin(
        &[
            "verify",
            "-",
            "--checks",
            "thm14",
            "--c",
            "0.5",
            "--eps",
            "0.5",
            "--k",
            "1",
            "--workers",
            "4",
        ],
        &generated.stdout,
    );
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let thm14 = summary(&json(&o), "thm14").clone();
    assert_eq!((thm14["holds"].as_u64(), thm14["fails"].as_u64()), (Some(51), Some(0)));
}

#[test]
fn verify_with_named_family() {
    let generated = sqsum(&["generate", "stacked_planar:150", "--count", "5", "--seed", "3"]);
    let o = sqsum_with_stdin(
        &["verify", "-", "--family", "planar", "--checks", "thm16,general"],
        &generated.stdout,
    );
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let s = json(&o);
    assert_eq!(summary(&s, "thm16")["holds"], 5);
    assert_eq!(summary(&s, "general")["holds"], 5);
}

#[test]
fn verify_errors() {
    assert_eq!(sqsum(&["verify", "/nonexistent/corpus.g6"]).code, EXIT_OPERATIONAL);
    assert_eq!(
        sqsum_with_stdin(&["verify", "-"], "Bw\nnot graph6\n").code,
        EXIT_OPERATIONAL
    );
    assert_eq!(sqsum(&["verify", "all3", "--checks", "t11,nope"]).code, EXIT_USAGE);
    assert_eq!(sqsum(&["verify", "all3", "--c", "0.5"]).code, EXIT_USAGE);
    assert_eq!(
        sqsum(&["verify", "all3", "--family", "planar", "--c", "1", "--eps", "1"]).code,
        EXIT_USAGE
    );
    assert_eq!(sqsum(&["verify", "all3", "--family", "book:1"]).code, EXIT_USAGE);
    assert_eq!(sqsum(&["verify", "all3", "--c", "-1", "--eps", "0.5"]).code, EXIT_USAGE);
    assert_eq!(sqsum(&["verify", "all3", "--zero-tol-scale", "0"]).code, EXIT_USAGE);
    assert_eq!(sqsum(&["verify", "all3", "--k", "0"]).code, EXIT_USAGE);
}

#[test]
fn verify_csv_goes_to_out_and_summary_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let o = sqsum(&[
        "verify",
        "all3",
        "--format",
        "csv",
        "--checks",
        "bn,thm31",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.is_empty());
    let summary: Value = serde_json::from_str(&o.stderr).unwrap();
    assert_eq!(summary["graphs"], 8);
    let csv = std::fs::read_to_string(path).unwrap();
    assert_eq!(csv.lines().count(), 1 + 8 * 2);
}

#[test]
fn generate_examples() {
    let o = sqsum(&["generate", "fan:5"]);
    let g = parse_graph6(o.stdout.trim()).unwrap();
    assert_eq!((g.n(), g.m()), (5, 7));

    assert_eq!(sqsum(&["generate", "cycle:3"]).stdout, "Bw\n");

    let a = sqsum(&["generate", "gnp:10:0.5", "--seed", "7", "--count", "3"]).stdout;
    let b = sqsum(&["generate", "gnp:10:0.5:7", "--count", "3"]).stdout;
    assert_eq!(a.lines().count(), 3);
    assert_eq!(a, b);
    assert_eq!(
        a,
        sqsum(&["generate", "gnp:10:0.5", "--seed", "7", "--count", "3"]).stdout
    );
}

#[test]
fn generate_errors() {
    assert_eq!(sqsum(&["generate", "fan:2"]).code, EXIT_USAGE);
    assert_eq!(sqsum(&["generate", "dodecahedron"]).code, EXIT_USAGE);
    assert_eq!(sqsum(&["generate", "petersen", "--count", "2"]).code, EXIT_USAGE);
    assert_eq!(
        sqsum(&["generate", "fan:5", "--out", "/nonexistent/dir/out.g6"]).code,
        EXIT_OPERATIONAL
    );
}

#[test]
fn scan_examples() {
    let o = sqsum(&[
        "scan",
        "--n",
        "8",
        "--budget",
        "10000",
        "--objective",
        "bn",
        "--seed",
        "1",
        "--workers",
        "4",
    ]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let r = json(&o);
    let top = r["top"].as_array().unwrap();
    assert_eq!(top.len(), 10);
    assert!(top.iter().all(|h| h["margin"].as_f64().unwrap() >= 0.0));
    assert!(r["violations"].as_array().unwrap().is_empty());

    let o = sqsum(&[
        "scan",
        "--n",
        "8",
        "--budget",
        "10000",
        "--objective",
        "bn",
        "--seed",
        "1",
        "--workers",
        "1",
    ]);
    assert_eq!(json(&o), r);

    // n = 4 with enough samples to see all 64 labeled graphs
    let r = json(&sqsum(&[
        "scan",
        "--n",
        "4",
        "--budget",
        "3000",
        "--objective",
        "general",
    ]));
    assert_eq!(r["distinct"], 64);
    assert_eq!(r["top"][0]["margin"], 0.0);
    let c4 = json(&sqsum(&["analyze", "Cr", "--checks", "general"]));
    assert_eq!(c4["m"], 4);
    assert!(c4["verdicts"][0]["margin"].as_f64().unwrap().abs() <= 1e-9);

    assert_eq!(sqsum(&["scan", "--n", "8", "--objective", "foo"]).code, EXIT_USAGE);
    assert_eq!(sqsum(&["scan", "--n", "65", "--objective", "bn"]).code, EXIT_USAGE);
    assert_eq!(
        sqsum(&["scan", "--n", "8", "--budget", "0", "--objective", "bn"]).code,
        EXIT_USAGE
    );
}

#[test]
fn thresholds_table() {
    let o = sqsum(&["thresholds"]);
    assert_eq!(o.code, EXIT_OK);
    let rows: Vec<Vec<&str>> = o
        .stdout
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().collect())
        .collect();
    let edges: Vec<(&str, &str)> = rows.iter().map(|r| (r[0], *r.last().unwrap())).collect();
    assert_eq!(
        edges,
        [
            ("planar", "405"),
            ("outerplanar", "76"),
            ("book:2", "34"),
            ("cycle:4", "45")
        ]
    );

    let r: Value = serde_json::from_str(&sqsum(&["thresholds", "--format", "json", "--book-k", "3"]).stdout).unwrap();
    assert_eq!(r[2]["class"], "book:3");
    assert_eq!(r[2]["omega_cap"], 4);
    assert_eq!(sqsum(&["thresholds", "--cycle-k", "3"]).code, EXIT_USAGE);
}

#[test]
fn help_and_unknown_commands() {
    let o = sqsum(&["--help"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("thresholds"));
    assert_eq!(sqsum(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(sqsum(&[]).code, EXIT_USAGE);
}

#[test]
fn binary_exit_codes_and_stdin() {
    let bin = env!("CARGO_BIN_EXE_sqsum");
    let status = Command::new(bin)
        .args(["analyze", "B!"])
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(EXIT_USAGE));

    let mut child = Command::new(bin)
        .args(["verify", "-", "--checks", "t11,thm31"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Bw\nCr\nDQc\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let s: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(s["graphs"], 3);
}
