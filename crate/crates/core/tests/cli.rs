//! End-to-end tests of the binary: flags, files, and the exit-code contract
//! (0 ok, 1 verification/critical failure, 2 input error, 3 exhaustion).

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn pancyc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pancyc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pancyc-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

const TRIANGLE: &str = "mpt 3\nparts 1 1 1\narc 0 1\narc 1 2\narc 2 0\n";
const TRANSITIVE: &str = "mpt 3\nparts 1 1 1\narc 0 1\narc 0 2\narc 1 2\n";
const FOUR: &str = "mpt 4\nparts 1 1 1 1\narc 0 1\narc 0 2\narc 1 2\narc 1 3\narc 2 3\narc 3 0\n";

#[test]
fn gen_writes_a_strong_parseable_instance() {
    let dir = scratch("gen");
    let file = dir.join("t.mpt");
    let out = pancyc(&[
        "gen",
        "--parts",
        "1,1,1",
        "--seed",
        "7",
        "--strong",
        "-o",
        file.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = fs::read_to_string(&file).unwrap();
    assert!(text.starts_with("mpt 3\nparts 1 1 1\n"));
    // round-trip: solve accepts what gen wrote
    let solve = pancyc(&["solve", file.to_str().unwrap()]);
    assert_eq!(code(&solve), 0, "{}", stderr(&solve));
}

#[test]
fn gen_strong_exhausts_on_single_part() {
    let out = pancyc(&["gen", "--parts", "5", "--strong", "--max-attempts", "40"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn gen_rejects_bad_parts() {
    let out = pancyc(&["gen", "--parts", "1,0,1"]);
    assert_eq!(code(&out), 2);
    let out = pancyc(&["gen"]);
    assert_eq!(code(&out), 2); // clap: missing required flag
}

#[test]
fn solve_verify_round_trip() {
    let dir = scratch("solve");
    let inst = dir.join("t.mpt");
    let cert = dir.join("t.cert.json");
    fs::write(&inst, TRIANGLE).unwrap();
    let out = pancyc(&[
        "solve",
        inst.to_str().unwrap(),
        "-o",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("full-spectrum arcs: 3"));
    let verify = pancyc(&["verify", inst.to_str().unwrap(), cert.to_str().unwrap()]);
    assert_eq!(code(&verify), 0, "{}", stderr(&verify));
    assert!(stdout(&verify).contains("certificate ok"));
}

#[test]
fn solve_rejects_non_strong_input() {
    let dir = scratch("nonstrong");
    let inst = dir.join("t.mpt");
    fs::write(&inst, TRANSITIVE).unwrap();
    let out = pancyc(&["solve", inst.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not strong"));
}

#[test]
fn solve_inline_certificate_goes_to_stdout() {
    let dir = scratch("inline");
    let inst = dir.join("t.mpt");
    fs::write(&inst, FOUR).unwrap();
    let out = pancyc(&["solve", inst.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let body = stdout(&out);
    assert!(body.trim_start().starts_with('{'), "stdout holds the JSON");
    assert!(body.contains("\"c\": 4"));
}

#[test]
fn verify_flags_corruption_and_bad_files() {
    let dir = scratch("verify");
    let inst = dir.join("t.mpt");
    let cert = dir.join("t.cert.json");
    fs::write(&inst, TRIANGLE).unwrap();
    let out = pancyc(&[
        "solve",
        inst.to_str().unwrap(),
        "-o",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);

    // corrupt one vertex in the certificate
    let good = fs::read_to_string(&cert).unwrap();
    let bad = good.replacen("2", "1", 1);
    let badfile = dir.join("bad.cert.json");
    fs::write(&badfile, bad).unwrap();
    let out = pancyc(&["verify", inst.to_str().unwrap(), badfile.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("INVALID"));

    // unparseable certificate
    fs::write(&badfile, "not json").unwrap();
    let out = pancyc(&["verify", inst.to_str().unwrap(), badfile.to_str().unwrap()]);
    assert_eq!(code(&out), 2);

    // certificate for a different instance
    let other = dir.join("other.mpt");
    fs::write(&other, FOUR).unwrap();
    let out = pancyc(&["verify", other.to_str().unwrap(), cert.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
}

#[test]
fn verify_machine_output_is_json() {
    let dir = scratch("machine");
    let inst = dir.join("t.mpt");
    let cert = dir.join("t.cert.json");
    fs::write(&inst, TRIANGLE).unwrap();
    pancyc(&["solve", inst.to_str().unwrap(), "-o", cert.to_str().unwrap()]);
    let good = fs::read_to_string(&cert).unwrap();
    fs::write(&cert, good.replacen("2", "1", 1)).unwrap();
    let out = pancyc(&[
        "--machine",
        "verify",
        inst.to_str().unwrap(),
        cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 1);
    let parsed: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(parsed.is_array());
}

#[test]
fn spectrum_reports_rows_and_single_arcs() {
    let dir = scratch("spectrum");
    let inst = dir.join("t.mpt");
    fs::write(&inst, FOUR).unwrap();
    let out = pancyc(&["spectrum", inst.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let body = stdout(&out);
    assert!(body.contains("full-spectrum arcs (3..=4): 3"));

    let out = pancyc(&["spectrum", inst.to_str().unwrap(), "--arc", "1,2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().next().unwrap(), "arc 1->2: {4}");

    let out = pancyc(&["spectrum", inst.to_str().unwrap(), "--arc", "2,1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn hunt_exhaustive_triangle_ledger() {
    let dir = scratch("hunt");
    let report = dir.join("ledger.txt");
    let out = pancyc(&[
        "hunt",
        "--parts",
        "1,1,1",
        "--exhaustive",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let ledger = fs::read_to_string(&report).unwrap();
    assert!(ledger.contains("scanned: 8"));
    assert!(ledger.contains("strong: 2"));
    assert!(ledger.contains("min full-spectrum count: 3"));
    assert!(ledger.contains("verdict: ok"));

    // ledgers append: a second run keeps the first block intact
    let out = pancyc(&[
        "hunt",
        "--parts",
        "1,1,1",
        "--exhaustive",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let twice = fs::read_to_string(&report).unwrap();
    assert_eq!(twice, format!("{ledger}{ledger}"));
}

#[test]
fn hunt_flag_validation() {
    let out = pancyc(&["hunt", "--parts", "1,1,1"]);
    assert_eq!(code(&out), 2); // no mode picked
    let out = pancyc(&["hunt", "--parts", "1,1,1", "--exhaustive", "--random", "3"]);
    assert_eq!(code(&out), 2); // clap conflict
    let out = pancyc(&["hunt", "--parts", "1,1", "--exhaustive"]);
    assert_eq!(code(&out), 2); // too few parts
    let out = pancyc(&["hunt", "--parts", "4,4,4", "--exhaustive"]);
    assert_eq!(code(&out), 2); // past the enumeration bound
}

#[test]
fn hunt_random_mode_is_deterministic() {
    let run = || {
        let out = pancyc(&[
            "hunt",
            "--parts",
            "1,1,2",
            "--random",
            "6",
            "--seed",
            "3",
        ]);
        assert_eq!(code(&out), 0);
        stdout(&out)
    };
    assert_eq!(run(), run());
}
