use std::io::Write;
use std::process::{Command, Output, Stdio};

fn lincol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lincol")).args(args).output().unwrap()
}

fn lincol_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lincol"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn exact_numbers_of_a_path() {
    // the path on 7 vertices
    let g6 = "FhCGG";
    let g = lincol(&["gen", "--n", "7", "--p", "0", "--seed", "1"]);
    assert_eq!(g.status.code(), Some(0));
    assert_eq!(stdout(&g).trim(), "F????");
    for (verb, want) in [("chi", "2"), ("chi-lin", "3"), ("chi-cen", "3")] {
        let o = lincol(&[verb, "--graph6", g6]);
        assert_eq!(o.status.code(), Some(0), "{verb}: {}", stderr(&o));
        assert_eq!(stdout(&o).trim(), want, "{verb}");
    }
}

#[test]
fn graph_from_stdin() {
    // the triangle
    let o = lincol_stdin(&["chi-cen", "--input", "-"], "Bw\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "3");
}

#[test]
fn colouring_verdicts_set_exit_code() {
    // P4 coloured 0,1,0,1 has no centre on the whole path
    let bad = lincol(&["verify-colouring", "--graph6", "Ch", "--colours", "0,1,0,1"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).starts_with("no: path without centre"));
    let good = lincol(&["verify-colouring", "--graph6", "Ch", "--colours", "1,0,2,0"]);
    assert_eq!(good.status.code(), Some(0), "{}", stdout(&good));
    assert_eq!(stdout(&good).trim(), "yes");
    let proper = lincol(&[
        "verify-colouring",
        "--graph6",
        "Ch",
        "--colours",
        "0,1,0,1",
        "--kind",
        "proper",
    ]);
    assert_eq!(proper.status.code(), Some(0));
}

#[test]
fn certify_then_verify_round_trip() {
    let o = lincol(&[
        "certify",
        "--n",
        "60",
        "--omega",
        "20",
        "--classes",
        "30",
        "--seed",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    let (g6, colours, cert) = (lines[0], lines[1], lines[2]);
    let ok = lincol(&["verify-cert", "--graph6", g6, "--colours", colours, "--cert", cert]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok).trim(), "ok");

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cert.txt");
    std::fs::write(&file, format!("{cert}\n")).unwrap();
    let from_file = lincol(&[
        "verify-cert",
        "--graph6",
        g6,
        "--colours",
        colours,
        "--cert-file",
        file.to_str().unwrap(),
    ]);
    assert_eq!(from_file.status.code(), Some(0));

    // repeat the first path vertex at the end
    let path_field = cert.split(';').next().unwrap();
    let first = path_field.trim_start_matches("path=").split(' ').next().unwrap();
    let tampered = cert.replacen(path_field, &format!("{path_field} {first}"), 1);
    let bad = lincol(&["verify-cert", "--graph6", g6, "--colours", colours, "--cert", &tampered]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).starts_with("repeated-vertex"), "{}", stdout(&bad));
}

#[test]
fn failed_certification_exits_one() {
    // all colours distinct: nothing to pair
    let o = lincol(&["certify", "--graph6", "Ch", "--colours", "0,1,2,3", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "empty-pairing");
}

#[test]
fn experiment_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("dense.csv");
    let path = file.to_str().unwrap();
    let o = lincol(&[
        "experiment",
        "--regime",
        "dense",
        "--n",
        "40",
        "--omega",
        "15",
        "--trials",
        "4",
        "--seed",
        "1",
        "--output",
        path,
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&file).unwrap();
    assert!(text.starts_with("trial,seed,regime,n,density,success"));
    assert_eq!(text.lines().count(), 5);

    let piped = lincol(&[
        "experiment",
        "--regime",
        "dense",
        "--n",
        "40",
        "--omega",
        "15",
        "--trials",
        "4",
        "--seed",
        "1",
        "--sequential",
    ]);
    assert_eq!(stdout(&piped), text);
}

#[test]
fn sweep_reports_summary() {
    let o = lincol(&["sweep", "--connected", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1 + 1 + 1 + 2 + 6);
    assert!(stderr(&o).contains("violations: 0"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["gen", "--n", "5", "--p", "0.5"][..],
        &["chi"],
        &["chi", "--graph6", "Bw", "--input", "-"],
        &["experiment", "--regime", "dense", "--n", "10", "--seed", "1"],
        &["frobnicate"],
    ] {
        let o = lincol(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&o).is_empty());
    }
    let seedless = lincol(&["gen", "--n", "5", "--p", "0.5"]);
    assert!(stderr(&seedless).contains("--seed"));
}

#[test]
fn invalid_inputs_exit_two() {
    for args in [
        &["chi", "--graph6", "~~~~"][..],
        &["verify-colouring", "--graph6", "Bw", "--colours", "0,1"],
        &["chi-lin", "--input", "/no/such/file"],
        &["gen", "--n", "5", "--p", "1.5", "--seed", "1"],
    ] {
        let o = lincol(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).starts_with("error:"), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(lincol(&["--help"]).status.code(), Some(0));
    let v = lincol(&["--version"]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains(env!("CARGO_PKG_VERSION")));
}
