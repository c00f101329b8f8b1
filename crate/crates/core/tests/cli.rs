mod common;

use lecture_hall::cli::{run, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use serde_json::Value;

use common::{fixture, read_fixture};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Outcome {
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let argv = std::iter::once("lecture-hall").chain(args.iter().copied());
    let code = run(argv, &mut stdout, &mut stderr);
    Outcome {
        code,
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

#[test]
fn ell_prints_canonical_text() {
    let out = cli(&["ell", "--i", "2"]);
    assert_eq!(out.code, EXIT_PASS);
    assert_eq!(out.stdout, "y1^2*y2\n");
    for i in 1..=8 {
        let out = cli(&["ell", "--i", &i.to_string()]);
        assert_eq!(out.stdout, read_fixture(&format!("ell_{i}.txt")), "l_{i}");
    }
}

#[test]
fn ell_rejects_bad_index() {
    let out = cli(&["ell", "--i", "0"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn ell_formats() {
    let csv = cli(&["--format", "csv", "ell", "--i", "3"]);
    assert_eq!(csv.stdout, "1;3,2\n1;2,2,1\n");
    let json = cli(&["--format", "json", "ell", "--i", "3"]);
    let v: Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["poly"], "y1^3*y2^2 + y1^2*y2^2*y3");
    assert_eq!(v["terms"], 2);
}

#[test]
fn subset_minors_from_the_command_line() {
    assert_eq!(cli(&["ell-s", "--set", ""]).stdout, "y1\n");
    assert_eq!(cli(&["ell-s", "--set", "1"]).stdout, "y1^2*y2\n");
    assert_eq!(cli(&["ell-s", "--set", "1,2"]).stdout, "y1^3*y2^2*y3\n");
    for bad in ["1,1", "2,1", "0", "x"] {
        assert_eq!(cli(&["ell-s", "--set", bad]).code, EXIT_USAGE, "{bad:?}");
    }
}

#[test]
fn verify_pi_passes() {
    let out = cli(&["verify", "--conjecture", "pi", "--max-i", "10"]);
    assert_eq!(out.code, EXIT_PASS, "{}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["conjecture"], "pi");
    assert_eq!(v["entries"].as_array().unwrap().len(), 10);
}

#[test]
fn verify_sagbi_against_table() {
    let table = fixture("table1.csv");
    let out = cli(&[
        "--cache-stats",
        "verify",
        "--conjecture",
        "sagbi",
        "--n",
        "8",
        "--table",
        table.to_str().unwrap(),
    ]);
    assert_eq!(out.code, EXIT_PASS, "{}", out.stderr);
    assert!(out.stderr.contains("table diff: 0 rows"));
    assert!(out.stderr.contains("minor cache:"));
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["n"], 8);
    assert_eq!(v["entries"].as_array().unwrap().len(), 128);
    assert!(v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn tampered_table_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let text = read_fixture("table1.csv").replacen(";7,6,5,3,2,1\n", ";7,6,5,3,2,0\n", 1);
    std::fs::write(&path, text).unwrap();
    let out = cli(&[
        "verify",
        "--conjecture",
        "sagbi",
        "--n",
        "8",
        "--table",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.code, EXIT_FAIL);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["status"], "fail");
    assert_eq!(v["failures"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_lht_and_phi_properties_pass() {
    assert_eq!(
        cli(&[
            "verify",
            "--conjecture",
            "lht",
            "--n",
            "6",
            "--max-total",
            "20"
        ])
        .code,
        EXIT_PASS
    );
    assert_eq!(
        cli(&["verify", "--conjecture", "phi-properties", "--n", "6"]).code,
        EXIT_PASS
    );
}

#[test]
fn long_bounds_need_opt_in() {
    let out = cli(&["verify", "--conjecture", "sagbi", "--n", "11"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("--long"));
    assert_eq!(cli(&["ell", "--i", "13"]).code, EXIT_USAGE);
    assert_eq!(cli(&["verify", "--conjecture", "sagbi"]).code, EXIT_USAGE);
}

#[test]
fn reports_are_reproducible_without_timing() {
    let args = ["--no-timing", "verify", "--conjecture", "sagbi", "--n", "7"];
    let a = cli(&args);
    let b = cli(&args);
    assert_eq!(a.code, EXIT_PASS);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["elapsed_ms"], 0);
}

#[test]
fn job_count_does_not_change_output() {
    let one = cli(&[
        "--no-timing",
        "--jobs",
        "1",
        "verify",
        "--conjecture",
        "sagbi",
        "--n",
        "7",
    ]);
    let four = cli(&[
        "--no-timing",
        "--jobs",
        "4",
        "verify",
        "--conjecture",
        "sagbi",
        "--n",
        "7",
    ]);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn output_file_is_written_whole() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nested/ell4.txt");
    let out = cli(&["--output", path.to_str().unwrap(), "ell", "--i", "4"]);
    assert_eq!(out.code, EXIT_PASS);
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        read_fixture("ell_4.txt")
    );
    let leftovers: Vec<_> = std::fs::read_dir(path.parent().unwrap()).unwrap().collect();
    assert_eq!(leftovers.len(), 1);
}

#[test]
fn output_dir_uses_default_names() {
    let dir = tempfile::tempdir().unwrap();
    let out = cli(&[
        "--output-dir",
        dir.path().to_str().unwrap(),
        "series",
        "--n",
        "3",
        "--max-total",
        "6",
    ]);
    assert_eq!(out.code, EXIT_PASS);
    assert!(dir.path().join("series-lattice-n3-t6.csv").exists());
}

#[test]
fn series_sides_are_identical() {
    let lattice = cli(&[
        "series",
        "--n",
        "4",
        "--max-total",
        "12",
        "--side",
        "lattice",
    ]);
    let product = cli(&[
        "series",
        "--n",
        "4",
        "--max-total",
        "12",
        "--side",
        "product",
    ]);
    assert_eq!(lattice.code, EXIT_PASS);
    assert!(lattice.stdout.starts_with("0,0,1\n"));
    assert_eq!(lattice.stdout, product.stdout);
}

#[test]
fn phi_table_round_trips() {
    let out = cli(&["--format", "csv", "phi", "--n", "8"]);
    assert_eq!(out.code, EXIT_PASS);
    assert_eq!(out.stdout, read_fixture("table1.csv"));
    let one = cli(&["phi", "--set", "1,4,5,6"]);
    assert!(one.stdout.contains("(7, 6, 5, 3, 2, 1)"), "{}", one.stdout);
    assert_eq!(cli(&["phi"]).code, EXIT_USAGE);
}

#[test]
fn hilbert_basis_listing() {
    let out = cli(&["hilbert-basis", "--n", "3"]);
    assert_eq!(out.code, EXIT_PASS);
    assert_eq!(out.stdout.lines().count(), 4);
}
