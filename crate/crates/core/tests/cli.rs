use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tame-fitting"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn verify_text_report() {
    let out = run(&["verify", "--disc", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("θ = -1/30 + 11/30τ"), "{text}");
    assert!(text.contains("I_Sti = [[2, 6], [0, 8]] / 1"));
    assert!(text.contains("verdict: PASS"));
}

#[test]
fn verify_json_with_extra_primes() {
    let out = run(&[
        "verify",
        "--disc",
        "5",
        "--extra-primes",
        "11",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let case = &json[0];
    assert_eq!(case["S"], serde_json::json!([5, 11]));
    assert_eq!(case["invariants"]["k_plus"], 80);
    assert_eq!(case["invariants"]["k_E"], 1600);
    assert_eq!(case["invariants"]["k_minus"], 40);
    assert_eq!(case["theta"]["plus"], "-10/3");
    assert_eq!(case["passed"], true);
}

#[test]
fn verify_rejects_non_fundamental() {
    let out = run(&["verify", "--disc", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a fundamental discriminant"));
    let out = run(&["verify", "--disc", "5", "--extra-primes", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn batch_writes_sorted_reports() {
    let dir = tempfile::tempdir().unwrap();
    let jobs = dir.path().join("jobs.txt");
    let out_path = dir.path().join("out.csv");
    fs::write(&jobs, "# two cases\n8\n5\n12:7\n").unwrap();
    let out = run(&[
        "batch",
        "--jobs",
        jobs.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let csv = fs::read_to_string(&out_path).unwrap();
    let labels: Vec<_> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap().to_string())
        .collect();
    assert_eq!(labels, vec!["D=5", "D=8", "D=12"]);
}

#[test]
fn batch_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("out.json");
    let case = |body: &str| {
        let jobs = dir.path().join("jobs.txt");
        fs::write(&jobs, body).unwrap();
        run(&[
            "batch",
            "--jobs",
            jobs.to_str().unwrap(),
            "--out",
            out_path.to_str().unwrap(),
        ])
    };
    assert_eq!(case("").status.code(), Some(0));
    assert_eq!(fs::read_to_string(&out_path).unwrap().trim(), "[]");
    assert_eq!(case("7\n").status.code(), Some(2));
    assert_eq!(case("five\n").status.code(), Some(2));
    let missing = run(&[
        "batch",
        "--jobs",
        "/nonexistent/jobs",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn batch_output_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let jobs = dir.path().join("jobs.txt");
    fs::write(&jobs, "13\n5:11\n8\n").unwrap();
    let render = |name: &str| {
        let path = dir.path().join(name);
        let out = run(&[
            "batch",
            "--jobs",
            jobs.to_str().unwrap(),
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        fs::read(path).unwrap()
    };
    assert_eq!(render("a.json"), render("b.json"));
}

#[test]
fn table_csv() {
    let out = run(&["table", "--dmax", "13"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "D,w_E,zeta_E,zeta_F_S,zeta_E_S,k_plus,k_E,k_minus,pass\n\
         5,120,1/30,1/3,-2/15,8,16,4,true\n\
         8,48,1/12,1/12,-1/12,2,4,2,true\n\
         12,24,1/6,-1/6,1/3,4,8,4,true\n\
         13,24,1/6,1/1,-2/1,24,48,4,true\n"
    );
}

#[test]
fn manual_biquadratic_record() {
    let out = run(&[
        "manual",
        "--input",
        &fixture("biquadratic.job"),
        "--format",
        "json",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let case = &json[0];
    assert_eq!(case["label"], "Q(sqrt2,sqrt5)/Q(sqrt5)");
    assert_eq!(case["D"], serde_json::Value::Null);
    assert_eq!(case["invariants"]["u"], 121);
    assert_eq!(case["invariants"]["k_minus"], 28);
    assert_eq!(case["local2"]["principal"], true);
    assert_eq!(case["passed"], true);
}

#[test]
fn manual_birch_tate_violation_is_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.job");
    fs::write(
        &input,
        "w_F = 24\nw_E = 120\nzeta_F_S = 1/5\nzeta_E_S = -2/15\nsize_S = 2\nsize_SE = 3\nfirst_layer = false\n",
    )
    .unwrap();
    let out = run(&["manual", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Birch"));
}

#[test]
fn manual_rejects_auto_cases() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("auto.job");
    fs::write(&input, "5\n").unwrap();
    assert_eq!(
        run(&["manual", "--input", input.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}
