//! End-to-end tests driving the compiled binary.

use std::process::{Command, Output};

fn totpos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_totpos"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn gen_narayana_b_square_csv() {
    let out = totpos(&["gen", "--family", "narayana-b", "--shape", "square", "--size", "4"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "1,1,1,1\n1,4,9,16\n1,9,36,100\n1,16,100,400\n"
    );
}

#[test]
fn gen_writes_file_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pascal.csv");
    let out = totpos(&[
        "gen", "--family", "pascal", "--shape", "triangle", "--size", "3",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1,0,0\n1,1,0\n1,2,1\n");

    let out = totpos(&[
        "gen", "--family", "m-narayana", "--m", "1", "--shape", "square", "--size", "2",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["family"], "m-narayana(m=1)");
    assert_eq!(v["entries"][0][0], "2");
}

#[test]
fn check_exit_codes() {
    // Order-1 is a single positive entry: STP holds.
    let out = totpos(&[
        "check", "--family", "narayana-a", "--shape", "triangle", "--size", "1",
        "--property", "stp", "--method", "brute",
    ]);
    assert_eq!(out.status.code(), Some(0));

    // Beyond order 1 the triangle contains zeros, killing strictness.
    let out = totpos(&[
        "check", "--family", "narayana-a", "--shape", "triangle", "--size", "2",
        "--property", "stp", "--method", "brute",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "fails");
    assert_eq!(v["witness"]["value"], "0");

    let out = totpos(&[
        "check", "--family", "pascal", "--shape", "triangle", "--size", "6",
        "--property", "tp", "--method", "neville",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(totpos(&["check", "--family", "pascal"]).status.code(), Some(2));
    assert_eq!(
        totpos(&["gen", "--family", "no-such-family", "--shape", "square", "--size", "3"])
            .status
            .code(),
        Some(2)
    );
    // m on a family that does not take it is a usage error too.
    assert_eq!(
        totpos(&["gen", "--family", "pascal", "--m", "2", "--shape", "square", "--size", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        totpos(&["verify", "--statement", "no-such-statement"]).status.code(),
        Some(2)
    );
}

#[test]
fn seq_checks() {
    let out = totpos(&["seq", "--seq", "inv-factorial", "--test", "pf", "--order", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let out = totpos(&[
        "seq", "--seq", "inv-pochhammer-factorial", "--t", "1/2", "--test", "pf", "--order", "6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = totpos(&["seq", "--seq", "factorial", "--test", "sm", "--order", "8"]);
    assert_eq!(out.status.code(), Some(0));
    // Missing t for the parameterized family.
    let out = totpos(&["seq", "--seq", "inv-pochhammer-factorial", "--test", "pf", "--order", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let out = totpos(&[
        "verify", "--statement", "pascal-decomp", "--size", "16",
        "--report", dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("pascal-decomp\tverified"));

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("pascal-decomp.json")).unwrap())
            .unwrap();
    assert_eq!(report["schemaVersion"], 1);
    assert_eq!(report["statementId"], "pascal-decomp");
    assert_eq!(report["status"], "verified");
    assert!(report["wallTimeMillis"].is_number());

    let index: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("index.json")).unwrap())
            .unwrap();
    assert_eq!(index["statements"][0]["statementId"], "pascal-decomp");
}

#[test]
fn verify_config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("totpos.conf");
    std::fs::write(&config, "# presets\nsize = 5\nm = 0,1\n").unwrap();

    let report_dir = dir.path().join("reports");
    let out = totpos(&[
        "verify", "--statement", "m-narayana-triangle-tp",
        "--config", config.to_str().unwrap(),
        "--report", report_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(report_dir.join("m-narayana-triangle-tp.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(report["params"]["size"], 5);
    assert_eq!(report["params"]["m"], serde_json::json!([0, 1]));

    // A flag beats the config value.
    let out = totpos(&[
        "verify", "--statement", "m-narayana-triangle-tp",
        "--config", config.to_str().unwrap(),
        "--size", "4",
        "--report", report_dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(report_dir.join("m-narayana-triangle-tp.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(report["params"]["size"], 4);
}

#[test]
fn decomp_emits_exact_l_and_d() {
    let out = totpos(&["decomp", "--family", "narayana-b", "--size", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["D"][0], "1");
    assert_eq!(v["D"][1], "3");
    assert_eq!(v["L"][1][0], "1");
    assert_eq!(v["reconstruction"]["status"], "verified");

    // Asymmetric square: no factorization, usage-level error.
    let out = totpos(&["decomp", "--family", "m-narayana", "--m", "1", "--size", "3"]);
    assert_eq!(out.status.code(), Some(2));
}
