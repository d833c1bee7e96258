use std::process::{Command, Output};

fn monogamy(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monogamy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn column<'a>(csv: &'a str, name: &str) -> Vec<&'a str> {
    let mut lines = csv.lines();
    let idx = lines
        .next()
        .unwrap()
        .split(',')
        .position(|c| c == name)
        .unwrap();
    lines.map(|l| l.split(',').nth(idx).unwrap()).collect()
}

#[test]
fn verify_thm1_on_equal_gsd3() {
    let o = monogamy(&["verify", "--state", "gsd3", "--theorem", "thm1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let status = column(&out, "status");
    assert_eq!(status.len(), 40);
    assert!(status.iter().all(|s| *s == "satisfied"));
}

#[test]
fn verify_thm2_saturation() {
    let o = monogamy(&["verify", "--state", "thm2_saturating", "--theorem", "thm2", "--alpha", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let slack: f64 = column(&stdout(&o), "slack")[0].parse().unwrap();
    assert!(slack.abs() < 1e-9);
}

#[test]
fn verify_reads_state_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bell.json");
    let h = std::f64::consts::FRAC_1_SQRT_2;
    std::fs::write(&path, format!(r#"{{"kind":"amplitudes","n":2,"re":[{h},0,0,{h}]}}"#)).unwrap();
    let out = dir.path().join("report.json");
    let o = monogamy(&[
        "verify",
        "--state",
        path.to_str().unwrap(),
        "--theorem",
        "ckw,coa-dual",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 2);
    assert_eq!(rows[0]["state"], "amplitudes[2]");
}

#[test]
fn input_errors_exit_two() {
    let o = monogamy(&["verify", "--state", "ghz", "--theorem", "cor1-thm3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("6 qubits"));

    let o = monogamy(&["verify", "--state", "{\"kind\":"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());

    let o = monogamy(&["verify", "--state", r#"{"kind":"amplitudes","n":1,"re":[1,1]}"#]);
    assert_eq!(o.status.code(), Some(2));

    let o = monogamy(&["verify", "--state", "gsd3", "--alpha", "0:3:0.5"]);
    assert_eq!(o.status.code(), Some(2));

    let o = monogamy(&["sweep", "--qubits", "9", "--samples", "1", "--theorem", "cor2"]);
    assert_eq!(o.status.code(), Some(2));

    let o = monogamy(&["figure", "--id", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, threads: &str| {
        let path = dir.path().join(name);
        let o = Command::new(env!("CARGO_BIN_EXE_monogamy"))
            .args(["sweep", "--qubits", "4", "--samples", "200", "--seed", "42"])
            .args(["--theorem", "thm1,thm2,thm3,thm4", "--format", "json"])
            .args(["--out", path.to_str().unwrap()])
            .env("MONOGAMY_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        std::fs::read(path).unwrap()
    };
    let a = run("a.json", "1");
    let b = run("b.json", "4");
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    for row in v["rows"].as_array().unwrap() {
        assert_eq!(row["violations"], 0);
    }
}

#[test]
fn corollary_sweep_counts_not_applicable() {
    let o = monogamy(&["sweep", "--qubits", "6", "--samples", "20", "--theorem", "cor1,cor2", "--alpha", "0.5:2:0.5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(column(&out, "violations").iter().all(|v| *v == "0"));
    let evaluated = column(&out, "evaluated");
    assert!(evaluated.iter().all(|v| *v == "80"));
}

#[test]
fn figure_rows() {
    let f1 = stdout(&monogamy(&["figure", "--id", "1"]));
    assert!(f1.starts_with("alpha,lhs,thm1,jin\n"));
    assert_eq!(f1.lines().count(), 101);
    let row: Vec<f64> = f1
        .lines()
        .find(|l| l.starts_with("1,"))
        .unwrap()
        .split(',')
        .map(|x| x.parse().unwrap())
        .collect();
    for (got, want) in row[1..].iter().zip([0.6928203, 0.8, 0.8485281]) {
        assert!((got - want).abs() < 1e-6);
    }

    let f3 = stdout(&monogamy(&["figure", "--id", "3"]));
    let last: Vec<f64> = f3.lines().last().unwrap().split(',').map(|x| x.parse().unwrap()).collect();
    assert!((last[1] - 8.0 / 9.0).abs() < 1e-9);
    assert!((last[2] - 4.0 / 3.0).abs() < 1e-9);

    let o = monogamy(&["figure", "--id", "2"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("note:"));
    let f2 = stdout(&o);
    let last: Vec<f64> = f2.lines().last().unwrap().split(',').map(|x| x.parse().unwrap()).collect();
    assert!((last[1] - last[2]).abs() < 1e-9);
}

#[test]
fn gallery_listing() {
    let o = monogamy(&["gallery-list", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 8);
}
