use std::process::{Command, Output};

use serde_json::Value;

fn hyperqubit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperqubit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

fn coords(v: &Value) -> Vec<f64> {
    serde_json::from_value(v.clone()).expect("coordinate array")
}

fn close(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12)
}

#[test]
fn project_ghz_is_minus_e6() {
    let o = hyperqubit(&["project", "--named", "ghz", "--partition", "1-23"]);
    assert!(o.status.success());
    let v = json(&o);
    assert!(close(
        &coords(&v["value"]),
        &[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0]
    ));
    assert!((v["denom"].as_f64().unwrap() - 0.5).abs() < 1e-12);
}

#[test]
fn project_w_on_every_partition() {
    let v = json(&hyperqubit(&[
        "project",
        "--named",
        "w",
        "--partition",
        "all",
    ]));
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 3);
    for item in items {
        assert!(close(
            &coords(&item["value"]),
            &[0.0, 0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0]
        ));
    }
}

#[test]
fn project_inline_state_to_infinity() {
    let o = hyperqubit(&["project", "--state", "1,0"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["value"], "inf");
}

#[test]
fn project_state_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bell.txt");
    std::fs::write(
        &path,
        "# Bell\n0.7071067811865476,0\n0,0\n0,0\n0.7071067811865476,0\n",
    )
    .unwrap();
    let arg = format!("@{}", path.display());
    let o = hyperqubit(&["project", "--state", &arg, "--qubits", "2"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(close(&coords(&json(&o)["value"]), &[0.0, 0.0, -1.0, 0.0]));
}

#[test]
fn project_csv_has_header_and_rows() {
    let text = stdout(&hyperqubit(&[
        "project",
        "--named",
        "ghz",
        "--partition",
        "all",
        "--format",
        "csv",
    ]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].starts_with("partition,inf,x0"));
    assert!(lines[1].starts_with("1|23,0,"));
}

#[test]
fn concurrence_text_and_json() {
    let o = hyperqubit(&["concurrence", "--named", "w", "--partition", "1-23"]);
    assert_eq!(stdout(&o), "1|23\t0.942809\n");
    let v = json(&hyperqubit(&[
        "concurrence",
        "--named",
        "bell",
        "--format",
        "json",
    ]));
    assert!((v[0]["value"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn input_errors_exit_one() {
    for args in [
        vec!["project", "--state", "1,0,0"],
        vec!["project", "--state", "0,0"],
        vec!["project", "--named", "bell", "--qubits", "3"],
        vec!["project", "--named", "nope"],
        vec!["concurrence", "--named", "plus"],
        vec!["evolve", "--hamiltonian", "1,1,0,1"],
        vec!["verify", "--suite", "other"],
        vec!["no-such-command"],
    ] {
        let o = hyperqubit(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn evolve_writes_csv() {
    let text = stdout(&hyperqubit(&["evolve", "--grid", "0:pi:5"]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "t,re0,im0,re1,im1,bx,by,bz,plane_re,plane_im,plane_inf"
    );
    assert_eq!(lines.len(), 6);
}

#[test]
fn evolve_family_writes_thirteen_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("family");
    let o = hyperqubit(&["evolve", "--family", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let mut names: Vec<String> = std::fs::read_dir(&out)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 13);
    assert_eq!(names[0], "theta_03_15.csv");
    assert_eq!(names[12], "theta_15_15.csv");
}

#[test]
fn verify_claims_is_deterministic_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let args = [
        "verify",
        "--suite",
        "claims",
        "--samples",
        "200",
        "--seed",
        "3",
    ];
    let a = hyperqubit(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    let b = hyperqubit(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    let report = json(&a);
    assert!(report["claims"].as_array().unwrap().len() > 20);
    assert_eq!(report["seed"], 3);
}

#[test]
fn multable_prints_signed_basis_products() {
    let text = stdout(&hyperqubit(&["mul-table", "--algebra", "quaternion"]));
    assert_eq!(text.lines().count(), 5);
    let csv = stdout(&hyperqubit(&["mul-table", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 9);
}

#[test]
fn help_exits_zero() {
    let o = hyperqubit(&["--help"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("verify"));
}
