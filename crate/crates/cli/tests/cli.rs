use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn qball(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qball"))
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .expect("run qball")
}

fn json(path: &Path) -> serde_json::Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn relations_on_polmat2_reports_28_zeros() {
    let dir = tempfile::tempdir().unwrap();
    let o = qball(&["relations", "--preset", "polMat2", "--samples", "200"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r = json(&dir.path().join("relations.json"));
    assert_eq!(r["verdict"], "pass");
    let rel = &r["reports"][0];
    assert_eq!(rel["check"], "relations");
    let items = rel["per_item"].as_array().unwrap();
    assert_eq!(items.len(), 28);
    assert!(items.iter().all(|i| i["lhs"] == "0" && i["pass"] == true));
    assert_eq!(r["config"]["preset"], "polMat2");
}

#[test]
fn config_errors_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        vec!["homs", "--q", "1.5"],
        vec!["reps", "--pad", "16"],
        vec!["relations", "--preset", "polQ"],
        vec!["reps", "--family", "sigma"],
        vec!["homs", "--tol", "0"],
        vec!["dilation", "--deg", "3", "--m", "2"],
        vec!["frobnicate"],
    ] {
        let o = qball(&args, dir.path());
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn failing_verdict_exits_with_1() {
    let dir = tempfile::tempdir().unwrap();
    let o = qball(
        &["isometry", "--samples", "1", "--matrix-size", "1", "--grid", "2", "--n-fock", "5", "--n-rho", "6", "--slack", "0"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&dir.path().join("isometry.json"))["verdict"], "fail");
}

#[test]
fn isometry_writes_norm_table() {
    let dir = tempfile::tempdir().unwrap();
    let o = qball(
        &["isometry", "--samples", "2", "--matrix-size", "2", "--grid", "4", "--n-fock", "6", "--n-rho", "16", "--slack", "0.5"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let csv = fs::read_to_string(dir.path().join("isometry.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "sample,F,Q,defect");
    assert_eq!(lines.len(), 3);
}

#[test]
fn same_seed_gives_identical_json() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let args = ["spectrum", "--seed", "7", "--n-rho", "24"];
    assert_eq!(qball(&args, a.path()).status.code(), Some(0));
    assert_eq!(qball(&args, b.path()).status.code(), Some(0));
    let read = |d: &Path| fs::read_to_string(d.join("spectrum.json")).unwrap().replace(&d.display().to_string(), "OUT");
    assert_eq!(read(a.path()), read(b.path()));
}

#[test]
fn csv_format_prints_items() {
    let dir = tempfile::tempdir().unwrap();
    let o = qball(&["homs", "--format", "csv"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert!(stdout.starts_with("check,id,lhs,rhs,defect,pass\n"));
    assert!(stdout.lines().filter(|l| l.starts_with("check_hom,")).count() == 56);
    assert!(dir.path().join("homs.json").exists());
}

#[test]
fn reps_accepts_a_single_family() {
    let dir = tempfile::tempdir().unwrap();
    let o = qball(&["reps", "--family", "rho:phi1=0.25pi,phi2=pi", "--n", "12"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r = json(&dir.path().join("reps.json"));
    assert_eq!(r["reports"].as_array().unwrap().len(), 1);
}
