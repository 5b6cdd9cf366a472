use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ggm_entangle::io::{parse_basis, read_density_file};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ggm-entangle"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn make(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let out = bin()
        .arg("make-state")
        .args(args)
        .arg("--out")
        .arg(&path)
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    path
}

fn on(args: &[&str], path: &Path) -> Output {
    bin().args(args).arg(path).output().unwrap()
}

#[test]
fn werner_half_is_detected_without_search() {
    let dir = tempfile::tempdir().unwrap();
    let p = make(dir.path(), "w.dm", &["werner", "--a", "0.5"]);
    let out = on(&["detect"], &p);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("best f: 0.187"), "{text}");
}

#[test]
fn iso23_needs_the_optimizer() {
    let dir = tempfile::tempdir().unwrap();
    let p = make(dir.path(), "iso.dm", &["iso23", "--a", "1"]);
    assert_eq!(on(&["detect"], &p).status.code(), Some(1));
    let out = on(&["detect", "--optimize", "--restarts", "2", "--json"], &p);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["best_f"].as_f64().unwrap() > 0.9);
}

#[test]
fn optimize_is_reproducible_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let p = make(dir.path(), "h.dm", &["horodecki33", "--alpha", "4.5"]);
    let args = [
        "detect",
        "--optimize",
        "--restarts",
        "2",
        "--seed",
        "5",
        "--json",
    ];
    let a = on(&args, &p);
    let b = on(&args, &p);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn maximally_mixed_is_separable() {
    let dir = tempfile::tempdir().unwrap();
    let p = make(dir.path(), "m.dm", &["mixed", "--dims", "2", "3"]);
    assert_eq!(on(&["detect"], &p).status.code(), Some(2));
    assert_eq!(on(&["ppt"], &p).status.code(), Some(2));
}

#[test]
fn ppt_subcommand_classes() {
    let dir = tempfile::tempdir().unwrap();
    let w1 = make(dir.path(), "w1.dm", &["werner", "--a", "1"]);
    let out = on(&["ppt", "--json"], &w1);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["min_eigenvalue"].as_f64().unwrap() + 0.5).abs() < 1e-12);

    let w3 = make(
        dir.path(),
        "w3.dm",
        &["werner", "--a", "0.3333333333333333"],
    );
    assert_eq!(on(&["ppt"], &w3).status.code(), Some(2));

    // PPT in 3x3 proves nothing.
    let h = make(dir.path(), "h.dm", &["horodecki33", "--alpha", "3"]);
    assert_eq!(on(&["ppt"], &h).status.code(), Some(1));
    let h = make(dir.path(), "h2.dm", &["horodecki33", "--alpha", "4.5"]);
    assert_eq!(on(&["ppt"], &h).status.code(), Some(0));
}

#[test]
fn json_report_has_every_field() {
    let dir = tempfile::tempdir().unwrap();
    let p = make(
        dir.path(),
        "s.dm",
        &["schmidt", "--theta", "0.4", "--dims", "2", "3"],
    );
    let out = on(&["detect", "--json"], &p);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in [
        "verdict",
        "inequality_verdict",
        "best_f",
        "best_pair",
        "best_params",
        "y_values",
        "ppt_min",
        "ppt_verdict",
        "evaluations",
    ] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn written_states_parse_back() {
    let dir = tempfile::tempdir().unwrap();
    let p = make(
        dir.path(),
        "sep.dm",
        &[
            "separable",
            "--dims",
            "3",
            "4",
            "--terms",
            "5",
            "--seed",
            "2",
        ],
    );
    let rho = read_density_file(&p).unwrap();
    assert_eq!(rho.shape().total(), 12);
    assert!((rho.matrix().trace().re - 1.0).abs() < 1e-12);
}

#[test]
fn basis_dump_parses() {
    let out = run(&["basis", "--dim", "4"]);
    assert!(out.status.success());
    let entries = parse_basis(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(entries.len(), 15);
}

#[test]
fn bad_input_fails() {
    assert!(!run(&["basis", "--dim", "1"]).status.success());
    assert_eq!(run(&["make-state", "werner"]).status.code(), Some(3));
    assert_eq!(
        run(&["make-state", "werner", "--a", "2"]).status.code(),
        Some(4)
    );
    assert_eq!(run(&["scan", "ghz"]).status.code(), Some(4));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.dm");
    std::fs::write(&bad, "dm v1\ndims 2 2\n1,0 0,0\n").unwrap();
    let out = on(&["detect"], &bad);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line"));
    assert_eq!(
        on(&["detect"], &dir.path().join("missing.dm"))
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn scan_to_stdout_matches_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let args = ["scan", "werner", "--param-steps", "5", "--p-steps", "7"];
    let stdout = run(&args).stdout;
    assert!(bin()
        .args(args)
        .arg("--out")
        .arg(&path)
        .status()
        .unwrap()
        .success());
    assert_eq!(std::fs::read(&path).unwrap(), stdout);
    assert!(String::from_utf8(stdout)
        .unwrap()
        .starts_with("param,p,f\n"));
}

#[test]
fn shipped_files_round_trip() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "dm") {
            let text = std::fs::read_to_string(&path).unwrap();
            let rho = ggm_entangle::io::parse_density(&text).unwrap();
            let again = ggm_entangle::io::parse_density(&ggm_entangle::io::density_to_string(&rho))
                .unwrap();
            assert_eq!(again.matrix().max_abs_diff(rho.matrix()), 0.0, "{path:?}");
            seen += 1;
        }
    }
    assert!(seen >= 5);
}

#[test]
fn shipped_isotropic_file_is_detectable() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data/iso23_0.26.dm");
    assert_eq!(
        on(&["detect", "--optimize", "--restarts", "4"], &path)
            .status
            .code(),
        Some(0)
    );
}

fn scan_rows(args: &[&str]) -> Vec<ggm_entangle::search::ScanRow> {
    let out = run(args);
    assert!(out.status.success());
    ggm_entangle::io::parse_scan_csv(out.stdout.as_slice()).unwrap()
}

#[test]
fn horodecki_scan_peaks_at_quarter_turn() {
    let rows = scan_rows(&[
        "scan",
        "horodecki33",
        "--param-min",
        "5",
        "--param-max",
        "5",
        "--param-steps",
        "1",
    ]);
    let best = rows.iter().max_by(|a, b| a.f.total_cmp(&b.f)).unwrap();
    assert!((best.p - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    assert!((best.f - 16.0 / 441.0).abs() < 1e-9);
}

#[test]
fn werner_scan_first_column_matches_closed_form() {
    let rows = scan_rows(&["scan", "werner", "--param-steps", "11", "--p-steps", "5"]);
    for r in rows.iter().filter(|r| r.p == 0.0) {
        let a = r.param;
        assert!((r.f - (1.0 + a) * (3.0 * a - 1.0) / 4.0).abs() < 1e-9);
    }
    assert_eq!(rows.iter().filter(|r| r.p == 0.0).count(), 11);
}
