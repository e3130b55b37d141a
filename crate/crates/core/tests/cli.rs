use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_su11-coherent"))
}

#[test]
fn figure_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for out in [&a, &b] {
        let status = bin().args(["figure", "4", "--points", "60", "--out"]).arg(out).status().unwrap();
        assert!(status.success());
    }
    let a = std::fs::read(a).unwrap();
    assert_eq!(a, std::fs::read(b).unwrap());
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("# su11-coherent v1; family=pabgcs; m=0..5; lambda=0.5; phase=0\nz_abs,Q_m0,"));
    assert_eq!(text.lines().count(), 62);
}

#[test]
fn svg_output_writes_csv_sibling() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("fig1.svg");
    let status = bin().args(["figure", "1", "--points", "50", "--format", "svg", "--out"]).arg(&svg).status().unwrap();
    assert!(status.success());
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    let csv = std::fs::read_to_string(svg.with_extension("csv")).unwrap();
    assert!(csv.lines().nth(1) == Some("z_abs,K_m0"));
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "family = pabgcs\nm = 3\nlambda = 2.5\nzmax = 0\n").unwrap();
    let out = bin().args(["state", "--m", "1", "--config"]).arg(&cfg).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# su11-coherent v1; family=pabgcs; m=1; lambda=2.5;"));
    assert!(text.lines().nth(3).unwrap().starts_with("1,1.0000000000000000e0,"));
}

#[test]
fn exit_codes() {
    assert_eq!(bin().args(["verify", "algebra"]).output().unwrap().status.code(), Some(0));
    assert_eq!(bin().args(["state", "--lambda", "-0.7"]).output().unwrap().status.code(), Some(2));
    assert_eq!(bin().args(["figure", "1", "--m", "3"]).output().unwrap().status.code(), Some(2));
    let out = bin().args(["observables", "--zmin", "5", "--zmax", "1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zmax"));
}

#[test]
fn observables_columns() {
    let out = bin().args(["observables", "--family", "nbgcs", "--m", "2", "--points", "4"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let header = text.lines().nth(1).unwrap();
    assert!(header.starts_with("z_abs,exp_n,exp_n2,g2,mandel_q"));
    assert_eq!(text.lines().count(), 6);
}
