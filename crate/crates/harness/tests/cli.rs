//! End-to-end tests of the `heave` binary and its exit-code contract.

use std::process::Command;

fn heave() -> Command {
    Command::new(env!("CARGO_BIN_EXE_heave"))
}

fn write_config(dir: &std::path::Path, name: &str, body: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn no_arguments_is_a_usage_error() {
    let out = heave().output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_and_missing_config_exit_2() {
    let out = heave().arg("fly").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = heave().args(["run", "/nonexistent.cfg"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_config_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), "bad.cfg", "dx = -1\n");
    let out = heave()
        .args(["run", cfg.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn run_produces_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let outdir = dir.path().join("artifacts");
    let cfg = write_config(
        dir.path(),
        "run.cfg",
        "body = free\nz_c_start = 2.0\ndx = 0.5\nt_end = 1.0\nsnapshot_every = 0.5\n",
    );
    let out = heave()
        .args([
            "run",
            cfg.to_str().unwrap(),
            "--outdir",
            outdir.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(outdir.join("timeseries.csv").exists());
    assert!(outdir.join("snapshot_0.000.csv").exists());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("run complete"), "{stdout}");
}

#[test]
fn runtime_breach_exits_4_and_leaves_the_abort_snapshot() {
    let dir = tempfile::tempdir().unwrap();
    let outdir = dir.path().join("blow");
    let cfg = write_config(
        dir.path(),
        "blow.cfg",
        "forcing = sine\nforcing_amplitude = 80.0\nforcing_period = 1.0\nalpha = 0.012\ndx = 1.0\nt_end = 5.0\n",
    );
    let out = heave()
        .args([
            "run",
            cfg.to_str().unwrap(),
            "--outdir",
            outdir.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(4),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(outdir.join("snapshot_abort.csv").exists());
}

#[test]
fn shipped_configs_pass_the_compatibility_check() {
    for name in [
        "fixed_wave",
        "forced_heave",
        "return",
        "free_wave",
        "solitary_free",
    ] {
        let path = format!("{}/../../configs/{name}.cfg", env!("CARGO_MANIFEST_DIR"));
        let out = heave().args(["check", &path]).output().unwrap();
        assert_eq!(
            out.status.code(),
            Some(0),
            "{name}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn converge_writes_the_table() {
    let dir = tempfile::tempdir().unwrap();
    let out_csv = dir.path().join("convergence.csv");
    let out = heave()
        .args([
            "converge",
            "forced",
            "--dx",
            "0.5,0.25",
            "--out",
            out_csv.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let table = std::fs::read_to_string(&out_csv).unwrap();
    assert!(table.starts_with("dx,error,order_local\n"));
    assert_eq!(table.lines().count(), 3);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("fitted order"), "{stdout}");
}

#[test]
fn oracle_subcommands() {
    // tau0 inside the admissible range.
    let out = heave()
        .args(["oracle", "tau0", "--r", "2.0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("r0 = 8.6066"), "{stdout}");
    // Beyond the bound: runtime (branch) error.
    let out = heave()
        .args(["oracle", "tau0", "--r", "9.0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));

    // Solitary closed forms.
    let out = heave().args(["oracle", "solitary"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("K = 0.025"), "{stdout}");
    assert!(stdout.contains("c = 13.457"), "{stdout}");

    // Reference trajectory CSV.
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("traj.csv");
    let out = heave()
        .args([
            "oracle",
            "return",
            "--t-end",
            "2.0",
            "--tol",
            "1e-8",
            "--out",
            csv.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("t,delta,delta_dot\n"));
    assert!(text.lines().count() > 100);
}
