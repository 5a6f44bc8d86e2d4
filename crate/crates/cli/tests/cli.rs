use std::path::PathBuf;
use std::process::{Command, Output};

fn tanhvol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tanhvol")).args(args).output().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("tanhvol-cli-{}-{name}", std::process::id()))
}

#[test]
fn price_prints_rounded_call() {
    let out = tanhvol(&["price", "--spot", "100", "--strike", "100", "--maturity", "0.25", "--vol", "0.2"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "3.9878");
}

#[test]
fn iv_rejects_price_above_spot() {
    let out = tanhvol(&["iv", "--spot", "100", "--strike", "100", "--maturity", "0.25", "--price", "200"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn bad_sweep_config_exits_2() {
    let out = tanhvol(&["sweep", "--sigma-samples", "7", "--parts", "5", "--moneyness-samples", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_is_reproducible() {
    let run = |workers: &str| {
        let out = tanhvol(&[
            "sweep", "--t", "0.25", "--seed", "42", "--moneyness-samples", "40", "--workers", workers,
        ]);
        assert!(out.status.success());
        out.stdout
    };
    let first = run("1");
    assert_eq!(first, run("4"));
    assert!(String::from_utf8(first).unwrap().starts_with("# tanhvol sweep\n# rng=chacha8 seed=42\n"));
}

#[test]
fn sweep_writes_to_file() {
    let path = scratch("sweep.csv");
    let out = tanhvol(&["sweep", "--moneyness-samples", "2", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.lines().any(|l| l.starts_with("# stats scope=all ")));
}

#[test]
fn baseline_check_detects_tampering() {
    let frozen = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/baselines/reference.baseline");
    let text = std::fs::read_to_string(frozen).unwrap();
    let tampered: String = text
        .lines()
        .map(|l| if l.starts_with("iv.hat.max_abs=") { "iv.hat.max_abs=1e-6".to_string() } else { l.to_string() })
        .collect::<Vec<_>>()
        .join("\n");
    assert_ne!(tampered.trim(), text.trim());
    let path = scratch("tampered.baseline");
    std::fs::write(&path, tampered + "\n").unwrap();
    let out = tanhvol(&["baseline", "check", "--file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("iv.hat.max_abs"));
}

#[test]
fn baseline_check_missing_file_is_io_error() {
    let out = tanhvol(&["baseline", "check", "--file", "/nonexistent/reference.baseline"]);
    assert_eq!(out.status.code(), Some(1));
}
