use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn workdir(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli").join(name);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn zetashift(dir: &PathBuf, command: &str, config: &str, extra: &[&str]) -> Output {
    let cfg = dir.join("run.cfg");
    std::fs::write(&cfg, config).unwrap();
    Command::new(env!("CARGO_BIN_EXE_zetashift"))
        .arg(command)
        .arg("--config")
        .arg(&cfg)
        .args(extra)
        .env_remove("SOURCE_DATE_EPOCH")
        .env_remove("ZETASHIFT_THREADS")
        .output()
        .unwrap()
}

fn record(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert_eq!(text.lines().count(), 1);
    serde_json::from_str(&text).unwrap()
}

const SWEEP: &str = "subject=riemann
patch.shape=disc
patch.center=0.75
patch.radius=0.05
patch.step=0.05
target.kind=zeta_shift
target.tau=0.5
shift.mode=continuous
shift.t_max=1
shift.step=0.5
";

#[test]
fn eval_zeta_two() {
    let out = zetashift(&workdir("eval"), "eval", "subject=riemann\ns=2\n", &[]);
    let r = record(&out);
    assert_eq!(r["payload"]["kind"], "eval");
    let value = r["payload"]["value"][0].as_f64().unwrap();
    assert!((value - 1.644_934_066_848_226_4).abs() < 1e-15, "{value}");
    assert_eq!(r["payload"]["value"][1].as_f64(), Some(0.0));
    assert!(r["timestamp"].is_null());
}

#[test]
fn sweep_has_three_rows_and_planted_minimum() {
    let r = record(&zetashift(&workdir("sweep"), "sweep", SWEEP, &[]));
    let samples = r["payload"]["profile"]["samples"].as_array().unwrap();
    assert_eq!(samples.len(), 3);
    let taus: Vec<f64> = samples.iter().map(|s| s[0].as_f64().unwrap()).collect();
    assert_eq!(taus, [0.0, 0.5, 1.0]);
    assert!(samples.iter().all(|s| s[2] == "ok"));
    assert!(samples[1][1].as_f64().unwrap() <= 2e-10);
    assert_eq!(r["payload"]["best"]["coarse"][0].as_f64(), Some(0.5));
    assert_eq!(r["grid_step"].as_f64(), Some(0.05));
}

#[test]
fn negative_epsilon_is_a_config_error() {
    let out = zetashift(&workdir("epsilon"), "sweep", &format!("{SWEEP}epsilon=-1\n"), &[]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "config_error");
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_key_and_command_mismatch_are_rejected() {
    let dir = workdir("reject");
    let out = zetashift(&dir, "sweep", &format!("{SWEEP}colour=blue\n"), &[]);
    assert_eq!(out.status.code(), Some(2));
    let out = zetashift(&dir, "eval", &format!("command=sweep\n{SWEEP}"), &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn record_and_plot_are_thread_count_independent() {
    let dir = workdir("threads");
    let mut files = Vec::new();
    for threads in ["1", "8"] {
        let out_path = dir.join(format!("sweep-{threads}.json"));
        let out = zetashift(
            &dir,
            "sweep",
            &SWEEP.replace("shift.t_max=1", "shift.t_max=5").replace("shift.step=0.5", "shift.step=0.05"),
            &["--threads", threads, "--out", out_path.to_str().unwrap(), "--plot", "error_profile"],
        );
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        let svg = std::fs::read(dir.join(format!("sweep-{threads}.error_profile.svg"))).unwrap();
        files.push((std::fs::read(out_path).unwrap(), svg));
    }
    assert_eq!(files[0], files[1]);
    let svg = String::from_utf8(files[0].1.clone()).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("<polyline"));
}

#[test]
fn digest_ignores_threads_and_output() {
    let dir = workdir("digest");
    let a = record(&zetashift(&dir, "sweep", SWEEP, &[]));
    let b = record(&zetashift(&dir, "sweep", &format!("{SWEEP}threads=3\n"), &[]));
    assert_eq!(a["config_digest"], b["config_digest"]);
    let c = record(&zetashift(&dir, "sweep", &SWEEP.replace("target.tau=0.5", "target.tau=1"), &[]));
    assert_ne!(a["config_digest"], c["config_digest"]);
}

#[test]
fn source_date_epoch_sets_timestamp() {
    let dir = workdir("stamp");
    let cfg = dir.join("run.cfg");
    std::fs::write(&cfg, "subject=riemann\ns=2\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_zetashift"))
        .args(["eval", "--config"])
        .arg(&cfg)
        .env("SOURCE_DATE_EPOCH", "1700000000")
        .output()
        .unwrap();
    assert_eq!(record(&out)["timestamp"].as_u64(), Some(1_700_000_000));
}

#[test]
fn pole_samples_are_recorded_not_fatal() {
    let config = "subject=riemann
patch.shape=rectangle
patch.sigma_lo=0.9
patch.sigma_hi=1.1
patch.t_lo=0
patch.t_hi=0
patch.step=0.1
strip.sigma_lo=0.5
strip.sigma_hi=1.5
target.kind=polynomial
target.coeffs=0
shift.mode=continuous
shift.t_max=1
shift.step=0.25
";
    let r = record(&zetashift(&workdir("pole"), "sweep", config, &[]));
    let profile = &r["payload"]["profile"];
    assert_eq!(profile["error_count"].as_u64(), Some(1));
    assert!(profile["samples"][0][1].is_null());
    assert_eq!(profile["samples"][0][2], "pole");
    assert_eq!(profile["failures"][0]["class"], "pole");
}
