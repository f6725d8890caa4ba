#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// (golden file, arguments). Small grids, one per subcommand plus a JSON kernel table.
pub const GOLDEN_CASES: &[(&str, &[&str])] = &[
    ("ml.txt", &["ml", "--alpha", "0.5", "--beta", "1", "--z", "0.7-0.3i"]),
    (
        "free.csv",
        &["free", "--nu", "0.75", "--t-max", "1", "--nt", "3", "--x-min", "-4", "--x-max", "4", "--nx", "9",
          "--k-min", "-9", "--k-max", "11", "--nk", "201", "--k-center", "1"],
    ),
    ("well.csv", &["well", "--nu", "0.5", "--width", "2", "--modes", "1:1,2:0.5i", "--t-max", "1", "--nt", "3", "--nx", "9"]),
    (
        "green.csv",
        &["green", "--kind", "wheeler", "--nu", "1.3", "--t-min", "-1", "--t-max", "1", "--nt", "4", "--x-min", "-4",
          "--x-max", "4", "--nx", "9", "--nk", "161"],
    ),
    (
        "fracderiv.csv",
        &["fracderiv", "--lambda", "0.5", "--t-max", "0.5", "--nt", "2", "--x-min", "-8", "--x-max", "8", "--nx", "33",
          "--nk", "201"],
    ),
    (
        "green_kernel.json",
        &["green", "--kernel", "--nu", "0.6+0.1i", "--t-min", "0.5", "--t-max", "1.5", "--nt", "3", "--k-min", "-2",
          "--k-max", "2", "--nk", "5", "--tol", "1e-10", "--format", "json"],
    ),
];

pub fn tfse(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tfse")).args(args).output().expect("tfse binary runs")
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Runs a golden case twice; both runs must succeed and agree byte for byte
/// with the stored file. `UPDATE_GOLDEN=1` rewrites the file instead.
pub fn check_golden(name: &str, args: &[&str]) -> Result<(), String> {
    let first = tfse(args);
    if !first.status.success() {
        return Err(format!("{name}: exit {:?}: {}", first.status.code(), String::from_utf8_lossy(&first.stderr)));
    }
    let second = tfse(args);
    if second.stdout != first.stdout {
        return Err(format!("{name}: two runs differ"));
    }
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some_and(|v| v == "1") {
        std::fs::write(&path, &first.stdout).map_err(|e| format!("{name}: {e}"))?;
        return Ok(());
    }
    let want = std::fs::read(&path).map_err(|e| format!("{name}: {e} (run with UPDATE_GOLDEN=1 to create)"))?;
    if want != first.stdout {
        return Err(format!("{name}: output differs from {}", path.display()));
    }
    Ok(())
}

/// (description, arguments, expected exit code), one per failure class.
pub const EXIT_CASES: &[(&str, &[&str], i32)] = &[
    ("success", &["ml", "--z", "1"], 0),
    ("usage: non-positive order", &["free", "--nu-re", "0"], 2),
    ("usage: unknown flag", &["well", "--widht", "2"], 2),
    ("usage: singular time grid", &["green", "--t-min", "0", "--nt", "2", "--nx", "3"], 2),
    ("numerical: unreachable tolerance", &["ml", "--alpha", "0.5", "--z", "30+30i", "--tol", "1e-300"], 1),
];

pub fn check_exit(desc: &str, args: &[&str], code: i32) -> Result<(), String> {
    let out = tfse(args);
    if out.status.code() == Some(code) {
        Ok(())
    } else {
        Err(format!("{desc}: expected exit {code}, got {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)))
    }
}
