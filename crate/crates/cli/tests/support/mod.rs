//! Golden cases and helpers shared by the CLI and acceptance tests.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

/// Scenario, extra arguments, golden file, expected exit code.
pub const GOLDEN: &[(&str, &[&str], &str, i32)] = &[
    ("adjoint-gl2", &["check"], "adjoint-gl2.check", 0),
    ("adjoint-gl2", &["curvature", "--seed", "2"], "adjoint-gl2.curvature", 0),
    ("adjoint-gl2", &["validate"], "adjoint-gl2.validate", 0),
    ("corrupted-lie", &["check"], "corrupted-lie.check", 1),
    ("mc3-unequal", &["check"], "mc3-unequal.check", 0),
    ("abelian-zero", &["check"], "abelian-zero.check", 0),
    ("abelian-ym", &["action", "--kind", "ym"], "abelian-ym.ym", 0),
    ("skeletal-bf", &["check"], "skeletal-bf.check", 0),
    ("skeletal-bf", &["action", "--kind", "2cs", "--seed", "4", "--max-degree", "1"], "skeletal-bf.2cs", 0),
    ("abelianh-chain", &["check"], "abelianh-chain.check", 0),
    ("abelianh-chain", &["gauge"], "abelianh-chain.gauge", 0),
];

pub fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn scenario_path(name: &str) -> PathBuf {
    tests_dir().join("scenarios").join(format!("{name}.json"))
}

pub fn run(args: &[&str], scenario: &Path) -> (i32, String, String) {
    let (cmd, rest) = args.split_first().expect("a command");
    let out = Command::new(env!("CARGO_BIN_EXE_hgauge"))
        .arg(cmd)
        .arg(scenario)
        .args(rest)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

pub fn run_json(args: &[&str], scenario: &Path) -> (i32, String) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let (code, out, _) = run(&all, scenario);
    (code, out)
}

