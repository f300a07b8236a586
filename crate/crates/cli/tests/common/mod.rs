//! Helpers shared by the integration tests: running the binary and the
//! table of golden cases.
#![allow(dead_code)]

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

pub fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

pub fn dagscope(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dagscope"))
        .args(args)
        .current_dir(dir("fixtures"))
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
    pub stderr: &'static str,
}

const fn case(name: &'static str, args: &'static [&'static str], code: i32) -> Case {
    Case {
        name,
        args,
        code,
        stderr: "",
    }
}

pub const CASES: &[Case] = &[
    case("fig1_check", &["check", "fig1.dag"], 1),
    case("fig1_md_check", &["check", "fig1_md.dag"], 1),
    case("fig1_fi_check", &["check", "fig1_fi.dag"], 0),
    case("fig1_md_mr_check", &["check", "fig1_md_mr.dag"], 0),
    case("fig1_md_check_lines", &["--format", "lines", "check", "fig1_md.dag"], 1),
    case("fig1_override_check", &["check", "fig1_md.dag", "--adjust", "FI"], 0),
    case(
        "fig1_empty_override_check",
        &["check", "fig1_fi.dag", "--adjust", ""],
        1,
    ),
    case("fig1_adjustments", &["adjustments", "fig1.dag"], 0),
    case(
        "fig1_adjustments_lines",
        &["--format", "lines", "adjustments", "fig1.dag"],
        0,
    ),
    case("fig1_adjustments_max1", &["adjustments", "fig1.dag", "--max", "1"], 0),
    case(
        "fig1_adjustments_lookup",
        &["adjustments", "fig1.dag", "--adjust", "MD,MR"],
        0,
    ),
    case("fig1_bias_edges", &["bias-edges", "fig1.dag"], 0),
    case("fig1_md_bias_edges", &["bias-edges", "fig1_md.dag"], 0),
    case("fig1_fi_bias_edges", &["bias-edges", "fig1_fi.dag"], 0),
    case("fig1_md_mr_bias_edges", &["bias-edges", "fig1_md_mr.dag"], 0),
    case("fig1_dsep", &["dsep", "fig1.dag", "--given", "FI"], 1),
    case("coffee_check", &["check", "coffee.dag"], 1),
    case("coffee_adjustments", &["adjustments", "coffee.dag"], 0),
    case("coffee_dsep_s", &["dsep", "coffee.dag", "--given", "S"], 0),
    case("coffee_dsep", &["dsep", "coffee.dag"], 1),
    case("coffee_bias_edges", &["bias-edges", "coffee.dag"], 0),
    case("harvard_dsep", &["dsep", "harvard.dag"], 0),
    case("harvard_dsep_h", &["dsep", "harvard.dag", "--given", "H"], 1),
    case(
        "harvard_dsep_h_lines",
        &["--format", "lines", "dsep", "harvard.dag", "--given", "H"],
        1,
    ),
    case("harvard_adjustments", &["adjustments", "harvard.dag"], 0),
    case("chain_check", &["check", "chain.dag"], 0),
    case("chain_adjustments", &["adjustments", "chain.dag"], 0),
    case("chain_bias_edges", &["bias-edges", "chain.dag"], 0),
    case("loop_check", &["check", "loop.dag"], 0),
    Case {
        name: "loop_adjustments",
        args: &["adjustments", "loop.dag"],
        code: 3,
        stderr: "x1 -> m -> x2",
    },
    Case {
        name: "blocked_adjustments",
        args: &["adjustments", "blocked.dag"],
        code: 1,
        stderr: "no adjustment set exists",
    },
    Case {
        name: "desc_bias_edges",
        args: &["bias-edges", "desc.dag"],
        code: 0,
        stderr: "warning: the adjusted set contains a descendant of the exposure",
    },
    Case {
        name: "malformed_check",
        args: &["check", "malformed.dag"],
        code: 2,
        stderr: "malformed.dag:4:8: syntax error",
    },
    Case {
        name: "cyclic_check",
        args: &["check", "cyclic.dag"],
        code: 2,
        stderr: "directed cycle",
    },
    Case {
        name: "missing_file",
        args: &["check", "nowhere.dag"],
        code: 2,
        stderr: "nowhere.dag",
    },
    Case {
        name: "unknown_given",
        args: &["dsep", "harvard.dag", "--given", "Q"],
        code: 2,
        stderr: "`Q`",
    },
    Case {
        name: "unknown_latent",
        args: &["adjustments", "fig1.dag", "--latent", "Q"],
        code: 2,
        stderr: "`Q`",
    },
    Case {
        name: "conflicting_roles_check",
        args: &["check", "conflict.dag"],
        code: 3,
        stderr: "conflict.dag:1:25: conflicting roles for `a`",
    },
    Case {
        name: "no_outcome_check",
        args: &["check", "no_outcome.dag"],
        code: 3,
        stderr: "outcome",
    },
    Case {
        name: "exposure_adjusted",
        args: &["bias-edges", "fig1.dag", "--adjust", "LE"],
        code: 3,
        stderr: "",
    },
];

/// Runs every case and returns a description of each disagreement with
/// the expected exit code, stderr fragment or golden stdout. With `update`
/// set, the golden files are rewritten instead of compared.
pub fn golden_mismatches(update: bool) -> Vec<String> {
    let mut mismatches = Vec::new();
    for c in CASES {
        let out = dagscope(c.args, None);
        let stdout = String::from_utf8_lossy(&out.stdout).into_owned();
        let stderr = String::from_utf8_lossy(&out.stderr);
        if out.status.code() != Some(c.code) {
            mismatches.push(format!("{}: exit {:?}, expected {}", c.name, out.status.code(), c.code));
        }
        if !stderr.contains(c.stderr) {
            mismatches.push(format!("{}: stderr {stderr:?} lacks {:?}", c.name, c.stderr));
        }
        let golden = dir("golden").join(format!("{}.out", c.name));
        if update {
            fs::write(&golden, &stdout).unwrap();
        } else if fs::read_to_string(&golden).ok().as_deref() != Some(stdout.as_str()) {
            mismatches.push(format!("{}: stdout differs:\n{stdout}", c.name));
        }
    }
    mismatches
}
