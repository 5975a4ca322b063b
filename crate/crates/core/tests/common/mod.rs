#![allow(dead_code)]

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

pub struct Run {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

/// Runs the `hopfrot` binary with `args`, feeding `stdin`.
pub fn hopfrot(args: &[&str], stdin: &str) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hopfrot"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn hopfrot");
    // The tool may exit before reading its input.
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    let out = child.wait_with_output().expect("wait for hopfrot");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: out.stdout,
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct GoldenCase {
    pub name: &'static str,
    /// Input file stem under `tests/golden`, passed with `--in`.
    pub input: Option<&'static str>,
    pub args: &'static [&'static str],
}

pub const GOLDEN: &[GoldenCase] = &[
    GoldenCase { name: "convert_identity", input: Some("convert_identity"), args: &["convert"] },
    GoldenCase { name: "convert_half_turn", input: Some("convert_half_turn"), args: &["convert"] },
    GoldenCase { name: "convert_degrees", input: Some("convert_degrees"), args: &["convert", "--degrees"] },
    GoldenCase { name: "convert_gb", input: Some("convert_gb"), args: &["convert", "--convention", "bloch"] },
    GoldenCase { name: "convert_quaternion", input: Some("convert_quaternion"), args: &["convert"] },
    GoldenCase { name: "rotate_quat", input: Some("rotate"), args: &["rotate", "--convention", "quat"] },
    GoldenCase { name: "rotate_bloch", input: Some("rotate"), args: &["rotate", "--convention", "bloch"] },
    GoldenCase { name: "rotate_empty", input: Some("rotate_empty"), args: &["rotate"] },
    GoldenCase { name: "hopf_quat", input: Some("hopf_quat"), args: &["hopf", "--variant", "quat"] },
    GoldenCase { name: "hopf_bloch", input: Some("hopf_bloch"), args: &["hopf", "--variant", "bloch"] },
    GoldenCase { name: "hopf_classic", input: Some("hopf_classic"), args: &["hopf", "--variant", "classic"] },
    GoldenCase { name: "lift_quat", input: Some("lift"), args: &["lift", "--variant", "quat"] },
    GoldenCase { name: "lift_bloch", input: Some("lift"), args: &["lift", "--variant", "bloch"] },
    GoldenCase { name: "lift_classic", input: Some("lift"), args: &["lift", "--variant", "classic"] },
    GoldenCase { name: "fiber_quat", input: Some("fiber_quat"), args: &["fiber", "--variant", "quat", "--count", "4"] },
    GoldenCase {
        name: "fiber_bloch",
        input: Some("fiber_bloch"),
        args: &["fiber", "--variant", "bloch", "--count", "1"],
    },
    GoldenCase {
        name: "fiber_classic",
        input: Some("fiber_classic"),
        args: &["fiber", "--variant", "classic", "--count", "3"],
    },
    GoldenCase {
        name: "verify_compare",
        input: None,
        args: &["verify", "--check", "compare-bloch-quat", "--samples", "100", "--seed", "7"],
    },
];

impl GoldenCase {
    fn argv(&self) -> Vec<String> {
        let mut argv: Vec<String> = self.args.iter().map(|s| s.to_string()).collect();
        if let Some(stem) = self.input {
            argv.push("--in".into());
            argv.push(golden_dir().join(format!("{stem}.in.json")).display().to_string());
        }
        argv
    }

    /// Runs the case twice and compares both outputs with the stored golden
    /// file. Set `HOPFROT_BLESS=1` to rewrite the golden files instead.
    pub fn check(&self) -> Result<(), String> {
        let argv = self.argv();
        let args: Vec<&str> = argv.iter().map(String::as_str).collect();
        let first = hopfrot(&args, "");
        let second = hopfrot(&args, "");
        if first.code != 0 {
            return Err(format!("{}: exit {} ({})", self.name, first.code, first.stderr.trim()));
        }
        if first.stdout != second.stdout {
            return Err(format!("{}: output differs between runs", self.name));
        }
        let path = golden_dir().join(format!("{}.out.json", self.name));
        if std::env::var_os("HOPFROT_BLESS").is_some() {
            fs::write(&path, &first.stdout).map_err(|e| e.to_string())?;
            return Ok(());
        }
        let expected = fs::read(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        if expected != first.stdout {
            return Err(format!(
                "{}: output differs from {}:\n{}",
                self.name,
                path.display(),
                String::from_utf8_lossy(&first.stdout)
            ));
        }
        Ok(())
    }
}

pub struct ExitCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: &'static str,
    pub code: i32,
}

pub const EXIT_CODES: &[ExitCase] = &[
    ExitCase { name: "malformed json", args: &["convert"], stdin: "{\"theta\": ", code: 2 },
    ExitCase {
        name: "unknown field",
        args: &["convert"],
        stdin: r#"{"theta": 1, "axis": [0, 0, 1], "units": "rad"}"#,
        code: 2,
    },
    ExitCase { name: "unknown subcommand", args: &["spin"], stdin: "", code: 2 },
    ExitCase { name: "missing variant", args: &["hopf"], stdin: "[]", code: 2 },
    ExitCase {
        name: "missing input file",
        args: &["convert", "--in", "/nonexistent/hopfrot.json"],
        stdin: "",
        code: 2,
    },
    ExitCase { name: "axis too long", args: &["convert"], stdin: r#"{"theta": 0, "axis": [0, 0, 2]}"#, code: 3 },
    ExitCase { name: "zero axis", args: &["convert"], stdin: r#"{"theta": 1, "axis": [0, 0, 0]}"#, code: 3 },
    ExitCase {
        name: "rotate zero axis",
        args: &["rotate"],
        stdin: r#"{"axis_angle": {"theta": 1, "axis": [0, 0, 0]}, "points": [[1, 0, 0]]}"#,
        code: 3,
    },
    ExitCase { name: "non-unit quaternion", args: &["convert"], stdin: "[1, 1, 0, 0]", code: 3 },
    ExitCase { name: "hopf quat off S3", args: &["hopf", "--variant", "quat"], stdin: "[[2, 0, 0, 0]]", code: 3 },
    ExitCase {
        name: "hopf classic off S3",
        args: &["hopf", "--variant", "classic"],
        stdin: r#"[{"z": [0, 0], "w": [2, 0]}]"#,
        code: 3,
    },
    ExitCase {
        name: "hopf bloch zero",
        args: &["hopf", "--variant", "bloch"],
        stdin: r#"[{"z": [0, 0], "w": [0, 0]}]"#,
        code: 3,
    },
    ExitCase { name: "lift off sphere", args: &["lift", "--variant", "bloch"], stdin: "[[0, 0, 1.1]]", code: 3 },
    ExitCase {
        name: "fiber off sphere",
        args: &["fiber", "--variant", "quat", "--count", "2"],
        stdin: "[0, 2, 0]",
        code: 3,
    },
    ExitCase {
        name: "fiber count 0",
        args: &["fiber", "--variant", "quat", "--count", "0"],
        stdin: "[1, 0, 0]",
        code: 2,
    },
    ExitCase { name: "verify bogus", args: &["verify", "--check", "bogus"], stdin: "", code: 2 },
    ExitCase { name: "verify zero samples", args: &["verify", "--samples", "0"], stdin: "", code: 2 },
    ExitCase { name: "verify negative tolerance", args: &["verify", "--tolerance", "-1"], stdin: "", code: 2 },
    ExitCase {
        name: "verify failure",
        args: &["verify", "--check", "reconcile", "--samples", "50", "--tolerance", "1e-300"],
        stdin: "",
        code: 1,
    },
    ExitCase {
        name: "empty rotate",
        args: &["rotate"],
        stdin: r#"{"axis_angle": {"theta": 1, "axis": [1, 0, 0]}, "points": []}"#,
        code: 0,
    },
    ExitCase { name: "help", args: &["--help"], stdin: "", code: 0 },
];

impl ExitCase {
    pub fn check(&self) -> Result<(), String> {
        let run = hopfrot(self.args, self.stdin);
        if run.code != self.code {
            return Err(format!(
                "{}: expected exit {}, got {} ({})",
                self.name,
                self.code,
                run.code,
                run.stderr.trim()
            ));
        }
        if self.code != 0 && self.code != 1 && !run.stdout.is_empty() {
            return Err(format!("{}: error exit wrote to standard output", self.name));
        }
        Ok(())
    }
}
