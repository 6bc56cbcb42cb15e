#![allow(dead_code)]

use std::io::Write;
use std::process::Command;

use serde_json::Value;

pub struct Run {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub report: Value,
}

pub fn surface_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().expect("temp file");
    f.write_all(text.as_bytes()).expect("write surface");
    f
}

pub fn ellsurf(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_ellsurf"))
        .args(args)
        .output()
        .expect("run ellsurf");
    let report = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: out.stdout,
        report,
    }
}

/// Runs `command` on a surface given as file text.
pub fn run_on(text: &str, command: &str, extra: &[&str]) -> Run {
    let f = surface_file(text);
    let path = f.path().to_str().expect("utf-8 path").to_string();
    let mut args = vec![command, "--input", path.as_str()];
    args.extend_from_slice(extra);
    ellsurf(&args)
}

pub const E3: &str = "name = e3\na4 = 0\na6 = -t^2\n";
pub const E1: &str = "name = e1\na4 = 0\na6 = t\n";
pub const TWO_TORSION: &str = "name = two-torsion\na4 = -t^2\na6 = 0\n";
