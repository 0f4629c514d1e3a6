use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;

use crate::Failure;

pub fn write(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display()))),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Failure(e.to_string())),
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub details: serde_json::Value,
}

impl Check {
    pub fn new<T: Serialize>(name: &'static str, passed: bool, details: &T) -> Self {
        Check {
            name,
            passed,
            details: serde_json::to_value(details).expect("reports serialize"),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report<P: Serialize> {
    pub schema: u32,
    pub command: &'static str,
    pub parameters: P,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl<P: Serialize> Report<P> {
    pub fn new(command: &'static str, parameters: P, checks: Vec<Check>) -> Self {
        Report {
            schema: 1,
            command,
            parameters,
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }
}
