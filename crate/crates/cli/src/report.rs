//! Versioned report envelope and its two renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::commands::{execute, Settings};
use crate::error::CliError;
use crate::workspace::Workspace;

pub const SCHEMA: &str = "summand-report/1";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
    pub exit_code: i32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub engine: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub document: Option<String>,
    pub inputs: BTreeMap<String, String>,
    pub orders: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

pub fn engine_version() -> String {
    format!("summand {}", env!("CARGO_PKG_VERSION"))
}

impl Report {
    /// Runs `verb` and wraps the outcome. A stated expectation that the verdict
    /// misses becomes a cross-check error.
    pub fn run(
        ws: &Workspace,
        document: Option<&str>,
        verb: &str,
        args: &BTreeMap<String, String>,
        expect: Option<&str>,
        settings: &Settings,
        with_timing: bool,
    ) -> Report {
        let start = Instant::now();
        let outcome = execute(ws, verb, args, settings);
        let timing = with_timing.then(|| start.elapsed().as_millis() as u64);
        let mut report = Report {
            schema: SCHEMA,
            engine: engine_version(),
            document: document.map(str::to_string),
            command: verb.to_string(),
            inputs: args.clone(),
            orders: ws.ring_orders(),
            verdict: None,
            expected: expect.map(str::to_string),
            result: None,
            error: None,
            timing_ms: timing,
        };
        match outcome {
            Ok(o) => {
                if let Some(e) = expect {
                    if e != o.verdict {
                        report.error = Some(error_info(&CliError::CrossCheck(format!(
                            "verdict `{}` differs from the expected `{e}`",
                            o.verdict
                        ))));
                    }
                }
                report.verdict = Some(o.verdict);
                report.result = Some(o.result);
            }
            Err(e) => report.error = Some(error_info(&e)),
        }
        report
    }

    pub fn exit_code(&self) -> i32 {
        self.error.as_ref().map(|e| e.exit_code).unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        render_text(&value)
    }
}

pub fn error_info(e: &CliError) -> ErrorInfo {
    ErrorInfo { kind: e.kind().to_string(), message: e.message().to_string(), exit_code: e.exit_code() }
}

/// Worst exit code of a batch: cross-check beats resource cap beats input error.
pub fn combined_exit_code(reports: &[Report]) -> i32 {
    let codes: Vec<i32> = reports.iter().map(Report::exit_code).collect();
    [3, 2, 1].into_iter().find(|c| codes.contains(c)).unwrap_or(0)
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Object(map) if map.is_empty() => Some("{}".into()),
        Value::Array(items) if items.iter().all(|i| !i.is_object()) => {
            let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        _ => None,
    }
}

fn render_into(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_into(out, item, indent + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                match scalar(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}- [{i}]");
                        render_into(out, item, indent + 1);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

/// Indented `key: value` lines from the JSON form, so both renderings carry
/// the same content.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, v, 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_rendering_is_flat_for_scalars() {
        let v = json!({ "verdict": "splits", "basis": ["1", "y"], "spots": [{ "index": 1 }], "w": null });
        assert_eq!(render_text(&v), "verdict: splits\nbasis: [1, y]\nspots:\n  - [0]\n    index: 1\nw: none\n");
    }

    #[test]
    fn exit_code_precedence() {
        let mk = |code: Option<i32>| Report {
            schema: SCHEMA,
            engine: engine_version(),
            document: None,
            command: "gb".into(),
            inputs: BTreeMap::new(),
            orders: BTreeMap::new(),
            verdict: None,
            expected: None,
            result: None,
            error: code.map(|c| ErrorInfo { kind: String::new(), message: String::new(), exit_code: c }),
            timing_ms: None,
        };
        assert_eq!(combined_exit_code(&[mk(None), mk(Some(1))]), 1);
        assert_eq!(combined_exit_code(&[mk(Some(1)), mk(Some(3)), mk(Some(2))]), 3);
        assert_eq!(combined_exit_code(&[mk(None)]), 0);
    }
}
