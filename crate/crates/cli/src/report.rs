//! Command reports. The text form is rendered from the JSON form and from
//! nothing else, so the two cannot disagree.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputInfo {
    pub name: String,
    /// A file path, `-` for stdin, or `catalog:<name>`.
    pub source: String,
    /// SHA-256 of the input bytes (for catalog entries, of their export).
    pub sha256: String,
}

impl InputInfo {
    pub fn new(name: impl Into<String>, source: impl Into<String>, bytes: &[u8]) -> Self {
        let digest = Sha256::digest(bytes);
        InputInfo {
            name: name.into(),
            source: source.into(),
            sha256: digest.iter().map(|b| format!("{b:02x}")).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportWarning {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<InputInfo>,
    pub payload: Value,
    #[serde(default)]
    pub warnings: Vec<ReportWarning>,
}

impl Report {
    pub fn new(command: &str, input: Option<InputInfo>, payload: Value) -> Self {
        Report {
            command: command.to_string(),
            input,
            payload,
            warnings: Vec::new(),
        }
    }

    pub fn warn(&mut self, kind: &str, message: impl Into<String>) {
        self.warnings.push(ReportWarning {
            kind: kind.to_string(),
            message: message.into(),
        });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_text(&self) -> String {
        render_text(&serde_json::to_value(self).expect("reports always serialize"))
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

/// Arrays of scalars, possibly nested, print on one line.
fn inline(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| is_scalar(x) || matches!(x, Value::Array(_))) => {
            let parts: Option<Vec<String>> = items.iter().map(inline).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Array(_) | Value::Object(_) => None,
        other => Some(other.to_string()),
    }
}

fn render_value(out: &mut String, key: &str, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    if let Some(s) = inline(v) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    out.push_str(&format!("{pad}{key}:\n"));
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                render_value(out, k, x, indent + 1);
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                render_value(out, &format!("[{i}]"), x, indent + 1);
            }
        }
        _ => unreachable!("scalars render inline"),
    }
}

/// Text rendering of a serialized [`Report`].
pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    if let Some(input) = report.get("input").filter(|v| !v.is_null()) {
        out.push_str(&format!(
            "input: {} ({}, sha256 {})\n",
            input["name"].as_str().unwrap_or(""),
            input["source"].as_str().unwrap_or(""),
            input["sha256"].as_str().unwrap_or("")
        ));
    }
    if let Some(Value::Object(map)) = report.get("payload") {
        for (k, v) in map {
            render_value(&mut out, k, v, 0);
        }
    }
    for w in report["warnings"].as_array().into_iter().flatten() {
        out.push_str(&format!(
            "warning [{}]: {}\n",
            w["kind"].as_str().unwrap_or(""),
            w["message"].as_str().unwrap_or("")
        ));
    }
    out
}
