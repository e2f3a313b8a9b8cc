//! Reports: the command, a digest of the job file, the payload and the
//! cross-checks, rendered as aligned text or as JSON with sorted keys.

use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub result: Value,
    pub checks: Vec<(String, bool)>,
}

pub fn digest(input: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(input)))
}

impl Report {
    pub fn to_value(&self) -> Value {
        let checks: Map<String, Value> = self.checks.iter().map(|(k, v)| (k.clone(), Value::Bool(*v))).collect();
        let mut top = Map::new();
        top.insert("command".into(), Value::from(self.command.clone()));
        top.insert("input_digest".into(), Value::from(self.input_digest.clone()));
        top.insert("result".into(), self.result.clone());
        top.insert("checks".into(), Value::Object(checks));
        Value::Object(top)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("input digest: {}\n", self.input_digest));
        out.push_str("result:\n");
        render(&self.result, 1, &mut out);
        if !self.checks.is_empty() {
            out.push_str("checks:\n");
            for (name, ok) in &self.checks {
                out.push_str(&format!("  {name}: {ok}\n"));
            }
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn row(v: &Value) -> Option<Vec<String>> {
    v.as_array()?.iter().map(scalar).collect()
}

/// Rows of numbers and booleans print on one line; other strings get a
/// line each.
fn inline(v: &Value) -> bool {
    v.as_array().is_some_and(|items| items.iter().all(|x| !x.is_string() || x.as_str().is_some_and(numeric)))
}

fn numeric(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_digit() || c == '-' || c == '/')
}

/// Rows of a matrix, when every element is an array of scalars.
fn table(v: &Value) -> Option<Vec<Vec<String>>> {
    let items = v.as_array()?;
    if items.is_empty() {
        return None;
    }
    items.iter().map(row).collect()
}

fn push_table(rows: &[Vec<String>], indent: usize, out: &mut String) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    for r in rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        let line = if cells.is_empty() { "[]".to_string() } else { cells.join("  ") };
        out.push_str(&format!("{}{line}\n", "  ".repeat(indent)));
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                if let Some(s) = scalar(item) {
                    out.push_str(&format!("{pad}{k}: {s}\n"));
                } else if let Some(r) = row(item).filter(|_| inline(item)) {
                    let body = if r.is_empty() { "[]".to_string() } else { r.join(" ") };
                    out.push_str(&format!("{pad}{k}: {body}\n"));
                } else if let Some(r) = row(item) {
                    out.push_str(&format!("{pad}{k}:\n"));
                    for s in r {
                        out.push_str(&format!("{pad}  - {s}\n"));
                    }
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render(item, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            if let Some(rows) = table(v) {
                push_table(&rows, indent, out);
                return;
            }
            for (i, item) in items.iter().enumerate() {
                if let Some(s) = scalar(item) {
                    out.push_str(&format!("{pad}[{i}] {s}\n"));
                } else if let Some(r) = row(item).filter(|_| inline(item)) {
                    out.push_str(&format!("{pad}[{i}] {}\n", r.join(" ")));
                } else {
                    out.push_str(&format!("{pad}[{i}]\n"));
                    render(item, indent + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}
