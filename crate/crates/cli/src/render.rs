//! Text and JSON output.
//!
//! The text form is a walk over the same JSON payload, so both carry the
//! same values. Two object shapes get one-line forms: checks
//! (`label`/`passed`/`detail`) and certificate steps
//! (`rule`/`inputs`/`asserted_output`/`statement`).

use std::fmt::Write;

use serde_json::{Map, Value};

use crate::Report;

pub fn json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

pub fn text(report: &Report) -> String {
    let mut out = format!("{}: {}\n", report.command, report.status.as_str());
    render_value(&report.payload, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items)
            if items
                .iter()
                .all(|i| i.is_number() || i.is_boolean() || i.is_null()) =>
        {
            let parts: Vec<String> = items.iter().map(|i| scalar(i).expect("scalar")).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn has_keys(m: &Map<String, Value>, keys: &[&str]) -> bool {
    m.len() == keys.len() && keys.iter().all(|k| m.contains_key(*k))
}

fn one_line(m: &Map<String, Value>) -> Option<String> {
    if has_keys(m, &["label", "passed", "detail"]) {
        let verdict = if m["passed"] == Value::Bool(true) {
            "PASS"
        } else {
            "FAIL"
        };
        return Some(format!(
            "{verdict} {}: {}",
            scalar(&m["label"])?,
            scalar(&m["detail"])?
        ));
    }
    if has_keys(m, &["rule", "inputs", "asserted_output", "statement"]) {
        let inputs: Vec<String> = m["inputs"]
            .as_object()?
            .iter()
            .map(|(k, v)| Some(format!("{k}={}", scalar(v)?)))
            .collect::<Option<_>>()?;
        return Some(format!(
            "{}({}) = {}  # {}",
            scalar(&m["rule"])?,
            inputs.join(", "),
            scalar(&m["asserted_output"])?,
            scalar(&m["statement"])?
        ));
    }
    None
}

fn render_value(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, val) in m {
                match scalar(val) {
                    Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        render_value(val, indent + 2, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if let Some(line) = item.as_object().and_then(one_line) {
                    writeln!(out, "{pad}{line}").unwrap();
                } else if let Some(s) = scalar(item) {
                    writeln!(out, "{pad}- {s}").unwrap();
                } else {
                    writeln!(out, "{pad}-").unwrap();
                    render_value(item, indent + 2, out);
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other).expect("scalar")).unwrap(),
    }
}
