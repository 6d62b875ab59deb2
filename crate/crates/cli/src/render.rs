//! JSON and plain-text rendering of command output.

use std::collections::BTreeSet;

use num_rational::Rational64;
use serde_json::Value;
use tempered_core::rootsys::{format_rational, RootDatum, RootIdx, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

pub fn rational(x: &Rational64) -> Value {
    Value::String(format_rational(x))
}

pub fn weight(w: &Weight) -> Value {
    Value::String(w.to_string())
}

pub fn root(d: &RootDatum, i: RootIdx) -> Value {
    Value::String(d.root(i).iter().map(i64::to_string).collect::<Vec<_>>().join(","))
}

pub fn roots(d: &RootDatum, set: &BTreeSet<RootIdx>) -> Value {
    Value::Array(set.iter().map(|&i| root(d, i)).collect())
}

pub fn opt<T>(x: Option<T>, f: impl FnOnce(T) -> Value) -> Value {
    x.map_or(Value::Null, f)
}

pub fn emit(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("values are serializable"),
        Format::Text => text(v),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => items
            .iter()
            .map(|x| {
                if x.is_array() {
                    format!("[{}]", scalar(x))
                } else {
                    scalar(x)
                }
            })
            .collect::<Vec<_>>()
            .join("  "),
        Value::Object(_) => v.to_string(),
        other => other.to_string(),
    }
}

fn text(v: &Value) -> String {
    match v {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            map.iter()
                .map(|(k, x)| format!("{k:<width$}  {}", scalar(x)))
                .collect::<Vec<_>>()
                .join("\n")
        }
        Value::Array(items) if items.iter().all(Value::is_object) => {
            items.iter().map(text).collect::<Vec<_>>().join("\n\n")
        }
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join("\n"),
        other => scalar(other),
    }
}
