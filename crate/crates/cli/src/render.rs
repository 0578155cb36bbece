//! Plain-text rendering of an output envelope: one `key: value` line per
//! leaf, nested keys joined with dots.

use serde_json::Value;

pub fn text(envelope: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = envelope {
        for (key, value) in map {
            if key == "inputs" {
                continue;
            }
            leaf(&mut out, key, value);
        }
    }
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn leaf(out: &mut String, key: &str, value: &Value) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                leaf(out, &format!("{key}.{k}"), v);
            }
        }
        Value::Array(items) if items.iter().all(|v| !v.is_object() && !v.is_array()) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            out.push_str(&format!("{key}: [{}]\n", joined.join(", ")));
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                leaf(out, &format!("{key}[{i}]"), v);
            }
        }
        other => out.push_str(&format!("{key}: {}\n", scalar(other))),
    }
}
