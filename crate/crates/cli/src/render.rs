//! JSON and table renderings of a command result.

use serde_json::Value;

/// Pretty JSON with sorted keys; parsing and re-rendering is the identity.
pub fn json(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn table_rows(rows: &[Value], out: &mut String) {
    let Some(Value::Object(first)) = rows.first() else { return };
    let cols: Vec<&String> = first.keys().collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| cols.iter().map(|c| scalar(&r[c.as_str()])).collect())
        .collect();
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
        .collect();
    let line = |vals: Vec<&str>| -> String {
        let padded: Vec<String> = vals.iter().zip(&widths).map(|(v, w)| format!("{v:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    out.push_str(&line(cols.iter().map(|c| c.as_str()).collect()));
    for r in &cells {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
}

/// Nested objects become dotted keys.
fn flatten(prefix: &str, v: &Value, out: &mut serde_json::Map<String, Value>) {
    match v {
        Value::Object(m) => {
            for (k, val) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, val, out);
            }
        }
        other => {
            out.insert(prefix.to_string(), other.clone());
        }
    }
}

/// `key  value` lines; arrays of objects become sub-tables.
pub fn table(v: &Value) -> String {
    let mut out = String::new();
    if !v.is_object() {
        return scalar(v) + "\n";
    }
    let mut map = serde_json::Map::new();
    flatten("", v, &mut map);
    let width = map.keys().map(String::len).max().unwrap_or(0);
    let mut nested = Vec::new();
    for (k, val) in &map {
        match val {
            Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
                nested.push((k, items));
            }
            Value::Array(items) => {
                let parts: Vec<String> = items.iter().map(scalar).collect();
                out.push_str(&format!("{k:<width$}  [{}]\n", parts.join(", ")));
            }
            Value::String(s) if s.contains('\n') => {
                out.push_str(&format!("{k}:\n"));
                for l in s.lines() {
                    out.push_str(&format!("  {l}\n"));
                }
            }
            _ => out.push_str(&format!("{k:<width$}  {}\n", scalar(val))),
        }
    }
    for (k, items) in nested {
        out.push_str(&format!("\n{k}:\n"));
        let flat: Vec<Value> = items
            .iter()
            .map(|item| {
                let mut m = item.as_object().cloned().unwrap_or_default();
                for v in m.values_mut() {
                    if !v.is_string() && (v.is_array() || v.is_object()) {
                        *v = Value::String(v.to_string());
                    }
                }
                Value::Object(m)
            })
            .collect();
        table_rows(&flat, &mut out);
    }
    out
}
