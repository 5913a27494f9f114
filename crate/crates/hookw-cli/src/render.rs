//! Plain-text rendering of command output.
//!
//! Every command builds a JSON value; the table view is derived from that
//! value, so both modes always carry the same data.

use serde_json::Value;

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "none".into(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join("; "),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", scalar(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

fn is_row_list(v: &Value) -> bool {
    matches!(v, Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object))
}

fn table(rows: &[Value], indent: &str, out: &mut String) {
    let mut headers: Vec<String> = Vec::new();
    for row in rows {
        for k in row.as_object().expect("row objects").keys() {
            if !headers.contains(k) {
                headers.push(k.clone());
            }
        }
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            headers
                .iter()
                .map(|h| row.get(h).map(scalar).unwrap_or_else(|| "-".into()))
                .collect()
        })
        .collect();
    let widths: Vec<usize> = headers
        .iter()
        .enumerate()
        .map(|(i, h)| {
            cells
                .iter()
                .map(|r| r[i].chars().count())
                .chain([h.chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |items: &[String]| {
        let padded: Vec<String> = items
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect();
        format!("{indent}{}\n", padded.join("  ").trim_end())
    };
    out.push_str(&line(&headers));
    for row in &cells {
        out.push_str(&line(row));
    }
}

fn render_into(v: &Value, indent: &str, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                if is_row_list(v) {
                    out.push_str(&format!("{indent}{k}:\n"));
                    table(v.as_array().unwrap(), &format!("{indent}  "), out);
                } else if v.is_object() {
                    out.push_str(&format!("{indent}{k}:\n"));
                    render_into(v, &format!("{indent}  "), out);
                } else {
                    out.push_str(&format!("{indent}{k}: {}\n", scalar(v)));
                }
            }
        }
        Value::Array(items) if is_row_list(v) => table(items, indent, out),
        other => out.push_str(&format!("{indent}{}\n", scalar(other))),
    }
}

/// Renders a JSON value as aligned text.
pub fn render_table(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, "", &mut out);
    out
}
