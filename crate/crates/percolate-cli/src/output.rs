//! Output rendering. JSON is the single source of truth; the human table
//! is derived from the JSON document, never computed separately.

use serde_json::Value;

/// Renders a JSON document as an indented key/value table. Arrays of
//  objects become aligned sub-tables over their scalar columns.
pub fn render_table(value: &Value) -> String {
    let mut out = String::new();
    render_into(value, 0, &mut out);
    out
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

/// Scalar, or a short all-scalar array rendered as a tuple. Used for array
/// elements and table cells so edge lists and witnesses stay on one line.
fn tuple_text(v: &Value) -> Option<String> {
    if let Some(s) = scalar_text(v) {
        return Some(s);
    }
    match v {
        Value::Array(items) if items.is_empty() => Some("-".to_string()),
        Value::Array(items) if items.len() <= 8 => {
            let parts: Vec<String> =
                items.iter().map(scalar_text).collect::<Option<Vec<_>>>()?;
            Some(format!("({})", parts.join(",")))
        }
        _ => None,
    }
}

fn render_into(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    if let Some(s) = scalar_text(value) {
        out.push_str(&format!("{pad}{s}\n"));
        return;
    }
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                render_kv(k, v, indent, out);
            }
        }
        Value::Array(items) => render_rows(items, indent, out),
        _ => unreachable!("scalars handled above"),
    }
}

fn render_kv(k: &str, v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    if let Some(s) = scalar_text(v) {
        out.push_str(&format!("{pad}{k}: {s}\n"));
        return;
    }
    if let Value::Array(items) = v {
        if let Some(parts) = items.iter().map(tuple_text).collect::<Option<Vec<_>>>() {
            out.push_str(&format!("{pad}{k}: [{}]\n", parts.join(", ")));
            return;
        }
    }
    out.push_str(&format!("{pad}{k}:\n"));
    render_into(v, indent + 1, out);
}

/// Aligned table over the scalar columns of an array of objects; anything
/// non-scalar falls back to nested rendering.
fn render_rows(items: &[Value], indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    let all_objects = items.iter().all(|i| i.is_object());
    if !all_objects || items.is_empty() {
        for item in items {
            render_into(item, indent, out);
        }
        return;
    }
    let mut columns: Vec<String> = Vec::new();
    for item in items {
        for (k, v) in item.as_object().unwrap() {
            if tuple_text(v).is_some() && !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    let mut rows: Vec<Vec<String>> = vec![columns.clone()];
    for item in items {
        let obj = item.as_object().unwrap();
        rows.push(
            columns
                .iter()
                .map(|c| obj.get(c).and_then(tuple_text).unwrap_or_else(|| "-".into()))
                .collect(),
        );
    }
    let widths: Vec<usize> = (0..columns.len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    for (i, row) in rows.iter().enumerate() {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        out.push_str(&format!("{pad}{}\n", line.join("  ").trim_end()));
        if i == 0 {
            let sep: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
            out.push_str(&format!("{pad}{}\n", sep.join("  ")));
        }
    }
    // render any non-scalar leftovers (e.g. failure lists) under each row
    for item in items {
        for (k, v) in item.as_object().unwrap() {
            if tuple_text(v).is_none() {
                render_kv(k, v, indent, out);
            }
        }
    }
}
