//! Output formatting. JSON is printed compactly with keys in a fixed
//! order; the table form flattens nested values into `key  value` lines.

use serde_json::Value;

use crate::config::Output;

pub fn render(value: &Value, output: Output) -> String {
    match output {
        Output::Json => value.to_string(),
        Output::Table => {
            let mut rows = Vec::new();
            flatten("", value, &mut rows);
            let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
            rows.iter()
                .map(|(k, v)| {
                    if k.is_empty() {
                        v.clone()
                    } else {
                        format!("{k:<width$}  {v}")
                    }
                })
                .collect::<Vec<_>>()
                .join("\n")
        }
    }
}

fn flatten(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match value {
        Value::Object(map) if !map.is_empty() => {
            for (k, v) in map {
                flatten(&join(k), v, rows);
            }
        }
        Value::Array(items) if items.iter().any(|v| v.is_object() || v.is_array()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), v, rows);
            }
        }
        Value::String(s) => rows.push((prefix.to_string(), s.clone())),
        other => rows.push((prefix.to_string(), other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn table_flattens() {
        let v = json!({"dim": 8, "object": {"[2,1]": 1}, "list": [1, 2]});
        assert_eq!(
            render(&v, Output::Table),
            "dim           8\nlist          [1,2]\nobject.[2,1]  1"
        );
        assert_eq!(render(&v, Output::Json), r#"{"dim":8,"list":[1,2],"object":{"[2,1]":1}}"#);
    }
}
