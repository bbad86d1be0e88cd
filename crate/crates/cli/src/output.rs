//! Rendering of reports as JSON, an aligned text table, or CSV.
//!
//! Table and CSV are flattened views: scalars print as themselves, anything
//! nested prints as compact JSON. CSV takes the first array of objects in the
//! report data as its rows and falls back to `key,value` pairs.

use serde_json::{Map, Value};

use rookery::report::Report;
use rookery::Result;

use crate::Format;

pub fn render(report: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(report.to_json()? + "\n"),
        Format::Table => Ok(table(report)),
        Format::Csv => csv(report),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            items.iter().map(cell).collect::<Vec<_>>().join(",")
        }
        other => other.to_string(),
    }
}

fn rows_of(v: &Value) -> Option<&Vec<Value>> {
    v.as_array().filter(|a| !a.is_empty() && a.iter().all(Value::is_object))
}

fn columns(rows: &[Value]) -> Vec<String> {
    let mut cols: Vec<String> = Vec::new();
    for r in rows {
        for k in r.as_object().unwrap().keys() {
            if !cols.contains(k) {
                cols.push(k.clone());
            }
        }
    }
    cols
}

fn aligned(lines: &[Vec<String>]) -> String {
    let ncols = lines.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..ncols).map(|c| lines.iter().filter_map(|l| l.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for l in lines {
        let mut s = String::new();
        for (c, x) in l.iter().enumerate() {
            if c + 1 == l.len() {
                s += x;
            } else {
                s += &format!("{x:<w$}  ", w = widths[c]);
            }
        }
        out += s.trim_end();
        out.push('\n');
    }
    out
}

fn sub_table(name: &str, rows: &[Value]) -> String {
    let cols = columns(rows);
    let mut lines = vec![cols.clone()];
    for r in rows {
        lines.push(cols.iter().map(|c| r.get(c).map(cell).unwrap_or_default()).collect());
    }
    format!("\n{name}:\n{}", aligned(&lines))
}

fn table(report: &Report) -> String {
    let mut head = vec![
        vec!["claim".to_string(), report.claim.clone()],
        vec!["status".to_string(), report.status.to_string()],
    ];
    let mut tail = String::new();
    let empty = Map::new();
    let data = report.data.as_object().unwrap_or(&empty);
    for (k, v) in data {
        match rows_of(v) {
            Some(rows) => tail += &sub_table(k, rows),
            None => head.push(vec![k.clone(), cell(v)]),
        }
    }
    aligned(&head) + &tail
}

fn csv(report: &Report) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let empty = Map::new();
    let data = report.data.as_object().unwrap_or(&empty);
    let io = |e: csv::Error| rookery::Error::Io(std::io::Error::other(e));
    match data.values().find_map(rows_of) {
        Some(rows) => {
            let cols = columns(rows);
            w.write_record(&cols).map_err(io)?;
            for r in rows {
                w.write_record(cols.iter().map(|c| r.get(c).map(cell).unwrap_or_default())).map_err(io)?;
            }
        }
        None => {
            w.write_record(["key", "value"]).map_err(io)?;
            w.write_record(["status", report.status.as_str()]).map_err(io)?;
            for (k, v) in data {
                w.write_record([k.as_str(), &cell(v)]).map_err(io)?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| rookery::Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rookery::report::Status;
    use serde_json::json;

    fn sample() -> Report {
        let data = json!({"dim": 2, "hilbert": [1, 2, 1], "steps": [{"lambda": "2", "dim": 1}, {"lambda": "1,1", "dim": 1}]});
        Report::new("demo", json!({}), Status::Pass, &data).unwrap()
    }

    #[test]
    fn table_layout() {
        let t = render(&sample(), Format::Table).unwrap();
        assert!(t.starts_with("claim    demo\nstatus   pass\n"), "{t}");
        assert!(t.contains("hilbert  1,2,1"));
        assert!(t.contains("steps:\ndim  lambda\n1    2\n1    1,1\n"), "{t}");
    }

    #[test]
    fn csv_uses_first_row_array() {
        let c = render(&sample(), Format::Csv).unwrap();
        assert_eq!(c, "dim,lambda\n1,2\n1,\"1,1\"\n");
        let flat = Report::new("x", json!({}), Status::Fail, &json!({"dim": 3})).unwrap();
        assert_eq!(render(&flat, Format::Csv).unwrap(), "key,value\nstatus,fail\ndim,3\n");
    }
}
