//! Report envelope and its JSON, CSV and text renderings.

use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub input_echo: Value,
    pub operation: String,
    pub result: Value,
    pub per_k: Vec<Value>,
    pub fit: Option<Value>,
    pub certified: bool,
    pub runtime_ms: Option<u64>,
    pub schema_version: u32,
}

impl Report {
    pub fn new(operation: &str, input_echo: Value) -> Self {
        Report {
            input_echo,
            operation: operation.to_string(),
            result: Value::Null,
            per_k: Vec::new(),
            fit: None,
            certified: false,
            runtime_ms: None,
            schema_version: SCHEMA_VERSION,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        }
    }

    fn csv(&self) -> String {
        let mut out = String::new();
        if let Some(Value::Object(first)) = self.per_k.first() {
            let cols: Vec<&String> = first.keys().collect();
            out.push_str(
                &cols
                    .iter()
                    .map(|c| c.as_str())
                    .collect::<Vec<_>>()
                    .join(","),
            );
            out.push('\n');
            for row in &self.per_k {
                let cells: Vec<String> = cols.iter().map(|c| csv_cell(&row[c.as_str()])).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            return out;
        }
        out.push_str("key,value\n");
        let mut rows = Vec::new();
        flatten("", &self.result, &mut rows);
        rows.push(("certified".to_string(), Value::Bool(self.certified)));
        for (k, v) in rows {
            out.push_str(&format!("{},{}\n", csv_escape(&k), csv_cell(&v)));
        }
        out
    }

    fn text(&self) -> String {
        let mut out = format!("{}\n", self.operation);
        let mut rows = Vec::new();
        flatten("", &self.input_echo, &mut rows);
        for (k, v) in rows {
            out.push_str(&format!("  input.{k}: {}\n", plain(&v)));
        }
        let mut rows = Vec::new();
        flatten("", &self.result, &mut rows);
        for (k, v) in rows {
            out.push_str(&format!("  {k}: {}\n", plain(&v)));
        }
        for row in &self.per_k {
            if let Value::Object(m) = row {
                let cells: Vec<String> =
                    m.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
                out.push_str(&format!("  {}\n", cells.join(" ")));
            }
        }
        if let Some(fit) = &self.fit {
            out.push_str(&format!("  fit: {}\n", plain(fit)));
        }
        out.push_str(&format!("  certified: {}\n", self.certified));
        if let Some(ms) = self.runtime_ms {
            out.push_str(&format!("  runtime_ms: {ms}\n"));
        }
        out
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, Value)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, x, out);
            }
        }
        Value::Null if prefix.is_empty() => {}
        _ => out.push((
            if prefix.is_empty() {
                "value".into()
            } else {
                prefix.into()
            },
            v.clone(),
        )),
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(a) => format!("[{}]", a.iter().map(plain).collect::<Vec<_>>().join("; ")),
        Value::Object(m) => {
            let parts: Vec<String> = m.iter().map(|(k, x)| format!("{k}={}", plain(x))).collect();
            format!("{{{}}}", parts.join(" "))
        }
        other => other.to_string(),
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        _ => csv_escape(&plain(v)),
    }
}

/// Builds a JSON object from `(key, value)` pairs in the given order.
pub fn object<I, V>(pairs: I) -> Value
where
    I: IntoIterator<Item = (&'static str, V)>,
    V: Into<Value>,
{
    Value::Object(
        pairs
            .into_iter()
            .map(|(k, v)| (k.to_string(), v.into()))
            .collect::<Map<_, _>>(),
    )
}
