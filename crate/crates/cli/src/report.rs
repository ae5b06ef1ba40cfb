//! Structured command results with text and JSON renderings.

use serde_json::{json, Map, Value};

pub const SCHEMA: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A mathematical outcome that the caller asked about but that is not a
    /// successful answer, such as a missing p-th root.
    Outcome,
    Error,
}

impl Status {
    fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Outcome => "outcome",
            Status::Error => "error",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Outcome | Status::Error => 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub status: Status,
    pub result: Map<String, Value>,
    /// Overrides the default `key: value` text lines.
    pub text: Option<Vec<String>>,
}

impl Report {
    pub fn ok() -> Self {
        Report { status: Status::Ok, result: Map::new(), text: None }
    }

    pub fn outcome() -> Self {
        Report { status: Status::Outcome, ..Report::ok() }
    }

    pub fn error(err: &ore_core::Error) -> Self {
        let mut r = Report { status: Status::Error, ..Report::ok() };
        r.result.insert("kind".into(), json!(err.kind()));
        r.result.insert("message".into(), json!(err.to_string()));
        r.text = Some(vec![format!("error ({}): {err}", err.kind())]);
        r
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.result.insert(key.into(), value.into());
        self
    }

    pub fn lines(mut self, lines: Vec<String>) -> Self {
        self.text = Some(lines);
        self
    }

    pub fn render_text(&self) -> String {
        let lines = match &self.text {
            Some(lines) => lines.clone(),
            None => {
                let mut out = Vec::new();
                flatten("", &self.result, &mut out);
                out
            }
        };
        let mut s = lines.join("\n");
        s.push('\n');
        s
    }

    pub fn render_json(&self, command: &str, field: &str) -> String {
        let key = if self.status == Status::Error { "error" } else { "result" };
        let doc = json!({
            "schema": SCHEMA,
            "command": command,
            "field": field,
            "status": self.status.name(),
            key: Value::Object(self.result.clone()),
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
        s.push('\n');
        s
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn flatten(prefix: &str, map: &Map<String, Value>, out: &mut Vec<String>) {
    for (k, v) in map {
        let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
        match v {
            Value::Object(inner) => flatten(&key, inner, out),
            other => out.push(format!("{key}: {}", scalar(other))),
        }
    }
}
