//! Deterministic JSON and CSV rendering.

use serde_json::{Map, Number, Value};

pub const SIGNIFICANT_DIGITS: usize = 12;

/// `x` rounded to [`SIGNIFICANT_DIGITS`] significant digits.
pub fn round_significant(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    let s = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    s.parse().expect("formatted float parses")
}

/// Rounds every float and normalizes `-0.0`; keys are already sorted
/// because `serde_json::Map` is a `BTreeMap` here.
pub fn canonicalize(value: Value) -> Value {
    match value {
        Value::Array(items) => Value::Array(items.into_iter().map(canonicalize).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, canonicalize(v))).collect()),
        Value::Number(n) if n.is_f64() => {
            let x = round_significant(n.as_f64().expect("f64"));
            let x = if x == 0.0 { 0.0 } else { x };
            Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        other => other,
    }
}

pub fn format_float(x: f64) -> String {
    let x = round_significant(x);
    if x == 0.0 {
        "0".into()
    } else if x.is_finite() && !(1e-4..1e15).contains(&x.abs()) {
        format!("{x:e}")
    } else {
        x.to_string()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub seed: Option<u64>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: Value) -> Self {
        Self {
            command: command.into(),
            inputs,
            results,
            seed: None,
        }
    }

    pub fn with_seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    pub fn to_value(&self) -> Value {
        let mut map = Map::new();
        map.insert("command".into(), Value::String(self.command.clone()));
        map.insert("inputs".into(), self.inputs.clone());
        map.insert("results".into(), self.results.clone());
        map.insert("version".into(), Value::String(env!("CARGO_PKG_VERSION").into()));
        if let Some(seed) = self.seed {
            map.insert("seed".into(), Value::from(seed));
        }
        canonicalize(Value::Object(map))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("serializable");
        s.push('\n');
        s
    }
}

/// A CSV table of already formatted cells.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}
