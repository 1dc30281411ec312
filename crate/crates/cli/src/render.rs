use std::fmt::Write as _;

use num_bigint::BigUint;
use serde_json::{Map, Number, Value};
use selfpow::Rational;

pub fn natural(n: &BigUint) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("decimal digits form a JSON number"))
}

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn rationals<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> Value {
    Value::Array(qs.into_iter().map(rational).collect())
}

pub fn object<const N: usize>(entries: [(&str, Value); N]) -> Value {
    Value::Object(entries.into_iter().map(|(k, v)| (k.to_owned(), v)).collect::<Map<_, _>>())
}

/// One compact line; keys come out sorted because the map is ordered.
pub fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values are always serializable");
    s.push('\n');
    s
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".to_owned(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            items.iter().map(cell).collect::<Vec<_>>().join(", ")
        }
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join("; "),
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", cell(v)))
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

/// `key  value` rows, keys sorted and padded to a common width.
pub fn table(v: &Value) -> String {
    let Value::Object(map) = v else {
        return format!("{}\n", cell(v));
    };
    let width = map.keys().map(|k| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in map {
        writeln!(out, "{k:<width$}  {}", cell(v)).expect("writing to a String");
    }
    out
}
