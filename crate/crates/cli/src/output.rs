//! Rendering helpers shared by the subcommands.

use dumont_core::structure::Value;
use dumont_core::Permutation;
use serde::Serialize;

/// Compact JSON with object keys sorted, so output is stable byte for byte.
pub fn json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("output serializes");
    serde_json::to_string(&v).expect("value serializes")
}

/// Plain-text form of a permutation; the empty one needs a visible token.
pub fn plain_perm(p: &Permutation) -> String {
    if p.is_empty() {
        "(empty)".to_string()
    } else {
        p.to_string()
    }
}

/// One CSV cell for a report value; list items are separated by `;`.
pub fn csv_value(v: &Value) -> String {
    match v {
        Value::Count(c) => c.to_string(),
        Value::Counts(cs) => cs.iter().map(u64::to_string).collect::<Vec<_>>().join(";"),
        Value::Set(s) => s.join(";"),
    }
}

pub fn plain_value(v: &Value) -> String {
    match v {
        Value::Count(c) => c.to_string(),
        Value::Counts(cs) => format!(
            "[{}]",
            cs.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
        ),
        Value::Set(s) => format!("{{{}}}", s.join(", ")),
    }
}
