//! The JSON document every command prints.

use cayint::group::Fingerprint;
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Nonmember,
    Nonintegral,
    Failed,
    UsageError,
    InternalError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Nonmember | Status::Nonintegral | Status::Failed => 1,
            Status::UsageError => 2,
            Status::InternalError => 3,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupInfo {
    pub spec: String,
    pub order: usize,
    pub fingerprint: Fingerprint,
}

#[derive(Clone, Debug, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub expected: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub suggestions: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub status: Status,
    pub exit_code: i32,
    pub group: Option<GroupInfo>,
    pub result: Option<Value>,
    pub error: Option<ErrorInfo>,
    pub timing: Timing,
}

impl Report {
    /// Serialized with every float cut to [`SIGNIFICANT_DIGITS`].
    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        round_floats(&mut value);
        serde_json::to_string_pretty(&value).expect("value serializes")
    }
}

/// Rounds to 12 significant digits and folds magnitudes below `1e-12` (and `-0`) to zero.
pub fn round_float(x: f64) -> f64 {
    if !x.is_finite() || x.abs() < 1e-12 {
        return if x.is_finite() { 0.0 } else { x };
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().expect("formatted float parses")
}

pub fn round_floats(value: &mut Value) {
    match value {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n.as_f64().map(round_float).and_then(serde_json::Number::from_f64) {
                *n = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(round_float(2f64.sqrt() * 3.0), 4.24264068712);
        assert_eq!(round_float(-2.0000000000000004), -2.0);
        assert_eq!(round_float(-3e-16), 0.0);
        assert_eq!(round_float(123_456_789.123_456_7), 123_456_789.123);
    }
}
