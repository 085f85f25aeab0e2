//! Verification reports and their text and JSON renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use shephard_core::field::{Cyclotomic, Rational};
use shephard_core::poly::{Poly, UPoly};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Error => "error",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Details {
    pub text: String,
    pub fields: Map<String, Value>,
}

impl Details {
    pub fn new(text: impl Into<String>) -> Self {
        Details {
            text: text.into(),
            fields: Map::new(),
        }
    }

    pub fn field(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub status: Status,
    pub details: Details,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub group: String,
    pub field_order: u32,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn new(group: &str, field_order: u32) -> Self {
        VerificationReport {
            schema: SCHEMA_VERSION,
            group: group.to_string(),
            field_order,
            checks: Vec::new(),
        }
    }

    /// No check failed or errored.
    pub fn passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| matches!(c.status, Status::Pass | Status::Skipped))
    }

    pub fn status(&self) -> Status {
        Status::from_bool(self.passed())
    }

    pub fn check(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.id.len())
            .max()
            .unwrap_or(5)
            .max(5);
        let mut out = String::new();
        writeln!(
            out,
            "group {}  (field order {})",
            self.group, self.field_order
        )
        .unwrap();
        writeln!(
            out,
            "{:<width$}  {:<7}  {:>8}  summary",
            "check", "status", "millis"
        )
        .unwrap();
        for c in &self.checks {
            let mut lines = c.details.text.lines();
            let first = lines.next().unwrap_or("");
            writeln!(
                out,
                "{:<width$}  {:<7}  {:>8}  {}",
                c.id,
                c.status.as_str(),
                c.millis,
                first
            )
            .unwrap();
            for line in lines {
                writeln!(out, "{:<width$}  {:<7}  {:>8}  {}", "", "", "", line).unwrap();
            }
        }
        writeln!(out, "overall: {}", self.status().as_str()).unwrap();
        out
    }
}

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

/// `{order, coeffs}` with coefficients as exact rational strings.
pub fn cyclotomic(x: &Cyclotomic) -> Value {
    json!({
        "order": x.order(),
        "coeffs": x.coeffs().iter().map(rational).collect::<Vec<_>>(),
    })
}

pub fn upoly(p: &UPoly) -> Value {
    Value::Array(p.coeffs().iter().map(cyclotomic).collect())
}

pub fn poly(p: &Poly) -> Value {
    Value::String(p.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        let mut r = VerificationReport::new("B2", 4);
        r.checks.push(CheckRecord {
            id: "presentation".into(),
            status: Status::Pass,
            details: Details::new("all relations hold\nsecond line")
                .field("order", 8)
                .field("value", cyclotomic(&Cyclotomic::zeta_pow(4, 1))),
            millis: 3,
        });
        r.checks.push(CheckRecord {
            id: "synthetic".into(),
            status: Status::Fail,
            details: Details::new("forced failure"),
            millis: 0,
        });
        r
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        assert_eq!(VerificationReport::from_json(&r.to_json()).unwrap(), r);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(
            v["checks"][0]["details"]["fields"]["value"],
            json!({"order": 4, "coeffs": ["0", "1"]})
        );
    }

    #[test]
    fn failing_check_fails_report() {
        let r = sample();
        assert!(!r.passed());
        assert_eq!(r.check("synthetic").unwrap().status, Status::Fail);
        let text = r.to_text();
        assert!(text.contains("synthetic     fail"));
        assert!(text.ends_with("overall: fail\n"));
    }

    #[test]
    fn skipped_checks_do_not_fail() {
        let mut r = VerificationReport::new("C3", 3);
        r.checks.push(CheckRecord {
            id: "retraction".into(),
            status: Status::Skipped,
            details: Details::new("not applicable"),
            millis: 0,
        });
        assert!(r.passed());
    }
}
