//! JSON shapes. Every big integer is a decimal string so output never
//! depends on float formatting.

use dompoly_core::expr::TraceStep;
use dompoly_core::verify::{CheckRecord, Value};
use dompoly_core::DomPoly;
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// `{"coeffs": ["0","0","4","4","1"]}`, ascending powers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("coefficient {index} is not a nonnegative decimal integer: {text:?}")]
pub struct BadCoefficient {
    pub index: usize,
    pub text: String,
}

impl From<&DomPoly> for PolyJson {
    fn from(p: &DomPoly) -> Self {
        PolyJson {
            coeffs: p.coeffs().iter().map(BigUint::to_string).collect(),
        }
    }
}

impl PolyJson {
    /// Coefficients padded with zeros to `len` entries.
    pub fn padded(p: &DomPoly, len: usize) -> PolyJson {
        let mut j = PolyJson::from(p);
        if j.coeffs.len() < len {
            j.coeffs.resize(len, "0".to_string());
        }
        j
    }

    pub fn to_poly(&self) -> Result<DomPoly, BadCoefficient> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, text)| {
                let digits = !text.is_empty() && text.bytes().all(|b| b.is_ascii_digit());
                digits
                    .then(|| text.parse::<BigUint>().ok())
                    .flatten()
                    .ok_or_else(|| BadCoefficient {
                        index,
                        text: text.clone(),
                    })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(DomPoly::from_coeffs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceJson {
    pub rule: &'static str,
    pub node: String,
    pub order: usize,
}

impl From<&TraceStep> for TraceJson {
    fn from(s: &TraceStep) -> Self {
        TraceJson {
            rule: s.rule.as_str(),
            node: s.node.clone(),
            order: s.order,
        }
    }
}

pub fn value_json(v: &Value) -> serde_json::Value {
    match v {
        Value::Int(i) => serde_json::Value::String(i.to_string()),
        Value::Bool(b) => serde_json::Value::Bool(*b),
        Value::Ints(is) => is
            .iter()
            .map(|i| serde_json::Value::String(i.to_string()))
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecordJson {
    pub name: &'static str,
    pub status: &'static str,
    pub expected: Option<serde_json::Value>,
    pub observed: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl From<&CheckRecord> for RecordJson {
    fn from(r: &CheckRecord) -> Self {
        RecordJson {
            name: r.name,
            status: r.status.as_str(),
            expected: r.expected.as_ref().map(value_json),
            observed: r.observed.as_ref().map(value_json),
            note: r.note.clone(),
        }
    }
}
