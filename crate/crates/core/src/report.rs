//! The JSON report shape shared by every check.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(if self.passed() { "pass" } else { "fail" })
    }
}

/// One checked item. `lhs` and `rhs` are numbers for numeric checks and
/// strings for symbolic ones.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ItemResult {
    pub id: String,
    pub lhs: Value,
    pub rhs: Value,
    pub defect: f64,
    pub pass: bool,
}

impl ItemResult {
    pub fn numeric(id: impl Into<String>, lhs: f64, rhs: f64, defect: f64, pass: bool) -> Self {
        ItemResult { id: id.into(), lhs: num(lhs), rhs: num(rhs), defect: finite(defect), pass }
    }

    /// A residual compared against a tolerance: passes iff `residual <= tol`.
    pub fn residual(id: impl Into<String>, residual: f64, tol: f64) -> Self {
        Self::numeric(id, residual, tol, residual, residual <= tol)
    }

    pub fn symbolic(id: impl Into<String>, lhs: String, rhs: String, pass: bool) -> Self {
        ItemResult {
            id: id.into(),
            lhs: Value::String(lhs),
            rhs: Value::String(rhs),
            defect: if pass { 0.0 } else { 1.0 },
            pass,
        }
    }
}

// `+ 0.0` turns -0.0 into 0.0 so reports never print a signed zero.
fn num(x: f64) -> Value {
    serde_json::Number::from_f64(x + 0.0).map(Value::Number).unwrap_or(Value::Null)
}

fn finite(x: f64) -> f64 {
    if x.is_finite() {
        x + 0.0
    } else {
        f64::MAX
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Map<String, Value>,
    pub per_item: Vec<ItemResult>,
    pub verdict: Verdict,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, params: Map<String, Value>, per_item: Vec<ItemResult>) -> Self {
        let verdict = Verdict::from_bool(per_item.iter().all(|i| i.pass));
        CheckReport { check: check.into(), params, per_item, verdict }
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }

    pub fn max_defect(&self) -> f64 {
        self.per_item.iter().map(|i| i.defect).fold(0.0, f64::max)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ItemResult> {
        self.per_item.iter().filter(|i| !i.pass)
    }

    pub fn item(&self, id: &str) -> Option<&ItemResult> {
        self.per_item.iter().find(|i| i.id == id)
    }
}

/// Builds a `params` map from `key => value` pairs.
#[macro_export]
macro_rules! params {
    ($($k:expr => $v:expr),* $(,)?) => {{
        #[allow(unused_mut)]
        let mut m = serde_json::Map::new();
        $( m.insert($k.to_string(), serde_json::json!($v)); )*
        m
    }};
}
