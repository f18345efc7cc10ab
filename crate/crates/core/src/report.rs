//! Session configuration and reproduction reports.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::content::DEFAULT_BUDGET;
use crate::error::{Error, Result};
use crate::exactla::{PrimeField, DEFAULT_PRIME};
use crate::semiring::Precision;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SessionConfig {
    pub p: u32,
    /// `None` selects a window per ideal that always meets the sufficiency rule.
    pub prec: Option<usize>,
    /// Extra window width in automatic mode.
    pub margin: usize,
    pub seed: u64,
    pub samples: usize,
    pub deg_bound: usize,
    pub budget: u128,
}

pub const DEFAULT_SEED: u64 = 20_000_601;

impl Default for SessionConfig {
    fn default() -> Self {
        SessionConfig {
            p: DEFAULT_PRIME,
            prec: None,
            margin: 0,
            seed: DEFAULT_SEED,
            samples: 500,
            deg_bound: 6,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl SessionConfig {
    pub fn field(&self) -> Result<PrimeField> {
        PrimeField::new(self.p)
    }

    pub fn precision(&self) -> Precision {
        match self.prec {
            Some(n) => Precision::Fixed(n),
            None => Precision::Auto { margin: self.margin },
        }
    }

    /// The same session with every precision window enlarged by `extra`.
    pub fn widened(&self, extra: usize) -> SessionConfig {
        let mut c = self.clone();
        match &mut c.prec {
            Some(n) => *n += extra,
            None => c.margin += extra,
        }
        c
    }

    fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            p: self.p,
            n: match self.prec {
                Some(n) => Value::from(n),
                None if self.margin == 0 => Value::from("auto"),
                None => Value::from(format!("auto+{}", self.margin)),
            },
            seed: self.seed,
            samples: self.samples,
            deg_bound: self.deg_bound,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
struct ConfigEcho {
    p: u32,
    #[serde(rename = "N")]
    n: Value,
    seed: u64,
    samples: usize,
    deg_bound: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "EVIDENCE_ONLY")]
    EvidenceOnly,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::EvidenceOnly => "EVIDENCE_ONLY",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Fail => 1,
            _ => 0,
        }
    }
}

/// Whether a check is an exact equality or backed by sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Exact,
    Evidence,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub kind: CheckKind,
    pub expected: Value,
    pub actual: Value,
    pub ok: bool,
}

/// Collects checks and named result values for one command.
#[derive(Clone, Debug, Default)]
pub struct Findings {
    pub values: serde_json::Map<String, Value>,
    pub checks: Vec<Check>,
}

impl Findings {
    pub fn value(&mut self, key: &str, v: impl Into<Value>) {
        self.values.insert(key.to_string(), v.into());
    }

    pub fn exact(&mut self, name: &str, expected: impl Serialize, actual: impl Serialize) -> bool {
        self.push(name, CheckKind::Exact, expected, actual)
    }

    pub fn evidence(&mut self, name: &str, expected: impl Serialize, actual: impl Serialize) -> bool {
        self.push(name, CheckKind::Evidence, expected, actual)
    }

    /// An exact check whose comparison is done by the caller.
    pub fn exact_with(&mut self, name: &str, expected: impl Serialize, actual: impl Serialize, ok: bool) {
        self.push_with(name, CheckKind::Exact, expected, actual, ok);
    }

    pub fn evidence_with(&mut self, name: &str, expected: impl Serialize, actual: impl Serialize, ok: bool) {
        self.push_with(name, CheckKind::Evidence, expected, actual, ok);
    }

    fn push(&mut self, name: &str, kind: CheckKind, expected: impl Serialize, actual: impl Serialize) -> bool {
        let expected = serde_json::to_value(expected).unwrap_or(Value::Null);
        let actual = serde_json::to_value(actual).unwrap_or(Value::Null);
        let ok = expected == actual;
        self.checks.push(Check {
            name: name.to_string(),
            kind,
            expected,
            actual,
            ok,
        });
        ok
    }

    fn push_with(&mut self, name: &str, kind: CheckKind, expected: impl Serialize, actual: impl Serialize, ok: bool) {
        self.checks.push(Check {
            name: name.to_string(),
            kind,
            expected: serde_json::to_value(expected).unwrap_or(Value::Null),
            actual: serde_json::to_value(actual).unwrap_or(Value::Null),
            ok,
        });
    }

    pub fn verdict(&self) -> Verdict {
        if self.checks.iter().any(|c| !c.ok) {
            Verdict::Fail
        } else if self.checks.iter().any(|c| c.kind == CheckKind::Evidence) {
            Verdict::EvidenceOnly
        } else {
            Verdict::Pass
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReproReport {
    pub command: String,
    config: ConfigEcho,
    pub inputs: String,
    pub results: Value,
    pub verdict: Verdict,
    pub millis: u64,
    #[serde(skip)]
    checks: Vec<Check>,
}

impl ReproReport {
    pub fn new(command: &str, cfg: &SessionConfig, inputs: String, findings: Findings, millis: u64) -> Self {
        let verdict = findings.verdict();
        let mut results = findings.values;
        results.insert(
            "checks".into(),
            serde_json::to_value(&findings.checks).unwrap_or(Value::Null),
        );
        ReproReport {
            command: command.to_string(),
            config: cfg.echo(),
            inputs,
            results: Value::Object(results),
            verdict,
            millis,
            checks: findings.checks,
        }
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    /// JSON without the timing field, for determinism comparisons.
    pub fn stable_json(&self) -> String {
        let mut v = serde_json::to_value(self).unwrap_or(Value::Null);
        if let Value::Object(m) = &mut v {
            m.remove("millis");
        }
        serde_json::to_string_pretty(&v).unwrap_or_default()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::InvalidParameter(format!("unknown format `{other}`"))),
        }
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn emit_report(r: &ReproReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).unwrap_or_default();
            s.push('\n');
            s.into_bytes()
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "command: {}", r.command);
            let c = &r.config;
            let _ = writeln!(
                s,
                "config:  p={} N={} seed={} samples={} deg_bound={}",
                c.p,
                compact(&c.n),
                c.seed,
                c.samples,
                c.deg_bound
            );
            let _ = writeln!(s, "inputs:");
            for line in r.inputs.lines() {
                let _ = writeln!(s, "  {line}");
            }
            if let Value::Object(m) = &r.results {
                let _ = writeln!(s, "results:");
                for (k, v) in m.iter().filter(|(k, _)| *k != "checks") {
                    let _ = writeln!(s, "  {k}: {}", compact(v));
                }
            }
            let _ = writeln!(s, "checks:");
            for ch in r.checks() {
                let mark = if ch.ok { "ok  " } else { "FAIL" };
                let kind = match ch.kind {
                    CheckKind::Exact => "exact",
                    CheckKind::Evidence => "evidence",
                };
                let _ = writeln!(s, "  [{mark}] {} ({kind}): expected {}, got {}", ch.name, compact(&ch.expected), compact(&ch.actual));
            }
            let _ = writeln!(s, "verdict: {}  ({} ms)", r.verdict.as_str(), r.millis);
            s.into_bytes()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_rules() {
        let mut f = Findings::default();
        assert_eq!(f.verdict(), Verdict::Pass);
        f.exact("a", 1, 1);
        assert_eq!(f.verdict(), Verdict::Pass);
        f.evidence("b", 2, 2);
        assert_eq!(f.verdict(), Verdict::EvidenceOnly);
        f.exact("c", vec![18, 19], vec![18, 19, 20]);
        assert_eq!(f.verdict(), Verdict::Fail);
        assert_eq!(f.verdict().exit_code(), 1);
    }

    #[test]
    fn json_schema_keys() {
        let mut f = Findings::default();
        f.value("mu", 3);
        f.exact("mu", 3, 3);
        let r = ReproReport::new("demo", &SessionConfig::default(), "ring R = semigroup(3,4);\n".into(), f, 5);
        let v: Value = serde_json::from_slice(&emit_report(&r, Format::Json)).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        assert_eq!(keys, ["command", "config", "inputs", "millis", "results", "verdict"]);
        let cfg: Vec<&str> = v["config"].as_object().unwrap().keys().map(|k| k.as_str()).collect();
        assert_eq!(cfg, ["N", "deg_bound", "p", "samples", "seed"]);
        assert_eq!(v["verdict"], "PASS");
        assert_eq!(r.checks().len(), 1);
        assert!(!r.stable_json().contains("millis"));
    }
}
