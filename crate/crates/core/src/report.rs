//! Verification reports and their JSON, text, and CSV renderings.
//!
//! Integers are carried as decimal strings so consumers that parse JSON
//! numbers as 64-bit floats never truncate `p³q³`-sized values. Field order
//! is fixed by declaration order, so identical runs serialize identically.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::instance::SafePrimePair;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub instance: String,
    pub pass: bool,
    pub details: String,
}

impl CheckResult {
    pub fn new(
        name: &str,
        instance: impl Into<String>,
        pass: bool,
        details: impl Into<String>,
    ) -> Self {
        CheckResult {
            name: name.to_string(),
            instance: instance.into(),
            pass,
            details: details.into(),
        }
    }

    /// A passing result when `outcome` is `Ok(details)`, a failing one
    /// carrying the error text otherwise.
    pub fn from_outcome(name: &str, instance: impl Into<String>, outcome: Result<String>) -> Self {
        match outcome {
            Ok(details) => Self::new(name, instance, true, details),
            Err(e) => Self::new(name, instance, false, e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: u64,
    pub passed: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub p: String,
    pub q: String,
    pub a0: String,
    pub seed: String,
    pub version: String,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(
        pair: &SafePrimePair,
        a0: &num_bigint::BigUint,
        seed: u64,
        checks: Vec<CheckResult>,
    ) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count() as u64;
        let total = checks.len() as u64;
        VerificationReport {
            p: pair.p().to_string(),
            q: pair.q().to_string(),
            a0: a0.to_string(),
            seed: seed.to_string(),
            version: TOOL_VERSION.to_string(),
            checks,
            summary: Summary {
                total,
                passed,
                failed: total - passed,
            },
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// Per-check `(name, instances, failures)` in first-appearance order.
    pub fn tally(&self) -> Vec<(String, u64, u64)> {
        let mut out: Vec<(String, u64, u64)> = Vec::new();
        for c in &self.checks {
            match out.iter_mut().find(|(name, _, _)| *name == c.name) {
                Some(entry) => {
                    entry.1 += 1;
                    entry.2 += u64::from(!c.pass);
                }
                None => out.push((c.name.clone(), 1, u64::from(!c.pass))),
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "p={} q={} a0={} seed={} version={}",
            self.p, self.q, self.a0, self.seed, self.version
        );
        for c in &self.checks {
            let status = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status} {} [{}] {}", c.name, c.instance, c.details);
        }
        for (name, instances, failures) in self.tally() {
            let _ = writeln!(out, "# {name}: {instances} instances, {failures} failures");
        }
        let _ = writeln!(
            out,
            "total={} passed={} failed={}",
            self.summary.total, self.summary.passed, self.summary.failed
        );
        out
    }

    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record(["p", "q", "check", "instance", "pass", "details"])
            .expect("in-memory write");
        for c in &self.checks {
            writer
                .write_record([
                    self.p.as_str(),
                    self.q.as_str(),
                    c.name.as_str(),
                    c.instance.as_str(),
                    if c.pass { "true" } else { "false" },
                    c.details.as_str(),
                ])
                .expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("flush")).expect("csv is utf-8")
    }
}

/// Output format shared by the commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            other => Err(format!(
                "unknown format `{other}` (expected json, text or csv)"
            )),
        }
    }
}

impl VerificationReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
            Format::Csv => self.to_csv(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::big;
    use crate::Error;

    fn sample() -> VerificationReport {
        let pair = SafePrimePair::from_u64(7, 3).unwrap();
        VerificationReport::new(
            &pair,
            &big(5),
            11,
            vec![
                CheckResult::new("lemma1", "b0=1", true, "in subgroup"),
                CheckResult::new("lemma1", "b0=2", true, "outside, \"not extendable\""),
                CheckResult::from_outcome("carry", "n=2", Err(Error::NoCandidate)),
            ],
        )
    }

    #[test]
    fn counts_are_consistent() {
        let r = sample();
        assert_eq!(
            r.summary,
            Summary {
                total: 3,
                passed: 2,
                failed: 1
            }
        );
        assert!(!r.all_passed());
        assert_eq!(
            r.tally(),
            vec![("lemma1".to_string(), 2, 0), ("carry".to_string(), 1, 1)]
        );
    }

    #[test]
    fn json_schema_and_key_order() {
        let r = sample();
        let json = r.to_json();
        let keys = [
            "\"p\"",
            "\"q\"",
            "\"a0\"",
            "\"seed\"",
            "\"version\"",
            "\"checks\"",
            "\"summary\"",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["p"], "7");
        assert_eq!(value["seed"], "11");
        assert_eq!(value["checks"][0]["name"], "lemma1");
        assert_eq!(value["checks"][2]["pass"], false);
        assert_eq!(value["summary"]["failed"], 1);
        assert_eq!(VerificationReport::from_json(&json).unwrap(), r);
    }

    #[test]
    fn text_and_csv() {
        let r = sample();
        let text = r.to_text();
        assert!(text.contains("FAIL carry [n=2]"));
        assert!(text.ends_with("total=3 passed=2 failed=1\n"));
        let csv = r.to_csv();
        let mut reader = csv::Reader::from_reader(csv.as_bytes());
        let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
        assert_eq!(rows.len(), 3);
        assert_eq!(&rows[1][5], "outside, \"not extendable\"");
    }

    #[test]
    fn format_parse() {
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("yaml".parse::<Format>().is_err());
    }
}
