//! Verification reports: a small, fixed schema that serializes to JSON
//! (machine-readable, exact numbers only) or Markdown (human-readable).
//!
//! A report is a list of named findings, each carrying a value and a
//! pass/fail bit; the verdict is `pass` exactly when every finding passes.
//! Findings are stored sorted by name and all construction is
//! deterministic, so emitting the same report twice is byte-identical.

use serde::{Deserialize, Serialize};

use crate::rat::Rat;

/// Schema version stamped into every report.
pub const SCHEMA_VERSION: u32 = 1;

/// An exact value attached to a finding. Rationals serialize as
/// `{num, den}` objects, never as decimal strings; integers (including
/// integral rationals) serialize as plain JSON integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReportValue {
    Bool(bool),
    Int(i64),
    Rational { num: i64, den: i64 },
    Text(String),
    List(Vec<ReportValue>),
}

impl ReportValue {
    pub fn from_rat(r: Rat) -> ReportValue {
        if r.is_integer() {
            ReportValue::Int(r.to_integer())
        } else {
            ReportValue::Rational {
                num: *r.numer(),
                den: *r.denom(),
            }
        }
    }

    pub fn int_list(values: impl IntoIterator<Item = i64>) -> ReportValue {
        ReportValue::List(values.into_iter().map(ReportValue::Int).collect())
    }

    pub fn index_list(values: impl IntoIterator<Item = usize>) -> ReportValue {
        ReportValue::int_list(values.into_iter().map(|v| v as i64))
    }

    fn render(&self) -> String {
        match self {
            ReportValue::Bool(b) => b.to_string(),
            ReportValue::Int(n) => n.to_string(),
            ReportValue::Rational { num, den } => format!("{num}/{den}"),
            ReportValue::Text(s) => s.clone(),
            ReportValue::List(items) => {
                let body: Vec<String> = items.iter().map(ReportValue::render).collect();
                format!("[{}]", body.join(", "))
            }
        }
    }
}

/// One named check or measurement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub name: String,
    pub value: ReportValue,
    pub pass: bool,
}

impl Finding {
    pub fn new(name: impl Into<String>, value: ReportValue, pass: bool) -> Finding {
        Finding {
            name: name.into(),
            value,
            pass,
        }
    }

    /// A purely informational finding (always passes).
    pub fn info(name: impl Into<String>, value: ReportValue) -> Finding {
        Finding::new(name, value, true)
    }
}

/// What the report is about. Unused fields stay `None` and are omitted
/// from the JSON.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subject {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lie_type: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub marking: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub curve: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub node: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub support: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub highest_weight: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub max_n: Option<usize>,
}

impl Subject {
    fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut push = |label: &str, v: Option<String>| {
            if let Some(v) = v {
                parts.push(format!("{label}={v}"));
            }
        };
        push("type", self.lie_type.clone());
        push("marking", self.marking.as_ref().map(|m| join(m)));
        push("curve", self.curve.clone());
        push("node", self.node.map(|n| n.to_string()));
        push("support", self.support.as_ref().map(|m| join(m)));
        push("highest", self.highest_weight.as_ref().map(|m| join(m)));
        push("family", self.family.clone());
        push("n", self.n.map(|n| n.to_string()));
        push("k", self.k.map(|k| k.to_string()));
        push("max-rank", self.max_rank.map(|r| r.to_string()));
        push("max-n", self.max_n.map(|r| r.to_string()));
        if parts.is_empty() {
            "-".to_string()
        } else {
            parts.join(", ")
        }
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A complete verification report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub subject: Subject,
    pub findings: Vec<Finding>,
    pub verdict: Verdict,
}

impl Report {
    /// Builds a report: findings are sorted by name and the verdict is
    /// derived (`pass` iff every finding passes).
    pub fn new(command: impl Into<String>, subject: Subject, mut findings: Vec<Finding>) -> Report {
        findings.sort_by(|a, b| a.name.cmp(&b.name));
        let verdict = if findings.iter().all(|f| f.pass) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Report {
            schema: SCHEMA_VERSION,
            command: command.into(),
            subject,
            findings,
            verdict,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {}\n\n", self.command));
        out.push_str(&format!("- subject: {}\n", self.subject.render()));
        out.push_str(&format!(
            "- verdict: **{}**\n\n",
            match self.verdict {
                Verdict::Pass => "pass",
                Verdict::Fail => "fail",
            }
        ));
        out.push_str("| finding | value | status |\n|---|---|---|\n");
        for f in &self.findings {
            out.push_str(&format!(
                "| {} | {} | {} |\n",
                f.name,
                f.value.render(),
                if f.pass { "pass" } else { "FAIL" }
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::frac;

    fn sample() -> Report {
        Report::new(
            "roots",
            Subject {
                lie_type: Some("B4".into()),
                ..Subject::default()
            },
            vec![
                Finding::info("zeta", ReportValue::Int(3)),
                Finding::new("alpha", ReportValue::from_rat(frac(1, 2)), true),
                Finding::info("list", ReportValue::int_list([1, 2, 2])),
            ],
        )
    }

    #[test]
    fn verdict_follows_findings() {
        let empty = Report::new("x", Subject::default(), vec![]);
        assert_eq!(empty.verdict, Verdict::Pass);
        let failing = Report::new(
            "x",
            Subject::default(),
            vec![Finding::new("bad", ReportValue::Bool(false), false)],
        );
        assert_eq!(failing.verdict, Verdict::Fail);
    }

    #[test]
    fn findings_are_sorted_by_name() {
        let r = sample();
        let names: Vec<&str> = r.findings.iter().map(|f| f.name.as_str()).collect();
        assert_eq!(names, vec!["alpha", "list", "zeta"]);
    }

    #[test]
    fn json_round_trip_is_exact() {
        let r = sample();
        let json = r.to_json();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn emission_is_deterministic() {
        let r = sample();
        assert_eq!(r.to_json(), sample().to_json());
        assert_eq!(r.to_markdown(), sample().to_markdown());
    }

    #[test]
    fn rationals_serialize_as_num_den_objects() {
        let json = serde_json::to_string(&ReportValue::from_rat(frac(-3, 4))).unwrap();
        assert_eq!(json, r#"{"num":-3,"den":4}"#);
        let json = serde_json::to_string(&ReportValue::from_rat(frac(4, 2))).unwrap();
        assert_eq!(json, "2");
    }

    #[test]
    fn markdown_renders_a_table() {
        let md = sample().to_markdown();
        assert!(md.contains("| finding | value | status |"));
        assert!(md.contains("| alpha | 1/2 | pass |"));
        assert!(md.contains("subject: type=B4"));
    }
}
