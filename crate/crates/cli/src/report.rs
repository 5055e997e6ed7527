//! Versioned machine-readable report.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use nogo_core::nogo::{ProofStep, Verdict};

pub const VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Step {
    pub desc: String,
    pub anchor: String,
    pub verdict: StepVerdict,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepVerdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub version: u32,
    pub command: String,
    pub params: Value,
    pub steps: Vec<Step>,
    pub verdict: String,
}

impl Step {
    pub fn new(desc: impl Into<String>, anchor: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self {
            desc: desc.into(),
            anchor: anchor.into(),
            verdict: if ok { StepVerdict::Pass } else { StepVerdict::Fail },
            detail: detail.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == StepVerdict::Pass
    }
}

impl From<&ProofStep> for Step {
    fn from(s: &ProofStep) -> Self {
        Step::new(s.desc.clone(), s.anchor.clone(), s.verdict == Verdict::Pass, s.detail.clone())
    }
}

impl Report {
    /// Builds a report whose verdict is `pass` iff every step passed, unless
    /// an explicit verdict is given.
    pub fn new(command: &str, params: Value, steps: Vec<Step>, verdict: Option<String>) -> Self {
        let ok = steps.iter().all(Step::passed);
        let verdict = match verdict {
            Some(v) if ok => v,
            _ => if ok { "pass" } else { "fail" }.to_string(),
        };
        Self { version: VERSION, command: command.to_string(), params, steps, verdict }
    }

    pub fn passed(&self) -> bool {
        self.steps.iter().all(Step::passed)
    }

    pub fn failed_steps(&self) -> impl Iterator<Item = &Step> {
        self.steps.iter().filter(|s| !s.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per step, then the verdict.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            let mark = if s.passed() { "ok  " } else { "FAIL" };
            if s.detail.is_empty() {
                out.push_str(&format!("[{mark}] {}\n", s.desc));
            } else {
                out.push_str(&format!("[{mark}] {} ({})\n", s.desc, s.detail));
            }
        }
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schema_round_trip() {
        let r = Report::new("cg", serde_json::json!({"l1": 1}), vec![Step::new("value", "cg", true, "sqrt(2/3)")], None);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(r.verdict, "pass");
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["steps"][0]["verdict"], "pass");
        assert_eq!(v["version"], 1);
    }

    #[test]
    fn failing_step_fails_report() {
        let r = Report::new("x", Value::Null, vec![Step::new("a", "a", false, "")], Some("fine".into()));
        assert!(!r.passed());
        assert_eq!(r.verdict, "fail");
    }
}
