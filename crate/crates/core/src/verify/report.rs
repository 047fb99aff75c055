//! Verification report types and their CSV flattening.

use serde::Serialize;

use crate::Budget;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "skipped")]
    Skipped,
    #[serde(rename = "sampled-pass")]
    SampledPass,
    /// Computed value outside any claimed parameter range.
    #[serde(rename = "observed")]
    Observed,
    /// External justification recorded without computation.
    #[serde(rename = "cited")]
    Cited,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::SampledPass => "sampled-pass",
            Status::Observed => "observed",
            Status::Cited => "cited",
        }
    }
}

/// One named sub-check. `claim_ref` is the claim being compared against, absent for internal oracle checks.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claim_ref: Option<String>,
    pub evidence: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<String>>,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status, evidence: serde_json::Value) -> Self {
        debug_assert!(status != Status::Fail, "failures need a counterexample");
        Check { name: name.into(), status, claim_ref: None, evidence, seed: None, samples: None, counterexample: None }
    }

    pub fn fail(name: impl Into<String>, evidence: serde_json::Value, counterexample: Vec<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Fail,
            claim_ref: None,
            evidence,
            seed: None,
            samples: None,
            counterexample: Some(counterexample),
        }
    }

    /// Pass when `ok`, otherwise fail with `counterexample`.
    pub fn verdict(
        name: impl Into<String>,
        ok: bool,
        evidence: serde_json::Value,
        counterexample: Vec<String>,
    ) -> Self {
        if ok {
            Check::new(name, Status::Pass, evidence)
        } else {
            Check::fail(name, evidence, counterexample)
        }
    }

    pub fn with_ref(mut self, claim: impl Into<String>) -> Self {
        self.claim_ref = Some(claim.into());
        self
    }

    pub fn with_samples(mut self, seed: u64, samples: u64) -> Self {
        self.seed = Some(seed);
        self.samples = Some(samples);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BudgetUsage {
    pub limits: Budget,
    pub flow_calls: u64,
    pub enumerated: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    /// Canonical topology string, or a caller-supplied graph id.
    pub subject: String,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub budgets: BudgetUsage,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>, budget: &Budget) -> Self {
        VerificationReport {
            subject: subject.into(),
            checks: Vec::new(),
            seed: None,
            budgets: BudgetUsage { limits: budget.clone(), flow_calls: 0, enumerated: 0 },
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// One row per check; evidence is embedded as compact JSON.
    pub fn to_csv(&self) -> crate::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| crate::Error::Parse(format!("csv: {e}"));
        w.write_record(["subject", "name", "status", "claim_ref", "seed", "samples", "counterexample", "evidence"])
            .map_err(csv_err)?;
        for c in &self.checks {
            let seed = c.seed.map(|s| s.to_string()).unwrap_or_default();
            let samples = c.samples.map(|s| s.to_string()).unwrap_or_default();
            let cex = c.counterexample.as_ref().map(|v| v.join(" ")).unwrap_or_default();
            let evidence = serde_json::to_string(&c.evidence).unwrap_or_default();
            w.write_record([
                self.subject.as_str(),
                c.name.as_str(),
                c.status.as_str(),
                c.claim_ref.as_deref().unwrap_or(""),
                &seed,
                &samples,
                &cex,
                &evidence,
            ])
            .map_err(csv_err)?;
        }
        let bytes = w.into_inner().map_err(|e| crate::Error::Parse(format!("csv: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn json_field_names_and_csv_rows() {
        let mut r = VerificationReport::new("star:n=4", &Budget::default());
        r.push(Check::new("a", Status::SampledPass, json!({"x": 1})).with_samples(7, 10));
        r.push(Check::fail("b", json!("bad, really"), vec!["1234".into(), "2134".into()]).with_ref("claim"));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["checks"][0]["status"], "sampled-pass");
        assert_eq!(v["checks"][0]["seed"], 7);
        assert!(v["checks"][0].get("counterexample").is_none());
        assert_eq!(v["checks"][1]["counterexample"][1], "2134");
        assert!(v["budgets"]["limits"]["max_order"].is_number());
        let csv = r.to_csv().unwrap();
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.contains("1234 2134"));
        assert!(r.has_failures());
    }
}
