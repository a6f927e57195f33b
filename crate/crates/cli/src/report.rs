use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use zerocover::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Ok,
    Fail,
    InputError,
    HypothesisError,
    ResourceError,
    TheoremViolation,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Ok => 0,
            Verdict::Fail | Verdict::TheoremViolation => 1,
            Verdict::InputError | Verdict::HypothesisError => 2,
            Verdict::ResourceError => 3,
        }
    }
}

/// What a command handler produces on success.
pub struct Outcome {
    pub passed: bool,
    pub summary: String,
    pub witnesses: Value,
}

impl Outcome {
    pub fn new(passed: bool, summary: impl Into<String>, witnesses: Value) -> Self {
        Outcome { passed, summary: summary.into(), witnesses }
    }
}

#[derive(Debug, Serialize)]
pub struct Violation {
    pub claim: String,
    pub bundle: Value,
}

/// One report per invocation; the same fields for every command.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    /// path -> SHA-256 of the bytes read
    pub inputs: BTreeMap<String, String>,
    pub seed: Option<u64>,
    pub verdict: Verdict,
    pub exit_code: i32,
    pub summary: String,
    pub witnesses: Value,
    pub error: Option<String>,
    pub violation: Option<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl RunReport {
    pub fn build(
        command: Vec<String>,
        inputs: BTreeMap<String, String>,
        seed: Option<u64>,
        result: Result<Outcome, Error>,
    ) -> Self {
        let (verdict, summary, witnesses, error, violation) = match result {
            Ok(o) => {
                let v = if o.passed { Verdict::Ok } else { Verdict::Fail };
                (v, o.summary, o.witnesses, None, None)
            }
            Err(e) => {
                let text = e.to_string();
                let (v, violation) = match e {
                    Error::Input(_) => (Verdict::InputError, None),
                    Error::Hypothesis(_) => (Verdict::HypothesisError, None),
                    Error::Resource(_) => (Verdict::ResourceError, None),
                    Error::TheoremViolation { claim, bundle } => {
                        (Verdict::TheoremViolation, Some(Violation { claim, bundle: *bundle }))
                    }
                };
                (v, text.clone(), Value::Null, Some(text), violation)
            }
        };
        RunReport {
            command,
            inputs,
            seed,
            verdict,
            exit_code: verdict.exit_code(),
            summary,
            witnesses,
            error,
            violation,
            timing_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}
