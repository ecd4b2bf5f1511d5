use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
}

/// One checked claim. `elapsed_ms` is only filled in when timing is asked
/// for, so that default reports are byte-for-byte reproducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertReport {
    pub claim: String,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl CertReport {
    pub fn new(
        claim: &str,
        ok: bool,
        computed: impl Into<String>,
        expected: impl Into<String>,
    ) -> CertReport {
        CertReport {
            claim: claim.to_string(),
            status: if ok { Status::Verified } else { Status::Failed },
            computed: computed.into(),
            expected: expected.into(),
            elapsed_ms: None,
        }
    }

    pub fn failed(
        claim: &str,
        error: impl fmt::Display,
        expected: impl Into<String>,
    ) -> CertReport {
        CertReport::new(claim, false, format!("error: {error}"), expected)
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Collects reports, timing each claim and turning errors into failures.
#[derive(Default)]
pub(crate) struct Recorder {
    reports: Vec<CertReport>,
}

impl Recorder {
    pub(crate) fn check(
        &mut self,
        claim: &str,
        expected: &str,
        f: impl FnOnce() -> crate::Result<(bool, String)>,
    ) {
        let start = Instant::now();
        let mut report = match f() {
            Ok((ok, computed)) => CertReport::new(claim, ok, computed, expected),
            Err(e) => CertReport::failed(claim, e, expected),
        };
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
        self.reports.push(report);
    }

    pub(crate) fn finish(self) -> Vec<CertReport> {
        self.reports
    }
}
