use serde::Serialize;
use serde_json::Value;

use super::claims::ClaimKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Inconclusive,
    /// A registered transcription error: the computed value is right and the
    /// printed one is not, at exactly the registered positions.
    Erratum,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub kind: ClaimKind,
    pub status: ClaimStatus,
    pub evidence: Value,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    pub erratum: usize,
    /// Every claim passed or is a registered erratum.
    pub ok: bool,
}

/// Claim results sorted by id.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub claims: Vec<ClaimResult>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument<'a> {
    pub claims: &'a [ClaimResult],
    pub summary: Summary,
}

impl Report {
    pub fn new(mut claims: Vec<ClaimResult>) -> Report {
        claims.sort_by(|a, b| a.id.cmp(&b.id));
        Report { claims }
    }

    pub fn merge(reports: impl IntoIterator<Item = Report>) -> Report {
        Report::new(reports.into_iter().flat_map(|r| r.claims).collect())
    }

    pub fn get(&self, id: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn summary(&self) -> Summary {
        let count = |s| self.claims.iter().filter(|c| c.status == s).count();
        let (pass, erratum) = (count(ClaimStatus::Pass), count(ClaimStatus::Erratum));
        Summary {
            total: self.claims.len(),
            pass,
            fail: count(ClaimStatus::Fail),
            inconclusive: count(ClaimStatus::Inconclusive),
            erratum,
            ok: pass + erratum == self.claims.len(),
        }
    }

    pub fn is_ok(&self) -> bool {
        self.summary().ok
    }

    pub fn to_document(&self) -> ReportDocument<'_> {
        ReportDocument { claims: &self.claims, summary: self.summary() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("report serializes")
    }
}
