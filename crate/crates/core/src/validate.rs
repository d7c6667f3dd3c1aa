use serde::Serialize;

use crate::model::{Corpus, DocType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Warning,
    Fatal,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub severity: Severity,
    pub code: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pub_id: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub researcher_id: Option<String>,
    pub message: String,
}

/// Serializes as a bare JSON array of violations.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has_fatal(&self) -> bool {
        self.violations
            .iter()
            .any(|v| v.severity == Severity::Fatal)
    }

    pub fn fatal(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| v.severity == Severity::Fatal)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| v.severity == Severity::Warning)
    }

    fn publication(
        &mut self,
        severity: Severity,
        code: &'static str,
        pub_id: &str,
        message: String,
    ) {
        self.violations.push(Violation {
            severity,
            code,
            pub_id: Some(pub_id.to_string()),
            researcher_id: None,
            message,
        });
    }
}

/// Checks every record invariant the engine relies on.
///
/// Fatal entries make a corpus unusable for scoring; warnings flag suspect
/// source data that is still processed as given.
pub fn validate_corpus(corpus: &Corpus) -> ValidationReport {
    use Severity::{Fatal, Warning};

    let mut report = ValidationReport::default();

    for r in corpus.researchers() {
        if let Some(year) = r.degree_year {
            if year > corpus.window().end {
                report.violations.push(Violation {
                    severity: Warning,
                    code: "degree_year_after_window",
                    pub_id: None,
                    researcher_id: Some(r.researcher_id.clone()),
                    message: format!("degree year {year} is after the corpus window"),
                });
            }
        }
    }

    for p in corpus.publications() {
        let id = p.pub_id.as_str();
        let members: Vec<&str> = p.member_ids().collect();

        if p.author_count == 0 {
            report.publication(
                Fatal,
                "author_count_zero",
                id,
                "author_count must be at least 1".into(),
            );
        } else if (members.len() as u64) > u64::from(p.author_count) {
            report.publication(
                Fatal,
                "author_count_below_members",
                id,
                format!(
                    "author_count {} is below the {} listed members",
                    p.author_count,
                    members.len()
                ),
            );
        } else if p.authors.len() > p.author_count as usize
            && members
                .iter()
                .any(|m| p.position_of(m).unwrap() > p.author_count as usize)
        {
            report.publication(
                Fatal,
                "author_position_out_of_range",
                id,
                format!("a member is listed beyond author_count {}", p.author_count),
            );
        }

        for (i, m) in members.iter().enumerate() {
            if members[..i].contains(m) {
                report.publication(
                    Fatal,
                    "duplicate_author",
                    id,
                    format!("member {m} is listed twice"),
                );
            }
        }

        if members.is_empty() {
            report.publication(Fatal, "unattributable", id, "no member author".into());
        }

        if let Some(impact) = p.impact_factor {
            if !impact.is_finite() || impact < 0.0 {
                report.publication(
                    Fatal,
                    "invalid_impact_factor",
                    id,
                    format!("impact factor {impact}"),
                );
            } else if p.doc_type != DocType::JournalArticle {
                report.publication(
                    Warning,
                    "impact_factor_non_journal",
                    id,
                    "impact factor set on a publication that is not a journal article".into(),
                );
            }
        }

        // wos_citations is not required to be a subset of independent_citations
        if p.wos_citations > 0 && !p.wos_indexed {
            report.publication(
                Warning,
                "wos_citations_without_index",
                id,
                format!("{} WoS citations but not WoS indexed", p.wos_citations),
            );
        }
    }

    for c in corpus.conflicts() {
        report.publication(
            Warning,
            "dedup_conflict",
            &c.pub_id,
            format!("duplicate records disagree on `{}`", c.field),
        );
    }

    report
}
