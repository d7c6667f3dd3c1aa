use std::collections::BTreeMap;

use serde::Serialize;

use crate::analytics::composition::percent;
use crate::error::Result;
use crate::model::{Committee, Corpus};

/// Publication and citation aggregates for one committee. A publication is
/// "cited" when it has at least one independent citation; both per-cited-item
/// means divide by that same count.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CommitteeSummary {
    pub publications: u64,
    pub wos_indexed: u64,
    pub uncited: u64,
    pub total_citations: u64,
    pub total_wos_citations: u64,
}

impl CommitteeSummary {
    pub fn cited(&self) -> u64 {
        self.publications - self.uncited
    }

    pub fn pct_wos_indexed(&self) -> f64 {
        percent(self.wos_indexed as usize, self.publications as usize)
    }

    pub fn pct_uncited(&self) -> f64 {
        percent(self.uncited as usize, self.publications as usize)
    }

    /// `None` when no publication is cited.
    pub fn mean_citations_per_cited(&self) -> Option<f64> {
        per_cited(self.total_citations, self.cited())
    }

    pub fn mean_wos_citations_per_cited(&self) -> Option<f64> {
        per_cited(self.total_wos_citations, self.cited())
    }
}

fn per_cited(total: u64, cited: u64) -> Option<f64> {
    (cited > 0).then(|| total as f64 / cited as f64)
}

/// Mean citations per cited item from published aggregates:
/// `total / (publications * (1 - uncited_pct / 100))`.
///
/// Useful when only a percentage of uncited items is known, not the count.
pub fn mean_per_cited_from_aggregates(
    total_citations: f64,
    publications: f64,
    uncited_pct: f64,
) -> Option<f64> {
    let cited = publications * (1.0 - uncited_pct / 100.0);
    (cited > 0.0).then(|| total_citations / cited)
}

/// Per-committee aggregates, one row for every committee with members.
/// Committees without publications get a zero row.
pub fn committee_summary(corpus: &Corpus) -> Result<BTreeMap<Committee, CommitteeSummary>> {
    let mut rows: BTreeMap<Committee, CommitteeSummary> = corpus
        .committee_sizes()
        .into_keys()
        .map(|c| (c, CommitteeSummary::default()))
        .collect();
    for p in corpus.publications() {
        let committee = corpus.committee_of_publication(p)?;
        let row = rows.entry(committee).or_default();
        row.publications += 1;
        row.wos_indexed += u64::from(p.wos_indexed);
        row.uncited += u64::from(p.independent_citations == 0);
        row.total_citations += p.independent_citations;
        row.total_wos_citations += p.wos_citations;
    }
    Ok(rows)
}
