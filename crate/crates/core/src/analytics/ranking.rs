use std::cmp::Ordering;

use serde::Serialize;

use crate::crediting::CountingScheme;
use crate::error::{Error, Result};
use crate::indicators::{indicator_value, IndicatorKind};
use crate::model::{Committee, Corpus};
use crate::ruleset::RuleSet;
use crate::scoring::score_researcher;

/// Cumulative points closer than this are treated as tied, so floating-point
/// noise never decides an order that exact arithmetic would call a tie.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankEntry {
    pub rank: usize,
    pub researcher_id: String,
    pub committee: Committee,
    pub cumulative: f64,
    /// `total_pubs` under the ranking's scheme; first tie-breaker.
    pub total_pubs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Ranking {
    pub scheme: CountingScheme,
    pub entries: Vec<RankEntry>,
}

impl Ranking {
    /// Orders scored entries by cumulative (descending), then `total_pubs`
    /// (descending), then researcher id, and assigns ranks 1..=N.
    pub fn from_entries(scheme: CountingScheme, mut entries: Vec<RankEntry>) -> Self {
        entries.sort_by(|a, b| b.cumulative.total_cmp(&a.cumulative));

        // cluster near-equal cumulatives, then tie-break inside each cluster
        let mut start = 0;
        while start < entries.len() {
            let mut end = start + 1;
            while end < entries.len()
                && entries[end - 1].cumulative - entries[end].cumulative <= TIE_TOLERANCE
            {
                end += 1;
            }
            entries[start..end].sort_by(tie_break);
            start = end;
        }

        for (i, e) in entries.iter_mut().enumerate() {
            e.rank = i + 1;
        }
        Ranking { scheme, entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn tie_break(a: &RankEntry, b: &RankEntry) -> Ordering {
    b.total_pubs
        .total_cmp(&a.total_pubs)
        .then_with(|| a.researcher_id.cmp(&b.researcher_id))
}

/// Scores every researcher in the corpus and ranks them.
pub fn rank_researchers(
    corpus: &Corpus,
    scheme: CountingScheme,
    scoring_kinds: &[IndicatorKind],
    ruleset: &RuleSet,
) -> Result<Ranking> {
    let entries = corpus
        .researchers()
        .iter()
        .map(|r| {
            let card = score_researcher(r, corpus, scheme, scoring_kinds, ruleset)?;
            let total_pubs = match card.values.get(&IndicatorKind::TotalPubs) {
                Some(&v) => v,
                None => indicator_value(r, corpus, IndicatorKind::TotalPubs, scheme)?,
            };
            Ok(RankEntry {
                rank: 0,
                researcher_id: r.researcher_id.clone(),
                committee: r.committee,
                cumulative: card.cumulative,
                total_pubs,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Ranking::from_entries(scheme, entries))
}

/// Number of entries in the top `q` fraction of `n`: `ceil(q * n)`.
pub fn top_quantile_size(n: usize, q: f64) -> Result<usize> {
    if !(q > 0.0 && q <= 1.0) {
        return Err(Error::InvalidQuantile(q));
    }
    // guard against q * n landing a hair above an integer
    let raw = q * n as f64;
    let rounded = raw.round();
    let size = if (raw - rounded).abs() < 1e-9 {
        rounded
    } else {
        raw.ceil()
    };
    Ok((size as usize).min(n))
}

/// The first `ceil(q * N)` entries of the ranking.
pub fn select_top_quantile(ranking: &Ranking, q: f64) -> Result<&[RankEntry]> {
    let k = top_quantile_size(ranking.len(), q)?;
    Ok(&ranking.entries[..k])
}
