use std::collections::BTreeMap;

use serde::Serialize;

use crate::analytics::ranking::RankEntry;
use crate::crediting::CountingScheme;
use crate::model::{Committee, Corpus};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompositionRow {
    pub committee: Committee,
    pub count: usize,
    /// 100 * count / group size
    pub percent: f64,
}

/// Disciplinary make-up of a group of researchers.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompositionReport {
    pub group_size: usize,
    /// One row per committee with at least one member in the corpus.
    pub rows: Vec<CompositionRow>,
}

impl CompositionReport {
    pub fn count(&self, committee: Committee) -> usize {
        self.rows
            .iter()
            .find(|r| r.committee == committee)
            .map_or(0, |r| r.count)
    }
}

/// `100 * part / whole`, or 0 for an empty whole.
pub fn percent(part: usize, whole: usize) -> f64 {
    if whole == 0 {
        0.0
    } else {
        100.0 * part as f64 / whole as f64
    }
}

fn group_counts(group: &[RankEntry]) -> BTreeMap<Committee, usize> {
    let mut counts = BTreeMap::new();
    for e in group {
        *counts.entry(e.committee).or_insert(0) += 1;
    }
    counts
}

pub fn composition(group: &[RankEntry], corpus: &Corpus) -> CompositionReport {
    let counts = group_counts(group);
    let rows = corpus
        .committee_sizes()
        .into_keys()
        .map(|committee| {
            let count = counts.get(&committee).copied().unwrap_or(0);
            CompositionRow {
                committee,
                count,
                percent: percent(count, group.len()),
            }
        })
        .collect();
    CompositionReport {
        group_size: group.len(),
        rows,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShareRow {
    pub committee: Committee,
    pub in_group: usize,
    pub committee_size: usize,
    /// 100 * in_group / committee_size
    pub percent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShareReport {
    pub rows: Vec<ShareRow>,
    /// Committees with no members in the corpus, for which no share exists.
    pub omitted: Vec<Committee>,
}

/// Fraction of each committee's members that made it into the group.
pub fn committee_share_of_top(group: &[RankEntry], corpus: &Corpus) -> ShareReport {
    let counts = group_counts(group);
    let sizes = corpus.committee_sizes();
    let rows = sizes
        .iter()
        .map(|(&committee, &size)| {
            let in_group = counts.get(&committee).copied().unwrap_or(0);
            ShareRow {
                committee,
                in_group,
                committee_size: size,
                percent: percent(in_group, size),
            }
        })
        .collect();
    let omitted = Committee::ALL
        .into_iter()
        .filter(|c| !sizes.contains_key(c))
        .collect();
    ShareReport { rows, omitted }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DeltaRow {
    pub committee: Committee,
    pub baseline_count: usize,
    pub alternative_count: usize,
    pub count_change: i64,
    pub baseline_share: f64,
    pub alternative_share: f64,
    /// Percentage-point change in the committee's share of members in the group.
    pub share_change: f64,
}

/// Per-committee change in top-group membership between two schemes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchemeDelta {
    pub baseline: CountingScheme,
    pub alternative: CountingScheme,
    pub rows: Vec<DeltaRow>,
}

impl SchemeDelta {
    pub fn row(&self, committee: Committee) -> Option<&DeltaRow> {
        self.rows.iter().find(|r| r.committee == committee)
    }
}

pub fn scheme_delta(
    baseline: (CountingScheme, &[RankEntry]),
    alternative: (CountingScheme, &[RankEntry]),
    corpus: &Corpus,
) -> SchemeDelta {
    let base = group_counts(baseline.1);
    let alt = group_counts(alternative.1);
    let rows = corpus
        .committee_sizes()
        .into_iter()
        .map(|(committee, size)| {
            let b = base.get(&committee).copied().unwrap_or(0);
            let a = alt.get(&committee).copied().unwrap_or(0);
            let change = a as i64 - b as i64;
            DeltaRow {
                committee,
                baseline_count: b,
                alternative_count: a,
                count_change: change,
                baseline_share: percent(b, size),
                alternative_share: percent(a, size),
                share_change: 100.0 * change as f64 / size as f64,
            }
        })
        .collect();
    SchemeDelta {
        baseline: baseline.0,
        alternative: alternative.0,
        rows,
    }
}
