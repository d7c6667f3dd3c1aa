//! Corpus-level outputs: rankings, top-quantile groups, disciplinary
//! composition, co-authorship distributions, committee summaries and
//! threshold projections.

pub mod coauthorship;
pub mod composition;
pub mod projection;
pub mod ranking;
pub mod summary;

pub use coauthorship::{
    coauthorship_distribution, BinCounts, CoauthorBin, CoauthorshipDistribution,
};
pub use composition::{
    committee_share_of_top, composition, percent, scheme_delta, CompositionReport, CompositionRow,
    DeltaRow, SchemeDelta, ShareReport, ShareRow,
};
pub use projection::{mean_annual_rate, years_to_threshold};
pub use ranking::{rank_researchers, select_top_quantile, top_quantile_size, RankEntry, Ranking};
pub use summary::{committee_summary, mean_per_cited_from_aggregates, CommitteeSummary};
