//! Bibliometric indicators for research-assessment rule sets.
//!
//! Load a researcher roster and a publication corpus, allocate authorship
//! credit under a counting scheme, score researchers against a rule set's
//! minimum values, and compare rankings across schemes.
//!
//! ```no_run
//! use dscmetrics::{load_corpus, rank_researchers, select_top_quantile, CountingScheme, RuleSet, YearWindow};
//! use dscmetrics::indicators::DEFAULT_SCORING_KINDS;
//!
//! let corpus = load_corpus("researchers.csv", "publications.jsonl", YearWindow::default())?;
//! let rules = RuleSet::bundled("proposed")?;
//! let ranking = rank_researchers(&corpus, CountingScheme::Fractional, &DEFAULT_SCORING_KINDS, &rules)?;
//! let top = select_top_quantile(&ranking, 0.25)?;
//! println!("{} researchers in the top group", top.len());
//! # Ok::<(), dscmetrics::Error>(())
//! ```

pub mod analytics;
pub mod cli;
pub mod crediting;
pub mod error;
pub mod indicators;
pub mod ingest;
pub mod model;
pub mod report;
pub mod ruleset;
pub mod scoring;
pub mod validate;

pub use analytics::{rank_researchers, select_top_quantile, top_quantile_size, Ranking};
pub use crediting::{allocate_credits, credit_for_member, CountingScheme, CreditVector};
pub use error::{Error, Result};
pub use indicators::{indicator_value, IndicatorKind};
pub use ingest::load_corpus;
pub use model::{AuthorRef, Committee, Corpus, PublicationRecord, ResearcherProfile, YearWindow};
pub use ruleset::{Requirement, RuleSet};
pub use scoring::{check_eligibility, score_researcher, EligibilityReport, ScoreCard};
pub use validate::{validate_corpus, ValidationReport};
