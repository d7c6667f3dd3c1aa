//! Researcher-level performance indicators.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::crediting::{credit_for_member, CountingScheme};
use crate::error::{Error, Result};
use crate::model::{Corpus, DocType, Language, PublicationRecord, ResearcherProfile};

/// The indicator rows of the DSc rule sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IndicatorKind {
    TotalPubs,
    FirstAuthorPubs,
    PubsSinceDegree,
    BooksMonographs,
    ForeignLanguagePubs,
    IndexedArticles,
    IndexedArticlesSinceDegree,
    IndependentCitations,
    IndexedCitations,
    CumulativeImpactFactor,
    HIndex,
}

/// Publication count, WoS article count, independent and WoS citations.
pub const DEFAULT_SCORING_KINDS: [IndicatorKind; 4] = [
    IndicatorKind::TotalPubs,
    IndicatorKind::IndexedArticles,
    IndicatorKind::IndependentCitations,
    IndicatorKind::IndexedCitations,
];

impl IndicatorKind {
    pub const ALL: [IndicatorKind; 11] = [
        IndicatorKind::TotalPubs,
        IndicatorKind::FirstAuthorPubs,
        IndicatorKind::PubsSinceDegree,
        IndicatorKind::BooksMonographs,
        IndicatorKind::ForeignLanguagePubs,
        IndicatorKind::IndexedArticles,
        IndicatorKind::IndexedArticlesSinceDegree,
        IndicatorKind::IndependentCitations,
        IndicatorKind::IndexedCitations,
        IndicatorKind::CumulativeImpactFactor,
        IndicatorKind::HIndex,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IndicatorKind::TotalPubs => "total_pubs",
            IndicatorKind::FirstAuthorPubs => "first_author_pubs",
            IndicatorKind::PubsSinceDegree => "pubs_since_degree",
            IndicatorKind::BooksMonographs => "books_monographs",
            IndicatorKind::ForeignLanguagePubs => "foreign_language_pubs",
            IndicatorKind::IndexedArticles => "indexed_articles",
            IndicatorKind::IndexedArticlesSinceDegree => "indexed_articles_since_degree",
            IndicatorKind::IndependentCitations => "independent_citations",
            IndicatorKind::IndexedCitations => "indexed_citations",
            IndicatorKind::CumulativeImpactFactor => "cumulative_impact_factor",
            IndicatorKind::HIndex => "h_index",
        }
    }

    pub fn requires_degree_year(self) -> bool {
        matches!(
            self,
            IndicatorKind::PubsSinceDegree | IndicatorKind::IndexedArticlesSinceDegree
        )
    }

    /// Kinds whose value is a credited count of publications.
    pub fn is_count(self) -> bool {
        matches!(
            self,
            IndicatorKind::TotalPubs
                | IndicatorKind::FirstAuthorPubs
                | IndicatorKind::PubsSinceDegree
                | IndicatorKind::BooksMonographs
                | IndicatorKind::ForeignLanguagePubs
                | IndicatorKind::IndexedArticles
                | IndicatorKind::IndexedArticlesSinceDegree
        )
    }

    pub fn is_citation(self) -> bool {
        matches!(
            self,
            IndicatorKind::IndependentCitations | IndicatorKind::IndexedCitations
        )
    }

    /// Per-publication quantity before crediting, or `None` if the
    /// publication does not count toward this kind.
    fn raw_amount(self, p: &PublicationRecord, researcher: &ResearcherProfile) -> Option<f64> {
        let since_degree = || researcher.degree_year.is_some_and(|y| p.year >= y);
        let counts = match self {
            IndicatorKind::TotalPubs => true,
            IndicatorKind::FirstAuthorPubs => p.position_of(&researcher.researcher_id) == Some(1),
            IndicatorKind::PubsSinceDegree => since_degree(),
            IndicatorKind::BooksMonographs => p.doc_type == DocType::Book,
            IndicatorKind::ForeignLanguagePubs => p.language == Language::Foreign,
            IndicatorKind::IndexedArticles => p.is_indexed_article(),
            IndicatorKind::IndexedArticlesSinceDegree => p.is_indexed_article() && since_degree(),
            IndicatorKind::IndependentCitations => return Some(p.independent_citations as f64),
            IndicatorKind::IndexedCitations => return Some(p.wos_citations as f64),
            IndicatorKind::CumulativeImpactFactor => return p.impact_factor,
            IndicatorKind::HIndex => unreachable!("h-index is not a credited sum"),
        };
        counts.then_some(1.0)
    }
}

impl fmt::Display for IndicatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IndicatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IndicatorKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::Parse {
                what: "indicator kind",
                value: s.to_string(),
            })
    }
}

/// Value of one indicator for a researcher under a counting scheme.
///
/// Count kinds sum the researcher's credit over matching publications;
/// citation and impact-factor kinds weight each publication's amount by
/// that credit. The h-index always uses plain integer counting.
pub fn indicator_value(
    researcher: &ResearcherProfile,
    corpus: &Corpus,
    kind: IndicatorKind,
    scheme: CountingScheme,
) -> Result<f64> {
    indicator_value_over(
        researcher,
        corpus.publications_of(&researcher.researcher_id),
        kind,
        scheme,
    )
}

/// [`indicator_value`] over an explicit set of the researcher's publications.
pub fn indicator_value_over<'a>(
    researcher: &ResearcherProfile,
    publications: impl IntoIterator<Item = &'a PublicationRecord>,
    kind: IndicatorKind,
    scheme: CountingScheme,
) -> Result<f64> {
    if kind.requires_degree_year() && researcher.degree_year.is_none() {
        return Err(Error::DegreeYearRequired(researcher.researcher_id.clone()));
    }
    if kind == IndicatorKind::HIndex {
        let citations = publications.into_iter().map(|p| p.independent_citations);
        return Ok(f64::from(h_index(citations)));
    }

    let mut total = 0.0;
    for p in publications {
        if let Some(amount) = kind.raw_amount(p, researcher) {
            total += amount * credit_for_member(scheme, p, &researcher.researcher_id)?;
        }
    }
    Ok(total)
}

/// Largest `h` such that at least `h` items have `h` or more citations.
pub fn h_index(citations: impl IntoIterator<Item = u64>) -> u32 {
    let mut sorted: Vec<u64> = citations.into_iter().collect();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted
        .iter()
        .enumerate()
        .take_while(|&(i, &c)| c > i as u64)
        .count() as u32
}

/// Performance points for one indicator: the multiple of its minimum.
pub fn indicator_points(value: f64, minimum: f64) -> Result<f64> {
    if minimum.is_nan() || minimum <= 0.0 {
        return Err(Error::NonPositiveMinimum(minimum));
    }
    if value < 0.0 {
        return Err(Error::NegativeValue(value));
    }
    Ok(value / minimum)
}
