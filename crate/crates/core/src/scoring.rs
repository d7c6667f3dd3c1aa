//! Score cards and DSc-style eligibility checks.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::crediting::CountingScheme;
use crate::error::Result;
use crate::indicators::{indicator_points, indicator_value, IndicatorKind};
use crate::model::{Corpus, ResearcherProfile};
use crate::ruleset::RuleSet;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScoreCard {
    pub researcher_id: String,
    pub scheme: CountingScheme,
    pub values: BTreeMap<IndicatorKind, f64>,
    pub points: BTreeMap<IndicatorKind, f64>,
    /// Mean of `points` over the scoring kinds.
    pub cumulative: f64,
    /// Sum of `points`, for readers who prefer the summed reading.
    pub points_sum: f64,
}

/// Scores a researcher: indicator values, points against the rule set
/// minima, and the cumulative performance point (their mean).
pub fn score_researcher(
    researcher: &ResearcherProfile,
    corpus: &Corpus,
    scheme: CountingScheme,
    scoring_kinds: &[IndicatorKind],
    ruleset: &RuleSet,
) -> Result<ScoreCard> {
    let mut values = BTreeMap::new();
    let mut points = BTreeMap::new();
    let mut points_sum = 0.0;
    for &kind in scoring_kinds {
        let minimum = ruleset.require(kind)?;
        let value = indicator_value(researcher, corpus, kind, scheme)?;
        let point = indicator_points(value, minimum)?;
        values.insert(kind, value);
        points.insert(kind, point);
        points_sum += point;
    }
    let cumulative = if scoring_kinds.is_empty() {
        0.0
    } else {
        points_sum / scoring_kinds.len() as f64
    };
    Ok(ScoreCard {
        researcher_id: researcher.researcher_id.clone(),
        scheme,
        values,
        points,
        cumulative,
        points_sum,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndicatorOutcome {
    pub kind: IndicatorKind,
    pub value: f64,
    pub minimum: f64,
    /// value / minimum
    pub multiple: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EligibilityReport {
    pub researcher_id: String,
    pub ruleset: String,
    pub scheme: CountingScheme,
    pub outcomes: Vec<IndicatorOutcome>,
    pub eligible: bool,
}

impl EligibilityReport {
    pub fn failing_kinds(&self) -> impl Iterator<Item = IndicatorKind> + '_ {
        self.outcomes.iter().filter(|o| !o.passed).map(|o| o.kind)
    }
}

/// Every requirement must be met or exceeded; one miss rejects the application.
pub fn check_eligibility(
    researcher: &ResearcherProfile,
    corpus: &Corpus,
    ruleset: &RuleSet,
    scheme: CountingScheme,
) -> Result<EligibilityReport> {
    let mut outcomes = Vec::with_capacity(ruleset.requirements.len());
    for req in &ruleset.requirements {
        let value = indicator_value(researcher, corpus, req.kind, scheme)?;
        outcomes.push(IndicatorOutcome {
            kind: req.kind,
            value,
            minimum: req.minimum,
            multiple: indicator_points(value, req.minimum)?,
            passed: value >= req.minimum,
        });
    }
    let eligible = outcomes.iter().all(|o| o.passed);
    Ok(EligibilityReport {
        researcher_id: researcher.researcher_id.clone(),
        ruleset: ruleset.name.clone(),
        scheme,
        outcomes,
        eligible,
    })
}
