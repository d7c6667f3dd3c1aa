//! Indicator rule sets: named lists of indicator minima.
//!
//! Four rule sets ship with the crate as JSON data files: the three current
//! Earth-science columns and the proposed uniform one. A directory named by
//! `DSCMETRICS_RULESET_DIR` overrides the bundled copies file by file, so
//! recalibrated minima need no rebuild.

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::indicators::IndicatorKind;

pub const RULESET_DIR_ENV: &str = "DSCMETRICS_RULESET_DIR";

pub const BUNDLED: [(&str, &str); 4] = [
    (
        "current-geo-hard",
        include_str!("../data/rulesets/current-geo-hard.json"),
    ),
    (
        "current-geo-applied",
        include_str!("../data/rulesets/current-geo-applied.json"),
    ),
    (
        "current-social-geography",
        include_str!("../data/rulesets/current-social-geography.json"),
    ),
    ("proposed", include_str!("../data/rulesets/proposed.json")),
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Requirement {
    pub kind: IndicatorKind,
    pub minimum: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleSet {
    pub name: String,
    pub requirements: Vec<Requirement>,
}

impl RuleSet {
    pub fn new(name: impl Into<String>, requirements: Vec<Requirement>) -> Result<Self> {
        let rs = RuleSet {
            name: name.into(),
            requirements,
        };
        rs.check()?;
        Ok(rs)
    }

    pub fn from_json(json: &str) -> Result<Self> {
        let rs: RuleSet = serde_json::from_str(json).map_err(|e| Error::InvalidRuleSet {
            name: "<json>".into(),
            reason: e.to_string(),
        })?;
        rs.check()?;
        Ok(rs)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let json = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        RuleSet::from_json(&json).map_err(|e| match e {
            Error::InvalidRuleSet { reason, .. } => Error::InvalidRuleSet {
                name: path.display().to_string(),
                reason,
            },
            other => other,
        })
    }

    /// One of the four bundled rule sets, honouring `DSCMETRICS_RULESET_DIR`.
    pub fn bundled(name: &str) -> Result<Self> {
        let (_, json) = BUNDLED
            .iter()
            .find(|(n, _)| *n == name)
            .ok_or_else(|| Error::UnknownRuleSet(name.to_string()))?;
        if let Some(dir) = std::env::var_os(RULESET_DIR_ENV) {
            let path = Path::new(&dir).join(format!("{name}.json"));
            if path.is_file() {
                return RuleSet::from_file(path);
            }
        }
        RuleSet::from_json(json)
    }

    /// Resolves a bundled name or a path to a rule set file.
    pub fn resolve(name_or_path: &str) -> Result<Self> {
        if BUNDLED.iter().any(|(n, _)| *n == name_or_path) {
            return RuleSet::bundled(name_or_path);
        }
        let path = Path::new(name_or_path);
        if path.is_file() {
            RuleSet::from_file(path)
        } else {
            Err(Error::UnknownRuleSet(name_or_path.to_string()))
        }
    }

    pub fn minimum(&self, kind: IndicatorKind) -> Option<f64> {
        self.requirements
            .iter()
            .find(|r| r.kind == kind)
            .map(|r| r.minimum)
    }

    pub fn require(&self, kind: IndicatorKind) -> Result<f64> {
        self.minimum(kind).ok_or_else(|| Error::MissingRequirement {
            ruleset: self.name.clone(),
            kind,
        })
    }

    pub fn kinds(&self) -> impl Iterator<Item = IndicatorKind> + '_ {
        self.requirements.iter().map(|r| r.kind)
    }

    fn check(&self) -> Result<()> {
        let invalid = |reason: String| Error::InvalidRuleSet {
            name: self.name.clone(),
            reason,
        };
        let mut seen = HashSet::new();
        for r in &self.requirements {
            if !seen.insert(r.kind) {
                return Err(invalid(format!("duplicate kind {}", r.kind)));
            }
            if !r.minimum.is_finite() || r.minimum <= 0.0 {
                return Err(invalid(format!("minimum for {} must be positive", r.kind)));
            }
        }
        Ok(())
    }
}
