use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::indicators::IndicatorKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{}:{line}: field `{field}`: {message}", file.display())]
    Malformed {
        file: PathBuf,
        line: usize,
        field: String,
        message: String,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("publication {pub_id}: dangling author reference `{reference}`")]
    DanglingAuthor { pub_id: String, reference: String },

    #[error("duplicate researcher id `{0}`")]
    DuplicateResearcher(String),

    #[error("publication {0}: unattributable publication")]
    Unattributable(String),

    #[error("author_count must be at least 1")]
    ZeroAuthors,

    #[error("author position {position} outside 1..={author_count}")]
    PositionOutOfRange { position: usize, author_count: u32 },

    #[error("researcher {researcher_id} is not an author of {pub_id}")]
    NotAnAuthor {
        researcher_id: String,
        pub_id: String,
    },

    #[error("researcher {0}: degree year required")]
    DegreeYearRequired(String),

    #[error("minimum must be positive, got {0}")]
    NonPositiveMinimum(f64),

    #[error("indicator value must be non-negative, got {0}")]
    NegativeValue(f64),

    #[error("rule set `{ruleset}` has no minimum for {kind}")]
    MissingRequirement {
        ruleset: String,
        kind: IndicatorKind,
    },

    #[error("invalid rule set `{name}`: {reason}")]
    InvalidRuleSet { name: String, reason: String },

    #[error("unknown rule set `{0}` (bundled: current-geo-hard, current-geo-applied, current-social-geography, proposed)")]
    UnknownRuleSet(String),

    #[error("quantile must lie in (0, 1], got {0}")]
    InvalidQuantile(f64),

    #[error("annual rate must be positive, got {0}")]
    NonPositiveRate(f64),

    #[error("unknown researcher `{0}`")]
    UnknownResearcher(String),

    #[error("invalid {what} `{value}`")]
    Parse { what: &'static str, value: String },

    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// Input or I/O failures, as opposed to domain failures on well-formed input.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Malformed { .. }
                | Error::Io { .. }
                | Error::DanglingAuthor { .. }
                | Error::DuplicateResearcher(_)
                | Error::InvalidRuleSet { .. }
                | Error::UnknownRuleSet(_)
                | Error::Parse { .. }
                | Error::Usage(_)
        )
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
