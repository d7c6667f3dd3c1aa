//! Author-credit allocation under integer, fractional and position-weighted
//! counting.
//!
//! Integer counting awards every co-author one full credit. Every other
//! scheme splits a single unit of credit over the `n` byline positions:
//!
//! | scheme         | credit at position `i` of `n`             |
//! |----------------|-------------------------------------------|
//! | fractional     | `1 / n`                                   |
//! | arithmetic     | `(n + 1 - i) / (n (n + 1) / 2)`           |
//! | geometric      | `2^(n - i) / (2^n - 1)`                   |
//! | harmonic       | `(1 / i) / (1 + 1/2 + ... + 1/n)`         |
//! | first-author   | `1` at position 1, `0` elsewhere          |
//!
//! Integer and fractional are the schemes the pipeline defaults to; the
//! position-weighted ones are extensions and can only be selected by name
//! when the `extended-schemes` feature is enabled.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::PublicationRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountingScheme {
    Integer,
    Fractional,
    Arithmetic,
    Geometric,
    Harmonic,
    FirstAuthor,
}

impl CountingScheme {
    pub const ALL: [CountingScheme; 6] = [
        CountingScheme::Integer,
        CountingScheme::Fractional,
        CountingScheme::Arithmetic,
        CountingScheme::Geometric,
        CountingScheme::Harmonic,
        CountingScheme::FirstAuthor,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CountingScheme::Integer => "integer",
            CountingScheme::Fractional => "fractional",
            CountingScheme::Arithmetic => "arithmetic",
            CountingScheme::Geometric => "geometric",
            CountingScheme::Harmonic => "harmonic",
            CountingScheme::FirstAuthor => "first-author",
        }
    }

    /// Whether credits split one unit across the byline.
    pub fn is_normalized(self) -> bool {
        self != CountingScheme::Integer
    }

    pub fn is_extension(self) -> bool {
        !matches!(self, CountingScheme::Integer | CountingScheme::Fractional)
    }

    /// Credit at 1-based `position` of an `author_count`-author byline.
    pub fn credit(self, author_count: u32, position: usize) -> Result<f64> {
        if author_count == 0 {
            return Err(Error::ZeroAuthors);
        }
        if position == 0 || position > author_count as usize {
            return Err(Error::PositionOutOfRange {
                position,
                author_count,
            });
        }
        Ok(self.credit_unchecked(author_count, position))
    }

    fn credit_unchecked(self, n: u32, i: usize) -> f64 {
        let nf = f64::from(n);
        let i_f = i as f64;
        match self {
            CountingScheme::Integer => 1.0,
            CountingScheme::Fractional => 1.0 / nf,
            CountingScheme::Arithmetic => (nf + 1.0 - i_f) / (nf * (nf + 1.0) / 2.0),
            // 2^(n-i) / (2^n - 1) rewritten so large bylines stay finite
            CountingScheme::Geometric => 0.5f64.powi(i as i32) / (1.0 - 0.5f64.powi(n as i32)),
            CountingScheme::Harmonic => (1.0 / i_f) / harmonic_number(n),
            CountingScheme::FirstAuthor => {
                if i == 1 {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }
}

fn harmonic_number(n: u32) -> f64 {
    // summed smallest-first for accuracy
    (1..=n).rev().map(|k| 1.0 / f64::from(k)).sum()
}

impl fmt::Display for CountingScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CountingScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.replace('_', "-");
        let scheme = CountingScheme::ALL
            .into_iter()
            .find(|c| c.as_str() == normalized)
            .ok_or_else(|| Error::Parse {
                what: "counting scheme",
                value: s.to_string(),
            })?;
        if scheme.is_extension() && !cfg!(feature = "extended-schemes") {
            return Err(Error::Parse {
                what: "counting scheme (built without extended-schemes)",
                value: s.to_string(),
            });
        }
        Ok(scheme)
    }
}

/// Per-position credits for one publication.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct CreditVector(Vec<f64>);

impl CreditVector {
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

impl std::ops::Index<usize> for CreditVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

pub fn allocate_credits(scheme: CountingScheme, author_count: u32) -> Result<CreditVector> {
    if author_count == 0 {
        return Err(Error::ZeroAuthors);
    }
    let n = author_count as usize;
    let credits = match scheme {
        CountingScheme::Harmonic => {
            let h = harmonic_number(author_count);
            (1..=n).map(|i| (1.0 / i as f64) / h).collect()
        }
        _ => (1..=n)
            .map(|i| scheme.credit_unchecked(author_count, i))
            .collect(),
    };
    Ok(CreditVector(credits))
}

/// Credit the researcher earns for `publication`, read at their byline position.
pub fn credit_for_member(
    scheme: CountingScheme,
    publication: &PublicationRecord,
    researcher_id: &str,
) -> Result<f64> {
    let position = publication
        .position_of(researcher_id)
        .ok_or_else(|| Error::NotAnAuthor {
            researcher_id: researcher_id.to_string(),
            pub_id: publication.pub_id.clone(),
        })?;
    scheme.credit(publication.author_count, position)
}
