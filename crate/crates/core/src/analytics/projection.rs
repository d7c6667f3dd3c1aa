use crate::crediting::CountingScheme;
use crate::error::{Error, Result};
use crate::indicators::{indicator_value, IndicatorKind};
use crate::model::{Committee, Corpus};

/// Years needed to reach `minimum` at a constant `annual_rate`.
pub fn years_to_threshold(minimum: f64, annual_rate: f64) -> Result<f64> {
    if annual_rate.is_nan() || annual_rate <= 0.0 {
        return Err(Error::NonPositiveRate(annual_rate));
    }
    Ok(minimum / annual_rate)
}

/// Mean yearly value of `kind` over the given researchers who belong to
/// `committee`, spread over the corpus window. `None` if nobody qualifies.
pub fn mean_annual_rate<'a>(
    corpus: &Corpus,
    researcher_ids: impl IntoIterator<Item = &'a str>,
    committee: Committee,
    kind: IndicatorKind,
    scheme: CountingScheme,
) -> Result<Option<f64>> {
    let years = f64::from(corpus.window().years());
    let mut total = 0.0;
    let mut members = 0usize;
    for id in researcher_ids {
        let r = corpus
            .researcher(id)
            .ok_or_else(|| Error::UnknownResearcher(id.to_string()))?;
        if r.committee != committee {
            continue;
        }
        total += indicator_value(r, corpus, kind, scheme)? / years;
        members += 1;
    }
    Ok((members > 0).then(|| total / members as f64))
}
