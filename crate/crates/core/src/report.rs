//! Report tables and their CSV / JSON / tidy plot-data renderings.
//!
//! Every decimal leaves the engine through [`format_decimal`], so identical
//! inputs give byte-identical files.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use rust_decimal::{Decimal, RoundingStrategy};
use serde_json::{Map, Number, Value};

use crate::analytics::{
    BinCounts, CoauthorBin, CoauthorshipDistribution, CommitteeSummary, CompositionReport, Ranking,
    SchemeDelta, ShareReport,
};
use crate::crediting::CountingScheme;
use crate::error::{Error, Result};
use crate::indicators::IndicatorKind;
use crate::model::Committee;
use crate::scoring::{EligibilityReport, ScoreCard};

/// Decimal places for percentages and per-item means.
pub const PERCENT_PLACES: u32 = 2;
/// Decimal places for indicator values, points and cumulative points.
pub const SCORE_PLACES: u32 = 6;

/// Renders `x` with `places` decimals.
///
/// The value is first snapped to 12 significant digits and then rounded
/// half away from zero. Snapping absorbs the last-bit noise that differing
/// summation orders leave behind, so values that are equal in exact
/// arithmetic always print identically. Zero never carries a sign.
pub fn format_decimal(x: f64, places: u32) -> String {
    let width = places as usize;
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return format!("{:.width$}", 0.0);
    }
    match Decimal::from_scientific(&format!("{x:.11e}")) {
        Ok(d) => {
            let r = d.round_dp_with_strategy(places, RoundingStrategy::MidpointAwayFromZero);
            let r = if r.is_zero() { Decimal::ZERO } else { r };
            format!("{r:.width$}")
        }
        // below Decimal's 28-digit scale: rounds to zero at any supported precision
        Err(_) if x.abs() < 1e-20 => format!("{:.width$}", 0.0),
        Err(_) => format!("{x:.width$}"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
    /// Tidy long-form CSV: `committee,series,value`.
    Plotdata,
}

impl OutputFormat {
    pub fn extension(self) -> &'static str {
        match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv | OutputFormat::Plotdata => "csv",
        }
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "plotdata" => Ok(OutputFormat::Plotdata),
            _ => Err(Error::Parse {
                what: "output format",
                value: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
            OutputFormat::Plotdata => "plotdata",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Dec(f64, u32),
    Bool(bool),
    Null,
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }

    pub fn pct(x: f64) -> Cell {
        Cell::Dec(x, PERCENT_PLACES)
    }

    pub fn score(x: f64) -> Cell {
        Cell::Dec(x, SCORE_PLACES)
    }

    fn render(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::Dec(x, places) => format_decimal(*x, *places),
            Cell::Bool(b) => b.to_string(),
            Cell::Null => String::new(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(i) => Value::from(*i),
            Cell::Dec(x, places) => format_decimal(*x, *places)
                .parse::<f64>()
                .ok()
                .and_then(Number::from_f64)
                .map_or(Value::Null, Value::Number),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Null => Value::Null,
        }
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Cell {
        Cell::Int(n as i64)
    }
}

impl From<u64> for Cell {
    fn from(n: u64) -> Cell {
        Cell::Int(n as i64)
    }
}

impl From<i64> for Cell {
    fn from(n: i64) -> Cell {
        Cell::Int(n)
    }
}

impl From<Committee> for Cell {
    fn from(c: Committee) -> Cell {
        Cell::text(c.as_str())
    }
}

/// A rectangular report with a fixed column order.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Table {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render))
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    pub fn to_json_value(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = self
                        .columns
                        .iter()
                        .cloned()
                        .zip(row.iter().map(Cell::to_json))
                        .collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }

    pub fn to_json(&self) -> String {
        json_string(&self.to_json_value())
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Csv | OutputFormat::Plotdata => self.to_csv(),
        }
    }

    /// Writes `<dir>/<stem>.<ext>` and returns the path.
    pub fn write(
        &self,
        dir: &Path,
        stem: &str,
        format: OutputFormat,
    ) -> Result<std::path::PathBuf> {
        let path = dir.join(format!("{stem}.{}", format.extension()));
        fs::write(&path, self.render(format)).map_err(|e| Error::io(&path, e))?;
        Ok(path)
    }
}

pub fn json_string(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}

pub fn ranking_table(ranking: &Ranking) -> Table {
    let mut t = Table::new(["rank", "researcher_id", "committee", "cumulative"]);
    for e in &ranking.entries {
        t.push(vec![
            e.rank.into(),
            Cell::text(&e.researcher_id),
            e.committee.into(),
            Cell::score(e.cumulative),
        ]);
    }
    t
}

pub fn composition_table(report: &CompositionReport) -> Table {
    let mut t = Table::new(["committee", "count", "percent"]);
    for r in &report.rows {
        t.push(vec![
            r.committee.into(),
            r.count.into(),
            Cell::pct(r.percent),
        ]);
    }
    t
}

pub fn share_table(report: &ShareReport) -> Table {
    let mut t = Table::new(["committee", "in_group", "committee_size", "percent"]);
    for r in &report.rows {
        t.push(vec![
            r.committee.into(),
            r.in_group.into(),
            r.committee_size.into(),
            Cell::pct(r.percent),
        ]);
    }
    t
}

pub fn delta_table(delta: &SchemeDelta) -> Table {
    let (b, a) = (delta.baseline.as_str(), delta.alternative.as_str());
    let mut t = Table::new([
        "committee".to_string(),
        format!("{b}_count"),
        format!("{a}_count"),
        "count_change".to_string(),
        format!("{b}_share"),
        format!("{a}_share"),
        "share_change".to_string(),
    ]);
    for r in &delta.rows {
        t.push(vec![
            r.committee.into(),
            r.baseline_count.into(),
            r.alternative_count.into(),
            r.count_change.into(),
            Cell::pct(r.baseline_share),
            Cell::pct(r.alternative_share),
            Cell::pct(r.share_change),
        ]);
    }
    t
}

fn bin_columns() -> Vec<String> {
    std::iter::once("committee".to_string())
        .chain(CoauthorBin::ALL.iter().map(|b| b.label().to_string()))
        .collect()
}

fn bin_row(label: Cell, counts: &BinCounts) -> Vec<Cell> {
    std::iter::once(label)
        .chain(counts.percents().into_iter().map(Cell::pct))
        .collect()
}

/// Percent of each committee's publications per co-authorship class.
pub fn coauthorship_table(dist: &CoauthorshipDistribution) -> Table {
    let mut t = Table::new(bin_columns());
    for (&c, counts) in &dist.committees {
        t.push(bin_row(c.into(), counts));
    }
    t
}

/// The section-wide row of the co-authorship table.
pub fn coauthorship_overall_table(dist: &CoauthorshipDistribution) -> Table {
    let mut t = Table::new(bin_columns());
    if dist.overall.total() > 0 {
        t.push(bin_row(Cell::text("all"), &dist.overall));
    }
    t
}

pub fn summary_table<'a>(
    rows: impl IntoIterator<Item = (&'a Committee, &'a CommitteeSummary)>,
) -> Table {
    let mut t = Table::new([
        "committee",
        "publications",
        "pct_wos_indexed",
        "pct_uncited",
        "total_citations",
        "mean_citations_per_cited",
        "total_wos_citations",
        "mean_wos_citations_per_cited",
    ]);
    let mean = |m: Option<f64>| m.map_or(Cell::Null, Cell::pct);
    for (&c, s) in rows {
        t.push(vec![
            c.into(),
            s.publications.into(),
            Cell::pct(s.pct_wos_indexed()),
            Cell::pct(s.pct_uncited()),
            s.total_citations.into(),
            mean(s.mean_citations_per_cited()),
            s.total_wos_citations.into(),
            mean(s.mean_wos_citations_per_cited()),
        ]);
    }
    t
}

pub fn scores_table(cards: &[(Committee, ScoreCard)], kinds: &[IndicatorKind]) -> Table {
    let mut columns = vec![
        "researcher_id".to_string(),
        "committee".into(),
        "scheme".into(),
    ];
    columns.extend(kinds.iter().map(|k| format!("{k}_value")));
    columns.extend(kinds.iter().map(|k| format!("{k}_points")));
    columns.push("cumulative".into());
    columns.push("points_sum".into());
    let mut t = Table::new(columns);
    for (committee, card) in cards {
        let mut row = vec![
            Cell::text(&card.researcher_id),
            (*committee).into(),
            Cell::text(card.scheme.as_str()),
        ];
        row.extend(kinds.iter().map(|k| Cell::score(card.values[k])));
        row.extend(kinds.iter().map(|k| Cell::score(card.points[k])));
        row.push(Cell::score(card.cumulative));
        row.push(Cell::score(card.points_sum));
        t.push(row);
    }
    t
}

pub fn eligibility_table(report: &EligibilityReport) -> Table {
    let mut t = Table::new(["kind", "value", "minimum", "multiple", "passed"]);
    for o in &report.outcomes {
        t.push(vec![
            Cell::text(o.kind.as_str()),
            Cell::score(o.value),
            Cell::score(o.minimum),
            Cell::score(o.multiple),
            Cell::Bool(o.passed),
        ]);
    }
    t
}

pub fn eligibility_json(report: &EligibilityReport) -> String {
    let failing: Vec<Value> = report
        .failing_kinds()
        .map(|k| Value::String(k.as_str().into()))
        .collect();
    let mut obj = Map::new();
    obj.insert("researcher_id".into(), report.researcher_id.clone().into());
    obj.insert("ruleset".into(), report.ruleset.clone().into());
    obj.insert("scheme".into(), report.scheme.as_str().into());
    obj.insert("eligible".into(), report.eligible.into());
    obj.insert("failing".into(), Value::Array(failing));
    obj.insert(
        "indicators".into(),
        eligibility_table(report).to_json_value(),
    );
    json_string(&Value::Object(obj))
}

/// Tidy `committee,series,value` rows for group composition and committee
/// share charts, one pair of series per scheme.
pub fn composition_plot(groups: &[(CountingScheme, &CompositionReport, &ShareReport)]) -> Table {
    let mut t = Table::new(["committee", "series", "value"]);
    for (scheme, comp, share) in groups {
        for r in &comp.rows {
            t.push(vec![
                r.committee.into(),
                Cell::text(format!("composition_{scheme}")),
                Cell::pct(r.percent),
            ]);
        }
        for r in &share.rows {
            t.push(vec![
                r.committee.into(),
                Cell::text(format!("share_{scheme}")),
                Cell::pct(r.percent),
            ]);
        }
    }
    t
}

/// Tidy `committee,series,value` rows for the co-authorship distribution.
pub fn coauthorship_plot(dist: &CoauthorshipDistribution) -> Table {
    let mut t = Table::new(["committee", "series", "value"]);
    for (&c, counts) in &dist.committees {
        for b in CoauthorBin::ALL {
            t.push(vec![
                c.into(),
                Cell::text(b.label()),
                Cell::pct(counts.percent(b)),
            ]);
        }
    }
    t
}
