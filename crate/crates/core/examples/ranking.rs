//! Ranks the fixture researchers by cumulative points and compares the
//! top-quarter composition under integer and fractional counting.
//!
//!     cargo run --example ranking

use std::path::Path;

use dscmetrics::analytics::{composition, scheme_delta};
use dscmetrics::indicators::DEFAULT_SCORING_KINDS;
use dscmetrics::{
    load_corpus, rank_researchers, select_top_quantile, CountingScheme, RuleSet, YearWindow,
};

fn main() -> dscmetrics::Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/fixture");
    let corpus = load_corpus(
        data.join("researchers.csv"),
        data.join("publications.jsonl"),
        YearWindow::default(),
    )?;
    let rules = RuleSet::bundled("proposed")?;

    let integer = rank_researchers(
        &corpus,
        CountingScheme::Integer,
        &DEFAULT_SCORING_KINDS,
        &rules,
    )?;
    let fractional = rank_researchers(
        &corpus,
        CountingScheme::Fractional,
        &DEFAULT_SCORING_KINDS,
        &rules,
    )?;
    let top_int = select_top_quantile(&integer, 0.25)?;
    let top_frac = select_top_quantile(&fractional, 0.25)?;

    println!("top five, fractional counting");
    for e in &top_frac[..5] {
        println!(
            "  {:>3}. {} {:<20} {:.4}",
            e.rank,
            e.researcher_id,
            e.committee.as_str(),
            e.cumulative
        );
    }

    println!("\ntop group of {} by committee", top_int.len());
    let (ci, cf) = (
        composition(top_int, &corpus),
        composition(top_frac, &corpus),
    );
    for (a, b) in ci.rows.iter().zip(&cf.rows) {
        println!(
            "  {:<20} integer {:>5.1}%  fractional {:>5.1}%",
            a.committee.as_str(),
            a.percent,
            b.percent
        );
    }

    println!("\nchange in share of committee members in the top group");
    let delta = scheme_delta(
        (CountingScheme::Integer, top_int),
        (CountingScheme::Fractional, top_frac),
        &corpus,
    );
    for row in &delta.rows {
        println!(
            "  {:<20} {:+3}  {:+6.2} points",
            row.committee.as_str(),
            row.count_change,
            row.share_change
        );
    }
    Ok(())
}
