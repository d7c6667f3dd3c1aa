//! How long top-group members of each committee would need to reach the
//! proposed WoS article minimum at their current yearly rate.
//!
//!     cargo run --example projection

use std::path::Path;

use dscmetrics::analytics::{mean_annual_rate, years_to_threshold};
use dscmetrics::indicators::DEFAULT_SCORING_KINDS;
use dscmetrics::{
    load_corpus, rank_researchers, select_top_quantile, Committee, CountingScheme, IndicatorKind,
    RuleSet, YearWindow,
};

fn main() -> dscmetrics::Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/fixture");
    let corpus = load_corpus(
        data.join("researchers.csv"),
        data.join("publications.jsonl"),
        YearWindow::default(),
    )?;
    let rules = RuleSet::bundled("proposed")?;
    let kind = IndicatorKind::IndexedArticles;
    let minimum = rules.require(kind)?;

    let ranking = rank_researchers(
        &corpus,
        CountingScheme::Integer,
        &DEFAULT_SCORING_KINDS,
        &rules,
    )?;
    let top = select_top_quantile(&ranking, 0.25)?;

    println!("{kind} minimum {minimum}");
    for committee in Committee::ALL {
        let ids = top.iter().map(|e| e.researcher_id.as_str());
        match mean_annual_rate(&corpus, ids, committee, kind, CountingScheme::Integer)? {
            Some(rate) if rate > 0.0 => {
                let years = years_to_threshold(minimum, rate)?;
                println!(
                    "  {:<20} {rate:.2} per year, {years:.1} years",
                    committee.as_str()
                );
            }
            Some(_) => println!("  {:<20} no WoS articles", committee.as_str()),
            None => println!("  {:<20} not in the top group", committee.as_str()),
        }
    }
    Ok(())
}
