//! Indicator values, performance points and a DSc-style eligibility check
//! for one researcher, under integer and fractional counting.
//!
//!     cargo run --example eligibility -- R0002

use std::path::Path;

use dscmetrics::indicators::{indicator_points, DEFAULT_SCORING_KINDS};
use dscmetrics::{
    check_eligibility, indicator_value, load_corpus, CountingScheme, RuleSet, YearWindow,
};

fn main() -> dscmetrics::Result<()> {
    let id = std::env::args().nth(1).unwrap_or_else(|| "R0002".into());
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/fixture");
    let corpus = load_corpus(
        data.join("researchers.csv"),
        data.join("publications.jsonl"),
        YearWindow::default(),
    )?;
    let researcher = corpus
        .researcher(&id)
        .ok_or_else(|| dscmetrics::Error::UnknownResearcher(id.clone()))?;
    let rules = RuleSet::bundled("proposed")?;

    println!("{} ({})", researcher.name, researcher.committee);
    for scheme in [CountingScheme::Integer, CountingScheme::Fractional] {
        println!("\n{scheme} counting");
        for kind in DEFAULT_SCORING_KINDS {
            let value = indicator_value(researcher, &corpus, kind, scheme)?;
            let points = indicator_points(value, rules.require(kind)?)?;
            println!("  {:<24} {value:>9.2}  {points:.3} points", kind.as_str());
        }

        let report = check_eligibility(researcher, &corpus, &rules, scheme)?;
        let failing: Vec<_> = report.failing_kinds().map(|k| k.as_str()).collect();
        if report.eligible {
            println!("  eligible under {}", rules.name);
        } else {
            println!("  rejected under {}: {}", rules.name, failing.join(", "));
        }
    }
    Ok(())
}
