//! Co-authorship size classes and citation summaries per committee.
//!
//!     cargo run --example corpus_stats

use std::path::Path;

use dscmetrics::analytics::{coauthorship_distribution, committee_summary, CoauthorBin};
use dscmetrics::{load_corpus, YearWindow};

fn main() -> dscmetrics::Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/fixture");
    let corpus = load_corpus(
        data.join("researchers.csv"),
        data.join("publications.jsonl"),
        YearWindow::default(),
    )?;

    let dist = coauthorship_distribution(&corpus)?;
    print!("{:<20}", "committee");
    for bin in CoauthorBin::ALL {
        print!("{:>8}", bin.label());
    }
    println!();
    for (committee, bins) in dist
        .committees
        .iter()
        .map(|(c, b)| (c.as_str(), b))
        .chain([("all", &dist.overall)])
    {
        print!("{committee:<20}");
        for p in bins.percents() {
            print!("{p:>8.2}");
        }
        println!();
    }

    println!();
    for (committee, row) in committee_summary(&corpus)? {
        let mean = row
            .mean_citations_per_cited()
            .map_or("-".into(), |m| format!("{m:.2}"));
        println!(
            "{:<20} {:>5} pubs  {:>5.1}% WoS  {:>5.1}% uncited  {mean} citations per cited item",
            committee.as_str(),
            row.publications,
            row.pct_wos_indexed(),
            row.pct_uncited()
        );
    }
    Ok(())
}
