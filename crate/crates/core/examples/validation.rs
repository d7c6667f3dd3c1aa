//! Loads a corpus from JSON Lines text and reports validation findings.
//!
//!     cargo run --example validation

use dscmetrics::validate::Severity;
use dscmetrics::{
    validate_corpus, Committee, Corpus, PublicationRecord, ResearcherProfile, YearWindow,
};

const RECORDS: &str = r#"
{"pub_id":"P1","year":2014,"authors":["m:R1","x:Kovacs"],"author_count":2,"doc_type":"journal_article","language":"foreign","wos_indexed":true,"scopus_indexed":true,"impact_factor":2.1,"independent_citations":7,"wos_citations":5}
{"pub_id":"P2","year":2016,"authors":["m:R1"],"author_count":1,"doc_type":"book","language":"hungarian","wos_indexed":false,"scopus_indexed":false,"impact_factor":1.0,"independent_citations":3,"wos_citations":0}
{"pub_id":"P3","year":2018,"authors":["x:Nagy","x:Szabo","m:R2"],"author_count":2,"doc_type":"conference","language":"foreign","wos_indexed":false,"scopus_indexed":true,"independent_citations":0,"wos_citations":2}
{"pub_id":"P1","year":2014,"authors":["m:R1","x:Kovacs"],"author_count":2,"doc_type":"journal_article","language":"foreign","wos_indexed":true,"scopus_indexed":true,"impact_factor":2.1,"independent_citations":9,"wos_citations":5}
"#;

fn main() -> dscmetrics::Result<()> {
    let researchers = vec![
        ResearcherProfile {
            researcher_id: "R1".into(),
            name: "First Researcher".into(),
            committee: Committee::Geology,
            degree_year: Some(2009),
        },
        ResearcherProfile {
            researcher_id: "R2".into(),
            name: "Second Researcher".into(),
            committee: Committee::Mining,
            degree_year: None,
        },
    ];
    let publications: Vec<PublicationRecord> = RECORDS
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).expect("example records are well formed"))
        .collect();

    let corpus = Corpus::build(researchers, publications, YearWindow::default())?;
    println!("{} unique publications", corpus.publications().len());

    let report = validate_corpus(&corpus);
    for v in &report.violations {
        let tag = match v.severity {
            Severity::Fatal => "FATAL",
            Severity::Warning => "warn ",
        };
        let subject = v
            .pub_id
            .as_deref()
            .or(v.researcher_id.as_deref())
            .unwrap_or("-");
        println!("{tag} {:<28} {subject:<4} {}", v.code, v.message);
    }
    if report.has_fatal() {
        println!("corpus is not usable for scoring");
    }
    Ok(())
}
