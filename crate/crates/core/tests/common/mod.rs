#![allow(dead_code)]

use std::path::PathBuf;

use dscmetrics::model::{DocType, Language};
use dscmetrics::{AuthorRef, Committee, PublicationRecord, ResearcherProfile};

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn fixture(name: &str) -> PathBuf {
    manifest_dir().join("data/fixture").join(name)
}

pub fn golden_dir() -> PathBuf {
    manifest_dir().join("tests/golden/synthetic")
}

pub fn researcher(id: &str, committee: Committee) -> ResearcherProfile {
    ResearcherProfile {
        researcher_id: id.to_string(),
        name: format!("Researcher {id}"),
        committee,
        degree_year: Some(2005),
    }
}

/// A WoS-indexed foreign-language journal article with the given byline.
/// Positions not covered by `members` are filled with external authors.
pub fn article(
    pub_id: &str,
    members: &[&str],
    author_count: u32,
    citations: u64,
) -> PublicationRecord {
    let mut authors: Vec<AuthorRef> = members
        .iter()
        .map(|m| AuthorRef::Member(m.to_string()))
        .collect();
    while (authors.len() as u32) < author_count {
        authors.push(AuthorRef::External(format!("ext{}", authors.len())));
    }
    PublicationRecord {
        pub_id: pub_id.to_string(),
        year: 2015,
        authors,
        author_count,
        doc_type: DocType::JournalArticle,
        language: Language::Foreign,
        wos_indexed: true,
        scopus_indexed: true,
        impact_factor: Some(1.5),
        independent_citations: citations,
        wos_citations: citations,
    }
}

/// Random roster and publications for property tests. Years run one past
/// each end of the default window, and some records are repeated with
/// changed citation counts.
pub fn random_records(
    seed: u64,
    researchers: usize,
    publications: usize,
) -> (Vec<ResearcherProfile>, Vec<PublicationRecord>) {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    let mut rng = StdRng::seed_from_u64(seed);
    let roster: Vec<ResearcherProfile> = (0..researchers)
        .map(|i| {
            let mut r = researcher(
                &format!("R{i:03}"),
                Committee::ALL[rng.gen_range(0..Committee::ALL.len())],
            );
            r.degree_year = Some(rng.gen_range(1995..=2016));
            r
        })
        .collect();

    let mut pubs = Vec::with_capacity(publications);
    for j in 0..publications {
        let author_count = if rng.gen_bool(0.3) {
            1
        } else {
            rng.gen_range(2..=15)
        };
        let n_members = rng.gen_range(1..=author_count.min(3).min(researchers as u32)) as usize;
        let mut members: Vec<&str> = Vec::new();
        while members.len() < n_members {
            let id = roster[rng.gen_range(0..researchers)].researcher_id.as_str();
            if !members.contains(&id) {
                members.push(id);
            }
        }
        let mut p = article(
            &format!("P{j:04}"),
            &members,
            author_count,
            rng.gen_range(0..40),
        );
        // shuffle members into random byline slots
        let slots = p.authors.len();
        for i in 0..slots {
            p.authors.swap(i, rng.gen_range(0..slots));
        }
        p.year = rng.gen_range(2010..=2021);
        p.wos_indexed = rng.gen_bool(0.4);
        p.wos_citations = if p.wos_indexed {
            rng.gen_range(0..30)
        } else {
            0
        };
        if rng.gen_bool(0.3) {
            p.doc_type = DocType::BookChapter;
            p.impact_factor = None;
        }
        pubs.push(p);
    }
    let mut dupes = Vec::new();
    for p in &pubs {
        if rng.gen_bool(0.05) {
            let mut d = p.clone();
            d.independent_citations = d.independent_citations.saturating_sub(rng.gen_range(0..5));
            dupes.push(d);
        }
    }
    for d in dupes {
        let at = rng.gen_range(0..=pubs.len());
        pubs.insert(at, d);
    }
    (roster, pubs)
}
