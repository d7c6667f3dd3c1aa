//! Domain data model: researchers, publications and the windowed corpus.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The nine scientific committees of the Section of Earth Sciences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Committee {
    Geochemistry,
    Geodesy,
    Geology,
    Geophysics,
    Meteorology,
    Mining,
    Palaeontology,
    PhysicalGeography,
    SocialGeography,
}

impl Committee {
    pub const ALL: [Committee; 9] = [
        Committee::Geochemistry,
        Committee::Geodesy,
        Committee::Geology,
        Committee::Geophysics,
        Committee::Meteorology,
        Committee::Mining,
        Committee::Palaeontology,
        Committee::PhysicalGeography,
        Committee::SocialGeography,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Committee::Geochemistry => "geochemistry",
            Committee::Geodesy => "geodesy",
            Committee::Geology => "geology",
            Committee::Geophysics => "geophysics",
            Committee::Meteorology => "meteorology",
            Committee::Mining => "mining",
            Committee::Palaeontology => "palaeontology",
            Committee::PhysicalGeography => "physical_geography",
            Committee::SocialGeography => "social_geography",
        }
    }
}

impl fmt::Display for Committee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Committee {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Committee::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse {
                what: "committee",
                value: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DocType {
    JournalArticle,
    Book,
    BookChapter,
    Conference,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Language {
    Hungarian,
    Foreign,
}

/// One byline entry: a corpus member (`m:<id>`) or an external co-author (`x:<name>`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AuthorRef {
    Member(String),
    External(String),
}

impl AuthorRef {
    pub fn member_id(&self) -> Option<&str> {
        match self {
            AuthorRef::Member(id) => Some(id),
            AuthorRef::External(_) => None,
        }
    }
}

impl fmt::Display for AuthorRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AuthorRef::Member(id) => write!(f, "m:{id}"),
            AuthorRef::External(name) => write!(f, "x:{name}"),
        }
    }
}

impl FromStr for AuthorRef {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(id) = s.strip_prefix("m:").filter(|id| !id.is_empty()) {
            Ok(AuthorRef::Member(id.to_string()))
        } else if let Some(name) = s.strip_prefix("x:") {
            Ok(AuthorRef::External(name.to_string()))
        } else {
            Err(Error::Parse {
                what: "author reference",
                value: s.to_string(),
            })
        }
    }
}

impl Serialize for AuthorRef {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AuthorRef {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PublicationRecord {
    pub pub_id: String,
    pub year: i32,
    pub authors: Vec<AuthorRef>,
    /// Total number of authors; may exceed `authors.len()` when the byline is truncated.
    pub author_count: u32,
    pub doc_type: DocType,
    pub language: Language,
    pub wos_indexed: bool,
    pub scopus_indexed: bool,
    #[serde(default)]
    pub impact_factor: Option<f64>,
    pub independent_citations: u64,
    pub wos_citations: u64,
}

impl PublicationRecord {
    /// 1-based byline position of a member, taken from its first occurrence.
    pub fn position_of(&self, researcher_id: &str) -> Option<usize> {
        self.authors
            .iter()
            .position(|a| a.member_id() == Some(researcher_id))
            .map(|i| i + 1)
    }

    pub fn member_ids(&self) -> impl Iterator<Item = &str> {
        self.authors.iter().filter_map(AuthorRef::member_id)
    }

    pub fn is_indexed_article(&self) -> bool {
        self.doc_type == DocType::JournalArticle && self.wos_indexed
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResearcherProfile {
    pub researcher_id: String,
    pub name: String,
    pub committee: Committee,
    /// Year of the last scientific degree.
    pub degree_year: Option<i32>,
}

/// Inclusive range of publication years kept in a corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct YearWindow {
    pub start: i32,
    pub end: i32,
}

impl YearWindow {
    pub fn new(start: i32, end: i32) -> Result<Self> {
        if start > end {
            return Err(Error::Parse {
                what: "year window",
                value: format!("{start}:{end}"),
            });
        }
        Ok(YearWindow { start, end })
    }

    pub fn contains(&self, year: i32) -> bool {
        (self.start..=self.end).contains(&year)
    }

    /// Number of calendar years covered.
    pub fn years(&self) -> u32 {
        (self.end - self.start + 1) as u32
    }
}

impl Default for YearWindow {
    fn default() -> Self {
        YearWindow {
            start: 2011,
            end: 2020,
        }
    }
}

impl fmt::Display for YearWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, self.end)
    }
}

impl FromStr for YearWindow {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "year window",
            value: s.to_string(),
        };
        let (a, b) = s.split_once(':').ok_or_else(bad)?;
        let start = a.trim().parse().map_err(|_| bad())?;
        let end = b.trim().parse().map_err(|_| bad())?;
        YearWindow::new(start, end)
    }
}

/// A field on which two copies of the same publication disagreed during dedup.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MergeConflict {
    pub pub_id: String,
    pub field: &'static str,
}

/// A validated, deduplicated and windowed set of researchers and publications.
///
/// Immutable once built; all analysis runs over shared references.
#[derive(Debug, Clone)]
pub struct Corpus {
    researchers: Vec<ResearcherProfile>,
    publications: Vec<PublicationRecord>,
    window: YearWindow,
    conflicts: Vec<MergeConflict>,
    by_id: HashMap<String, usize>,
    authored: HashMap<String, Vec<usize>>,
}

impl Corpus {
    /// Builds a corpus from raw records.
    ///
    /// Records sharing a `pub_id` are merged (maximum citation counts, union
    /// of index flags, first-seen position), then records outside `window`
    /// are dropped. Fails on duplicate researcher ids and on member
    /// references that resolve to no profile.
    pub fn build(
        researchers: Vec<ResearcherProfile>,
        publications: Vec<PublicationRecord>,
        window: YearWindow,
    ) -> Result<Self> {
        let mut by_id = HashMap::with_capacity(researchers.len());
        for (i, r) in researchers.iter().enumerate() {
            if by_id.insert(r.researcher_id.clone(), i).is_some() {
                return Err(Error::DuplicateResearcher(r.researcher_id.clone()));
            }
        }

        let (merged, conflicts) = dedup(publications);

        let mut kept = Vec::with_capacity(merged.len());
        for p in merged {
            if let Some(reference) = p.member_ids().find(|id| !by_id.contains_key(*id)) {
                return Err(Error::DanglingAuthor {
                    pub_id: p.pub_id.clone(),
                    reference: format!("m:{reference}"),
                });
            }
            if window.contains(p.year) {
                kept.push(p);
            }
        }

        let mut authored: HashMap<String, Vec<usize>> = HashMap::new();
        for (i, p) in kept.iter().enumerate() {
            let mut seen: Vec<&str> = Vec::new();
            for id in p.member_ids() {
                if !seen.contains(&id) {
                    seen.push(id);
                    authored.entry(id.to_string()).or_default().push(i);
                }
            }
        }

        Ok(Corpus {
            researchers,
            publications: kept,
            window,
            conflicts,
            by_id,
            authored,
        })
    }

    pub fn researchers(&self) -> &[ResearcherProfile] {
        &self.researchers
    }

    pub fn publications(&self) -> &[PublicationRecord] {
        &self.publications
    }

    pub fn window(&self) -> YearWindow {
        self.window
    }

    /// Field disagreements found while merging duplicate records.
    pub fn conflicts(&self) -> &[MergeConflict] {
        &self.conflicts
    }

    pub fn researcher(&self, researcher_id: &str) -> Option<&ResearcherProfile> {
        self.by_id.get(researcher_id).map(|&i| &self.researchers[i])
    }

    /// Publications listing the researcher in their byline, in corpus order.
    pub fn publications_of<'a>(
        &'a self,
        researcher_id: &str,
    ) -> impl Iterator<Item = &'a PublicationRecord> + 'a {
        self.authored
            .get(researcher_id)
            .map(Vec::as_slice)
            .unwrap_or_default()
            .iter()
            .map(|&i| &self.publications[i])
    }

    /// Committee of the earliest-listed member author.
    pub fn committee_of_publication(&self, publication: &PublicationRecord) -> Result<Committee> {
        publication
            .member_ids()
            .find_map(|id| self.researcher(id))
            .map(|r| r.committee)
            .ok_or_else(|| Error::Unattributable(publication.pub_id.clone()))
    }

    /// Researcher counts per committee, for committees with at least one member.
    pub fn committee_sizes(&self) -> BTreeMap<Committee, usize> {
        let mut sizes = BTreeMap::new();
        for r in &self.researchers {
            *sizes.entry(r.committee).or_insert(0) += 1;
        }
        sizes
    }
}

fn dedup(publications: Vec<PublicationRecord>) -> (Vec<PublicationRecord>, Vec<MergeConflict>) {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut merged: Vec<PublicationRecord> = Vec::with_capacity(publications.len());
    let mut conflicts = Vec::new();

    for p in publications {
        let Some(&i) = index.get(&p.pub_id) else {
            index.insert(p.pub_id.clone(), merged.len());
            merged.push(p);
            continue;
        };
        let kept = &mut merged[i];
        let mut conflict = |field| {
            conflicts.push(MergeConflict {
                pub_id: p.pub_id.clone(),
                field,
            })
        };
        if kept.year != p.year {
            conflict("year");
        }
        if kept.authors != p.authors {
            conflict("authors");
        }
        if kept.author_count != p.author_count {
            conflict("author_count");
        }
        if kept.doc_type != p.doc_type {
            conflict("doc_type");
        }
        if kept.language != p.language {
            conflict("language");
        }
        if kept.impact_factor != p.impact_factor {
            conflict("impact_factor");
        }

        // descriptive fields follow the copy with the larger citation counts
        let better = (p.independent_citations, p.wos_citations)
            > (kept.independent_citations, kept.wos_citations);
        let independent_citations = kept.independent_citations.max(p.independent_citations);
        let wos_citations = kept.wos_citations.max(p.wos_citations);
        let wos_indexed = kept.wos_indexed || p.wos_indexed;
        let scopus_indexed = kept.scopus_indexed || p.scopus_indexed;
        if better {
            *kept = p;
        }
        kept.independent_citations = independent_citations;
        kept.wos_citations = wos_citations;
        kept.wos_indexed = wos_indexed;
        kept.scopus_indexed = scopus_indexed;
    }
    (merged, conflicts)
}
