//! Corpus files: a researcher CSV and a publication JSON Lines file.
//!
//! Researcher file header: `researcher_id,name,committee,degree_year`
//! (`degree_year` may be empty). Each publication line is one JSON object
//! carrying exactly the [`PublicationRecord`] fields, with `authors` given as
//! `m:<researcher_id>` or `x:<external name>` strings.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::de::DeserializeOwned;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::model::{Corpus, PublicationRecord, ResearcherProfile, YearWindow};

const RESEARCHER_HEADER: [&str; 4] = ["researcher_id", "name", "committee", "degree_year"];

const PUBLICATION_FIELDS: [&str; 11] = [
    "pub_id",
    "year",
    "authors",
    "author_count",
    "doc_type",
    "language",
    "wos_indexed",
    "scopus_indexed",
    "impact_factor",
    "independent_citations",
    "wos_citations",
];

/// Loads, deduplicates and windows a corpus.
pub fn load_corpus(
    researcher_file: impl AsRef<Path>,
    publication_file: impl AsRef<Path>,
    window: YearWindow,
) -> Result<Corpus> {
    let researchers = read_researchers(researcher_file)?;
    let publications = read_publications(publication_file)?;
    Corpus::build(researchers, publications, window)
}

pub fn read_researchers(path: impl AsRef<Path>) -> Result<Vec<ResearcherProfile>> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(file);

    let malformed = |line: usize, field: &str, message: String| Error::Malformed {
        file: path.to_path_buf(),
        line,
        field: field.to_string(),
        message,
    };

    let headers = reader
        .headers()
        .map_err(|e| malformed(1, "<header>", e.to_string()))?
        .clone();
    if headers.iter().ne(RESEARCHER_HEADER) {
        return Err(malformed(
            1,
            "<header>",
            format!("expected `{}`", RESEARCHER_HEADER.join(",")),
        ));
    }

    let mut out = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            malformed(line, "<record>", e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);

        let researcher_id = record[0].trim().to_string();
        if researcher_id.is_empty() {
            return Err(malformed(line, "researcher_id", "empty".into()));
        }
        let committee = record[2]
            .trim()
            .parse()
            .map_err(|e: Error| malformed(line, "committee", e.to_string()))?;
        let degree_year = match record[3].trim() {
            "" => None,
            y => Some(
                y.parse()
                    .map_err(|_| malformed(line, "degree_year", format!("not a year: `{y}`")))?,
            ),
        };
        out.push(ResearcherProfile {
            researcher_id,
            name: record[1].to_string(),
            committee,
            degree_year,
        });
    }
    Ok(out)
}

pub fn read_publications(path: impl AsRef<Path>) -> Result<Vec<PublicationRecord>> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line_no = i + 1;
        let line = line.map_err(|e| Error::io(path, e))?;
        if line.trim().is_empty() {
            continue;
        }
        let record = parse_publication(&line).map_err(|(field, message)| Error::Malformed {
            file: path.to_path_buf(),
            line: line_no,
            field,
            message,
        })?;
        out.push(record);
    }
    Ok(out)
}

/// Parses one JSON Lines record, reporting the offending field on failure.
fn parse_publication(line: &str) -> std::result::Result<PublicationRecord, (String, String)> {
    let value: Value = serde_json::from_str(line).map_err(|e| ("<json>".into(), e.to_string()))?;
    let Value::Object(obj) = value else {
        return Err(("<json>".into(), "expected a JSON object".into()));
    };
    if let Some(unknown) = obj
        .keys()
        .find(|k| !PUBLICATION_FIELDS.contains(&k.as_str()))
    {
        return Err((unknown.clone(), "unknown field".into()));
    }

    Ok(PublicationRecord {
        pub_id: field(&obj, "pub_id")?,
        year: field(&obj, "year")?,
        authors: field(&obj, "authors")?,
        author_count: field(&obj, "author_count")?,
        doc_type: field(&obj, "doc_type")?,
        language: field(&obj, "language")?,
        wos_indexed: field(&obj, "wos_indexed")?,
        scopus_indexed: field(&obj, "scopus_indexed")?,
        impact_factor: optional_field(&obj, "impact_factor")?,
        independent_citations: field(&obj, "independent_citations")?,
        wos_citations: field(&obj, "wos_citations")?,
    })
}

fn field<T: DeserializeOwned>(
    obj: &Map<String, Value>,
    name: &str,
) -> std::result::Result<T, (String, String)> {
    let value = obj
        .get(name)
        .ok_or_else(|| (name.to_string(), "missing".to_string()))?;
    T::deserialize(value).map_err(|e| (name.to_string(), e.to_string()))
}

fn optional_field<T: DeserializeOwned>(
    obj: &Map<String, Value>,
    name: &str,
) -> std::result::Result<Option<T>, (String, String)> {
    match obj.get(name) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => T::deserialize(v)
            .map(Some)
            .map_err(|e| (name.to_string(), e.to_string())),
    }
}

/// Writes a corpus back out in the input formats.
pub fn write_corpus(
    corpus: &Corpus,
    researcher_file: impl AsRef<Path>,
    publication_file: impl AsRef<Path>,
) -> Result<()> {
    let path = researcher_file.as_ref();
    let mut writer = csv::Writer::from_path(path).map_err(|e| csv_io(path, e))?;
    writer
        .write_record(RESEARCHER_HEADER)
        .map_err(|e| csv_io(path, e))?;
    for r in corpus.researchers() {
        let degree = r.degree_year.map(|y| y.to_string()).unwrap_or_default();
        writer
            .write_record([
                r.researcher_id.as_str(),
                r.name.as_str(),
                r.committee.as_str(),
                degree.as_str(),
            ])
            .map_err(|e| csv_io(path, e))?;
    }
    writer.flush().map_err(|e| Error::io(path, e))?;

    let path = publication_file.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    for p in corpus.publications() {
        let line = serde_json::to_string(p).expect("publication records serialize");
        writeln!(out, "{line}").map_err(|e| Error::io(path, e))?;
    }
    out.flush().map_err(|e| Error::io(path, e))
}

fn csv_io(path: &Path, e: csv::Error) -> Error {
    Error::io(path, std::io::Error::other(e))
}
