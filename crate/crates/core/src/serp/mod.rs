//! Acquisition of search-engine result pages.
//!
//! Results come from one of three places: a fixture file on disk (the
//! deterministic path everything else is tested against), an HTML page run
//! through configurable [`ExtractionRules`], or an opt-in live HTTP fetch.
//! Whatever the source, the outcome is a [`ResultSet`] whose ranks are
//! exactly `1..=n` in order.

mod extract;
mod fetch;
mod fixture;

use std::fmt;
use std::path::PathBuf;

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};

pub use extract::{parse_serp, ExtractionRules, ExtractionWarning, ParsedSerp};
pub use fetch::{fetch, search_url, FetchConfig};
pub use fixture::{fixture_json, load_fixture, parse_fixture, write_fixture};

/// Identifier of a result within its [`ResultSet`]; equal to its 1-based rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DocId(pub u32);

impl fmt::Display for DocId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r{}", self.0)
    }
}

/// One organic result scraped from a results page.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub rank: u32,
    pub title: String,
    pub url: String,
    #[serde(default)]
    pub snippet: String,
}

impl SearchResult {
    pub fn doc_id(&self) -> DocId {
        DocId(self.rank)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Fixture,
    Live,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Fixture => "fixture",
            Source::Live => "live",
        })
    }
}

/// Ordered, query-scoped collection of results.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultSet {
    pub query: String,
    pub results: Vec<SearchResult>,
    pub source: Source,
    pub fetched_at: DateTime<Utc>,
}

impl ResultSet {
    /// Builds a result set, checking the query and every result invariant.
    pub fn new(
        query: impl Into<String>,
        results: Vec<SearchResult>,
        source: Source,
        fetched_at: DateTime<Utc>,
    ) -> Result<Self, IngestError> {
        let query = query.into();
        if query.trim().is_empty() {
            return Err(IngestError::EmptyQuery);
        }
        validate_results(&results)?;
        Ok(Self {
            query,
            results,
            source,
            fetched_at,
        })
    }

    pub fn len(&self) -> usize {
        self.results.len()
    }

    pub fn is_empty(&self) -> bool {
        self.results.is_empty()
    }

    pub fn get(&self, id: DocId) -> Option<&SearchResult> {
        // ranks are 1..=n, so the index is rank - 1
        let idx = (id.0 as usize).checked_sub(1)?;
        self.results.get(idx).filter(|r| r.rank == id.0)
    }
}

fn validate_results(results: &[SearchResult]) -> Result<(), IngestError> {
    let mut seen = std::collections::HashSet::new();
    for (index, r) in results.iter().enumerate() {
        if r.rank == 0 {
            return Err(IngestError::schema(index, "rank must be >= 1"));
        }
        if !seen.insert(r.rank) {
            return Err(IngestError::schema(
                index,
                format!("rank collision: rank {} appears more than once", r.rank),
            ));
        }
        if r.rank as usize != index + 1 {
            return Err(IngestError::schema(
                index,
                format!("bad rank sequence: expected rank {}, found {}", index + 1, r.rank),
            ));
        }
        if r.title.trim().is_empty() {
            return Err(IngestError::schema(index, "title is empty"));
        }
        if !is_absolute_url(&r.url) {
            return Err(IngestError::schema(
                index,
                format!("url {:?} is not an absolute URL", r.url),
            ));
        }
    }
    Ok(())
}

pub(crate) fn is_absolute_url(s: &str) -> bool {
    url::Url::parse(s.trim()).is_ok_and(|u| u.has_host() || u.scheme() == "file")
}

#[derive(Debug, thiserror::Error)]
pub enum IngestError {
    #[error("fixture not found: {}", .0.display())]
    FileNotFound(PathBuf),
    #[error("i/o error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("schema error{}: {message}", record_suffix(*.record))]
    Schema { record: Option<usize>, message: String },
    #[error("query is empty")]
    EmptyQuery,
    #[error("invalid extraction rules: {0}")]
    InvalidRules(String),
    #[error("extraction error: {0}")]
    Extraction(String),
    #[error("live fetching is disabled")]
    Disabled,
    #[error("network error: {0}")]
    Network(String),
    #[error("HTTP status {status} from {url}")]
    HttpStatus { status: u16, url: String },
}

fn record_suffix(record: Option<usize>) -> String {
    record.map_or_else(String::new, |i| format!(" in record {i}"))
}

impl IngestError {
    pub(crate) fn schema(record: usize, message: impl Into<String>) -> Self {
        IngestError::Schema {
            record: Some(record),
            message: message.into(),
        }
    }
}

#[cfg(test)]
pub(crate) fn result(rank: u32, title: &str, snippet: &str) -> SearchResult {
    SearchResult {
        rank,
        title: title.to_string(),
        url: format!("https://example.org/{rank}"),
        snippet: snippet.to_string(),
    }
}
