//! Turning result text into index terms: tokenize, case-fold, drop
//! stop-words, stem, dedupe.

mod porter;
mod stoplist;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::serp::{DocId, ResultSet, SearchResult};

pub use porter::porter_stem;
pub use stoplist::{StopList, DEFAULT_STOPLIST};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TextError {
    #[error("cannot stem an empty token")]
    EmptyToken,
    #[error("unknown stop list {0:?}")]
    UnknownStopList(String),
    #[error("stop list line {line}: {message}")]
    StopListFormat { line: usize, message: String },
    #[error("invalid pipeline config: {0}")]
    InvalidConfig(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TextField {
    Title,
    Snippet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct PipelineConfig {
    pub min_token_len: usize,
    pub fields_used: Vec<TextField>,
    pub drop_query_stems: bool,
    pub stoplist_id: String,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            min_token_len: 2,
            fields_used: vec![TextField::Title, TextField::Snippet],
            drop_query_stems: true,
            stoplist_id: DEFAULT_STOPLIST.to_string(),
        }
    }
}

impl PipelineConfig {
    pub fn validate(&self) -> Result<(), TextError> {
        if self.min_token_len == 0 {
            return Err(TextError::InvalidConfig("min_token_len must be >= 1".into()));
        }
        if self.fields_used.is_empty() {
            return Err(TextError::InvalidConfig("fields_used must not be empty".into()));
        }
        Ok(())
    }
}

/// Stems extracted from one result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermSet {
    pub doc_id: DocId,
    pub stems: BTreeSet<String>,
}

/// Splits on every maximal run of non-alphanumeric characters and lowercases.
pub fn tokenize(text: &str) -> Vec<String> {
    text.split(|c: char| !c.is_alphanumeric())
        .filter(|t| !t.is_empty())
        .map(str::to_lowercase)
        .collect()
}

/// Drops stop-words and tokens shorter than `min_len` characters.
pub fn remove_stopwords(tokens: Vec<String>, stoplist: &StopList, min_len: usize) -> Vec<String> {
    tokens
        .into_iter()
        .filter(|t| t.chars().count() >= min_len && !stoplist.contains(t))
        .collect()
}

pub fn stem(token: &str) -> Result<String, TextError> {
    if token.is_empty() {
        return Err(TextError::EmptyToken);
    }
    Ok(porter_stem(token))
}

fn stems_of(text: &str, stoplist: &StopList, min_len: usize) -> BTreeSet<String> {
    remove_stopwords(tokenize(text), stoplist, min_len)
        .iter()
        .map(|t| porter_stem(t))
        // a stem can come out shorter than its token, or land on a stop-word
        .filter(|s| s.chars().count() >= min_len && !stoplist.contains(s))
        .collect()
}

pub fn extract_terms(result: &SearchResult, query: &str, config: &PipelineConfig, stoplist: &StopList) -> TermSet {
    let mut text = String::new();
    for field in &config.fields_used {
        let part = match field {
            TextField::Title => &result.title,
            TextField::Snippet => &result.snippet,
        };
        text.push_str(part);
        text.push(' ');
    }
    let mut stems = stems_of(&text, stoplist, config.min_token_len);
    if config.drop_query_stems {
        for t in tokenize(query) {
            stems.remove(&porter_stem(&t));
        }
    }
    TermSet {
        doc_id: result.doc_id(),
        stems,
    }
}

/// Runs [`extract_terms`] over every result, in rank order.
pub fn extract_all(rs: &ResultSet, config: &PipelineConfig, stoplist: &StopList) -> Vec<TermSet> {
    rs.results
        .iter()
        .map(|r| extract_terms(r, &rs.query, config, stoplist))
        .collect()
}
