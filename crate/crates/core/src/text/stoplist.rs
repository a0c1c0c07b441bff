use std::collections::HashSet;

use super::TextError;

const EN_V1: &str = include_str!("../../data/stopwords-en-v1.txt");

/// Identifier of the stop list embedded in the crate.
pub const DEFAULT_STOPLIST: &str = "en-v1";

/// A named set of lowercase stop-words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StopList {
    id: String,
    words: HashSet<String>,
}

impl StopList {
    /// Looks up one of the embedded lists.
    pub fn embedded(id: &str) -> Result<Self, TextError> {
        match id {
            DEFAULT_STOPLIST => Self::parse(id, EN_V1),
            other => Err(TextError::UnknownStopList(other.to_string())),
        }
    }

    /// Parses the stop-list file format: one word per line, `#` starts a comment.
    pub fn parse(id: &str, text: &str) -> Result<Self, TextError> {
        let mut words = HashSet::new();
        for (lineno, line) in text.lines().enumerate() {
            let word = line.split('#').next().unwrap_or("").trim();
            if word.is_empty() {
                continue;
            }
            if word.chars().any(char::is_uppercase) {
                return Err(TextError::StopListFormat {
                    line: lineno + 1,
                    message: format!("{word:?} is not lowercase"),
                });
            }
            words.insert(word.to_string());
        }
        Ok(Self {
            id: id.to_string(),
            words,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

impl Default for StopList {
    fn default() -> Self {
        Self::embedded(DEFAULT_STOPLIST).expect("embedded stop list")
    }
}
