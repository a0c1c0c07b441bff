use std::fs;
use std::io::ErrorKind;
use std::path::Path;

use chrono::{DateTime, Utc};
use serde_json::{json, Map, Value};

use super::{validate_results, IngestError, ResultSet, SearchResult, Source};

/// Reads a fixture file into a [`ResultSet`] with `source = fixture`.
///
/// The optional `fetched_at` field is honoured when present so that a
/// written fixture reloads to an identical value; otherwise the load time
/// is used.
pub fn load_fixture(path: impl AsRef<Path>) -> Result<ResultSet, IngestError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| match source.kind() {
        ErrorKind::NotFound => IngestError::FileNotFound(path.to_path_buf()),
        _ => IngestError::Io {
            path: path.to_path_buf(),
            source,
        },
    })?;
    parse_fixture(&text)
}

pub fn parse_fixture(text: &str) -> Result<ResultSet, IngestError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| IngestError::Schema {
        record: None,
        message: format!("invalid JSON: {e}"),
    })?;
    let root = doc.as_object().ok_or_else(|| top_level("document is not an object"))?;

    let query = root
        .get("query")
        .and_then(Value::as_str)
        .ok_or_else(|| top_level("missing string field \"query\""))?;
    let fetched_at = match root.get("fetched_at") {
        None | Some(Value::Null) => Utc::now(),
        Some(v) => v
            .as_str()
            .and_then(|s| DateTime::parse_from_rfc3339(s).ok())
            .map(|d| d.with_timezone(&Utc))
            .ok_or_else(|| top_level("\"fetched_at\" is not an RFC 3339 timestamp"))?,
    };
    let records = root
        .get("results")
        .and_then(Value::as_array)
        .ok_or_else(|| top_level("missing array field \"results\""))?;

    let results = records
        .iter()
        .enumerate()
        .map(|(i, rec)| parse_record(i, rec))
        .collect::<Result<Vec<_>, _>>()?;
    validate_results(&results)?;

    if query.trim().is_empty() {
        return Err(IngestError::EmptyQuery);
    }
    Ok(ResultSet {
        query: query.to_string(),
        results,
        source: Source::Fixture,
        fetched_at,
    })
}

fn top_level(message: &str) -> IngestError {
    IngestError::Schema {
        record: None,
        message: message.to_string(),
    }
}

fn parse_record(index: usize, rec: &Value) -> Result<SearchResult, IngestError> {
    let obj = rec
        .as_object()
        .ok_or_else(|| IngestError::schema(index, "record is not an object"))?;
    let field = |name: &str| -> Result<String, IngestError> {
        obj.get(name)
            .and_then(Value::as_str)
            .map(str::to_string)
            .ok_or_else(|| IngestError::schema(index, format!("missing string field {name:?}")))
    };
    let rank = obj
        .get("rank")
        .and_then(Value::as_u64)
        .ok_or_else(|| IngestError::schema(index, "missing integer field \"rank\""))?;
    let rank = u32::try_from(rank).map_err(|_| IngestError::schema(index, format!("rank {rank} out of range")))?;
    Ok(SearchResult {
        rank,
        title: field("title")?,
        url: field("url")?,
        snippet: field("snippet")?,
    })
}

/// Serializes a result set in the fixture schema (plus `fetched_at`).
pub fn fixture_json(rs: &ResultSet) -> Value {
    let results: Vec<Value> = rs
        .results
        .iter()
        .map(|r| {
            json!({
                "rank": r.rank,
                "title": r.title,
                "url": r.url,
                "snippet": r.snippet,
            })
        })
        .collect();
    let mut root = Map::new();
    root.insert("query".into(), Value::String(rs.query.clone()));
    root.insert(
        "fetched_at".into(),
        Value::String(rs.fetched_at.to_rfc3339_opts(chrono::SecondsFormat::AutoSi, true)),
    );
    root.insert("results".into(), Value::Array(results));
    Value::Object(root)
}

pub fn write_fixture(rs: &ResultSet, path: impl AsRef<Path>) -> Result<(), IngestError> {
    let path = path.as_ref();
    let mut text = serde_json::to_string_pretty(&fixture_json(rs)).expect("fixture JSON");
    text.push('\n');
    fs::write(path, text).map_err(|source| IngestError::Io {
        path: path.to_path_buf(),
        source,
    })
}
