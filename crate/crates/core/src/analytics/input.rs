//! CSV and JSON readers for questionnaire responses and problem lists.
//!
//! SUS CSV: ten integer columns `r1..r10` per row. Problems CSV: `set`,
//! `principle_id`, `severity`, `description`, `recommendation`. A header row
//! is optional in both. JSON inputs are arrays: of ten-integer arrays for
//! SUS, of problem objects for problems.

use std::path::Path;

use serde::Deserialize;

use super::{AnalyticsError, PrincipleSet, SusResponse, UsabilityProblem};

fn read(path: &Path) -> Result<String, AnalyticsError> {
    std::fs::read_to_string(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => AnalyticsError::FileNotFound(path.to_path_buf()),
        _ => AnalyticsError::Io {
            path: path.to_path_buf(),
            source: e,
        },
    })
}

fn is_json(path: &Path, text: &str) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json")) || text.trim_start().starts_with('[')
}

pub fn load_sus(path: &Path) -> Result<Vec<SusResponse>, AnalyticsError> {
    let text = read(path)?;
    if is_json(path, &text) {
        parse_sus_json(&text)
    } else {
        parse_sus_csv(&text)
    }
}

pub fn load_problems(path: &Path) -> Result<Vec<UsabilityProblem>, AnalyticsError> {
    let text = read(path)?;
    if is_json(path, &text) {
        parse_problems_json(&text)
    } else {
        parse_problems_csv(&text)
    }
}

/// Records with their 1-based line numbers, header row dropped when its
/// first field equals `header` (case-insensitive).
fn records(text: &str, header: &str) -> Result<Vec<(usize, csv::StringRecord)>, AnalyticsError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut out = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| AnalyticsError::Row {
            row: e.position().map_or(i + 1, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = rec.position().map_or(i + 1, |p| p.line() as usize);
        if i == 0 && rec.get(0).is_some_and(|f| f.eq_ignore_ascii_case(header)) {
            continue;
        }
        out.push((line, rec));
    }
    Ok(out)
}

pub fn parse_sus_csv(text: &str) -> Result<Vec<SusResponse>, AnalyticsError> {
    records(text, "r1")?
        .into_iter()
        .map(|(row, rec)| {
            let err = |message: String| AnalyticsError::Row { row, message };
            if rec.len() != 10 {
                return Err(err(format!("expected 10 ratings, found {}", rec.len())));
            }
            let mut ratings = [0u8; 10];
            for (slot, field) in ratings.iter_mut().zip(rec.iter()) {
                *slot = field
                    .parse()
                    .map_err(|_| err(format!("rating {field:?} is not an integer")))?;
            }
            SusResponse::new(ratings).map_err(|e| err(e.to_string()))
        })
        .collect()
}

pub fn parse_sus_json(text: &str) -> Result<Vec<SusResponse>, AnalyticsError> {
    let rows: Vec<serde_json::Value> = serde_json::from_str(text).map_err(|e| AnalyticsError::Json(e.to_string()))?;
    rows.into_iter()
        .enumerate()
        .map(|(i, v)| {
            serde_json::from_value::<SusResponse>(v).map_err(|e| AnalyticsError::Row {
                row: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}

pub fn parse_problems_csv(text: &str) -> Result<Vec<UsabilityProblem>, AnalyticsError> {
    records(text, "set")?
        .into_iter()
        .map(|(row, rec)| {
            let err = |message: String| AnalyticsError::Row { row, message };
            if !(3..=5).contains(&rec.len()) {
                return Err(err(format!(
                    "expected set, principle_id, severity, description, recommendation; found {} fields",
                    rec.len()
                )));
            }
            let set: PrincipleSet = rec[0].parse().map_err(err)?;
            let severity: u8 = rec[2]
                .parse()
                .map_err(|_| err(format!("severity {:?} is not an integer", &rec[2])))?;
            UsabilityProblem::new(
                set,
                &rec[1],
                severity,
                rec.get(3).unwrap_or(""),
                rec.get(4).unwrap_or(""),
            )
            .map_err(|e| err(e.to_string()))
        })
        .collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    set: String,
    principle_id: String,
    severity: u8,
    #[serde(default)]
    description: String,
    #[serde(default)]
    recommendation: String,
}

pub fn parse_problems_json(text: &str) -> Result<Vec<UsabilityProblem>, AnalyticsError> {
    let rows: Vec<serde_json::Value> = serde_json::from_str(text).map_err(|e| AnalyticsError::Json(e.to_string()))?;
    rows.into_iter()
        .enumerate()
        .map(|(i, v)| {
            let err = |message: String| AnalyticsError::Row { row: i + 1, message };
            let raw: RawProblem = serde_json::from_value(v).map_err(|e| err(e.to_string()))?;
            let set: PrincipleSet = raw.set.parse().map_err(err)?;
            UsabilityProblem::new(
                set,
                &raw.principle_id,
                raw.severity,
                raw.description,
                raw.recommendation,
            )
            .map_err(|e| err(e.to_string()))
        })
        .collect()
}
