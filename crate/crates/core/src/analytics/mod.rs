//! Usability study arithmetic: SUS scoring, severity cross-tabs and
//! per-principle summaries, with the catalogs problems are filed against.

pub mod catalog;
mod input;
mod report;
mod severity;
mod sus;

use std::path::PathBuf;

pub use catalog::{resolve, Principle, PrincipleSet};
pub use input::{load_problems, load_sus, parse_problems_csv, parse_problems_json, parse_sus_csv, parse_sus_json};
pub use report::{render_problems_table, render_sus_table, PrincipleReport, ProblemsReport};
pub use severity::{
    per_principle_stats, percent, severity_crosstab, severity_label, CrossTab, CrossTabRow, CrossTabTotals, PerSet,
    PrincipleStats, Severity, UsabilityProblem,
};
pub use sus::{sus_score, sus_summary, SusRating, SusResponse, SusSummary, AVERAGE_THRESHOLD, GOOD_THRESHOLD};

#[derive(Debug, thiserror::Error)]
pub enum AnalyticsError {
    #[error("validation error: {0}")]
    Validation(String),
    #[error("no responses to summarise")]
    EmptyInput,
    #[error("unknown {set} principle {id:?}")]
    UnknownPrinciple { set: PrincipleSet, id: String },
    #[error("row {row}: {message}")]
    Row { row: usize, message: String },
    #[error("malformed JSON input: {0}")]
    Json(String),
    #[error("input file not found: {}", .0.display())]
    FileNotFound(PathBuf),
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
