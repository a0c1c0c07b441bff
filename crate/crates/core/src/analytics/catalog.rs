//! Reference lists of the principles usability problems are filed against.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Which checklist a problem was reported against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PrincipleSet {
    /// Nielsen's ten usability heuristics.
    #[serde(rename = "NE")]
    Ne,
    /// WCAG 2.0 guidelines.
    #[serde(rename = "WCAG")]
    Wcag,
}

impl PrincipleSet {
    pub const ALL: [PrincipleSet; 2] = [PrincipleSet::Ne, PrincipleSet::Wcag];

    pub fn entries(self) -> &'static [Principle] {
        match self {
            PrincipleSet::Ne => NIELSEN,
            PrincipleSet::Wcag => WCAG,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PrincipleSet::Ne => "NE",
            PrincipleSet::Wcag => "WCAG",
        }
    }
}

impl fmt::Display for PrincipleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PrincipleSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_uppercase().as_str() {
            "NE" | "NIELSEN" => Ok(PrincipleSet::Ne),
            "WCAG" | "WCAG2" | "WCAG 2.0" => Ok(PrincipleSet::Wcag),
            other => Err(format!("unknown principle set {other:?} (expected NE or WCAG)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Principle {
    /// Catalog key.
    pub id: &'static str,
    pub name: &'static str,
    /// WCAG principle the guideline belongs to; empty for heuristics.
    pub group: &'static str,
}

const fn p(id: &'static str, name: &'static str, group: &'static str) -> Principle {
    Principle { id, name, group }
}

pub static NIELSEN: &[Principle] = &[
    p("visibility", "Visibility of system status", ""),
    p("match", "Match between system and the real world", ""),
    p("consistency", "Consistency and standards", ""),
    p("recognition", "Recognition rather than recall", ""),
    p("minimalist", "Aesthetic and minimalist design", ""),
    p("control", "User control and freedom", ""),
    p("error", "Error prevention", ""),
    p("flexibility", "Flexibility and efficiency of use", ""),
    p("recover", "Help users recognize, diagnose, and recover from errors", ""),
    p("documentation", "Help and documentation", ""),
];

pub static WCAG: &[Principle] = &[
    p("alternatives", "Text Alternatives", "perceivable"),
    p("media", "Time-based Media", "perceivable"),
    p("adaptable", "Adaptable", "perceivable"),
    p("distinguishable", "Distinguishable", "perceivable"),
    p("keyboard", "Keyboard Accessible", "operable"),
    p("enough-time", "Enough Time", "operable"),
    p("reactions", "Seizures and Physical Reactions", "operable"),
    p("navigable", "Navigable", "operable"),
    p("modalities", "Input Modalities", "operable"),
    p("readable", "Readable", "understandable"),
    p("predictable", "Predictable", "understandable"),
    p("input-assistance", "Input Assistance", "understandable"),
    p("compatible", "Compatible", "robust"),
];

// short forms seen in expert reports
const ALIASES: &[(PrincipleSet, &str, &str)] = &[
    (PrincipleSet::Wcag, "assistance", "input-assistance"),
    (PrincipleSet::Wcag, "time", "enough-time"),
    (PrincipleSet::Wcag, "seizures", "reactions"),
];

fn normalize(s: &str) -> String {
    s.trim()
        .to_lowercase()
        .split(|c: char| c.is_whitespace() || c == '_' || c == '-')
        .filter(|w| !w.is_empty())
        .collect::<Vec<_>>()
        .join("-")
}

/// Maps a key, full name or known short form to its catalog entry.
pub fn resolve(set: PrincipleSet, name: &str) -> Option<&'static Principle> {
    let key = normalize(name);
    let key = ALIASES
        .iter()
        .find(|(s, alias, _)| *s == set && *alias == key)
        .map_or(key.as_str(), |(_, _, id)| *id)
        .to_string();
    set.entries().iter().find(|p| p.id == key || normalize(p.name) == key)
}
