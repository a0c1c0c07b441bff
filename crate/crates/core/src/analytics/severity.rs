//! Problem severity cross-tabulation and per-principle statistics.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::catalog::{resolve, PrincipleSet};
use super::AnalyticsError;

/// Severity rating 0 (not a problem) to 4 (catastrophe).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Severity(u8);

impl Severity {
    pub const MAX: u8 = 4;

    pub fn new(level: u8) -> Result<Self, AnalyticsError> {
        if level > Self::MAX {
            return Err(AnalyticsError::Validation(format!(
                "severity {level} is out of range 0..=4"
            )));
        }
        Ok(Self(level))
    }

    pub fn level(self) -> u8 {
        self.0
    }

    pub fn label(self) -> &'static str {
        severity_label(self.0)
    }
}

impl TryFrom<u8> for Severity {
    type Error = AnalyticsError;

    fn try_from(v: u8) -> Result<Self, AnalyticsError> {
        Self::new(v)
    }
}

impl From<Severity> for u8 {
    fn from(s: Severity) -> u8 {
        s.0
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SR{}", self.0)
    }
}

pub fn severity_label(level: u8) -> &'static str {
    match level {
        0 => "not a problem",
        1 => "cosmetic",
        2 => "minor",
        3 => "major",
        _ => "catastrophe",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UsabilityProblem {
    pub set: PrincipleSet,
    pub principle_id: String,
    pub severity: Severity,
    #[serde(default)]
    pub description: String,
    #[serde(default)]
    pub recommendation: String,
}

impl UsabilityProblem {
    /// Builds a problem, resolving `principle` to its catalog key.
    pub fn new(
        set: PrincipleSet,
        principle: &str,
        severity: u8,
        description: impl Into<String>,
        recommendation: impl Into<String>,
    ) -> Result<Self, AnalyticsError> {
        let p = resolve(set, principle).ok_or_else(|| AnalyticsError::UnknownPrinciple {
            set,
            id: principle.to_string(),
        })?;
        Ok(Self {
            set,
            principle_id: p.id.to_string(),
            severity: Severity::new(severity)?,
            description: description.into(),
            recommendation: recommendation.into(),
        })
    }
}

/// A value per principle set.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct PerSet<T> {
    #[serde(rename = "NE")]
    pub ne: T,
    #[serde(rename = "WCAG")]
    pub wcag: T,
}

impl<T: Copy> PerSet<T> {
    pub fn get(&self, set: PrincipleSet) -> T {
        match set {
            PrincipleSet::Ne => self.ne,
            PrincipleSet::Wcag => self.wcag,
        }
    }

    fn get_mut(&mut self, set: PrincipleSet) -> &mut T {
        match set {
            PrincipleSet::Ne => &mut self.ne,
            PrincipleSet::Wcag => &mut self.wcag,
        }
    }

    fn map<U>(&self, f: impl Fn(T) -> U) -> PerSet<U> {
        PerSet {
            ne: f(self.ne),
            wcag: f(self.wcag),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossTabRow {
    pub severity: u8,
    pub counts: PerSet<usize>,
    pub total: usize,
    /// Share of this severity's problems found in each set.
    pub pct_within_severity: PerSet<f64>,
    /// Share of each set's problems that have this severity.
    pub pct_within_set: PerSet<f64>,
    pub pct_of_total: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossTabTotals {
    pub counts: PerSet<usize>,
    pub total: usize,
    /// Each set's share of all rated problems.
    pub pct_covered: PerSet<f64>,
}

/// Severity by set table. Severity 0 entries are counted in `excluded`
/// and nowhere else.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossTab {
    /// Severity 4 first.
    pub rows: Vec<CrossTabRow>,
    pub totals: CrossTabTotals,
    pub excluded: usize,
}

/// `n / d` as a percentage rounded half-up to hundredths; 0 when `d == 0`.
pub fn percent(n: usize, d: usize) -> f64 {
    if d == 0 {
        return 0.0;
    }
    let (n, d) = (n as u128, d as u128);
    let hundredths = (n * 20_000 + d) / (2 * d);
    hundredths as f64 / 100.0
}

pub fn severity_crosstab(problems: &[UsabilityProblem]) -> CrossTab {
    let mut counts = [PerSet::<usize>::default(); 5];
    let mut excluded = 0;
    for p in problems {
        match p.severity.level() {
            0 => excluded += 1,
            l => *counts[l as usize].get_mut(p.set) += 1,
        }
    }
    let set_totals = PerSet {
        ne: counts.iter().map(|c| c.ne).sum::<usize>(),
        wcag: counts.iter().map(|c| c.wcag).sum::<usize>(),
    };
    let grand = set_totals.ne + set_totals.wcag;

    let rows = (1..=Severity::MAX)
        .rev()
        .map(|level| {
            let c = counts[level as usize];
            let total = c.ne + c.wcag;
            CrossTabRow {
                severity: level,
                counts: c,
                total,
                pct_within_severity: c.map(|n| percent(n, total)),
                pct_within_set: PerSet {
                    ne: percent(c.ne, set_totals.ne),
                    wcag: percent(c.wcag, set_totals.wcag),
                },
                pct_of_total: percent(total, grand),
            }
        })
        .collect();

    CrossTab {
        rows,
        totals: CrossTabTotals {
            counts: set_totals,
            total: grand,
            pct_covered: set_totals.map(|n| percent(n, grand)),
        },
        excluded,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrincipleStats {
    pub set: PrincipleSet,
    pub principle_id: String,
    pub count: usize,
    pub severity_sum: u32,
}

impl PrincipleStats {
    /// Mean severity in hundredths, rounded half-up.
    pub fn average_hundredths(&self) -> u64 {
        let (s, c) = (u64::from(self.severity_sum), self.count as u64);
        (s * 200 + c) / (2 * c)
    }

    pub fn average(&self) -> f64 {
        self.average_hundredths() as f64 / 100.0
    }

    /// The mean rendered to two decimals.
    pub fn average_text(&self) -> String {
        let h = self.average_hundredths();
        format!("{}.{:02}", h / 100, h % 100)
    }

    /// Mean rounded half-up to a whole severity level.
    pub fn rounded_level(&self) -> u8 {
        let (s, c) = (u64::from(self.severity_sum), self.count as u64);
        ((2 * s + c) / (2 * c)) as u8
    }

    pub fn label(&self) -> &'static str {
        severity_label(self.rounded_level())
    }
}

/// Problem counts and mean severity per principle, ordered by set and then
/// by catalog position. Principles with no problems are left out.
pub fn per_principle_stats(problems: &[UsabilityProblem]) -> Result<Vec<PrincipleStats>, AnalyticsError> {
    let mut stats: Vec<(usize, PrincipleStats)> = Vec::new();
    for p in problems {
        let entry = resolve(p.set, &p.principle_id).ok_or_else(|| AnalyticsError::UnknownPrinciple {
            set: p.set,
            id: p.principle_id.clone(),
        })?;
        let pos = p
            .set
            .entries()
            .iter()
            .position(|e| e.id == entry.id)
            .unwrap_or(usize::MAX);
        let key = (p.set, pos);
        match stats.iter_mut().find(|(i, s)| (s.set, *i) == key) {
            Some((_, s)) => {
                s.count += 1;
                s.severity_sum += u32::from(p.severity.level());
            }
            None => stats.push((
                pos,
                PrincipleStats {
                    set: p.set,
                    principle_id: entry.id.to_string(),
                    count: 1,
                    severity_sum: u32::from(p.severity.level()),
                },
            )),
        }
    }
    stats.sort_by_key(|(pos, s)| (s.set, *pos));
    Ok(stats.into_iter().map(|(_, s)| s).collect())
}
