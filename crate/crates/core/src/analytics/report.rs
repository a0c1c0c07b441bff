//! Plain ASCII tables and JSON documents for analysis results.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{
    per_principle_stats, severity_crosstab, AnalyticsError, CrossTab, PrincipleSet, SusSummary, UsabilityProblem,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrincipleReport {
    pub set: PrincipleSet,
    pub principle_id: String,
    pub name: String,
    pub count: usize,
    pub average_severity: f64,
    pub label: String,
}

/// Everything derived from one problem list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemsReport {
    pub crosstab: CrossTab,
    pub principles: Vec<PrincipleReport>,
}

impl ProblemsReport {
    pub fn new(problems: &[UsabilityProblem]) -> Result<Self, AnalyticsError> {
        let principles = per_principle_stats(problems)?
            .into_iter()
            .map(|s| PrincipleReport {
                name: super::resolve(s.set, &s.principle_id).map_or_else(String::new, |p| p.name.to_string()),
                average_severity: s.average(),
                label: s.label().to_string(),
                count: s.count,
                set: s.set,
                principle_id: s.principle_id,
            })
            .collect();
        Ok(Self {
            crosstab: severity_crosstab(problems),
            principles,
        })
    }
}

pub fn render_sus_table(s: &SusSummary) -> String {
    let mut out = String::from("response  score\n");
    for (i, score) in s.scores.iter().enumerate() {
        let _ = writeln!(out, "{:>8}  {score:>5.1}", i + 1);
    }
    let _ = writeln!(out, "mean      {:>5.2}", s.mean);
    let _ = writeln!(out, "rating    {}", s.rating);
    out
}

fn pct(v: f64) -> String {
    format!("{v:.2}")
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, cell)| {
                if c == 0 || cell.parse::<f64>().is_err() {
                    format!("{cell:<w$}", w = widths[c])
                } else {
                    format!("{cell:>w$}", w = widths[c])
                }
            })
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn render_problems_table(r: &ProblemsReport) -> String {
    let t = &r.crosstab;
    let s = |v: &str| v.to_string();
    let mut rows = vec![vec![
        s("severity"),
        s("NE"),
        s("WCAG"),
        s("total"),
        s("NE %sev"),
        s("WCAG %sev"),
        s("NE %set"),
        s("WCAG %set"),
        s("%total"),
    ]];
    for row in &t.rows {
        rows.push(vec![
            format!("SR{}", row.severity),
            row.counts.ne.to_string(),
            row.counts.wcag.to_string(),
            row.total.to_string(),
            pct(row.pct_within_severity.ne),
            pct(row.pct_within_severity.wcag),
            pct(row.pct_within_set.ne),
            pct(row.pct_within_set.wcag),
            pct(row.pct_of_total),
        ]);
    }
    let (total_pct, set_pct) = if t.totals.total > 0 {
        (pct(100.0), pct(100.0))
    } else {
        (pct(0.0), pct(0.0))
    };
    rows.push(vec![
        s("total"),
        t.totals.counts.ne.to_string(),
        t.totals.counts.wcag.to_string(),
        t.totals.total.to_string(),
        pct(t.totals.pct_covered.ne),
        pct(t.totals.pct_covered.wcag),
        if t.totals.counts.ne > 0 {
            set_pct.clone()
        } else {
            pct(0.0)
        },
        if t.totals.counts.wcag > 0 { set_pct } else { pct(0.0) },
        total_pct,
    ]);
    let mut out = table(&rows);
    let _ = writeln!(
        out,
        "% covered: NE {}, WCAG {}",
        pct(t.totals.pct_covered.ne),
        pct(t.totals.pct_covered.wcag)
    );
    if t.excluded > 0 {
        let _ = writeln!(out, "severity 0 entries excluded: {}", t.excluded);
    }

    out.push('\n');
    let mut rows = vec![vec![
        s("set"),
        s("principle"),
        s("count"),
        s("avg severity"),
        s("label"),
    ]];
    for p in &r.principles {
        rows.push(vec![
            p.set.to_string(),
            p.principle_id.clone(),
            p.count.to_string(),
            pct(p.average_severity),
            p.label.clone(),
        ]);
    }
    out.push_str(&table(&rows));
    out
}
