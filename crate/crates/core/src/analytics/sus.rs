//! System Usability Scale scoring.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::AnalyticsError;

/// Mean score at or above which usability is rated good.
pub const GOOD_THRESHOLD: f64 = 72.0;
/// Mean score at or above which usability is rated average.
pub const AVERAGE_THRESHOLD: f64 = 68.0;

/// Ten Likert ratings, item 1 first, each 1 (strongly disagree) to 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "[u8; 10]", into = "[u8; 10]")]
pub struct SusResponse([u8; 10]);

impl SusResponse {
    pub fn new(ratings: [u8; 10]) -> Result<Self, AnalyticsError> {
        if let Some((i, &r)) = ratings.iter().enumerate().find(|(_, r)| !(1..=5).contains(*r)) {
            return Err(AnalyticsError::Validation(format!(
                "item r{} has rating {r}; ratings must be 1..=5",
                i + 1
            )));
        }
        Ok(Self(ratings))
    }

    pub fn ratings(&self) -> [u8; 10] {
        self.0
    }

    /// Sum of item contributions before the 2.5 scale factor, 0..=40.
    pub fn raw(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &r)| {
                let r = u32::from(r);
                // items 1,3,5,7,9 are positively worded
                if i % 2 == 0 {
                    r - 1
                } else {
                    5 - r
                }
            })
            .sum()
    }

    pub fn score(&self) -> f64 {
        f64::from(self.raw()) * 2.5
    }
}

impl TryFrom<[u8; 10]> for SusResponse {
    type Error = AnalyticsError;

    fn try_from(r: [u8; 10]) -> Result<Self, AnalyticsError> {
        Self::new(r)
    }
}

impl From<SusResponse> for [u8; 10] {
    fn from(r: SusResponse) -> Self {
        r.0
    }
}

pub fn sus_score(response: &SusResponse) -> f64 {
    response.score()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SusRating {
    #[serde(rename = "good")]
    Good,
    #[serde(rename = "average")]
    Average,
    #[serde(rename = "below average")]
    BelowAverage,
}

impl SusRating {
    pub fn for_mean(mean: f64) -> Self {
        if mean >= GOOD_THRESHOLD {
            SusRating::Good
        } else if mean >= AVERAGE_THRESHOLD {
            SusRating::Average
        } else {
            SusRating::BelowAverage
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SusRating::Good => "good",
            SusRating::Average => "average",
            SusRating::BelowAverage => "below average",
        }
    }
}

impl fmt::Display for SusRating {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SusSummary {
    pub scores: Vec<f64>,
    pub mean: f64,
    pub rating: SusRating,
}

pub fn sus_summary(responses: &[SusResponse]) -> Result<SusSummary, AnalyticsError> {
    if responses.is_empty() {
        return Err(AnalyticsError::EmptyInput);
    }
    let scores: Vec<f64> = responses.iter().map(SusResponse::score).collect();
    // raw sums are integers, so the mean is exact up to one division
    let total: u32 = responses.iter().map(SusResponse::raw).sum();
    let mean = f64::from(total) * 2.5 / responses.len() as f64;
    Ok(SusSummary {
        scores,
        mean,
        rating: SusRating::for_mean(mean),
    })
}
