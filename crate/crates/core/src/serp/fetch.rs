use std::time::Duration;

use percent_encoding::{utf8_percent_encode, AsciiSet, NON_ALPHANUMERIC};
use serde::{Deserialize, Serialize};

use super::IngestError;

// RFC 3986 unreserved characters stay literal
const QUERY_ENCODE: &AsciiSet = &NON_ALPHANUMERIC.remove(b'-').remove(b'.').remove(b'_').remove(b'~');

/// Settings for the opt-in live fetch path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct FetchConfig {
    /// Results page URL with a `{query}` placeholder.
    pub url_template: String,
    pub timeout_ms: u64,
    pub user_agent: String,
    pub live_mode: bool,
}

impl Default for FetchConfig {
    fn default() -> Self {
        Self {
            url_template: "https://www.google.com/search?q={query}&hl=en".into(),
            timeout_ms: 10_000,
            user_agent: concat!("conceptnav/", env!("CARGO_PKG_VERSION")).into(),
            live_mode: false,
        }
    }
}

/// Expands the template with the percent-encoded query.
pub fn search_url(template: &str, query: &str) -> String {
    template.replace("{query}", &utf8_percent_encode(query, QUERY_ENCODE).to_string())
}

/// GETs the results page for `query` and returns the body verbatim.
pub async fn fetch(query: &str, config: &FetchConfig) -> Result<String, IngestError> {
    if !config.live_mode {
        return Err(IngestError::Disabled);
    }
    if query.trim().is_empty() {
        return Err(IngestError::EmptyQuery);
    }
    let url = search_url(&config.url_template, query);
    let client = reqwest::Client::builder()
        .timeout(Duration::from_millis(config.timeout_ms))
        .user_agent(config.user_agent.clone())
        .build()
        .map_err(|e| IngestError::Network(e.to_string()))?;
    let resp = client
        .get(&url)
        .send()
        .await
        .map_err(|e| IngestError::Network(e.to_string()))?;
    let status = resp.status();
    if !status.is_success() {
        return Err(IngestError::HttpStatus {
            status: status.as_u16(),
            url,
        });
    }
    let bytes = resp.bytes().await.map_err(|e| IngestError::Network(e.to_string()))?;
    String::from_utf8(bytes.to_vec()).map_err(|e| IngestError::Network(format!("body is not UTF-8: {e}")))
}
