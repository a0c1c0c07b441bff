use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::time::Duration;

use conceptnav_core::serp::{ExtractionRules, FetchConfig};
use conceptnav_core::SearchSettings;
use serde::{Deserialize, Serialize};

/// Service settings, read from one TOML file and then overridden by
/// `CONCEPTNAV_*` environment variables.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ServiceConfig {
    pub listen: SocketAddr,
    pub fixture_dir: PathBuf,
    pub live_mode: bool,
    pub session_ttl_minutes: u64,
    /// When set, each export also writes the session's events as JSONL here.
    pub export_dir: Option<PathBuf>,
    pub search: SearchSettings,
    pub fetch: FetchConfig,
    pub extraction: ExtractionRules,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        Self {
            listen: SocketAddr::from(([127, 0, 0, 1], 8080)),
            fixture_dir: PathBuf::from("fixtures"),
            live_mode: false,
            session_ttl_minutes: 60,
            export_dir: None,
            search: SearchSettings::default(),
            fetch: FetchConfig::default(),
            extraction: ExtractionRules::default(),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid config {}: {message}", path.display())]
    Parse { path: PathBuf, message: String },
    #[error("invalid value for {key}: {value:?}")]
    Env { key: String, value: String },
}

pub const ENV_PREFIX: &str = "CONCEPTNAV_";

impl ServiceConfig {
    pub fn ttl(&self) -> Duration {
        Duration::from_secs(self.session_ttl_minutes.saturating_mul(60))
    }

    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        toml::from_str(&text).map_err(|e| ConfigError::Parse {
            path: path.to_path_buf(),
            message: e.to_string(),
        })
    }

    /// File (or defaults) plus the process environment.
    pub fn load(path: Option<&Path>) -> Result<Self, ConfigError> {
        let mut cfg = match path {
            Some(p) => Self::from_file(p)?,
            None => Self::default(),
        };
        cfg.apply_env(std::env::vars())?;
        Ok(cfg)
    }

    /// Applies recognised `CONCEPTNAV_*` pairs; other keys are ignored.
    pub fn apply_env(&mut self, vars: impl IntoIterator<Item = (String, String)>) -> Result<(), ConfigError> {
        for (key, value) in vars {
            let Some(name) = key.strip_prefix(ENV_PREFIX) else {
                continue;
            };
            let bad = || ConfigError::Env {
                key: key.clone(),
                value: value.clone(),
            };
            let tree = &mut self.search.tree;
            match name {
                "LISTEN" => self.listen = value.parse().map_err(|_| bad())?,
                "FIXTURE_DIR" => self.fixture_dir = PathBuf::from(&value),
                "LIVE_MODE" => self.live_mode = parse_bool(&value).ok_or_else(bad)?,
                "SESSION_TTL_MINUTES" => self.session_ttl_minutes = value.parse().map_err(|_| bad())?,
                "EXPORT_DIR" => self.export_dir = (!value.is_empty()).then(|| PathBuf::from(&value)),
                "MAX_DEPTH" => tree.max_depth = value.parse().map_err(|_| bad())?,
                "MIN_EXTENT" => tree.min_extent = value.parse().map_err(|_| bad())?,
                "MAX_CHILDREN" => tree.max_children = value.parse().map_err(|_| bad())?,
                "ATTRIBUTE_CAP" => self.search.attribute_cap = value.parse().map_err(|_| bad())?,
                "MIN_TOKEN_LEN" => self.search.pipeline.min_token_len = value.parse().map_err(|_| bad())?,
                "STOPLIST" => self.search.pipeline.stoplist_id = value.clone(),
                "FETCH_TIMEOUT_MS" => self.fetch.timeout_ms = value.parse().map_err(|_| bad())?,
                _ => {}
            }
        }
        Ok(())
    }
}

fn parse_bool(s: &str) -> Option<bool> {
    match s.trim().to_ascii_lowercase().as_str() {
        "1" | "true" | "yes" | "on" => Some(true),
        "0" | "false" | "no" | "off" => Some(false),
        _ => None,
    }
}
