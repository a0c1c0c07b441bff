use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use conceptnav_core::serp::{fetch, load_fixture, parse_serp, FetchConfig};
use conceptnav_core::{explore, ExploreError, FcaError, IngestError, ResultSet, SearchResult, Source, TreeError};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::config::ServiceConfig;
use crate::help::help_document;
use crate::session::{EventKind, Session, SessionStore};

#[derive(Debug, Clone)]
pub struct AppState {
    pub config: Arc<ServiceConfig>,
    pub store: Arc<SessionStore>,
}

impl AppState {
    pub fn new(config: ServiceConfig) -> Self {
        let store = Arc::new(SessionStore::new(config.ttl()));
        Self {
            config: Arc::new(config),
            store,
        }
    }
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/v1/search", post(create_search))
        .route("/v1/sessions/{id}/tree", get(get_tree))
        .route("/v1/sessions/{id}/results", get(get_results))
        .route("/v1/sessions/{id}/events", post(record_event))
        .route("/v1/sessions/{id}/export", get(export_session))
        .route("/v1/help", get(help))
        .with_state(state)
}

/// Error responses carry `{"error": <kind>, "detail": <message>}`.
#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    kind: &'static str,
    detail: String,
}

impl ApiError {
    fn new(status: StatusCode, kind: &'static str, detail: impl Into<String>) -> Self {
        Self {
            status,
            kind,
            detail: detail.into(),
        }
    }

    fn bad_request(detail: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, "bad_request", detail)
    }

    fn unknown_session(id: &str) -> Self {
        Self::new(StatusCode::NOT_FOUND, "unknown_session", format!("no session {id:?}"))
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(json!({ "error": self.kind, "detail": self.detail }))).into_response()
    }
}

impl From<ExploreError> for ApiError {
    fn from(e: ExploreError) -> Self {
        match e {
            ExploreError::Fca(FcaError::EmptyContext) => {
                Self::new(StatusCode::UNPROCESSABLE_ENTITY, "empty_context", e.to_string())
            }
            ExploreError::Fca(FcaError::ResourceLimit { .. }) => {
                Self::new(StatusCode::UNPROCESSABLE_ENTITY, "resource_limit", e.to_string())
            }
            _ => Self::new(StatusCode::INTERNAL_SERVER_ERROR, "internal", e.to_string()),
        }
    }
}

fn parse_body<T: for<'de> Deserialize<'de>>(body: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError::bad_request(format!("invalid request body: {e}")))
}

fn session(state: &AppState, id: &str) -> Result<Arc<Session>, ApiError> {
    state.store.get(id).ok_or_else(|| ApiError::unknown_session(id))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SearchRequest {
    query: String,
    #[serde(default = "default_source")]
    source: Source,
    #[serde(default)]
    fixture_ref: Option<String>,
}

fn default_source() -> Source {
    Source::Fixture
}

#[derive(Debug, Serialize)]
struct SearchResponse<'a> {
    session_id: &'a str,
    query: &'a str,
    source: Source,
    result_count: usize,
    tree: &'a conceptnav_core::TreeNode,
}

fn fixture_result_set(config: &ServiceConfig, name: Option<&str>) -> Result<ResultSet, ApiError> {
    let name = name.ok_or_else(|| ApiError::bad_request("fixture_ref is required when source is fixture"))?;
    let unknown = || {
        ApiError::new(
            StatusCode::NOT_FOUND,
            "unknown_fixture",
            format!("no fixture named {name:?}"),
        )
    };
    let valid = !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.'))
        && !name.starts_with('.');
    if !valid {
        return Err(unknown());
    }
    let file = if name.ends_with(".json") {
        name.to_string()
    } else {
        format!("{name}.json")
    };
    load_fixture(config.fixture_dir.join(file)).map_err(|e| match e {
        IngestError::FileNotFound(_) => unknown(),
        other => ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "bad_fixture", other.to_string()),
    })
}

async fn live_result_set(config: &ServiceConfig, query: &str) -> Result<ResultSet, ApiError> {
    let upstream = |e: IngestError| ApiError::new(StatusCode::BAD_GATEWAY, "upstream", e.to_string());
    let fetch_cfg = FetchConfig {
        live_mode: config.live_mode,
        ..config.fetch.clone()
    };
    let html = fetch(query, &fetch_cfg).await.map_err(upstream)?;
    let parsed = parse_serp(&html, &config.extraction, query).map_err(upstream)?;
    for w in &parsed.warnings {
        tracing::warn!(block = w.block, reason = %w.reason, "skipped result block");
    }
    Ok(parsed.result_set)
}

async fn create_search(State(state): State<AppState>, body: Bytes) -> Result<Response, ApiError> {
    let req: SearchRequest = parse_body(&body)?;
    let query = req.query.trim();
    if query.is_empty() {
        return Err(ApiError::bad_request("query is empty"));
    }
    let mut rs = match req.source {
        Source::Fixture => fixture_result_set(&state.config, req.fixture_ref.as_deref())?,
        Source::Live => live_result_set(&state.config, query).await?,
    };
    rs.query = query.to_string();
    let settings = state.config.search.clone();
    let ex = tokio::task::spawn_blocking(move || explore(rs, &settings))
        .await
        .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "internal", e.to_string()))??;
    let s = state
        .store
        .insert(Session::new(query.to_string(), req.source, ex.result_set, ex.tree));
    tracing::info!(session = %s.id, query = %s.query, "search created");
    Ok(Json(SearchResponse {
        session_id: &s.id,
        query: &s.query,
        source: s.source,
        result_count: s.result_set.len(),
        tree: &s.tree,
    })
    .into_response())
}

async fn get_tree(State(state): State<AppState>, Path(id): Path<String>) -> Result<Response, ApiError> {
    let s = session(&state, &id)?;
    Ok(Json(&s.tree).into_response())
}

#[derive(Debug, Deserialize)]
struct ResultsQuery {
    #[serde(default)]
    path: String,
}

/// Parses a dot-separated index path; the empty string is the root.
pub fn parse_path(text: &str) -> Result<Vec<usize>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split('.')
        .enumerate()
        .map(|(i, seg)| {
            seg.parse::<usize>()
                .map_err(|_| format!("path segment {i} ({seg:?}) is not a non-negative integer"))
        })
        .collect()
}

#[derive(Debug, Serialize)]
struct ResultsResponse<'a> {
    path: Vec<usize>,
    label: &'a str,
    count: usize,
    results: Vec<&'a SearchResult>,
}

async fn get_results(
    State(state): State<AppState>,
    Path(id): Path<String>,
    Query(q): Query<ResultsQuery>,
) -> Result<Response, ApiError> {
    let s = session(&state, &id)?;
    let path = parse_path(&q.path).map_err(ApiError::bad_request)?;
    let node = s
        .tree
        .node_at(&path)
        .map_err(|e: TreeError| ApiError::bad_request(e.to_string()))?;
    let results =
        conceptnav_core::results_at(&s.tree, &path, &s.result_set).map_err(|e| ApiError::bad_request(e.to_string()))?;
    Ok(Json(ResultsResponse {
        path,
        label: &node.label,
        count: results.len(),
        results,
    })
    .into_response())
}

async fn record_event(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Response, ApiError> {
    let s = session(&state, &id)?;
    let v: Value = parse_body(&body)?;
    let obj = v
        .as_object()
        .ok_or_else(|| ApiError::bad_request("event must be a JSON object"))?;
    let kind: EventKind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| ApiError::bad_request("event kind is missing"))?
        .parse()
        .map_err(ApiError::bad_request)?;
    let payload = match obj.get("payload") {
        None | Some(Value::Null) => serde_json::Map::new(),
        Some(Value::Object(m)) => m.clone(),
        Some(_) => return Err(ApiError::bad_request("payload must be a JSON object")),
    };
    let count = s.append(kind, payload);
    Ok(Json(json!({ "session_id": s.id, "kind": kind, "event_count": count })).into_response())
}

#[derive(Debug, Serialize)]
struct ExportBundle<'a> {
    session_id: &'a str,
    query: &'a str,
    source: Source,
    created_at: chrono::DateTime<chrono::Utc>,
    tree: &'a conceptnav_core::TreeNode,
    events: Vec<crate::session::Event>,
}

async fn export_session(State(state): State<AppState>, Path(id): Path<String>) -> Result<Response, ApiError> {
    let s = session(&state, &id)?;
    let events = s.events();
    if let Some(dir) = &state.config.export_dir {
        write_jsonl(dir, &s.id, &events)
            .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "export_failed", e.to_string()))?;
    }
    let bundle = ExportBundle {
        session_id: &s.id,
        query: &s.query,
        source: s.source,
        created_at: s.created_at,
        tree: &s.tree,
        events,
    };
    let body = serde_json::to_vec(&bundle)
        .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "internal", e.to_string()))?;
    Ok(([(header::CONTENT_TYPE, "application/json")], body).into_response())
}

fn write_jsonl(dir: &std::path::Path, id: &str, events: &[crate::session::Event]) -> std::io::Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut out = String::new();
    for e in events {
        out.push_str(&serde_json::to_string(e)?);
        out.push('\n');
    }
    std::fs::write(dir.join(format!("{id}.jsonl")), out)
}

async fn help() -> Json<crate::help::HelpDocument> {
    Json(help_document())
}
