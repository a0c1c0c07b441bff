use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, RwLock};
use std::time::{Duration, Instant};

use chrono::{DateTime, Utc};
use conceptnav_core::{ResultSet, Source, TreeNode};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EventKind {
    SearchStarted,
    NodeSelected,
    ResultsViewed,
    HelpOpened,
    WhereAmI,
    ExperimentTerminated,
}

impl EventKind {
    pub const ALL: [EventKind; 6] = [
        EventKind::SearchStarted,
        EventKind::NodeSelected,
        EventKind::ResultsViewed,
        EventKind::HelpOpened,
        EventKind::WhereAmI,
        EventKind::ExperimentTerminated,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EventKind::SearchStarted => "search_started",
            EventKind::NodeSelected => "node_selected",
            EventKind::ResultsViewed => "results_viewed",
            EventKind::HelpOpened => "help_opened",
            EventKind::WhereAmI => "where_am_i",
            EventKind::ExperimentTerminated => "experiment_terminated",
        }
    }
}

impl fmt::Display for EventKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EventKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown event kind {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Event {
    pub timestamp: DateTime<Utc>,
    pub kind: EventKind,
    pub payload: serde_json::Map<String, serde_json::Value>,
}

/// One search and everything recorded against it. The result set and tree
/// never change after creation; only the event log grows.
#[derive(Debug)]
pub struct Session {
    pub id: String,
    pub query: String,
    pub source: Source,
    pub created_at: DateTime<Utc>,
    pub result_set: ResultSet,
    pub tree: TreeNode,
    events: Mutex<Vec<Event>>,
    last_seen: Mutex<Instant>,
}

impl Session {
    pub fn new(query: String, source: Source, result_set: ResultSet, tree: TreeNode) -> Self {
        Self {
            id: uuid::Uuid::new_v4().simple().to_string(),
            query,
            source,
            created_at: Utc::now(),
            result_set,
            tree,
            events: Mutex::new(Vec::new()),
            last_seen: Mutex::new(Instant::now()),
        }
    }

    /// Appends under the session lock; returns the new event count.
    pub fn append(&self, kind: EventKind, payload: serde_json::Map<String, serde_json::Value>) -> usize {
        let mut events = self.events.lock().unwrap_or_else(|e| e.into_inner());
        events.push(Event {
            timestamp: Utc::now(),
            kind,
            payload,
        });
        events.len()
    }

    pub fn events(&self) -> Vec<Event> {
        self.events.lock().unwrap_or_else(|e| e.into_inner()).clone()
    }

    fn touch(&self, now: Instant) {
        *self.last_seen.lock().unwrap_or_else(|e| e.into_inner()) = now;
    }

    fn idle_since(&self, now: Instant) -> Duration {
        now.saturating_duration_since(*self.last_seen.lock().unwrap_or_else(|e| e.into_inner()))
    }
}

/// In-memory sessions. Idle sessions are dropped lazily on access.
#[derive(Debug)]
pub struct SessionStore {
    sessions: RwLock<HashMap<String, Arc<Session>>>,
    ttl: Duration,
}

impl SessionStore {
    pub fn new(ttl: Duration) -> Self {
        Self {
            sessions: RwLock::new(HashMap::new()),
            ttl,
        }
    }

    pub fn insert(&self, session: Session) -> Arc<Session> {
        self.sweep(Instant::now());
        let s = Arc::new(session);
        self.sessions
            .write()
            .unwrap_or_else(|e| e.into_inner())
            .insert(s.id.clone(), Arc::clone(&s));
        s
    }

    pub fn get(&self, id: &str) -> Option<Arc<Session>> {
        let now = Instant::now();
        self.sweep(now);
        let s = self
            .sessions
            .read()
            .unwrap_or_else(|e| e.into_inner())
            .get(id)
            .cloned()?;
        s.touch(now);
        Some(s)
    }

    pub fn len(&self) -> usize {
        self.sessions.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Drops sessions idle for longer than the TTL as of `now`.
    pub fn sweep(&self, now: Instant) -> usize {
        let mut map = self.sessions.write().unwrap_or_else(|e| e.into_inner());
        let before = map.len();
        map.retain(|_, s| s.idle_since(now) <= self.ttl);
        before - map.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use conceptnav_core::SearchResult;

    fn session() -> Session {
        let rs = ResultSet::new(
            "q",
            vec![SearchResult {
                rank: 1,
                title: "t".into(),
                url: "https://example.org/".into(),
                snippet: String::new(),
            }],
            Source::Fixture,
            Utc::now(),
        )
        .unwrap();
        let tree = TreeNode {
            label: "q".into(),
            aliases: vec![],
            count: 1,
            path: vec![],
            children: vec![],
            concept: 0,
            doc_ids: vec![],
        };
        Session::new("q".into(), Source::Fixture, rs, tree)
    }

    #[test]
    fn event_kinds_round_trip() {
        for k in EventKind::ALL {
            assert_eq!(k.as_str().parse::<EventKind>().unwrap(), k);
            assert_eq!(serde_json::to_value(k).unwrap(), k.as_str());
        }
        assert!("dance".parse::<EventKind>().is_err());
    }

    #[test]
    fn ids_are_unique() {
        let store = SessionStore::new(Duration::from_secs(60));
        let a = store.insert(session());
        let b = store.insert(session());
        assert_ne!(a.id, b.id);
        assert_eq!(store.len(), 2);
    }

    #[test]
    fn idle_sessions_expire() {
        let store = SessionStore::new(Duration::from_secs(60));
        let s = store.insert(session());
        assert_eq!(store.sweep(Instant::now() + Duration::from_secs(30)), 0);
        assert_eq!(store.sweep(Instant::now() + Duration::from_secs(61)), 1);
        assert!(store.get(&s.id).is_none());
    }

    #[test]
    fn concurrent_appends_are_all_kept() {
        let s = Arc::new(session());
        let handles: Vec<_> = (0..8)
            .map(|i| {
                let s = Arc::clone(&s);
                std::thread::spawn(move || {
                    for j in 0..50 {
                        let mut p = serde_json::Map::new();
                        p.insert("n".into(), (i * 100 + j).into());
                        s.append(EventKind::NodeSelected, p);
                    }
                })
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
        let events = s.events();
        assert_eq!(events.len(), 400);
        // per-thread order survives interleaving
        for i in 0..8 {
            let seq: Vec<i64> = events
                .iter()
                .map(|e| e.payload["n"].as_i64().unwrap())
                .filter(|n| n / 100 == i)
                .collect();
            assert!(seq.windows(2).all(|w| w[0] < w[1]));
        }
        assert!(events.windows(2).all(|w| w[0].timestamp <= w[1].timestamp));
    }
}
