use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Shortcut {
    pub key: &'static str,
    pub action: &'static str,
    /// Key or control to use where the browser reserves `key`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fallback: Option<&'static str>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Region {
    pub id: &'static str,
    pub name: &'static str,
    pub description: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct HelpDocument {
    pub shortcuts: Vec<Shortcut>,
    pub navigation: Vec<Shortcut>,
    pub regions: Vec<Region>,
}

const fn key(key: &'static str, action: &'static str, fallback: Option<&'static str>) -> Shortcut {
    Shortcut { key, action, fallback }
}

pub fn help_document() -> HelpDocument {
    HelpDocument {
        shortcuts: vec![
            key("F1", "Help", Some("h")),
            key("F12", "Terminate Experiment & Collect Data", Some("e")),
            key("Alt+W", "Where I am", None),
            key("Ctrl+W or Ctrl+F4", "Close Tap Page", Some("Close button")),
        ],
        navigation: vec![
            key("Enter", "Search for the text in the query field", None),
            key("ArrowDown", "Move to the next keyword in the tree", None),
            key("ArrowUp", "Move to the previous keyword in the tree", None),
            key("Tab", "Move to the next region", None),
            key("Shift+Tab", "Move to the previous region", None),
        ],
        regions: vec![
            Region {
                id: "query",
                name: "query field",
                description: "Type a query and press Enter to search.",
            },
            Region {
                id: "tree",
                name: "concept tree",
                description: "Keywords found in the results; each level down narrows the list.",
            },
            Region {
                id: "list",
                name: "results list",
                description: "Results for the selected keyword, with title, address and snippet.",
            },
        ],
    }
}
