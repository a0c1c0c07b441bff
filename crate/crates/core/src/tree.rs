//! The keyword tree users walk to narrow a result list.
//!
//! The root stands for the whole result set and is labelled with the query.
//! Each node's children are the lower covers of its concept in the lattice,
//! labelled by the attributes they add. Every step down therefore narrows
//! the result list strictly.

use serde::{Deserialize, Serialize};

use crate::fca::{ConceptLattice, FormalContext};
use crate::serp::{DocId, ResultSet, SearchResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct TreeConfig {
    pub max_depth: usize,
    pub min_extent: usize,
    pub max_children: usize,
}

impl Default for TreeConfig {
    fn default() -> Self {
        Self {
            max_depth: 4,
            min_extent: 2,
            max_children: 10,
        }
    }
}

impl TreeConfig {
    pub fn validate(&self) -> Result<(), TreeError> {
        for (name, v) in [
            ("max_depth", self.max_depth),
            ("min_extent", self.min_extent),
            ("max_children", self.max_children),
        ] {
            if v == 0 {
                return Err(TreeError::InvalidConfig(format!("{name} must be >= 1")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("invalid path: index {index} at position {position} is out of range ({len} children)")]
    InvalidPath { position: usize, index: usize, len: usize },
    #[error("invalid tree config: {0}")]
    InvalidConfig(String),
}

/// One keyword node. Serializes to the tree JSON shape
/// `{label, aliases, count, path, children}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeNode {
    pub label: String,
    pub aliases: Vec<String>,
    pub count: usize,
    pub path: Vec<usize>,
    pub children: Vec<TreeNode>,
    /// Index of the node's concept in the lattice.
    #[serde(skip)]
    pub concept: usize,
    /// Extent of the node's concept, ascending.
    #[serde(skip)]
    pub doc_ids: Vec<DocId>,
}

impl TreeNode {
    pub fn node_at(&self, path: &[usize]) -> Result<&TreeNode, TreeError> {
        let mut node = self;
        for (position, &index) in path.iter().enumerate() {
            node = node.children.get(index).ok_or(TreeError::InvalidPath {
                position,
                index,
                len: node.children.len(),
            })?;
        }
        Ok(node)
    }

    /// Paths of all nodes in depth-first pre-order, root first.
    pub fn preorder_paths(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.walk(&mut |n| out.push(n.path.clone()));
        out
    }

    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a TreeNode)) {
        f(self);
        for c in &self.children {
            c.walk(f);
        }
    }

    pub fn depth(&self) -> usize {
        self.children.iter().map(|c| c.depth() + 1).max().unwrap_or(0)
    }

    /// Node counts grouped by depth, root level first.
    pub fn level_counts(&self) -> Vec<Vec<usize>> {
        let mut levels: Vec<Vec<usize>> = Vec::new();
        self.walk(&mut |n| {
            let d = n.path.len();
            if levels.len() <= d {
                levels.resize(d + 1, Vec::new());
            }
            levels[d].push(n.count);
        });
        levels
    }
}

/// Projects the lattice onto a keyword tree rooted at the top concept.
pub fn build_tree(ctx: &FormalContext, lattice: &ConceptLattice, config: &TreeConfig, query: &str) -> TreeNode {
    let top = lattice.top();
    let mut root = node(ctx, lattice, top, query.to_string(), Vec::new(), Vec::new());
    expand(ctx, lattice, config, &mut root);
    root
}

fn node(
    ctx: &FormalContext,
    lattice: &ConceptLattice,
    concept: usize,
    label: String,
    aliases: Vec<String>,
    path: Vec<usize>,
) -> TreeNode {
    let mut doc_ids: Vec<DocId> = lattice
        .concept(concept)
        .extent
        .iter()
        .map(|g| ctx.objects()[g])
        .collect();
    doc_ids.sort_unstable();
    TreeNode {
        label,
        aliases,
        count: doc_ids.len(),
        path,
        children: Vec::new(),
        concept,
        doc_ids,
    }
}

fn expand(ctx: &FormalContext, lattice: &ConceptLattice, config: &TreeConfig, parent: &mut TreeNode) {
    if parent.path.len() >= config.max_depth {
        return;
    }
    let parent_intent = &lattice.concept(parent.concept).intent;
    let mut children: Vec<TreeNode> = lattice
        .lower_covers(parent.concept)
        .iter()
        .filter(|&&c| lattice.concept(c).extent.len() >= config.min_extent.max(1))
        .map(|&c| {
            let mut proper: Vec<String> = lattice
                .concept(c)
                .intent
                .iter()
                .filter(|&m| !parent_intent.contains(m))
                .map(|m| ctx.attributes()[m].clone())
                .collect();
            proper.sort();
            let label = proper.remove(0);
            node(ctx, lattice, c, label, proper, Vec::new())
        })
        .collect();
    children.sort_by(|a, b| b.count.cmp(&a.count).then_with(|| a.label.cmp(&b.label)));
    children.truncate(config.max_children);
    for (i, child) in children.iter_mut().enumerate() {
        child.path = parent.path.clone();
        child.path.push(i);
        expand(ctx, lattice, config, child);
    }
    parent.children = children;
}

/// Results under the node at `path`, in original rank order.
pub fn results_at<'a>(
    root: &TreeNode,
    path: &[usize],
    result_set: &'a ResultSet,
) -> Result<Vec<&'a SearchResult>, TreeError> {
    let node = root.node_at(path)?;
    Ok(result_set
        .results
        .iter()
        .filter(|r| node.doc_ids.binary_search(&r.doc_id()).is_ok())
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NavKey {
    Down,
    Up,
}

/// Position in the tree plus its index in pre-order.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct NavCursor {
    pub position: Vec<usize>,
    pub flattened_index: usize,
}

impl NavCursor {
    pub fn root() -> Self {
        Self::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub cursor: NavCursor,
    /// Set when the move would run past the first or last node.
    pub at_boundary: bool,
}

/// Moves the cursor one node forward (down) or back (up) in pre-order.
/// At either end the cursor stays put and `at_boundary` is set.
pub fn step(root: &TreeNode, cursor: &NavCursor, key: NavKey) -> Step {
    let order = root.preorder_paths();
    let current = order
        .get(cursor.flattened_index)
        .filter(|p| **p == cursor.position)
        .map(|_| cursor.flattened_index)
        .or_else(|| order.iter().position(|p| *p == cursor.position))
        .unwrap_or(0);
    let next = match key {
        NavKey::Down => current.checked_add(1).filter(|&i| i < order.len()),
        NavKey::Up => current.checked_sub(1),
    };
    match next {
        Some(i) => Step {
            cursor: NavCursor {
                position: order[i].clone(),
                flattened_index: i,
            },
            at_boundary: false,
        },
        None => Step {
            cursor: NavCursor {
                position: order[current].clone(),
                flattened_index: current,
            },
            at_boundary: true,
        },
    }
}
