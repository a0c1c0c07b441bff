//! Concept-lattice navigation over search results.
//!
//! A query's result page is parsed into a [`ResultSet`], each result is
//! reduced to a set of stems, and the results × stems incidence is analysed
//! as a formal context. The concept lattice is then flattened into a
//! browsable [`TreeNode`] hierarchy whose levels narrow the result list.
//!
//! [`analytics`] holds the arithmetic used to evaluate the tool with users.

pub mod analytics;
pub mod fca;
pub mod pipeline;
pub mod serp;
pub mod text;
pub mod tree;

pub use fca::{ConceptLattice, FcaError, FormalConcept, FormalContext};
pub use pipeline::{explore, Exploration, ExploreError, SearchSettings};
pub use serp::{DocId, IngestError, ResultSet, SearchResult, Source};
pub use text::{PipelineConfig, TermSet, TextError};
pub use tree::{build_tree, results_at, step, NavCursor, NavKey, Step, TreeConfig, TreeError, TreeNode};
