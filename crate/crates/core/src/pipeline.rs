//! End-to-end run from a result set to the keyword tree.

use serde::{Deserialize, Serialize};

use crate::fca::{
    build_context, ConceptLattice, FcaError, FormalContext, DEFAULT_ATTRIBUTE_CAP, DEFAULT_CONCEPT_LIMIT,
};
use crate::serp::ResultSet;
use crate::text::{extract_all, PipelineConfig, StopList, TermSet, TextError};
use crate::tree::{build_tree, TreeConfig, TreeError, TreeNode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct SearchSettings {
    pub pipeline: PipelineConfig,
    pub tree: TreeConfig,
    pub attribute_cap: usize,
    pub concept_limit: usize,
}

impl Default for SearchSettings {
    fn default() -> Self {
        Self {
            pipeline: PipelineConfig::default(),
            tree: TreeConfig::default(),
            attribute_cap: DEFAULT_ATTRIBUTE_CAP,
            concept_limit: DEFAULT_CONCEPT_LIMIT,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum ExploreError {
    #[error(transparent)]
    Text(#[from] TextError),
    #[error(transparent)]
    Fca(#[from] FcaError),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// Everything derived from one result set.
#[derive(Debug, Clone)]
pub struct Exploration {
    pub result_set: ResultSet,
    pub term_sets: Vec<TermSet>,
    pub context: FormalContext,
    pub lattice: ConceptLattice,
    pub tree: TreeNode,
}

/// Runs text extraction, context construction, concept enumeration and
/// tree projection.
pub fn explore(result_set: ResultSet, settings: &SearchSettings) -> Result<Exploration, ExploreError> {
    settings.pipeline.validate()?;
    settings.tree.validate()?;
    let stoplist = StopList::embedded(&settings.pipeline.stoplist_id)?;
    let term_sets = extract_all(&result_set, &settings.pipeline, &stoplist);
    let context = build_context(&result_set, &term_sets, settings.attribute_cap)?;
    let lattice = ConceptLattice::from_context(&context, settings.concept_limit)?;
    let tree = build_tree(&context, &lattice, &settings.tree, &result_set.query);
    Ok(Exploration {
        result_set,
        term_sets,
        context,
        lattice,
        tree,
    })
}
