//! Formal concept analysis over results × stems.
//!
//! A [`FormalContext`] relates objects (results) to attributes (stems). The
//! two derivation operators map an object set to the attributes they all
//! share and an attribute set to the objects carrying all of them; their
//! fixpoint pairs are the formal concepts. [`enumerate_concepts`] lists every
//! concept with Close-by-One and [`covering_edges`] recovers the Hasse
//! diagram of the extent order.

mod bitset;
mod context;
mod lattice;

pub use bitset::BitSet;
pub use context::{build_context, ContextFile, FormalContext};
pub use lattice::{covering_edges, ConceptLattice, DumpConcept, LatticeDump};

/// Default ceiling on the number of concepts enumerated.
pub const DEFAULT_CONCEPT_LIMIT: usize = 10_000;
/// Default number of stems kept as attributes.
pub const DEFAULT_ATTRIBUTE_CAP: usize = 25;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FcaError {
    #[error("the result set is empty; there is nothing to analyse")]
    EmptyContext,
    #[error("object index {index} out of range (context has {len} objects)")]
    ObjectIndex { index: usize, len: usize },
    #[error("attribute index {index} out of range (context has {len} attributes)")]
    AttributeIndex { index: usize, len: usize },
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("concept count exceeds the limit of {limit}")]
    ResourceLimit { limit: usize },
}

/// A closed (extent, intent) pair, as object and attribute indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormalConcept {
    pub extent: BitSet,
    pub intent: BitSet,
}

/// Lists every concept of `ctx`, in lectic order of intents.
///
/// Fails with [`FcaError::ResourceLimit`] as soon as more than `limit`
/// concepts have been found.
pub fn enumerate_concepts(ctx: &FormalContext, limit: usize) -> Result<Vec<FormalConcept>, FcaError> {
    let extent = BitSet::full(ctx.object_count());
    let intent = ctx.intent_of(&extent);
    let mut out = Vec::new();
    close_by_one(ctx, extent, intent, 0, limit, &mut out)?;
    out.sort_by(|a, b| a.intent.lectic_cmp(&b.intent));
    Ok(out)
}

fn close_by_one(
    ctx: &FormalContext,
    extent: BitSet,
    intent: BitSet,
    start: usize,
    limit: usize,
    out: &mut Vec<FormalConcept>,
) -> Result<(), FcaError> {
    if out.len() >= limit {
        return Err(FcaError::ResourceLimit { limit });
    }
    let m = ctx.attribute_count();
    let mut children = Vec::new();
    for j in start..m {
        if intent.contains(j) {
            continue;
        }
        let mut single = BitSet::empty(m);
        single.insert(j);
        let child_extent = extent.intersection(&ctx.extent_of(&single));
        let child_intent = ctx.intent_of(&child_extent);
        // canonical iff closing added nothing below j
        if intent.agrees_below(&child_intent, j) {
            children.push((child_extent, child_intent, j + 1));
        }
    }
    out.push(FormalConcept { extent, intent });
    for (e, i, next) in children {
        close_by_one(ctx, e, i, next, limit, out)?;
    }
    Ok(())
}
