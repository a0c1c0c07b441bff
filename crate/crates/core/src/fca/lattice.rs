use serde::{Deserialize, Serialize};

use super::{enumerate_concepts, FcaError, FormalConcept, FormalContext};
use crate::serp::DocId;

/// Transitive reduction of strict extent inclusion, as `(parent, child)`
/// index pairs sorted ascending.
pub fn covering_edges(concepts: &[FormalConcept]) -> Vec<(usize, usize)> {
    let mut by_size: Vec<usize> = (0..concepts.len()).collect();
    by_size.sort_by_key(|&i| concepts[i].extent.len());

    let mut edges = Vec::new();
    for (child, c) in concepts.iter().enumerate() {
        let mut uppers: Vec<usize> = Vec::new();
        for &p in &by_size {
            let pe = &concepts[p].extent;
            if !c.extent.is_proper_subset(pe) {
                continue;
            }
            // supersets arrive smallest first; anything strictly between c
            // and p sits above some already recorded cover
            if uppers.iter().all(|&q| !concepts[q].extent.is_subset(pe)) {
                uppers.push(p);
            }
        }
        edges.extend(uppers.into_iter().map(|p| (p, child)));
    }
    edges.sort_unstable();
    edges
}

/// All concepts of a context with their covering relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConceptLattice {
    concepts: Vec<FormalConcept>,
    covers: Vec<(usize, usize)>,
    lower: Vec<Vec<usize>>,
    top: usize,
    bottom: usize,
}

impl ConceptLattice {
    pub fn from_context(ctx: &FormalContext, concept_limit: usize) -> Result<Self, FcaError> {
        Self::from_concepts(enumerate_concepts(ctx, concept_limit)?)
    }

    /// `concepts` must be the complete concept set of one context.
    pub fn from_concepts(concepts: Vec<FormalConcept>) -> Result<Self, FcaError> {
        let top = concepts
            .iter()
            .position(|c| c.extent.len() == c.extent.universe())
            .ok_or_else(|| FcaError::InvalidContext("no top concept".into()))?;
        let bottom = concepts
            .iter()
            .position(|c| is_min(c, &concepts))
            .ok_or_else(|| FcaError::InvalidContext("no bottom concept".into()))?;
        let covers = covering_edges(&concepts);
        let mut lower = vec![Vec::new(); concepts.len()];
        for &(p, c) in &covers {
            lower[p].push(c);
        }
        Ok(Self {
            concepts,
            covers,
            lower,
            top,
            bottom,
        })
    }

    pub fn concepts(&self) -> &[FormalConcept] {
        &self.concepts
    }

    pub fn concept(&self, i: usize) -> &FormalConcept {
        &self.concepts[i]
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.concepts.is_empty()
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn dump(&self, ctx: &FormalContext) -> LatticeDump {
        LatticeDump {
            concepts: self
                .concepts
                .iter()
                .map(|c| DumpConcept {
                    extent: c.extent.iter().map(|g| ctx.objects()[g]).collect(),
                    intent: c.intent.iter().map(|m| ctx.attributes()[m].clone()).collect(),
                })
                .collect(),
            covers: self.covers.iter().map(|&(p, c)| [p, c]).collect(),
        }
    }
}

fn is_min(c: &FormalConcept, all: &[FormalConcept]) -> bool {
    all.iter().all(|o| c.extent.is_subset(&o.extent))
}

/// JSON debug dump of a lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDump {
    pub concepts: Vec<DumpConcept>,
    pub covers: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DumpConcept {
    pub extent: Vec<DocId>,
    pub intent: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fca::DEFAULT_CONCEPT_LIMIT;

    fn lattice(m: usize, rows: &[&[usize]]) -> (FormalContext, ConceptLattice) {
        let ctx = FormalContext::new(
            (1..=rows.len() as u32).map(DocId).collect(),
            (0..m).map(|i| ((b'a' + i as u8) as char).to_string()).collect(),
            rows.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap();
        let l = ConceptLattice::from_context(&ctx, DEFAULT_CONCEPT_LIMIT).unwrap();
        (ctx, l)
    }

    fn named_edges(ctx: &FormalContext, l: &ConceptLattice) -> Vec<(String, String)> {
        let name = |i: usize| {
            l.concept(i)
                .intent
                .iter()
                .map(|m| ctx.attributes()[m].as_str())
                .collect::<String>()
        };
        let mut e: Vec<_> = l.covers().iter().map(|&(p, c)| (name(p), name(c))).collect();
        e.sort();
        e
    }

    #[test]
    fn diamond_edges() {
        let (ctx, l) = lattice(3, &[&[0, 1], &[0, 2], &[0, 1, 2]]);
        let s = |a: &str, b: &str| (a.to_string(), b.to_string());
        assert_eq!(
            named_edges(&ctx, &l),
            [s("a", "ab"), s("a", "ac"), s("ab", "abc"), s("ac", "abc")]
        );
        assert_eq!(l.concept(l.top()).extent.len(), 3);
        assert_eq!(l.concept(l.bottom()).intent.len(), 3);
    }

    #[test]
    fn single_concept_has_no_edges() {
        let (_, l) = lattice(0, &[&[]]);
        assert_eq!(l.len(), 1);
        assert!(l.covers().is_empty());
        assert_eq!(l.top(), l.bottom());
    }

    #[test]
    fn chain_has_one_edge() {
        let (ctx, l) = lattice(2, &[&[0], &[0, 1]]);
        assert_eq!(l.len(), 2);
        assert_eq!(named_edges(&ctx, &l), [("a".to_string(), "ab".to_string())]);
    }

    #[test]
    fn dump_round_trips_through_json() {
        let (ctx, l) = lattice(3, &[&[0, 1], &[0, 2], &[0, 1, 2]]);
        let dump = l.dump(&ctx);
        let text = serde_json::to_string(&dump).unwrap();
        let back: LatticeDump = serde_json::from_str(&text).unwrap();
        assert_eq!(back, dump);
        assert_eq!(dump.concepts[0].extent, [DocId(1), DocId(2), DocId(3)]);
        assert_eq!(dump.concepts[0].intent, ["a"]);
    }
}
