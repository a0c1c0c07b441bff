use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{BitSet, FcaError};
use crate::serp::{DocId, ResultSet};
use crate::text::TermSet;

/// Objects × attributes incidence relation.
///
/// Rows (attributes per object) and columns (objects per attribute) are
/// both kept so that either derivation operator is a plain intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalContext {
    objects: Vec<DocId>,
    attributes: Vec<String>,
    rows: Vec<BitSet>,
    cols: Vec<BitSet>,
}

impl FormalContext {
    /// `incidence[g]` lists the attribute indices of object `g`.
    pub fn new(objects: Vec<DocId>, attributes: Vec<String>, incidence: Vec<Vec<usize>>) -> Result<Self, FcaError> {
        if incidence.len() != objects.len() {
            return Err(FcaError::InvalidContext(format!(
                "{} incidence rows for {} objects",
                incidence.len(),
                objects.len()
            )));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = objects.iter().find(|o| !seen.insert(**o)) {
            return Err(FcaError::InvalidContext(format!("duplicate object {dup}")));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = attributes.iter().find(|a| !seen.insert(a.as_str())) {
            return Err(FcaError::InvalidContext(format!("duplicate attribute {dup:?}")));
        }
        let m = attributes.len();
        let mut rows = Vec::with_capacity(objects.len());
        let mut cols = vec![BitSet::empty(objects.len()); m];
        for (g, row) in incidence.iter().enumerate() {
            let mut bits = BitSet::empty(m);
            for &a in row {
                if a >= m {
                    return Err(FcaError::AttributeIndex { index: a, len: m });
                }
                bits.insert(a);
                cols[a].insert(g);
            }
            rows.push(bits);
        }
        Ok(Self {
            objects,
            attributes,
            rows,
            cols,
        })
    }

    pub fn objects(&self) -> &[DocId] {
        &self.objects
    }

    pub fn attributes(&self) -> &[String] {
        &self.attributes
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn attribute_count(&self) -> usize {
        self.attributes.len()
    }

    pub fn attribute_index(&self, name: &str) -> Option<usize> {
        self.attributes.iter().position(|a| a == name)
    }

    pub fn has(&self, object: usize, attribute: usize) -> bool {
        self.rows.get(object).is_some_and(|r| r.contains(attribute))
    }

    pub fn row(&self, object: usize) -> &BitSet {
        &self.rows[object]
    }

    pub fn incidence_count(&self) -> usize {
        self.rows.iter().map(BitSet::len).sum()
    }

    /// Attributes shared by every object in `extent` (all of M for ∅).
    pub fn intent_of(&self, extent: &BitSet) -> BitSet {
        let mut out = BitSet::full(self.attributes.len());
        for g in extent.iter() {
            out.intersect_with(&self.rows[g]);
        }
        out
    }

    /// Objects carrying every attribute in `intent` (all of G for ∅).
    pub fn extent_of(&self, intent: &BitSet) -> BitSet {
        let mut out = BitSet::full(self.objects.len());
        for m in intent.iter() {
            out.intersect_with(&self.cols[m]);
        }
        out
    }

    pub fn close(&self, intent: &BitSet) -> BitSet {
        self.intent_of(&self.extent_of(intent))
    }

    pub fn object_set(&self, objs: &[usize]) -> Result<BitSet, FcaError> {
        let len = self.objects.len();
        if let Some(&index) = objs.iter().find(|&&g| g >= len) {
            return Err(FcaError::ObjectIndex { index, len });
        }
        Ok(BitSet::from_indices(len, objs.iter().copied()))
    }

    pub fn attribute_set(&self, attrs: &[usize]) -> Result<BitSet, FcaError> {
        let len = self.attributes.len();
        if let Some(&index) = attrs.iter().find(|&&m| m >= len) {
            return Err(FcaError::AttributeIndex { index, len });
        }
        Ok(BitSet::from_indices(len, attrs.iter().copied()))
    }

    pub fn object_prime(&self, objs: &[usize]) -> Result<Vec<usize>, FcaError> {
        Ok(self.intent_of(&self.object_set(objs)?).to_vec())
    }

    pub fn attr_prime(&self, attrs: &[usize]) -> Result<Vec<usize>, FcaError> {
        Ok(self.extent_of(&self.attribute_set(attrs)?).to_vec())
    }

    pub fn closure(&self, attrs: &[usize]) -> Result<Vec<usize>, FcaError> {
        Ok(self.close(&self.attribute_set(attrs)?).to_vec())
    }

    pub fn to_file(&self) -> ContextFile {
        ContextFile {
            objects: self.objects.clone(),
            attributes: self.attributes.clone(),
            incidence: self
                .rows
                .iter()
                .map(|r| r.iter().map(|m| self.attributes[m].clone()).collect())
                .collect(),
        }
    }
}

/// JSON form of a context: `incidence[i]` names the attributes of `objects[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextFile {
    pub objects: Vec<DocId>,
    pub attributes: Vec<String>,
    pub incidence: Vec<Vec<String>>,
}

impl TryFrom<ContextFile> for FormalContext {
    type Error = FcaError;

    fn try_from(file: ContextFile) -> Result<Self, FcaError> {
        let index: BTreeMap<&str, usize> = file
            .attributes
            .iter()
            .enumerate()
            .map(|(i, a)| (a.as_str(), i))
            .collect();
        let incidence =
            file.incidence
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|name| {
                            index.get(name.as_str()).copied().ok_or_else(|| {
                                FcaError::InvalidContext(format!("unknown attribute {name:?} in incidence"))
                            })
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
        FormalContext::new(file.objects.clone(), file.attributes.clone(), incidence)
    }
}

/// Builds the results × stems context.
///
/// Attributes are the `attribute_cap` most document-frequent stems (ties
/// broken lexicographically), stored in lexicographic order. Every result
/// stays an object, even if truncation leaves its row empty.
pub fn build_context(
    result_set: &ResultSet,
    term_sets: &[TermSet],
    attribute_cap: usize,
) -> Result<FormalContext, FcaError> {
    if result_set.is_empty() {
        return Err(FcaError::EmptyContext);
    }
    if term_sets.len() != result_set.len()
        || term_sets
            .iter()
            .zip(&result_set.results)
            .any(|(t, r)| t.doc_id != r.doc_id())
    {
        return Err(FcaError::InvalidContext(
            "term sets do not match the result set one-to-one in rank order".into(),
        ));
    }

    let mut freq: BTreeMap<&str, usize> = BTreeMap::new();
    for ts in term_sets {
        for s in &ts.stems {
            *freq.entry(s.as_str()).or_default() += 1;
        }
    }
    let mut ranked: Vec<(&str, usize)> = freq.into_iter().collect();
    ranked.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    ranked.truncate(attribute_cap);
    let mut attributes: Vec<String> = ranked.into_iter().map(|(s, _)| s.to_string()).collect();
    attributes.sort();

    let index: BTreeMap<&str, usize> = attributes.iter().enumerate().map(|(i, a)| (a.as_str(), i)).collect();
    let incidence = term_sets
        .iter()
        .map(|ts| ts.stems.iter().filter_map(|s| index.get(s.as_str()).copied()).collect())
        .collect();
    let objects = term_sets.iter().map(|t| t.doc_id).collect();
    FormalContext::new(objects, attributes, incidence)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::serp::{result, Source};
    use chrono::Utc;

    pub(crate) fn diamond() -> FormalContext {
        FormalContext::new(
            vec![DocId(1), DocId(2), DocId(3)],
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![0, 1], vec![0, 2], vec![0, 1, 2]],
        )
        .unwrap()
    }

    fn term_sets(rows: &[&[&str]]) -> (ResultSet, Vec<TermSet>) {
        let results = (1..=rows.len() as u32).map(|i| result(i, "t", "")).collect();
        let rs = ResultSet::new("q", results, Source::Fixture, Utc::now()).unwrap();
        let ts = rows
            .iter()
            .enumerate()
            .map(|(i, r)| TermSet {
                doc_id: DocId(i as u32 + 1),
                stems: r.iter().map(|s| s.to_string()).collect(),
            })
            .collect();
        (rs, ts)
    }

    #[test]
    fn build_below_cap_keeps_everything() {
        let (rs, ts) = term_sets(&[&["a", "b"], &["a", "c"], &["a", "b", "c"]]);
        let ctx = build_context(&rs, &ts, 25).unwrap();
        assert_eq!(ctx.attributes(), ["a", "b", "c"]);
        assert_eq!(ctx.object_count(), 3);
        assert_eq!(ctx, diamond());
    }

    #[test]
    fn cap_uses_frequency_then_lexicographic() {
        let (rs, ts) = term_sets(&[&["a", "b"], &["a", "c"], &["a", "b", "c"]]);
        let ctx = build_context(&rs, &ts, 2).unwrap();
        assert_eq!(ctx.attributes(), ["a", "b"]);
    }

    #[test]
    fn truncation_keeps_objects_with_empty_rows() {
        let (rs, ts) = term_sets(&[&["a"], &["a"], &["z"]]);
        let ctx = build_context(&rs, &ts, 1).unwrap();
        assert_eq!(ctx.object_count(), 3);
        assert!(ctx.row(2).is_empty());
    }

    #[test]
    fn zero_results_is_empty_context() {
        let (rs, ts) = term_sets(&[]);
        assert!(matches!(build_context(&rs, &ts, 25), Err(FcaError::EmptyContext)));
    }

    #[test]
    fn mismatched_term_sets_rejected() {
        let (rs, mut ts) = term_sets(&[&["a"], &["b"]]);
        ts.pop();
        assert!(matches!(build_context(&rs, &ts, 25), Err(FcaError::InvalidContext(_))));
    }

    #[test]
    fn object_prime_examples() {
        let ctx = diamond();
        assert_eq!(ctx.object_prime(&[]).unwrap(), [0, 1, 2]);
        assert_eq!(ctx.object_prime(&[2]).unwrap(), [0, 1, 2]);
        assert_eq!(ctx.object_prime(&[0, 1, 2]).unwrap(), [0]);
        assert!(matches!(
            ctx.object_prime(&[3]),
            Err(FcaError::ObjectIndex { index: 3, len: 3 })
        ));
    }

    #[test]
    fn attr_prime_examples() {
        let ctx = diamond();
        assert_eq!(ctx.attr_prime(&[]).unwrap(), [0, 1, 2]);
        assert_eq!(ctx.attr_prime(&[1]).unwrap(), [0, 2]);
        assert_eq!(ctx.attr_prime(&[1, 2]).unwrap(), [2]);
        assert!(matches!(
            ctx.attr_prime(&[7]),
            Err(FcaError::AttributeIndex { index: 7, .. })
        ));
    }

    #[test]
    fn closure_examples() {
        let ctx = diamond();
        assert_eq!(ctx.closure(&[]).unwrap(), [0]);
        assert_eq!(ctx.closure(&[0, 1, 2]).unwrap(), [0, 1, 2]);
        let b = ctx.closure(&[1]).unwrap();
        assert_eq!(b, [0, 1]);
        assert_eq!(ctx.closure(&b).unwrap(), b);
    }

    #[test]
    fn duplicate_attribute_rejected() {
        let err = FormalContext::new(vec![DocId(1)], vec!["a".into(), "a".into()], vec![vec![]]);
        assert!(matches!(err, Err(FcaError::InvalidContext(_))));
    }

    #[test]
    fn context_file_round_trip() {
        let ctx = diamond();
        let back = FormalContext::try_from(ctx.to_file()).unwrap();
        assert_eq!(back, ctx);
    }
}
