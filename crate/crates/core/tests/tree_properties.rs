mod support;

use std::collections::BTreeSet;
use std::path::Path;

use conceptnav_core::serp::load_fixture;
use conceptnav_core::tree::{results_at, step, NavCursor, NavKey, TreeConfig, TreeNode};
use conceptnav_core::{explore, DocId, Exploration, ResultSet, SearchSettings};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn golden() -> ResultSet {
    load_fixture(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/golden.json")).unwrap()
}

fn doc_set(ex: &Exploration, node: &TreeNode) -> BTreeSet<DocId> {
    results_at(&ex.tree, &node.path, &ex.result_set)
        .unwrap()
        .into_iter()
        .map(|r| r.doc_id())
        .collect()
}

/// Checks strict narrowing and label locality below `node`; returns the
/// number of parent/child pairs examined.
fn check_narrowing(ex: &Exploration, node: &TreeNode) -> usize {
    let parent_docs = doc_set(ex, node);
    assert_eq!(parent_docs.len(), node.count);
    let mut pairs = 0;
    for child in &node.children {
        let child_docs = doc_set(ex, child);
        assert!(
            child.count < node.count,
            "{} ({}) under {} ({})",
            child.label,
            child.count,
            node.label,
            node.count
        );
        assert!(child_docs.is_subset(&parent_docs) && child_docs != parent_docs);
        // every result under a child carries its label and aliases
        for d in &child_docs {
            let ts = ex.term_sets.iter().find(|t| t.doc_id == *d).unwrap();
            for term in std::iter::once(&child.label).chain(&child.aliases) {
                assert!(ts.stems.contains(term), "{d} lacks {term}");
            }
        }
        pairs += 1 + check_narrowing(ex, child);
    }
    pairs
}

#[test]
fn golden_fixture_narrows_strictly() {
    let ex = explore(golden(), &SearchSettings::default()).unwrap();
    assert_eq!(ex.tree.count, 9);
    assert!(ex.tree.depth() >= 2);
    assert!(check_narrowing(&ex, &ex.tree) > 10);
}

#[test]
fn random_fixtures_narrow_strictly() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..150 {
        let rs = support::random_result_set(&mut rng);
        let settings = SearchSettings {
            tree: TreeConfig {
                max_depth: rng.gen_range(1..=5),
                min_extent: rng.gen_range(1..=3),
                max_children: rng.gen_range(1..=10),
            },
            ..Default::default()
        };
        let ex = explore(rs, &settings).unwrap();
        check_narrowing(&ex, &ex.tree);
        assert!(ex.tree.depth() <= settings.tree.max_depth);
        ex.tree.walk(&mut |n| {
            assert!(n.children.len() <= settings.tree.max_children);
            if !n.path.is_empty() {
                assert!(n.count >= settings.tree.min_extent);
            }
        });
    }
}

#[test]
fn same_input_gives_same_tree_json() {
    let a = explore(golden(), &SearchSettings::default()).unwrap();
    let b = explore(golden(), &SearchSettings::default()).unwrap();
    assert_eq!(
        serde_json::to_string(&a.tree).unwrap(),
        serde_json::to_string(&b.tree).unwrap()
    );
}

#[test]
fn stepping_down_visits_every_node_once() {
    let ex = explore(golden(), &SearchSettings::default()).unwrap();
    let order = ex.tree.preorder_paths();
    let mut cursor = NavCursor::root();
    let mut seen = vec![cursor.position.clone()];
    loop {
        let s = step(&ex.tree, &cursor, NavKey::Down);
        if s.at_boundary {
            assert_eq!(s.cursor, cursor);
            break;
        }
        cursor = s.cursor;
        seen.push(cursor.position.clone());
    }
    assert_eq!(seen, order);
    // and back up to the root
    for expected in order.iter().rev().skip(1) {
        cursor = step(&ex.tree, &cursor, NavKey::Up).cursor;
        assert_eq!(&cursor.position, expected);
    }
    assert!(step(&ex.tree, &cursor, NavKey::Up).at_boundary);
}
