mod support;

use std::collections::BTreeSet;

use conceptnav_core::fca::{covering_edges, enumerate_concepts, BitSet, ConceptLattice, FormalContext, LatticeDump};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use support::{brute_force_concepts, random_context, random_subset, sized_context, DENSITIES};

const LIMIT: usize = 10_000;

fn as_pairs(ctx: &FormalContext) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    enumerate_concepts(ctx, LIMIT)
        .unwrap()
        .into_iter()
        .map(|c| (c.extent.to_vec(), c.intent.to_vec()))
        .collect()
}

#[test]
fn close_by_one_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..300 {
        let density = DENSITIES[i % 3];
        let ctx = sized_context(&mut rng, 1..=8, 0..=8, density);
        let listed = enumerate_concepts(&ctx, LIMIT).unwrap();
        let unique: BTreeSet<_> = listed.iter().map(|c| (c.extent.to_vec(), c.intent.to_vec())).collect();
        assert_eq!(unique.len(), listed.len(), "duplicate concept in case {i}");
        assert_eq!(unique, brute_force_concepts(&ctx), "case {i}: {ctx:?}");
    }
}

#[test]
fn output_is_sorted_lectically() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let ctx = random_context(&mut rng, 6, 6, 0.5);
        let c = enumerate_concepts(&ctx, LIMIT).unwrap();
        assert!(c.windows(2).all(|w| w[0].intent.lectic_cmp(&w[1].intent).is_lt()));
    }
}

#[test]
fn galois_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for i in 0..1500 {
        let ctx = sized_context(&mut rng, 1..=10, 1..=10, DENSITIES[i % 3]);
        let (g, m) = (ctx.object_count(), ctx.attribute_count());
        let b = random_subset(&mut rng, m);
        let mut b2 = b.clone();
        b2.union_with(&random_subset(&mut rng, m));
        let a = random_subset(&mut rng, g);
        let mut a2 = a.clone();
        a2.union_with(&random_subset(&mut rng, g));

        let cb = ctx.close(&b);
        assert!(b.is_subset(&cb), "extensive");
        assert!(cb.is_subset(&ctx.close(&b2)), "monotone");
        assert_eq!(ctx.close(&cb), cb, "idempotent");
        assert!(
            ctx.extent_of(&b2).is_subset(&ctx.extent_of(&b)),
            "attribute prime antitone"
        );
        assert!(
            ctx.intent_of(&a2).is_subset(&ctx.intent_of(&a)),
            "object prime antitone"
        );
        // A ⊆ B' iff B ⊆ A'
        assert_eq!(
            a.is_subset(&ctx.extent_of(&b)),
            b.is_subset(&ctx.intent_of(&a)),
            "galois connection"
        );
    }
}

#[test]
fn index_api_agrees_with_bitsets() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..200 {
        let ctx = random_context(&mut rng, 5, 5, 0.5);
        let b = random_subset(&mut rng, 5);
        assert_eq!(ctx.closure(&b.to_vec()).unwrap(), ctx.close(&b).to_vec());
        assert_eq!(ctx.attr_prime(&b.to_vec()).unwrap(), ctx.extent_of(&b).to_vec());
        assert_eq!(ctx.object_prime(&b.to_vec()).unwrap(), ctx.intent_of(&b).to_vec());
    }
    let ctx = random_context(&mut rng, 2, 2, 0.5);
    assert!(ctx.object_prime(&[5]).is_err());
    assert!(ctx.attr_prime(&[2]).is_err());
}

fn reachable(edges: &[(usize, usize)], n: usize) -> Vec<BitSet> {
    let mut reach: Vec<BitSet> = (0..n).map(|_| BitSet::empty(n)).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for &(p, c) in edges {
            let mut next = reach[p].clone();
            next.insert(c);
            next.union_with(&reach[c].clone());
            if next != reach[p] {
                reach[p] = next;
                changed = true;
            }
        }
    }
    reach
}

#[test]
fn covering_edges_form_the_hasse_diagram() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for i in 0..200 {
        let ctx = sized_context(&mut rng, 1..=7, 0..=7, DENSITIES[i % 3]);
        let concepts = enumerate_concepts(&ctx, LIMIT).unwrap();
        let n = concepts.len();
        let edges = covering_edges(&concepts);
        let reach = reachable(&edges, n);
        for p in 0..n {
            assert!(!reach[p].contains(p), "cycle through {p}");
            for c in 0..n {
                let strict = concepts[c].extent.is_proper_subset(&concepts[p].extent);
                assert_eq!(reach[p].contains(c), strict, "transitive closure differs at ({p},{c})");
            }
        }
        for &(p, c) in &edges {
            // nothing strictly between the ends of a cover
            assert!(!(0..n).any(|k| concepts[c].extent.is_proper_subset(&concepts[k].extent)
                && concepts[k].extent.is_proper_subset(&concepts[p].extent)));
        }
    }
}

#[test]
fn lattice_has_top_and_bottom_and_dumps_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..50 {
        let ctx = random_context(&mut rng, 5, 5, 0.5);
        let l = ConceptLattice::from_context(&ctx, LIMIT).unwrap();
        assert_eq!(l.concept(l.top()).extent.len(), 5);
        assert!(l
            .concepts()
            .iter()
            .all(|c| l.concept(l.bottom()).extent.is_subset(&c.extent)));
        let dump = l.dump(&ctx);
        let back: LatticeDump = serde_json::from_str(&serde_json::to_string(&dump).unwrap()).unwrap();
        assert_eq!(back, dump);
        assert_eq!(dump.concepts.len(), l.len());
    }
}

#[test]
fn enumeration_matches_pairs_helper() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let ctx = random_context(&mut rng, 8, 8, 0.5);
    assert_eq!(as_pairs(&ctx), brute_force_concepts(&ctx));
}
