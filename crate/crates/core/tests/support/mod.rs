//! Generators and brute-force references shared by the integration and
//! acceptance suites.
#![allow(dead_code)]

use std::collections::BTreeSet;

use chrono::{TimeZone, Utc};
use conceptnav_core::fca::{BitSet, FormalContext};
use conceptnav_core::{DocId, ResultSet, SearchResult, Source};
use rand::seq::SliceRandom;
use rand::Rng;

pub const DENSITIES: [f64; 3] = [0.2, 0.5, 0.8];

/// Context with `g` objects and `m` attributes, each incidence drawn with
/// probability `density`.
pub fn random_context(rng: &mut impl Rng, g: usize, m: usize, density: f64) -> FormalContext {
    let rows = (0..g)
        .map(|_| (0..m).filter(|_| rng.gen_bool(density)).collect())
        .collect();
    FormalContext::new(
        (1..=g as u32).map(DocId).collect(),
        (0..m).map(|j| format!("m{j}")).collect(),
        rows,
    )
    .unwrap()
}

pub fn random_subset(rng: &mut impl Rng, universe: usize) -> BitSet {
    BitSet::from_indices(universe, (0..universe).filter(|_| rng.gen_bool(0.5)))
}

/// Every concept as (extent, intent), found by closing all 2^|M| attribute
/// subsets with naive set scans over the incidence.
pub fn brute_force_concepts(ctx: &FormalContext) -> BTreeSet<(Vec<usize>, Vec<usize>)> {
    let (g, m) = (ctx.object_count(), ctx.attribute_count());
    assert!(m < 20, "brute force is exponential in |M|");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << m) {
        let b: Vec<usize> = (0..m).filter(|j| mask & (1 << j) != 0).collect();
        let extent: Vec<usize> = (0..g).filter(|&o| b.iter().all(|&a| ctx.has(o, a))).collect();
        let intent: Vec<usize> = (0..m).filter(|&a| extent.iter().all(|&o| ctx.has(o, a))).collect();
        out.insert((extent, intent));
    }
    out
}

const VOCAB: &[&str] = &[
    "campus",
    "student",
    "research",
    "engineering",
    "admission",
    "library",
    "doha",
    "college",
    "program",
    "faculty",
    "science",
    "business",
    "health",
    "sport",
    "course",
    "medicine",
    "graduate",
    "alumni",
];

/// A result set of 1..=12 results whose titles and snippets draw from a
/// small vocabulary, so stems are shared often.
pub fn random_result_set(rng: &mut impl Rng) -> ResultSet {
    let n = rng.gen_range(1..=12);
    let vocab_len = rng.gen_range(3..=VOCAB.len());
    let words = &VOCAB[..vocab_len];
    let pick = |rng: &mut _, k: usize| -> String {
        (0..k)
            .map(|_| *words.choose(rng).unwrap())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let results = (1..=n as u32)
        .map(|rank| {
            let tk = rng.gen_range(1..=4);
            let sk = rng.gen_range(0..=8);
            SearchResult {
                rank,
                title: pick(rng, tk),
                url: format!("https://example.org/{rank}"),
                snippet: pick(rng, sk),
            }
        })
        .collect();
    ResultSet::new(
        "random query",
        results,
        Source::Fixture,
        Utc.with_ymd_and_hms(2024, 1, 1, 0, 0, 0).unwrap(),
    )
    .unwrap()
}

/// [`random_context`] with sizes drawn from the given ranges.
pub fn sized_context(
    rng: &mut impl Rng,
    g: std::ops::RangeInclusive<usize>,
    m: std::ops::RangeInclusive<usize>,
    density: f64,
) -> FormalContext {
    let (g, m) = (rng.gen_range(g), rng.gen_range(m));
    random_context(rng, g, m, density)
}
