use std::path::Path;

use conceptnav_bench::random_context;
use conceptnav_core::fca::{covering_edges, enumerate_concepts};
use conceptnav_core::serp::load_fixture;
use conceptnav_core::text::porter_stem;
use conceptnav_core::{explore, SearchSettings};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn concepts(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_concepts");
    for (g, m) in [(10, 10), (30, 25), (60, 25)] {
        let ctx = random_context(42, g, m, 0.3);
        group.bench_with_input(BenchmarkId::from_parameter(format!("{g}x{m}")), &ctx, |b, ctx| {
            b.iter(|| enumerate_concepts(black_box(ctx), usize::MAX).unwrap())
        });
    }
    group.finish();
}

fn covers(c: &mut Criterion) {
    let ctx = random_context(42, 30, 25, 0.3);
    let list = enumerate_concepts(&ctx, usize::MAX).unwrap();
    c.bench_function(&format!("covering_edges/{}", list.len()), |b| {
        b.iter(|| covering_edges(black_box(&list)))
    });
}

fn stemming(c: &mut Criterion) {
    let words = [
        "university",
        "generalizations",
        "relational",
        "conditional",
        "hopefully",
        "electrical",
        "adjustment",
        "communities",
        "engineering",
        "admissions",
        "running",
        "happiness",
    ];
    c.bench_function("porter_stem/12 words", |b| {
        b.iter(|| words.iter().map(|w| porter_stem(black_box(w)).len()).sum::<usize>())
    });
}

fn end_to_end(c: &mut Criterion) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/golden.json");
    let rs = load_fixture(&path).unwrap();
    let settings = SearchSettings::default();
    c.bench_function("explore/golden", |b| {
        b.iter(|| explore(black_box(rs.clone()), &settings).unwrap())
    });
}

criterion_group!(benches, concepts, covers, stemming, end_to_end);
criterion_main!(benches);
