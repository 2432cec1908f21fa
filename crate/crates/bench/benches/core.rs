use std::hint::black_box;

use backedge_core::blockade::{trace_table, Blockade, Host};
use backedge_core::catalog::catalog;
use backedge_core::construct::{build_counterexample, ConstructionParams};
use backedge_core::enumerate::{all_tournaments, backedge_census};
use backedge_core::optimal::min_backedge_numbering;
use backedge_core::search::max_pure_pair;
use backedge_core::{Object, Tournament};
use criterion::{criterion_group, criterion_main, Criterion};
use num_rational::Ratio;

fn named(name: &str) -> Tournament {
    match catalog(name) {
        Ok(Object::Tournament(t)) => t,
        _ => panic!("{name} is not a catalog tournament"),
    }
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("all_tournaments_6", |b| b.iter(|| all_tournaments(black_box(6)).unwrap().len()));
    let p7m = named("P_7_minus");
    c.bench_function("census_p7_minus", |b| b.iter(|| backedge_census(black_box(&p7m)).unwrap().len()));
}

fn searches(c: &mut Criterion) {
    let p7 = named("P_7");
    c.bench_function("min_backedges_p7", |b| b.iter(|| min_backedge_numbering(black_box(&p7)).unwrap()));
    c.bench_function("max_pure_pair_p7", |b| b.iter(|| max_pure_pair(black_box(&p7)).unwrap()));
}

fn blockades(c: &mut Criterion) {
    let host = Host::Tournament(named("P_7"));
    let b = Blockade::singletons(7).unwrap();
    c.bench_function("trace_table_p7_tau4", |bn| bn.iter(|| trace_table(&host, black_box(&b), 4, 1 << 22).unwrap().len()));
}

fn construction(c: &mut Criterion) {
    let params = ConstructionParams::new(2, Ratio::new(1, 2), 8, 0).unwrap();
    let mut g = c.benchmark_group("construction");
    g.sample_size(10);
    g.bench_function("k2_c1/2_w8", |b| b.iter(|| build_counterexample(black_box(&params)).unwrap()));
    g.finish();
}

criterion_group!(benches, enumeration, searches, blockades, construction);
criterion_main!(benches);
