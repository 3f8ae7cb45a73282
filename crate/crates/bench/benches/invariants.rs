use criterion::{criterion_group, criterion_main, Criterion};
use superbraid::{alexander, closure_trace, evaluate, gap, zh_tangle};
use superbraid_bench::{braid, closed, knot_3_5, TREFOIL, WIDTH6};

fn trace_route(c: &mut Criterion) {
    let trefoil = braid(TREFOIL);
    let wide = braid(WIDTH6);
    let mut g = c.benchmark_group("closure_trace");
    g.bench_function("trefoil 2|1", |b| b.iter(|| closure_trace(&trefoil, &closed(2, 1)).unwrap()));
    g.sample_size(10);
    g.bench_function("width6 2|2", |b| b.iter(|| closure_trace(&wide, &closed(2, 2)).unwrap()));
    g.finish();
}

fn direct_route(c: &mut Criterion) {
    let t = zh_tangle(&knot_3_5().closure().unwrap());
    let mut g = c.benchmark_group("evaluate");
    g.sample_size(10);
    g.bench_function("3.5 1|1", |b| b.iter(|| evaluate(&t, &closed(1, 1)).unwrap()));
    g.bench_function("3.5 2|1", |b| b.iter(|| evaluate(&t, &closed(2, 1)).unwrap()));
    g.finish();
}

fn burau(c: &mut Criterion) {
    let wide = braid(WIDTH6);
    c.bench_function("gap width6", |b| b.iter(|| gap(&wide)));
    c.bench_function("alexander width6", |b| b.iter(|| alexander(&wide)));
}

criterion_group!(benches, trace_route, direct_route, burau);
criterion_main!(benches);
