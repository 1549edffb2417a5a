use std::hint::black_box;

use at4_bench::sample_params;
use at4_cli::cmd_enumerate;
use at4_cli::document::EnumerationRequest;
use at4_core::feasibility::{feasibility_report, Registry};
use at4_core::oracle::{run_oracle, OracleName};
use at4_core::{global_multiplicities, intersection_array};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn spectra(c: &mut Criterion) {
    let mut group = c.benchmark_group("global_multiplicities");
    for params in sample_params() {
        let array = intersection_array(&params);
        group.bench_with_input(BenchmarkId::from_parameter(&params), &array, |b, a| {
            b.iter(|| global_multiplicities(black_box(a)).unwrap())
        });
    }
    group.finish();
}

fn reports(c: &mut Criterion) {
    let reg = Registry::bundled();
    let mut group = c.benchmark_group("feasibility_report");
    for params in sample_params() {
        group.bench_with_input(BenchmarkId::from_parameter(&params), &params, |b, p| {
            b.iter(|| feasibility_report(black_box(p), Some(&reg)))
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let req = EnumerationRequest::new(2, 3);
    c.bench_function("enumerate q=2..3", |b| b.iter(|| cmd_enumerate(black_box(&req)).unwrap()));
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("j84", |b| b.iter(|| run_oracle(OracleName::J84)));
    group.finish();
}

criterion_group!(benches, spectra, reports, enumeration, oracle);
criterion_main!(benches);
