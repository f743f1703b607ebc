//! Compare the rayon-backed batch schedule against the sequential fallback
//! on the two heaviest batch workloads: tensor canonical-basis tables and
//! structure-constant boxes. With the `parallel` feature disabled the two
//! schedules coincide.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use qcover_core::par::{map_cases, map_cases_seq};
use qcover_core::rep::tensor_cb;
use qcover_core::udot::{structure_constants, CbIndex};

fn tensor_grid_cases(max_st: i64) -> Vec<(i64, i64)> {
    (0..=max_st).flat_map(|s| (0..=max_st).map(move |t| (s, t))).collect()
}

fn tensor_case(case: &(i64, i64)) -> usize {
    tensor_cb(case.0, case.1).entries.len()
}

fn struct_const_cases(max_ab: i64, max_k: i64) -> Vec<(CbIndex, CbIndex)> {
    let mut indices = Vec::new();
    for a in 0..=max_ab {
        for b in 0..=max_ab {
            for k in -max_k..=max_k {
                indices.push(CbIndex::new(a, b, k));
            }
        }
    }
    indices
        .iter()
        .flat_map(|i1| {
            indices
                .iter()
                .filter(|i2| i1.right_weight() == i2.left_weight())
                .map(move |i2| (*i1, *i2))
        })
        .collect()
}

fn struct_const_case(case: &(CbIndex, CbIndex)) -> usize {
    structure_constants(case.0, case.1).expect("positive constants").len()
}

fn bench_tensor_cb(c: &mut Criterion) {
    let mut group = c.benchmark_group("tensor_cb_grid");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| {
            let out: usize =
                map_cases(black_box(tensor_grid_cases(3)), |case| tensor_case(&case))
                    .into_iter()
                    .sum();
            black_box(out)
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let out: usize =
                map_cases_seq(black_box(tensor_grid_cases(3)), |case| tensor_case(&case))
                    .into_iter()
                    .sum();
            black_box(out)
        })
    });
    group.finish();
}

fn bench_structure_constants(c: &mut Criterion) {
    let mut group = c.benchmark_group("structure_constant_box");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| {
            let out: usize =
                map_cases(black_box(struct_const_cases(2, 5)), |case| struct_const_case(&case))
                    .into_iter()
                    .sum();
            black_box(out)
        })
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            let out: usize = map_cases_seq(black_box(struct_const_cases(2, 5)), |case| {
                struct_const_case(&case)
            })
            .into_iter()
            .sum();
            black_box(out)
        })
    });
    group.finish();
}

criterion_group!(benches, bench_tensor_cb, bench_structure_constants);
criterion_main!(benches);
