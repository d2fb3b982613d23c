//! Sequential against data-parallel evaluation of the corpus sweeps.
//!
//! Without the `parallel` feature both variants run the same loop.

use std::hint::black_box;

use angle_defect::axioms::{check_continuity_all, check_subdivision, EmbeddingSequence, SchemeProbe};
use angle_defect::corpus::{self, CorpusEntry};
use angle_defect::curvature::gauss_bonnet_report_with;
use angle_defect::{ComplexFunction, Execution, VertexFunction};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn jittered_corpus() -> Vec<CorpusEntry> {
    let base = corpus::full().unwrap();
    let mut out = Vec::new();
    for (i, e) in base.iter().enumerate() {
        let s = EmbeddingSequence::jitter(&e.id, &e.complex, i as u64);
        for (n, m) in s.members().take(5).enumerate() {
            out.push(CorpusEntry::new(format!("{}#{n}", e.id), m.unwrap()));
        }
    }
    out
}

fn gauss_bonnet(c: &mut Criterion) {
    let entries = jittered_corpus();
    let phi = VertexFunction::StandardCurvature;
    let lambda = ComplexFunction::Euler;
    let mut group = c.benchmark_group("gauss_bonnet_sweep");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                exec.map(&entries, |e| gauss_bonnet_report_with(&e.complex, &phi, &lambda, Execution::Sequential))
                    .into_iter()
                    .map(|r| r.unwrap().residual.abs())
                    .fold(0.0, f64::max)
            })
        });
    }
    group.finish();
}

fn per_vertex(c: &mut Criterion) {
    let spiral = corpus::surfaces()
        .unwrap()
        .into_iter()
        .find(|e| e.id.starts_with("spiral-2.5"))
        .unwrap();
    let mut group = c.benchmark_group("per_vertex_spiral");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| VertexFunction::StandardCurvature.evaluate_all(black_box(&spiral.complex), exec).unwrap())
        });
    }
    group.finish();
}

fn subdivision(c: &mut Criterion) {
    let entries = corpus::full().unwrap();
    let probes = [SchemeProbe::FaceCentroids, SchemeProbe::Barycentric];
    let mut group = c.benchmark_group("subdivision_check");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| check_subdivision(&VertexFunction::ClassicalDefect, &entries, &probes, exec).unwrap())
        });
    }
    group.finish();
}

fn continuity(c: &mut Criterion) {
    let sequences: Vec<EmbeddingSequence> = corpus::full()
        .unwrap()
        .iter()
        .enumerate()
        .map(|(i, e)| EmbeddingSequence::jitter(&e.id, &e.complex, i as u64))
        .collect();
    let mut group = c.benchmark_group("continuity_check");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| check_continuity_all(&VertexFunction::StandardCurvature, &sequences, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, gauss_bonnet, per_vertex, subdivision, continuity);
criterion_main!(benches);
