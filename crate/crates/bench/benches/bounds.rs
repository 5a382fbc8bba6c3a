use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use graph_energy::{
    abc_triple, eigenvalues, generate, moment_summary, solve_bound_lp, theorem1_bound, Direction,
    FamilySpec, Graph, LpProblem,
};

fn graph(spec: &str) -> Graph {
    generate(&spec.parse::<FamilySpec>().unwrap()).unwrap()
}

fn spectra(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigenvalues");
    for n in [16, 64, 128] {
        let g = graph(&format!("gnp:{n}:0.3:1"));
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| eigenvalues(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn moments(c: &mut Criterion) {
    let mut group = c.benchmark_group("moment_summary");
    for n in [64, 256, 1024] {
        let g = graph(&format!("gnp:{n}:0.1:2"));
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| moment_summary(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn closed_form(c: &mut Criterion) {
    let t = abc_triple(&moment_summary(&graph("petersen")).unwrap()).unwrap();
    c.bench_function("theorem1_bound", |b| {
        b.iter(|| theorem1_bound(black_box(&t)))
    });
}

fn linear_program(c: &mut Criterion) {
    let g = graph("gnp:20:0.5:3");
    let mut group = c.benchmark_group("bound_lp");
    group.sample_size(20);
    for degree in [4, 8, 12] {
        let p = LpProblem::for_graph(&g, degree, Direction::Above).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(degree), &p, |b, p| {
            b.iter(|| solve_bound_lp(black_box(p)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, spectra, moments, closed_form, linear_program);
criterion_main!(benches);
