use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex64;
use qball_bench::{fock, matrix_sample, Q};
use qball_core::boundary::{evaluate_sample, quotient_norm};
use qball_core::fockops::{op_norm, SparseOperator, DEFAULT_MAX_ITER, DEFAULT_TOL};

fn matvec(c: &mut Criterion) {
    let op = evaluate_sample(&fock(10), &matrix_sample(1)).unwrap();
    let v: Vec<Complex64> = (0..op.dim()).map(|i| Complex64::new((i % 7) as f64, 1.0)).collect();
    let sparse = SparseOperator::from_tensor(&op);
    c.bench_function("structured matvec 2x2 Fock N=10", |b| b.iter(|| op.matvec(&v).unwrap()));
    c.bench_function("sparse matvec 2x2 Fock N=10", |b| b.iter(|| sparse.matvec(&v)));
}

fn norms(c: &mut Criterion) {
    let mut g = c.benchmark_group("norms");
    g.sample_size(10);
    let s = matrix_sample(2);
    let op = evaluate_sample(&fock(8), &s).unwrap();
    g.bench_function("op_norm 2x2 Fock N=8", |b| b.iter(|| op_norm(&op, DEFAULT_TOL, DEFAULT_MAX_ITER, 42)));
    g.bench_function("quotient_norm 2x2 grid 8 N=48", |b| b.iter(|| quotient_norm(&s, 8, 48, Q, 42).unwrap()));
    g.finish();
}

criterion_group!(benches, matvec, norms);
criterion_main!(benches);
