use criterion::{criterion_group, criterion_main, Criterion};
use qball_core::algebra::{confluence_probe, preset_by_name, NCPoly};
use qball_core::homs::{build_hom, check_hom};

fn normal_form(c: &mut Criterion) {
    let pm = preset_by_name("polMat2").unwrap();
    let p = NCPoly::parse_word(&pm, "z_2^2* z_1^1* z_2^1 z_1^2 z_1^1 z_2^2").unwrap();
    c.bench_function("normal_form polMat2 length 6", |b| b.iter(|| p.normal_form()));
    c.bench_function("confluence_probe polMat2 x100", |b| b.iter(|| confluence_probe(&pm, 100, 1)));
}

fn homomorphism(c: &mut Criterion) {
    let d = build_hom("D").unwrap();
    let mut g = c.benchmark_group("check_hom");
    g.sample_size(10);
    g.bench_function("D", |b| b.iter(|| check_hom(&d).unwrap()));
    g.finish();
}

criterion_group!(benches, normal_form, homomorphism);
criterion_main!(benches);
