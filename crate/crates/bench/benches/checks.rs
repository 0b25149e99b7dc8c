use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use leibrack::group_hopf::{permutation_module, rack_q};
use leibrack::leibniz::hv_rmatrix;
use leibrack::lm_env::{build_env, f_tilde_checks};
use leibrack::yd::{braided_leibniz_from_q, braiding, check_braided_leibniz, check_ybe, check_yd};
use leibrack_bench::{dihedral_augmented, ker_eps_s4, sl2_object};

fn rmatrix(c: &mut Criterion) {
    let t = hv_rmatrix().matrix;
    c.bench_function("ybe hv 16x16", |b| b.iter(|| check_ybe(black_box(&t)).unwrap()));
}

fn yd(c: &mut Criterion) {
    let m = ker_eps_s4();
    c.bench_function("check_yd ker eps S4", |b| b.iter(|| check_yd(black_box(&m)).unwrap()));
    let t = braiding(&m).matrix;
    c.bench_function("ybe ker eps S4 sparse", |b| {
        b.iter(|| check_ybe(black_box(&t)).unwrap())
    });
}

fn racks(c: &mut Criterion) {
    let a = dihedral_augmented(7);
    let m = permutation_module(&a);
    let d = braided_leibniz_from_q(&m, &rack_q(&a)).unwrap();
    c.bench_function("braided leibniz R7", |b| {
        b.iter(|| check_braided_leibniz(black_box(&d)))
    });
}

fn env(c: &mut Criterion) {
    let obj = sl2_object();
    let mut g = c.benchmark_group("env sl2");
    g.sample_size(10);
    for d in [2, 3] {
        g.bench_function(format!("build+checks d={d}"), |b| {
            b.iter(|| f_tilde_checks(&build_env(black_box(&obj), d)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, rmatrix, yd, racks, env);
criterion_main!(benches);
