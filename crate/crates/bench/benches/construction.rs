use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use lietower_core::{verify_all, ChevalleyAlgebra, Mode, RootSystem, RootSystemType, Structures};

fn construction(c: &mut Criterion) {
    for kind in RootSystemType::ALL {
        c.bench_function(&format!("{kind}/root_system"), |b| {
            b.iter(|| RootSystem::new(black_box(kind)))
        });
        let rs = RootSystem::new(kind);
        c.bench_function(&format!("{kind}/chevalley"), |b| {
            b.iter(|| ChevalleyAlgebra::new(black_box(&rs)).unwrap())
        });
        c.bench_function(&format!("{kind}/structures"), |b| {
            b.iter(|| Structures::new(black_box(kind)).unwrap())
        });
    }
}

fn checks(c: &mut Criterion) {
    let mut group = c.benchmark_group("checks");
    group.sample_size(10);
    for kind in RootSystemType::ALL {
        let alg = ChevalleyAlgebra::new(&RootSystem::new(kind)).unwrap();
        group.bench_function(format!("{kind}/jacobi_exhaustive"), |b| {
            b.iter(|| alg.jacobi_exhaustive())
        });
        group.bench_function(format!("{kind}/verify_fast"), |b| {
            b.iter(|| verify_all(kind, None, Mode::FAST))
        });
    }
    group.finish();
}

criterion_group!(benches, construction, checks);
criterion_main!(benches);
