use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use geomint_bench::rigid_body;
use geomint_core::{
    euler_poincare_step, lie_poisson_step, reference_oracle, DiscretizationMap, EulerPoincareState, IntegratorConfig,
    TauMap,
};

fn steps(c: &mut Criterion) {
    let (inertia, s0) = rigid_body();
    let cfg = IntegratorConfig::new(1e-2).unwrap();
    for (name, tau) in [("exp", TauMap::EXP), ("cayley", TauMap::CAYLEY)] {
        let map = DiscretizationMap::forward(tau);
        c.bench_function(&format!("lie_poisson_step/{name}"), |b| {
            b.iter(|| lie_poisson_step(&inertia, &cfg, &map, black_box(&s0)).unwrap())
        });
        let ep = EulerPoincareState::new(s0.g, inertia.apply_inverse(&s0.mu));
        c.bench_function(&format!("euler_poincare_step/{name}"), |b| {
            b.iter(|| euler_poincare_step(&inertia, &cfg, &map, black_box(&ep)).unwrap())
        });
    }
}

fn trajectory(c: &mut Criterion) {
    let (inertia, s0) = rigid_body();
    let cfg = IntegratorConfig::new(1e-2).unwrap();
    let map = DiscretizationMap::forward(TauMap::EXP);
    let mut group = c.benchmark_group("trajectory");
    group.sample_size(20);
    group.bench_function("lie_poisson/1000_steps", |b| {
        b.iter(|| {
            let mut s = s0;
            for _ in 0..1000 {
                s = lie_poisson_step(&inertia, &cfg, &map, &s).unwrap().state;
            }
            s
        })
    });
    group.bench_function("reference/t=1", |b| {
        b.iter(|| reference_oracle(&inertia, black_box(&s0), 1.0, 1e-12).unwrap())
    });
    group.finish();
}

criterion_group!(benches, steps, trajectory);
criterion_main!(benches);
