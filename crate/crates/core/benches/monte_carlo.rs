use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use poisson_di::analysis::{converse_ratio_check_with, estimate_type1_with, ConverseParams};
use poisson_di::channel::ChannelParams;
use poisson_di::codebook::{construct_lattice, construct_saturated_random, packing_density_estimate_with, PackingParams};
use poisson_di::identification::DecoderConfig;
use poisson_di::math::Dimension;
use poisson_di::Exec;

const STRATEGIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn type1(c: &mut Criterion) {
    let n = Dimension::new(1024).unwrap();
    let p = PackingParams::derive(n, 0.5, 1.0, 1.0).unwrap();
    let cb = construct_saturated_random(&p, 1, 1).unwrap();
    let dec = DecoderConfig::new(&cb, ChannelParams::new(0.1).unwrap());
    let mut g = c.benchmark_group("type1_n1024_1000_trials");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| estimate_type1_with(0, &dec, 1000, 7, exec).unwrap())
        });
    }
    g.finish();
}

fn density(c: &mut Criterion) {
    let p = PackingParams::derive(Dimension::new(4).unwrap(), 0.5, 1.0, 1.0)
        .unwrap()
        .with_radius(0.2)
        .unwrap();
    let cb = construct_saturated_random(&p, 4096, 3).unwrap();
    let mut g = c.benchmark_group("density_n4_20000_probes");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| packing_density_estimate_with(&cb, 20_000, 5, exec))
        });
    }
    g.finish();
}

fn converse(c: &mut Criterion) {
    let n = Dimension::new(6).unwrap();
    let p = PackingParams::derive(n, 0.5, 1.0, 1.0).unwrap().with_radius(0.1).unwrap();
    let cb = construct_lattice(&p, 1024).unwrap();
    let cp = ConverseParams::new(n, 0.5, 1.0).unwrap();
    let mut g = c.benchmark_group("converse_ratio_1024_words");
    g.sample_size(10);
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| converse_ratio_check_with(&cb, 0.1, &cp, exec))
        });
    }
    g.finish();
}

criterion_group!(benches, type1, density, converse);
criterion_main!(benches);
