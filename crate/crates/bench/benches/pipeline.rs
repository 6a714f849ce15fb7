use criterion::{black_box, criterion_group, criterion_main, BatchSize, Criterion};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use z2index::borel::{borel_filtered_complex, ss_page, DEFAULT_TRUNCATION};
use z2index::catalog;
use z2index::complexes::Coeff;
use z2index::decider::{decide, DecideConfig};
use z2index::exactalg::{smith_normal_form, IntMatrix};

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let data = (0..n * n).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect();
    IntMatrix::from_vec(n, n, data)
}

fn smith(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [5, 12, 24] {
        c.bench_function(&format!("smith_normal_form {n}x{n}"), |b| {
            b.iter_batched(|| random_matrix(&mut rng, n), |m| smith_normal_form(&m), BatchSize::SmallInput)
        });
    }
}

fn borel(c: &mut Criterion) {
    let kirby = catalog::get("kirby").unwrap().complex;
    c.bench_function("borel pages 2 and 3, kirby", |b| {
        b.iter(|| {
            let f = borel_filtered_complex(black_box(&kirby), DEFAULT_TRUNCATION, Coeff::ZMinus).unwrap();
            (ss_page(&f, 2).unwrap(), ss_page(&f, 3).unwrap())
        })
    });
}

fn decider(c: &mut Criterion) {
    let config = DecideConfig::default();
    for name in ["kirby", "s1s3_c", "sphere4"] {
        let complex = catalog::get(name).unwrap().complex;
        c.bench_function(&format!("decide {name}"), |b| b.iter(|| decide(black_box(&complex), &config).unwrap()));
    }
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = smith, borel, decider
}
criterion_main!(benches);
