use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use perfdiv::divisibility::{find_good_partition, is_perfectly_divisible};
use perfdiv::invariants::omega;
use perfdiv::perfection::is_perfect;
use perfdiv::{catalog, Limits};

fn decide(c: &mut Criterion) {
    let lim = Limits::default();
    let figure1 = catalog::figure1();
    let grotzsch = catalog::grotzsch();
    let petersen = catalog::petersen();
    c.bench_function("omega/petersen", |b| b.iter(|| omega(black_box(&petersen))));
    c.bench_function("is_perfect/figure1", |b| {
        b.iter(|| is_perfect(black_box(&figure1), &lim))
    });
    c.bench_function("find_good_partition/figure1", |b| {
        b.iter(|| find_good_partition(black_box(&figure1), &lim))
    });
    c.bench_function("perfectly_divisible/grotzsch", |b| {
        b.iter(|| is_perfectly_divisible(black_box(&grotzsch), &lim))
    });
}

criterion_group!(benches, decide);
criterion_main!(benches);
