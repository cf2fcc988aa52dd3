use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use grassclique::{census, parse_matrix, rowspace, star_pi, Field, GrassmannParams, Grassmannian};

fn rref(c: &mut Criterion) {
    let f = Field::new(9).unwrap();
    let m = parse_matrix(
        "1 2 3 4 5 6 7 8; 8 7 6 5 4 3 2 1; 0 1 0 2 0 3 0 4; 5 5 5 5 1 1 1 1",
        &f,
    )
    .unwrap();
    c.bench_function("rref_gf9_4x8", |b| b.iter(|| black_box(&m).rref()));
}

fn enumeration(c: &mut Criterion) {
    let f = Field::new(3).unwrap();
    c.bench_function("enumerate_gr_3_5_3", |b| {
        b.iter(|| Grassmannian::new(black_box(&f), 5, 3).unwrap().count())
    });
}

fn star(c: &mut Criterion) {
    let f = Field::new(4).unwrap();
    let s = rowspace(&parse_matrix("1 0 1 1 1; 0 1 0 0 0", &f).unwrap()).unwrap();
    c.bench_function("star_pi_q4_n5_k3", |b| {
        b.iter(|| star_pi(black_box(&s)).unwrap())
    });
}

fn small_census(c: &mut Criterion) {
    let params = GrassmannParams::new(Field::new(2).unwrap(), 5, 3).unwrap();
    let mut g = c.benchmark_group("census");
    g.sample_size(10);
    g.bench_function("census_2_5_3", |b| {
        b.iter(|| census(black_box(&params), 1, false).unwrap())
    });
    g.finish();
}

criterion_group!(benches, rref, enumeration, star, small_census);
criterion_main!(benches);
