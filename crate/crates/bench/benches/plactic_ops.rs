use criterion::{criterion_group, criterion_main, Criterion};

use plactic::braiding::{column_factorization, delta_normalize, sigma_col};
use plactic::cohomology::{betti_numbers, Character};
use plactic::crystal::s_word;
use plactic::field::Rationals;
use plactic::tableau::tableau_of_word;
use plactic::word::Word;

/// A fixed 210-letter word over {1..4}: long enough that insertion,
/// normalization, and reflection costs dominate setup noise.
fn long_word() -> Word {
    let seed = [3u32, 2, 4, 1, 1, 3, 4, 2, 2, 1, 4, 3, 1, 2];
    let letters: Vec<u32> = seed.iter().copied().cycle().take(210).collect();
    Word::from_values(&letters).expect("letters are in range")
}

fn bench_insertion(c: &mut Criterion) {
    let w = long_word();
    c.bench_function("tableau_of_word/210", |b| b.iter(|| tableau_of_word(&w)));
}

fn bench_product(c: &mut Criterion) {
    let w = long_word();
    let t = tableau_of_word(&w);
    c.bench_function("tableau_product/210x210", |b| b.iter(|| t.product(&t)));
}

fn bench_normal_form(c: &mut Criterion) {
    let w = long_word();
    let columns = column_factorization(&w);
    c.bench_function("column_factorization/210", |b| {
        b.iter(|| column_factorization(&w))
    });
    c.bench_function("delta_normalize/columns", |b| {
        b.iter(|| delta_normalize(&|x, y| sigma_col(x, y), &columns))
    });
}

fn bench_reflection(c: &mut Criterion) {
    let w = long_word();
    c.bench_function("s_word/210", |b| b.iter(|| s_word(&w, 2, 4).unwrap()));
}

fn bench_cohomology(c: &mut Criterion) {
    c.bench_function("betti/n=2,kmax=4", |b| {
        b.iter(|| betti_numbers(&Rationals, 2, 4, &Character::Zero).unwrap())
    });
}

criterion_group!(
    benches,
    bench_insertion,
    bench_product,
    bench_normal_form,
    bench_reflection,
    bench_cohomology
);
criterion_main!(benches);
