use criterion::{black_box, criterion_group, criterion_main, Criterion};
use gstar_bench::build;
use gstar_core::verify::order_multiplicative;
use gstar_core::WordSpec;

fn closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure");
    for name in ["S4", "A5", "PSL(2,7)", "S6"] {
        group.bench_function(name, |b| b.iter(|| black_box(build(name))));
    }
    group.finish();
}

fn coprime_levels(c: &mut Criterion) {
    let mut group = c.benchmark_group("coprime");
    group.bench_function("delta_star_2_of_S4", |b| {
        b.iter_with_setup(
            || build("S4"),
            |g| black_box(g.delta_star_set(2)),
        )
    });
    group.bench_function("gamma_star_2_of_A5", |b| {
        b.iter_with_setup(
            || build("A5"),
            |g| black_box(g.gamma_star_set(2).unwrap()),
        )
    });
    group.bench_function("delta_star_powers_2_of_SL25", |b| {
        b.iter_with_setup(
            || build("SL(2,5)"),
            |g| black_box(g.delta_star_powers(2)),
        )
    });
    group.finish();
}

fn order_condition(c: &mut Criterion) {
    let a5 = build("A5");
    let whole = a5.whole_set();
    c.bench_function("order_multiplicative_A5", |b| {
        b.iter(|| black_box(order_multiplicative(&a5, &whole)))
    });
}

fn series_and_words(c: &mut Criterion) {
    c.bench_function("lower_fitting_series_S4", |b| {
        b.iter_with_setup(|| build("S4"), |g| black_box(g.lower_fitting_series()))
    });
    c.bench_function("fitting_subgroup_A5", |b| {
        b.iter_with_setup(|| build("A5"), |g| black_box(g.fitting_subgroup()))
    });
    c.bench_function("a5_word_values", |b| {
        b.iter_with_setup(
            || build("A5"),
            |g| black_box(g.word_values(&WordSpec::A5Word).unwrap()),
        )
    });
}

criterion_group!(benches, closure, coprime_levels, order_condition, series_and_words);
criterion_main!(benches);
