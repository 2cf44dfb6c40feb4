use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use difflie_core::cohomology::{RegularComplex, RelDiffComplex};
use difflie_core::fixtures;
use difflie_core::integrate::bch;
use difflie_core::nr::nr_bracket;
use difflie_core::sample::Sampler;
use difflie_core::{
    cohomology_table, CochainComplex, DeltaRoute, DifferenceLieAlgebra, RationalMatrix,
    RelDiffStructure,
};

fn bracket(c: &mut Criterion) {
    let mut group = c.benchmark_group("nr_bracket");
    let mut s = Sampler::new(1);
    for dim in [3usize, 4, 5] {
        let f = s.alternating(dim, 2, dim);
        let g = s.alternating(dim, 2, dim);
        group.bench_with_input(BenchmarkId::new("arity2", dim), &dim, |b, _| {
            b.iter(|| nr_bracket(black_box(&f), black_box(&g)))
        });
    }
    group.finish();
}

fn complexes(c: &mut Criterion) {
    let mut group = c.benchmark_group("cohomology");
    group.sample_size(10);
    let inversion = DifferenceLieAlgebra::new(fixtures::h3(), fixtures::neg_identity(3)).unwrap();
    let st: RelDiffStructure = inversion.as_relative();
    for (name, route) in [
        ("reldiff_closed", DeltaRoute::Closed),
        ("reldiff_twisted", DeltaRoute::Twisted),
    ] {
        let cx = RelDiffComplex::new(st.clone(), route);
        group.bench_function(format!("{name}_matrix_deg2_h3"), |b| {
            b.iter(|| cx.matrix(black_box(2)))
        });
    }
    let sl2 = DifferenceLieAlgebra::new(fixtures::sl2(), RationalMatrix::zeros(3, 3)).unwrap();
    let regular = RegularComplex::new(sl2);
    group.bench_function("regular_table_deg3_sl2", |b| {
        b.iter(|| cohomology_table(&regular, black_box(3)))
    });
    group.finish();
}

fn baker_campbell_hausdorff(c: &mut Criterion) {
    let mut group = c.benchmark_group("bch");
    let mut s = Sampler::new(2);
    for (name, g) in [
        ("h3", fixtures::h3()),
        ("filiform5", fixtures::filiform(5)),
        ("n4", fixtures::strictly_upper_triangular(4)),
    ] {
        let x = s.vector(g.dim());
        let y = s.vector(g.dim());
        group.bench_function(name, |b| {
            b.iter(|| bch(black_box(&g), black_box(&x), black_box(&y)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bracket, complexes, baker_campbell_hausdorff);
criterion_main!(benches);
