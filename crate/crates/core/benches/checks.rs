//! Parallel and sequential evaluation of the same checks.
//!
//! Build with `--no-default-features` to compile the sequential path only;
//! both groups then measure the same code.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use leibniz2::algebra::{FinSpace, LinearMap};
use leibniz2::courant::{build_leibniz2, check_tca_axioms, default_forms, default_sections, ExactTca};
use leibniz2::exec::set_parallel;
use leibniz2::exterior::{Alt, Poly};
use leibniz2::omni::{build_omni, build_end, DglaAutomorphism};
use leibniz2::sh_leibniz::{check_sh_leibniz, TwoTermComplex};

fn tca(n: usize) -> ExactTca {
    ExactTca::new(Alt::term(n, &[n - 3, n - 2, n - 1], Poly::var(n, 0))).unwrap()
}

fn bench(c: &mut Criterion) {
    let (t, t3) = (tca(4), tca(3));
    let (fam, fam3, forms3) = (default_sections(4), default_sections(3), default_forms(3));
    let q = FinSpace::new(2, "Q");
    let complex = TwoTermComplex::new(q.clone(), q.clone(), LinearMap::identity(q)).unwrap();
    let omni = build_omni(&DglaAutomorphism::identity(&build_end(&complex).unwrap()), &complex).unwrap();

    let mut group = c.benchmark_group("checks");
    group.sample_size(10);
    for (mode, parallel) in [("parallel", true), ("sequential", false)] {
        set_parallel(parallel);
        group.bench_with_input(BenchmarkId::new("tca-axioms", mode), &parallel, |b, _| {
            b.iter(|| check_tca_axioms(&t, &fam).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("tca-leibniz2", mode), &parallel, |b, _| {
            b.iter(|| build_leibniz2(&t3, &fam3, &forms3).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("omni-suite", mode), &parallel, |b, _| {
            b.iter(|| check_sh_leibniz(&omni).unwrap())
        });
    }
    set_parallel(true);
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
