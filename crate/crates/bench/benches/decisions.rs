use criterion::{criterion_group, criterion_main, Criterion};
use equiloc_bench::{hirzebruch, lv, plane_grid, q};
use equiloc_core::equivalence::{hirzebruch_decide, polytope_tests, s2xs2_decide, S2xS2Mode};

fn decisions(c: &mut Criterion) {
    c.bench_function("hirzebruch_decide", |b| {
        b.iter(|| hirzebruch_decide(1, &q(1), &q(3), &lv(&[1, 1]), &lv(&[0, -1])))
    });
    c.bench_function("s2xs2_incommensurable", |b| {
        b.iter(|| s2xs2_decide(&S2xS2Mode::Incommensurable, &lv(&[1, 2]), &lv(&[-1, 2])))
    });
    let (p, r) = (hirzebruch(1), hirzebruch(2));
    c.bench_function("gl_search", |b| b.iter(|| polytope_tests(&p, &r)));
    let grid = plane_grid(1);
    c.bench_function("hirzebruch_grid_r1", |b| {
        b.iter(|| {
            grid.iter()
                .flat_map(|x| grid.iter().map(move |y| (x, y)))
                .filter(|(x, y)| hirzebruch_decide(2, &q(1), &q(4), x, y).unwrap().is_equivalent())
                .count()
        })
    });
}

criterion_group!(benches, decisions);
criterion_main!(benches);
