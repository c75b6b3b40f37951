use criterion::{black_box, criterion_group, criterion_main, Criterion};

use latpoly::classify::list_smooth_2d;
use latpoly::gauss::gauss_k;
use latpoly::jets::{jet_matrix, JetPoint, PointConfiguration};
use latpoly::LatticePolytope;

fn gauss_config() -> PointConfiguration {
    let p = LatticePolytope::from_vertices_i64(&[
        vec![0, 0],
        vec![1, 0],
        vec![3, 1],
        vec![0, 2],
    ])
    .unwrap();
    PointConfiguration::from_polytope(&p)
}

fn bench_smooth2d(c: &mut Criterion) {
    c.bench_function("smooth2d max_points=10", |b| {
        b.iter(|| list_smooth_2d(black_box(10)).unwrap())
    });
}

fn bench_gauss(c: &mut Criterion) {
    let config = gauss_config();
    c.bench_function("gauss order=2", |b| {
        b.iter(|| gauss_k(black_box(&config), 2).unwrap())
    });
}

fn bench_jet_rank(c: &mut Criterion) {
    let p = LatticePolytope::from_vertices_i64(&[vec![0, 0], vec![4, 0], vec![0, 4]]).unwrap();
    let config = PointConfiguration::from_polytope(&p);
    c.bench_function("jet rank 4*simplex order=4 generic", |b| {
        b.iter(|| {
            jet_matrix(black_box(&config), 4, &JetPoint::Generic)
                .unwrap()
                .rank()
        })
    });
}

criterion_group!(benches, bench_smooth2d, bench_gauss, bench_jet_rank);
criterion_main!(benches);
