use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pit_core::field::{Field, UniPoly};
use pit_core::pit::{blackbox_pit_roabp, Exec, RoabpShape};
use pit_core::roabp::{Layer, Roabp};

/// x0*x1 - x0*x1 as a width-2 program: the scan has to visit every point.
fn telescoping(f: Field) -> Roabp {
    let x = UniPoly::x();
    let m0 = Layer::from_entries(
        2,
        vec![x.clone(), x.neg(&f), UniPoly::zero(), UniPoly::zero()],
    );
    let m1 = Layer::from_entries(2, vec![x.clone(), UniPoly::zero(), x, UniPoly::zero()]);
    Roabp::new(f, 2, 2, vec![m0, m1]).unwrap()
}

fn full_scan(c: &mut Criterion) {
    let f = Field::at_least(4096).unwrap();
    let a = telescoping(f);
    let shape = RoabpShape::of(&a);
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut group = c.benchmark_group("zero_scan_16384_points");
    for (name, exec) in [
        ("sequential", Exec::Sequential),
        ("parallel", Exec::Parallel { jobs }),
    ] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| {
                let v = blackbox_pit_roabp(f, shape, exec, |x| a.eval(x).unwrap()).unwrap();
                black_box(v.points_tested)
            })
        });
    }
    group.finish();
}

criterion_group!(
    name = benches;
    config = Criterion::default().sample_size(10).measurement_time(Duration::from_secs(3));
    targets = full_scan
);
criterion_main!(benches);
