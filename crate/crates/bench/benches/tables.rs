use charvar::homotopy::{good_locus_homotopy, HomotopyDatabase};
use charvar::subalg::{bds_table, levi_table};
use charvar::{GroupDescriptor, RootSystem, SimpleType};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn roots(c: &mut Criterion) {
    let e8: SimpleType = "E8".parse().unwrap();
    c.bench_function("root system E8", |b| b.iter(|| RootSystem::new(black_box(e8))));
    let d12: SimpleType = "D12".parse().unwrap();
    c.bench_function("root system D12", |b| b.iter(|| RootSystem::new(black_box(d12))));
}

fn tables(c: &mut Criterion) {
    let all: Vec<SimpleType> = SimpleType::all_up_to_rank(12);
    c.bench_function("levi tables rank <= 12", |b| {
        b.iter(|| all.iter().map(|&t| levi_table(t).len()).sum::<usize>())
    });
    c.bench_function("bds tables rank <= 12", |b| {
        b.iter(|| all.iter().map(|&t| bds_table(t).len()).sum::<usize>())
    });
}

fn homotopy(c: &mut Criterion) {
    HomotopyDatabase::embedded();
    let groups: Vec<GroupDescriptor> = ["G2", "F4", "E6", "E7", "E8"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    c.bench_function("exceptional homotopy table", |b| {
        b.iter(|| {
            for g in &groups {
                for r in 2..=7 {
                    for k in 0..=15 {
                        black_box(good_locus_homotopy(g, r, k).unwrap());
                    }
                }
            }
        })
    });
}

criterion_group!(benches, roots, tables, homotopy);
criterion_main!(benches);
