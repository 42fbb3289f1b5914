use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qthook::dcomplete::PosetSpec;
use qthook::harness::{collect, Target, VerificationJob};
use qthook::par;
use qthook::tableaux::{Partition, StrictPartition};

fn jobs() -> Vec<(&'static str, VerificationJob)> {
    vec![
        (
            "main_a (4,3,2)",
            VerificationJob::new(Target::MainA).with_subject(PosetSpec::Shape(Partition::new(vec![4, 3, 2]).unwrap())),
        ),
        (
            "main_b (5,3,1)",
            VerificationJob::new(Target::MainB).with_subject(PosetSpec::Shifted {
                mu: StrictPartition::new(vec![5, 3, 1]).unwrap(),
                two_color: false,
            }),
        ),
        (
            "conjecture d_6(1)",
            VerificationJob::new(Target::Conjecture).with_subject(PosetSpec::Dk1(6)),
        ),
    ]
}

fn bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("collect");
    group.sample_size(10);
    for (name, job) in jobs() {
        let job = job.with_degree(7).with_trials(1);
        group.bench_with_input(BenchmarkId::new("parallel", name), &job, |b, j| {
            b.iter(|| collect(j).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", name), &job, |b, j| {
            b.iter(|| par::sequential(|| collect(j).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
