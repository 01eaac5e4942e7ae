//! Smoke-scale convergence checks: small seeded batches must land in the
//! right ballpark. The full benchmark thresholds live in the harness
//! crate's acceptance suite.

use tgp::engine::{run_batch, AlgoConfig, Variant};
use tgp::problems::Zdt;

fn mean_final<F: Fn(&tgp::engine::RunRecord) -> f64>(
    records: &[tgp::engine::RunRecord],
    f: F,
) -> f64 {
    records.iter().map(f).sum::<f64>() / records.len() as f64
}

#[test]
fn zdt1_plain_reaches_the_front_region() {
    let cfg = AlgoConfig {
        runs: 3,
        seed: 2,
        ..AlgoConfig::default()
    };
    let records = run_batch(Zdt::Zdt1, Variant::Plain, &cfg).unwrap();
    let cm = mean_final(&records, |r| r.final_sample().cm);
    assert!(
        cm < 0.05,
        "plain zdt1 mean final CM {cm} not in front region"
    );
}

#[test]
fn zdt1_archive_converges_with_spread() {
    let cfg = AlgoConfig {
        runs: 3,
        seed: 2,
        archive_capacity: Some(300),
        ..AlgoConfig::default()
    };
    let records = run_batch(Zdt::Zdt1, Variant::Archive, &cfg).unwrap();
    let cm = mean_final(&records, |r| r.final_sample().cm);
    let dm = mean_final(&records, |r| r.final_sample().dm);
    assert!(cm < 0.05, "archive zdt1 mean final CM {cm}");
    assert!(dm > 0.25, "archive zdt1 mean final DM {dm}");
}

#[test]
fn zdt6_archive_improves_past_generation_100() {
    let cfg = AlgoConfig {
        runs: 3,
        seed: 5,
        archive_capacity: Some(300),
        ..AlgoConfig::default()
    };
    let records = run_batch(Zdt::Zdt6, Variant::Archive, &cfg).unwrap();
    let cm100 = mean_final(&records, |r| r.sample_at(100).unwrap().cm);
    let cm250 = mean_final(&records, |r| r.final_sample().cm);
    assert!(cm250 < cm100, "zdt6 stalled: {cm100} -> {cm250}");
}
