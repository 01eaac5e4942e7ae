//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Thresholds are pinned here; run with `--nocapture` to see the
//! measured values.
//!
//! Batch configuration for the benchmark criteria: population 100, 250
//! generations, insertion probability 0.05, binary tournament, the bounded
//! five-symbol function set, archive capacity 300, 30 runs seeded 0..30,
//! metrics every 10 generations.
//!
//! Two assertions are known to fail — the ZDT2 diversity floor
//! (criterion 1) and the ZDT4 convergence bound (criterion 2); the
//! README's Known limitations section and the test messages carry the
//! analysis. Everything else must stay green.

use std::fs;
use std::process::Command;
use std::sync::{Mutex, OnceLock};
use std::time::Instant;

use tgp::archive::Archive;
use tgp::classic::{run_classic_batch, FitnessCases};
use tgp::dominance::{dominates, nondominated_indices, EvaluatedIndividual};
use tgp::engine::{run_batch, AlgoConfig, RunRecord, Variant};
use tgp::genome::Genome;
use tgp::metrics::{convergence_metric, diversity_metric, REFERENCE_FRONT_SIZE};
use tgp::problems::{ObjectivePoint, Zdt};
use tgp::rng::RandomSource;
use tgp::symbols::{classic_function_set, mo_function_set};

const BATCH_SEED: u64 = 0;
const ARCHIVE_CAPACITY: usize = 300;

struct Batch {
    records: Vec<RunRecord>,
    elapsed_seconds: f64,
}

impl Batch {
    fn mean_final_cm(&self) -> f64 {
        self.records
            .iter()
            .map(|r| r.final_sample().cm)
            .sum::<f64>()
            / self.records.len() as f64
    }

    fn mean_final_dm(&self) -> f64 {
        self.records
            .iter()
            .map(|r| r.final_sample().dm)
            .sum::<f64>()
            / self.records.len() as f64
    }

    fn mean_cm_at(&self, generation: u32) -> f64 {
        self.records
            .iter()
            .map(|r| {
                r.sample_at(generation)
                    .unwrap_or_else(|| panic!("generation {generation} was sampled"))
                    .cm
            })
            .sum::<f64>()
            / self.records.len() as f64
    }
}

fn benchmark_config() -> AlgoConfig {
    AlgoConfig {
        runs: 30,
        seed: BATCH_SEED,
        archive_capacity: Some(ARCHIVE_CAPACITY),
        ..AlgoConfig::default()
    }
}

/// Archive batches are shared across criteria; they build one at a time so
/// each elapsed measurement is uncontended.
fn archive_batch(problem: Zdt) -> &'static Batch {
    fn build(problem: Zdt) -> Batch {
        static BUILD_LOCK: Mutex<()> = Mutex::new(());
        let _guard = BUILD_LOCK.lock().unwrap();
        let start = Instant::now();
        let records = run_batch(problem, Variant::Archive, &benchmark_config())
            .expect("benchmark config is valid");
        Batch {
            records,
            elapsed_seconds: start.elapsed().as_secs_f64(),
        }
    }
    macro_rules! cached {
        ($problem:expr) => {{
            static CELL: OnceLock<Batch> = OnceLock::new();
            CELL.get_or_init(|| build($problem))
        }};
    }
    match problem {
        Zdt::Zdt1 => cached!(Zdt::Zdt1),
        Zdt::Zdt2 => cached!(Zdt::Zdt2),
        Zdt::Zdt3 => cached!(Zdt::Zdt3),
        Zdt::Zdt4 => cached!(Zdt::Zdt4),
        Zdt::Zdt6 => cached!(Zdt::Zdt6),
    }
}

fn criterion_1(problem: Zdt) {
    let batch = archive_batch(problem);
    let cm = batch.mean_final_cm();
    let dm = batch.mean_final_dm();
    let elapsed = batch.elapsed_seconds;
    let ok = cm <= 0.02 && dm >= 0.30 && elapsed < 60.0;
    println!(
        "criterion 1 [{}]: {} — mean final CM {cm:.6} (<= 0.02), mean final DM {dm:.4} (>= 0.30), batch {elapsed:.1} s (< 60 s)",
        problem.name(),
        if ok { "PASS" } else { "FAIL" },
    );
    assert!(
        cm <= 0.02,
        "{}: mean final CM {cm} exceeds 0.02",
        problem.name()
    );
    assert!(
        dm >= 0.30,
        "{}: mean final DM {dm} below 0.30{}",
        problem.name(),
        if problem == Zdt::Zdt2 {
            " — known blocker: on ZDT2 the transient population is entirely \
             dominated by the g=1 corner point (0,1), which multiplicative \
             gene contraction reaches almost immediately; elementwise \
             whole-vector operators cannot shrink the tail while holding f1, \
             so no other front point is ever generated (see README, Known \
             limitations)"
        } else {
            ""
        }
    );
    assert!(elapsed < 60.0, "{}: batch took {elapsed} s", problem.name());
}

#[test]
fn criterion_1_zdt1_convergence_diversity_runtime() {
    criterion_1(Zdt::Zdt1);
}

#[test]
fn criterion_1_zdt2_convergence_diversity_runtime() {
    criterion_1(Zdt::Zdt2);
}

#[test]
fn criterion_1_zdt3_convergence_diversity_runtime() {
    criterion_1(Zdt::Zdt3);
}

#[test]
fn criterion_2_zdt4_convergence_bound() {
    let batch = archive_batch(Zdt::Zdt4);
    let cm = batch.mean_final_cm();
    let ok = cm <= 1.0;
    println!(
        "criterion 2 [zdt4]: {} — mean final CM {cm:.3} (<= 1.0; SPEA 4.278, PAES 12.41)",
        if ok { "PASS" } else { "FAIL" },
    );
    assert!(
        cm <= 1.0,
        "zdt4: mean final CM {cm} exceeds 1.0 — known blocker: with the \
         [-5,5] tail decoding the cos(4*pi*x) lattice has period 0.05 in gene \
         units, so crossover between individuals in different basins is \
         destructive and the population cannot align on the global basin; \
         every selection/pool variant tested converges no further than CM ~ 60 \
         (see README, Known limitations)"
    );
}

#[test]
fn criterion_3_plain_variant_is_fast() {
    let cfg = AlgoConfig {
        runs: 1,
        seed: 11,
        ..AlgoConfig::default()
    };
    let mut worst = 0.0f64;
    for problem in Zdt::ALL {
        let records = run_batch(problem, Variant::Plain, &cfg).unwrap();
        worst = worst.max(records[0].wall_seconds);
        assert!(
            records[0].wall_seconds < 2.0,
            "{}: plain run took {} s (>= 2 s)",
            problem.name(),
            records[0].wall_seconds
        );
    }
    println!("criterion 3: PASS — slowest plain single run {worst:.3} s (< 2 s)");
}

#[test]
fn criterion_4_filter_matches_brute_force() {
    let mut rng = RandomSource::from_seed(20_000);
    for population in 0..1000 {
        let n = 1 + rng.next_index(100);
        let points: Vec<ObjectivePoint> = (0..n)
            .map(|_| {
                // coarse grid makes duplicate coordinates frequent
                let f1 = (rng.next_unit() * 20.0).round() / 20.0;
                let f2 = (rng.next_unit() * 20.0).round() / 20.0;
                ObjectivePoint::new(f1, f2)
            })
            .collect();
        let brute: Vec<usize> = (0..n)
            .filter(|&i| {
                points
                    .iter()
                    .enumerate()
                    .all(|(j, q)| j == i || !dominates(q, &points[i]))
            })
            .collect();
        assert_eq!(
            nondominated_indices(&points),
            brute,
            "filter mismatch on population {population}"
        );
    }
    println!("criterion 4: PASS — nondominated filter equals the O(n^2) oracle on 1000 seeded populations");
}

#[test]
fn criterion_5_property_suites() {
    // operator range closure: 10^6 random tuples plus the endpoints
    let mut rng = RandomSource::from_seed(31_337);
    let symbols = mo_function_set();
    for _ in 0..200_000 {
        let (x, y) = (rng.next_unit(), rng.next_unit());
        for &sym in &symbols {
            let args: &[f64] = if sym.arity() == 2 { &[x, y] } else { &[x] };
            let v = sym.bounded_eval(args).unwrap();
            assert!((0.0..=1.0).contains(&v), "{sym:?}{args:?} -> {v}");
        }
    }
    for &x in &[0.0, 1.0] {
        for &y in &[0.0, 1.0] {
            for &sym in &symbols {
                let args: &[f64] = if sym.arity() == 2 { &[x, y] } else { &[x] };
                let v = sym.bounded_eval(args).unwrap();
                assert!((0.0..=1.0).contains(&v));
            }
        }
    }

    // dominance partial-order laws on random triples
    let mut rng = RandomSource::from_seed(77_777);
    for _ in 0..100_000 {
        let p = ObjectivePoint::new(rng.next_unit(), rng.next_unit());
        let q = ObjectivePoint::new(rng.next_unit(), rng.next_unit());
        let r = ObjectivePoint::new(rng.next_unit(), rng.next_unit());
        assert!(!dominates(&p, &p));
        if dominates(&p, &q) {
            assert!(!dominates(&q, &p));
        }
        if dominates(&p, &q) && dominates(&q, &r) {
            assert!(dominates(&p, &r));
        }
    }

    // archive capacity and nondomination over seeded fuzz sequences
    let mut rng = RandomSource::from_seed(404_404);
    let mut next_id = 0u64;
    for _ in 0..30 {
        let capacity = 1 + rng.next_index(40);
        let mut archive = Archive::new(capacity).unwrap();
        for _ in 0..12 {
            let pop: Vec<EvaluatedIndividual> = (0..1 + rng.next_index(60))
                .map(|_| {
                    next_id += 1;
                    EvaluatedIndividual {
                        genome: Genome::new(vec![0.5]).unwrap(),
                        objectives: ObjectivePoint::new(rng.next_unit(), rng.next_unit()),
                        id: next_id,
                    }
                })
                .collect();
            archive.update(&pop);
            assert!(!archive.is_empty() && archive.len() <= capacity);
            for a in archive.members() {
                for b in archive.members() {
                    assert!(a.id == b.id || !dominates(&a.objectives, &b.objectives));
                }
            }
        }
    }

    // metric analytic cases
    let reference = Zdt::Zdt1.true_front(REFERENCE_FRONT_SIZE);
    let subset: Vec<ObjectivePoint> = reference.iter().step_by(3).copied().collect();
    assert_eq!(convergence_metric(&subset, &reference).unwrap(), 0.0);
    let clustered = vec![ObjectivePoint::new(0.0, 1.0); 25];
    assert_eq!(diversity_metric(&clustered, &reference).unwrap(), 0.005);

    println!(
        "criterion 5: PASS — range closure (10^6 tuples + endpoints), dominance laws, \
         archive fuzz invariants, CM/DM analytic cases"
    );
}

#[test]
fn criterion_6_cmd_run_is_byte_deterministic() {
    let exe = env!("CARGO_BIN_EXE_tgp");
    let root = tempfile::tempdir().unwrap();
    let args = |out: &std::path::Path| {
        vec![
            "run".to_string(),
            "--problem".into(),
            "zdt1".into(),
            "--variant".into(),
            "archive".into(),
            "--runs".into(),
            "2".into(),
            "--generations".into(),
            "60".into(),
            "--seed".into(),
            "123".into(),
            "--out".into(),
            out.to_str().unwrap().to_string(),
        ]
    };
    let dir_a = root.path().join("a");
    let dir_b = root.path().join("b");
    for dir in [&dir_a, &dir_b] {
        let out = Command::new(exe).args(args(dir)).output().unwrap();
        assert!(out.status.success(), "run failed: {:?}", out);
    }
    let mut names: Vec<String> = fs::read_dir(&dir_a)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 5);
    for name in &names {
        let a = fs::read(dir_a.join(name)).unwrap();
        let b = fs::read(dir_b.join(name)).unwrap();
        assert_eq!(a, b, "{name} differs between identical invocations");
    }
    println!(
        "criterion 6: PASS — two executions produced byte-identical {} files",
        names.len()
    );
}

#[test]
fn criterion_7_convergence_trend() {
    for problem in [Zdt::Zdt1, Zdt::Zdt2, Zdt::Zdt3] {
        let batch = archive_batch(problem);
        let cm_100 = batch.mean_cm_at(100);
        let cm_final = batch.mean_final_cm();
        // the absolute 1e-9 floor only matters when both CM values sit at
        // the fully-converged zero floor, where a relative bound degenerates
        assert!(
            cm_100 <= 2.0 * cm_final + 1e-9,
            "{}: mean CM at generation 100 ({cm_100}) is more than twice the final ({cm_final})",
            problem.name()
        );
        println!(
            "criterion 7 [{}]: PASS — CM@100 {cm_100:.6} within 2x of final {cm_final:.6}",
            problem.name()
        );
    }
    let batch = archive_batch(Zdt::Zdt6);
    let cm_100 = batch.mean_cm_at(100);
    let cm_final = batch.mean_final_cm();
    assert!(
        cm_final < cm_100,
        "zdt6: no improvement after generation 100 ({cm_100} -> {cm_final})"
    );
    println!(
        "criterion 7 [zdt6]: PASS — continued improvement after generation 100 ({cm_100:.4} -> {cm_final:.4})"
    );
}

#[test]
fn criterion_8_classic_regression() {
    let mut instance_rng = RandomSource::from_seed(9000);
    let cases = FitnessCases::sum_product_instance(20, &mut instance_rng);
    let cfg = AlgoConfig {
        pop_size: 5000,
        generations: 250,
        runs: 30,
        seed: BATCH_SEED,
        function_set: classic_function_set(),
        ..AlgoConfig::default()
    };
    let records = run_classic_batch(&cases, &cfg).unwrap();
    let wins = records.iter().filter(|r| r.best_q < 0.01).count();
    let ok = wins >= 25;
    println!(
        "criterion 8: {} — best Q < 0.01 within 250 generations in {wins}/30 runs (need >= 25)",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(wins >= 25, "only {wins}/30 runs reached Q < 0.01");
}
