//! Generational loops for multiobjective optimization.
//!
//! Two variants share the offspring machinery:
//!
//! * **plain** — the nondominated members of the current population are
//!   copied into the next one (elitism), the rest of the slots are filled
//!   with insertion or crossover offspring whose parents come from binary
//!   tournaments;
//! * **archive** — no elitist copying; a bounded [`Archive`] absorbs each
//!   new population, parents are drawn uniformly from the archive and the
//!   current population together, and the final archive is the run's front.
//!
//! Metrics are sampled over the nondominated set (plain) or the archive
//! (archive variant) at every `metric_stride` generations and at the final
//! generation. A run is fully determined by its seed.

use std::time::Instant;

use rayon::prelude::*;

use crate::archive::{prune_closest_pair_step, Archive};
use crate::dominance::{dominates, nondominated_filter, EvaluatedIndividual};
use crate::genome::{pick_symbol, Genome};
use crate::metrics::{convergence_metric, diversity_metric, MetricSample, REFERENCE_FRONT_SIZE};
use crate::problems::{ObjectivePoint, Zdt};
use crate::rng::RandomSource;
use crate::symbols::{mo_function_set, FunctionSymbol};
use crate::TgpError;

/// Which multiobjective loop to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Plain,
    Archive,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Plain => "plain",
            Variant::Archive => "archive",
        }
    }
}

/// Algorithm parameters. The defaults are the benchmark settings:
/// population 100, 250 generations, insertion probability 0.05, binary
/// tournament, the five-symbol bounded function set, 30 runs and metric
/// samples every 10 generations.
#[derive(Debug, Clone)]
pub struct AlgoConfig {
    pub pop_size: usize,
    pub generations: usize,
    pub p_insert: f64,
    pub tournament_size: usize,
    pub function_set: Vec<FunctionSymbol>,
    pub archive_capacity: Option<usize>,
    pub runs: usize,
    pub metric_stride: usize,
    pub seed: u64,
}

impl Default for AlgoConfig {
    fn default() -> Self {
        Self {
            pop_size: 100,
            generations: 250,
            p_insert: 0.05,
            tournament_size: 2,
            function_set: mo_function_set(),
            archive_capacity: None,
            runs: 30,
            metric_stride: 10,
            seed: 0,
        }
    }
}

impl AlgoConfig {
    pub fn validate(&self) -> Result<(), TgpError> {
        if self.pop_size < 2 {
            return Err(TgpError::InvalidConfig(
                "pop_size must be at least 2".into(),
            ));
        }
        if !(0.0..=1.0).contains(&self.p_insert) {
            return Err(TgpError::InvalidConfig(
                "p_insert must lie in [0, 1]".into(),
            ));
        }
        if self.metric_stride == 0 {
            return Err(TgpError::InvalidConfig(
                "metric_stride must be at least 1".into(),
            ));
        }
        if self.tournament_size == 0 {
            return Err(TgpError::InvalidConfig(
                "tournament_size must be at least 1".into(),
            ));
        }
        if self.runs == 0 {
            return Err(TgpError::InvalidConfig("runs must be at least 1".into()));
        }
        if self.function_set.is_empty() {
            return Err(TgpError::InvalidConfig("function set is empty".into()));
        }
        Ok(())
    }

    fn archive_capacity(&self) -> Result<usize, TgpError> {
        self.archive_capacity
            .ok_or_else(|| TgpError::InvalidConfig("archive variant needs archive_capacity".into()))
    }
}

/// Everything one seeded run produces.
///
/// All fields except `wall_seconds` are reproduced bit for bit by the same
/// seed; wall-clock time is measurement, not state.
#[derive(Debug, Clone)]
pub struct RunRecord {
    pub seed: u64,
    pub samples: Vec<MetricSample>,
    pub front: Vec<EvaluatedIndividual>,
    pub evaluations: u64,
    pub wall_seconds: f64,
}

impl RunRecord {
    /// Metric row of the final generation.
    pub fn final_sample(&self) -> MetricSample {
        *self.samples.last().expect("a run samples at least gen 0")
    }

    /// Sample at a specific generation, if that generation was sampled.
    pub fn sample_at(&self, generation: u32) -> Option<MetricSample> {
        self.samples
            .iter()
            .copied()
            .find(|s| s.generation == generation)
    }
}

/// Evaluation bookkeeping: assigns creation ids and counts evaluations.
struct Evaluator {
    problem: Zdt,
    next_id: u64,
    evaluations: u64,
}

impl Evaluator {
    fn new(problem: Zdt) -> Self {
        Self {
            problem,
            next_id: 0,
            evaluations: 0,
        }
    }

    fn evaluate(&mut self, genome: Genome) -> EvaluatedIndividual {
        let objectives = self
            .problem
            .evaluate_genome(&genome)
            .expect("genes in [0,1] always decode into the problem domain");
        let id = self.next_id;
        self.next_id += 1;
        self.evaluations += 1;
        EvaluatedIndividual {
            genome,
            objectives,
            id,
        }
    }
}

/// Binary tournament: draws two members uniformly (with replacement) and
/// returns the dominating one, or a fair coin pick when they are
/// incomparable.
pub fn binary_tournament<'a>(
    pop: &'a [EvaluatedIndividual],
    rng: &mut RandomSource,
) -> Result<&'a EvaluatedIndividual, TgpError> {
    tournament_select(pop, 2, rng)
}

/// Tournament over `size` uniformly drawn members, reduced pairwise with
/// the dominance-then-coin rule.
pub fn tournament_select<'a>(
    pop: &'a [EvaluatedIndividual],
    size: usize,
    rng: &mut RandomSource,
) -> Result<&'a EvaluatedIndividual, TgpError> {
    if pop.is_empty() {
        return Err(TgpError::Empty { what: "population" });
    }
    let mut winner = &pop[rng.next_index(pop.len())];
    for _ in 1..size {
        let challenger = &pop[rng.next_index(pop.len())];
        let challenger_wins = dominates(&challenger.objectives, &winner.objectives)
            || (!dominates(&winner.objectives, &challenger.objectives) && rng.next_bool(0.5));
        if challenger_wins {
            winner = challenger;
        }
    }
    Ok(winner)
}

fn initial_population(
    problem: Zdt,
    cfg: &AlgoConfig,
    rng: &mut RandomSource,
    evaluator: &mut Evaluator,
) -> Vec<EvaluatedIndividual> {
    (0..cfg.pop_size)
        .map(|_| {
            let genome =
                Genome::random(problem.gene_count(), rng).expect("gene count is at least 1");
            evaluator.evaluate(genome)
        })
        .collect()
}

fn sample_metrics(
    generation: u32,
    front: &[EvaluatedIndividual],
    reference: &[ObjectivePoint],
) -> MetricSample {
    let points: Vec<ObjectivePoint> = front.iter().map(|m| m.objectives).collect();
    MetricSample {
        generation,
        cm: convergence_metric(&points, reference).expect("front is never empty"),
        dm: diversity_metric(&points, reference).expect("front is never empty"),
    }
}

fn sample_due(generation: usize, cfg: &AlgoConfig) -> bool {
    generation.is_multiple_of(cfg.metric_stride) || generation == cfg.generations
}

/// One plain-variant generation: elitist copy of the nondominated set
/// (truncated to `pop_size - 1` by closest-pair pruning when it overflows),
/// then insertion/crossover offspring until the population is full again.
fn plain_generation(
    pop: &[EvaluatedIndividual],
    cfg: &AlgoConfig,
    rng: &mut RandomSource,
    evaluator: &mut Evaluator,
) -> Vec<EvaluatedIndividual> {
    let mut next = nondominated_filter(pop);
    while next.len() > cfg.pop_size - 1 {
        prune_closest_pair_step(&mut next).expect("overflowing elite set has >= 2 members");
    }
    while next.len() < cfg.pop_size {
        let child = if rng.next_bool(cfg.p_insert) {
            Genome::random(evaluator.problem.gene_count(), rng).expect("gene count >= 1")
        } else {
            let symbol = pick_symbol(rng, &cfg.function_set).expect("validated nonempty");
            let parents: Vec<&EvaluatedIndividual> = (0..symbol.arity())
                .map(|_| {
                    tournament_select(pop, cfg.tournament_size, rng)
                        .expect("population is never empty")
                })
                .collect();
            let genomes: Vec<&Genome> = parents.iter().map(|p| &p.genome).collect();
            Genome::crossover(&genomes, symbol).expect("parents share the problem gene count")
        };
        next.push(evaluator.evaluate(child));
    }
    next
}

/// Multiobjective TGP without archive.
///
/// Returns the nondominated set of the final population as the front.
pub fn run_mo_plain(
    problem: Zdt,
    cfg: &AlgoConfig,
    rng: &mut RandomSource,
) -> Result<RunRecord, TgpError> {
    cfg.validate()?;
    let start = Instant::now();
    let reference = problem.true_front(REFERENCE_FRONT_SIZE);
    let mut evaluator = Evaluator::new(problem);
    let mut pop = initial_population(problem, cfg, rng, &mut evaluator);

    let mut samples = vec![sample_metrics(0, &nondominated_filter(&pop), &reference)];
    for generation in 1..=cfg.generations {
        pop = plain_generation(&pop, cfg, rng, &mut evaluator);
        if sample_due(generation, cfg) {
            samples.push(sample_metrics(
                generation as u32,
                &nondominated_filter(&pop),
                &reference,
            ));
        }
    }

    Ok(RunRecord {
        seed: rng.seed(),
        samples,
        front: nondominated_filter(&pop),
        evaluations: evaluator.evaluations,
        wall_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Multiobjective TGP with a bounded archive.
///
/// No elitist copying: each generation is pure offspring whose parents are
/// drawn uniformly (distinct indices per crossover) from the archive and
/// the current population together. The archive absorbs every new
/// population; the final archive is the run's front.
pub fn run_mo_archive(
    problem: Zdt,
    cfg: &AlgoConfig,
    rng: &mut RandomSource,
) -> Result<RunRecord, TgpError> {
    cfg.validate()?;
    let capacity = cfg.archive_capacity()?;
    let start = Instant::now();
    let reference = problem.true_front(REFERENCE_FRONT_SIZE);
    let mut evaluator = Evaluator::new(problem);
    let mut pop = initial_population(problem, cfg, rng, &mut evaluator);
    let mut archive = Archive::new(capacity)?;
    archive.update(&pop);

    let mut samples = vec![sample_metrics(0, archive.members(), &reference)];
    for generation in 1..=cfg.generations {
        let mut next = Vec::with_capacity(cfg.pop_size);
        while next.len() < cfg.pop_size {
            let child = if rng.next_bool(cfg.p_insert) {
                Genome::random(problem.gene_count(), rng).expect("gene count >= 1")
            } else {
                let symbol = pick_symbol(rng, &cfg.function_set).expect("validated nonempty");
                let pool_len = archive.len() + pop.len();
                let pick = |idx: usize| -> &Genome {
                    if idx < archive.len() {
                        &archive.members()[idx].genome
                    } else {
                        &pop[idx - archive.len()].genome
                    }
                };
                let genomes: Vec<&Genome> = if symbol.arity() == 2 {
                    let (a, b) = rng.next_distinct_pair(pool_len);
                    vec![pick(a), pick(b)]
                } else {
                    vec![pick(rng.next_index(pool_len))]
                };
                Genome::crossover(&genomes, symbol).expect("pool shares the problem gene count")
            };
            next.push(evaluator.evaluate(child));
        }
        pop = next;
        archive.update(&pop);
        if sample_due(generation, cfg) {
            samples.push(sample_metrics(
                generation as u32,
                archive.members(),
                &reference,
            ));
        }
    }

    Ok(RunRecord {
        seed: rng.seed(),
        samples,
        front: archive.into_members(),
        evaluations: evaluator.evaluations,
        wall_seconds: start.elapsed().as_secs_f64(),
    })
}

/// Executes `cfg.runs` independent seeded runs (run `i` uses
/// `cfg.seed + i`) on a worker pool and returns the records in run order.
pub fn run_batch(
    problem: Zdt,
    variant: Variant,
    cfg: &AlgoConfig,
) -> Result<Vec<RunRecord>, TgpError> {
    cfg.validate()?;
    if variant == Variant::Archive {
        cfg.archive_capacity()?;
    }
    (0..cfg.runs)
        .into_par_iter()
        .map(|i| {
            let mut rng = RandomSource::from_seed(cfg.seed.wrapping_add(i as u64));
            match variant {
                Variant::Plain => run_mo_plain(problem, cfg, &mut rng),
                Variant::Archive => run_mo_archive(problem, cfg, &mut rng),
            }
        })
        .collect()
}
