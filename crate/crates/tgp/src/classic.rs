//! Classic single-fitness TGP: symbolic regression over fitness cases.
//!
//! An individual is the vector of outputs it would produce on the `m`
//! fitness cases; its quality is `Q = Σ_k |f_k - o_k|`, minimized. The
//! initial population mixes copies of the terminal columns with constant
//! chromosomes, crossover applies the raw (unbounded) operators including
//! protected division, and the best individual is copied into every next
//! generation.

use std::time::Instant;

use rayon::prelude::*;

use crate::engine::AlgoConfig;
use crate::genome::pick_symbol;
use crate::rng::RandomSource;
use crate::TgpError;

/// A symbolic-regression instance: `m` rows of `n` input values plus the
/// target output per row.
#[derive(Debug, Clone)]
pub struct FitnessCases {
    inputs: Vec<Vec<f64>>,
    targets: Vec<f64>,
}

impl FitnessCases {
    pub fn new(inputs: Vec<Vec<f64>>, targets: Vec<f64>) -> Result<Self, TgpError> {
        if inputs.is_empty() {
            return Err(TgpError::Empty {
                what: "fitness cases",
            });
        }
        let n = inputs[0].len();
        if n == 0 {
            return Err(TgpError::Empty { what: "terminals" });
        }
        for row in &inputs {
            if row.len() != n {
                return Err(TgpError::LengthMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        if targets.len() != inputs.len() {
            return Err(TgpError::LengthMismatch {
                expected: inputs.len(),
                found: targets.len(),
            });
        }
        Ok(Self { inputs, targets })
    }

    /// Number of fitness cases (`m`).
    pub fn case_count(&self) -> usize {
        self.inputs.len()
    }

    /// Number of input variables (`n`).
    pub fn terminal_count(&self) -> usize {
        self.inputs[0].len()
    }

    pub fn targets(&self) -> &[f64] {
        &self.targets
    }

    /// The output vector of the single-terminal expression `x_j`: the
    /// values of variable `j` across all cases.
    pub fn terminal_column(&self, j: usize) -> Vec<f64> {
        self.inputs.iter().map(|row| row[j]).collect()
    }

    /// Sum of absolute errors against the targets; `NaN` outputs rate as
    /// infinitely bad.
    pub fn q(&self, outputs: &[f64]) -> f64 {
        debug_assert_eq!(outputs.len(), self.case_count());
        let q: f64 = self
            .targets
            .iter()
            .zip(outputs)
            .map(|(t, o)| (t - o).abs())
            .sum();
        if q.is_nan() {
            f64::INFINITY
        } else {
            q
        }
    }

    /// Smallest and largest value appearing in the instance (inputs and
    /// targets); constant chromosomes draw from this interval.
    pub fn value_range(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for v in self.inputs.iter().flatten().chain(&self.targets) {
            lo = lo.min(*v);
            hi = hi.max(*v);
        }
        (lo, hi)
    }

    /// A constant chromosome: an independent random value per fitness case,
    /// drawn from the instance's value range.
    pub fn constant_chromosome(&self, rng: &mut RandomSource) -> Vec<f64> {
        let (lo, hi) = self.value_range();
        (0..self.case_count())
            .map(|_| lo + (hi - lo) * rng.next_unit())
            .collect()
    }

    /// A seeded instance with `cases` rows of three uniform `[0,1]` inputs
    /// and target `(v1 + v2) * v3`.
    pub fn sum_product_instance(cases: usize, rng: &mut RandomSource) -> Self {
        let inputs: Vec<Vec<f64>> = (0..cases)
            .map(|_| (0..3).map(|_| rng.next_unit()).collect())
            .collect();
        let targets = inputs.iter().map(|r| (r[0] + r[1]) * r[2]).collect();
        Self { inputs, targets }
    }
}

/// Best-quality trace of one seeded classic run.
#[derive(Debug, Clone)]
pub struct ClassicRecord {
    pub seed: u64,
    /// `(generation, best Q so far)` rows at every `metric_stride`
    /// generations plus the final generation.
    pub samples: Vec<(u32, f64)>,
    pub best_outputs: Vec<f64>,
    pub best_q: f64,
    pub evaluations: u64,
    pub wall_seconds: f64,
}

struct ClassicIndividual {
    outputs: Vec<f64>,
    q: f64,
}

/// Generational loop with single-best elitism; returns the individual
/// minimizing `Q`.
pub fn run_classic(
    cases: &FitnessCases,
    cfg: &AlgoConfig,
    rng: &mut RandomSource,
) -> Result<ClassicRecord, TgpError> {
    cfg.validate()?;
    let start = Instant::now();
    let n = cases.terminal_count();
    let mut evaluations = 0u64;

    let make = |outputs: Vec<f64>, evals: &mut u64| {
        *evals += 1;
        let q = cases.q(&outputs);
        ClassicIndividual { outputs, q }
    };

    // terminal columns and constant chromosomes in equal proportion
    let mut pop: Vec<ClassicIndividual> = (0..cfg.pop_size)
        .map(|i| {
            let outputs = if i < cfg.pop_size / 2 {
                cases.terminal_column(i % n)
            } else {
                cases.constant_chromosome(rng)
            };
            make(outputs, &mut evaluations)
        })
        .collect();

    let best_index = |pop: &[ClassicIndividual]| -> usize {
        let mut best = 0;
        for (i, ind) in pop.iter().enumerate() {
            if ind.q < pop[best].q {
                best = i;
            }
        }
        best
    };

    // a single-terminal insertion: a terminal column or a constant
    // chromosome, even odds
    let insert = |rng: &mut RandomSource| -> Vec<f64> {
        if rng.next_bool(0.5) {
            cases.terminal_column(rng.next_index(n))
        } else {
            cases.constant_chromosome(rng)
        }
    };

    let tournament = |pop: &[ClassicIndividual], rng: &mut RandomSource| -> usize {
        let mut winner = rng.next_index(pop.len());
        for _ in 1..cfg.tournament_size {
            let challenger = rng.next_index(pop.len());
            if pop[challenger].q < pop[winner].q {
                winner = challenger;
            }
        }
        winner
    };

    let mut best = best_index(&pop);
    let mut samples = vec![(0u32, pop[best].q)];
    for generation in 1..=cfg.generations {
        let mut next = Vec::with_capacity(cfg.pop_size);
        next.push(ClassicIndividual {
            outputs: pop[best].outputs.clone(),
            q: pop[best].q,
        });
        while next.len() < cfg.pop_size {
            let outputs = if rng.next_bool(cfg.p_insert) {
                insert(rng)
            } else {
                let symbol = pick_symbol(rng, &cfg.function_set)?;
                let a = tournament(&pop, rng);
                if symbol.arity() == 2 {
                    let b = tournament(&pop, rng);
                    pop[a]
                        .outputs
                        .iter()
                        .zip(&pop[b].outputs)
                        .map(|(&x, &y)| symbol.raw_eval(&[x, y]).expect("arity checked"))
                        .collect()
                } else {
                    pop[a]
                        .outputs
                        .iter()
                        .map(|&x| symbol.raw_eval(&[x]).expect("arity checked"))
                        .collect()
                }
            };
            next.push(make(outputs, &mut evaluations));
        }
        pop = next;
        best = best_index(&pop);
        if generation % cfg.metric_stride == 0 || generation == cfg.generations {
            samples.push((generation as u32, pop[best].q));
        }
    }

    Ok(ClassicRecord {
        seed: rng.seed(),
        samples,
        best_outputs: pop[best].outputs.clone(),
        best_q: pop[best].q,
        evaluations,
        wall_seconds: start.elapsed().as_secs_f64(),
    })
}

/// `cfg.runs` independent seeded classic runs (run `i` uses `cfg.seed + i`)
/// over one shared instance, in run order.
pub fn run_classic_batch(
    cases: &FitnessCases,
    cfg: &AlgoConfig,
) -> Result<Vec<ClassicRecord>, TgpError> {
    cfg.validate()?;
    (0..cfg.runs)
        .into_par_iter()
        .map(|i| {
            let mut rng = RandomSource::from_seed(cfg.seed.wrapping_add(i as u64));
            run_classic(cases, cfg, &mut rng)
        })
        .collect()
}
