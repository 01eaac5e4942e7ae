//! The ZDT biobjective test suite.
//!
//! Each problem is built from three functions `f1`, `g`, `h` with
//! `f2 = g * h(f1, g)`, minimized in both objectives. The Pareto-optimal
//! front of every instance is characterized by `g(x) = 1`, which lets the
//! suite expose an analytic reference front sampler.
//!
//! Genomes always live in `[0, 1]^m`; [`Zdt::decode`] maps each gene
//! affinely onto that variable's range (the identity except for ZDT4's
//! `[-5, 5]` tail).

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::genome::Genome;
use crate::TgpError;

/// A point in the biobjective space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObjectivePoint {
    pub f1: f64,
    pub f2: f64,
}

impl ObjectivePoint {
    pub fn new(f1: f64, f2: f64) -> Self {
        Self { f1, f2 }
    }

    /// Euclidean distance to `other`.
    pub fn distance(&self, other: &Self) -> f64 {
        self.distance_sq(other).sqrt()
    }

    /// Squared Euclidean distance; cheaper when only comparisons matter.
    pub fn distance_sq(&self, other: &Self) -> f64 {
        let df1 = self.f1 - other.f1;
        let df2 = self.f2 - other.f2;
        df1 * df1 + df2 * df2
    }
}

/// The five real-valued ZDT instances used by the benchmark harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Zdt {
    Zdt1,
    Zdt2,
    Zdt3,
    Zdt4,
    Zdt6,
}

impl Zdt {
    pub const ALL: [Zdt; 5] = [Zdt::Zdt1, Zdt::Zdt2, Zdt::Zdt3, Zdt::Zdt4, Zdt::Zdt6];

    pub fn name(self) -> &'static str {
        match self {
            Zdt::Zdt1 => "zdt1",
            Zdt::Zdt2 => "zdt2",
            Zdt::Zdt3 => "zdt3",
            Zdt::Zdt4 => "zdt4",
            Zdt::Zdt6 => "zdt6",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name.to_ascii_lowercase().as_str() {
            "zdt1" => Some(Zdt::Zdt1),
            "zdt2" => Some(Zdt::Zdt2),
            "zdt3" => Some(Zdt::Zdt3),
            "zdt4" => Some(Zdt::Zdt4),
            "zdt6" => Some(Zdt::Zdt6),
            _ => None,
        }
    }

    /// Number of decision variables (= genome length).
    pub fn gene_count(self) -> usize {
        match self {
            Zdt::Zdt1 | Zdt::Zdt2 | Zdt::Zdt3 => 30,
            Zdt::Zdt4 | Zdt::Zdt6 => 10,
        }
    }

    /// Admissible interval of decision variable `i`.
    pub fn variable_range(self, i: usize) -> (f64, f64) {
        match self {
            Zdt::Zdt4 if i >= 1 => (-5.0, 5.0),
            _ => (0.0, 1.0),
        }
    }

    /// Maps a genome onto the decision space: variable `i` is
    /// `lo + gene * (hi - lo)` for that variable's range.
    pub fn decode(self, genome: &Genome) -> Result<Vec<f64>, TgpError> {
        let m = self.gene_count();
        if genome.len() != m {
            return Err(TgpError::LengthMismatch {
                expected: m,
                found: genome.len(),
            });
        }
        Ok(genome
            .genes()
            .iter()
            .enumerate()
            .map(|(i, &gene)| {
                let (lo, hi) = self.variable_range(i);
                lo + gene * (hi - lo)
            })
            .collect())
    }

    /// Evaluates a decision vector, rejecting wrong lengths and
    /// out-of-range components.
    pub fn evaluate(self, x: &[f64]) -> Result<ObjectivePoint, TgpError> {
        let m = self.gene_count();
        if x.len() != m {
            return Err(TgpError::LengthMismatch {
                expected: m,
                found: x.len(),
            });
        }
        for (index, &value) in x.iter().enumerate() {
            let (lo, hi) = self.variable_range(index);
            if !(lo..=hi).contains(&value) {
                return Err(TgpError::OutOfDomain {
                    index,
                    value,
                    lo,
                    hi,
                });
            }
        }
        let mf = (m - 1) as f64;
        let tail = || x[1..].iter().sum::<f64>();
        Ok(match self {
            Zdt::Zdt1 => {
                let f1 = x[0];
                let g = 1.0 + 9.0 * tail() / mf;
                ObjectivePoint::new(f1, g * (1.0 - (f1 / g).sqrt()))
            }
            Zdt::Zdt2 => {
                let f1 = x[0];
                let g = 1.0 + 9.0 * tail() / mf;
                let r = f1 / g;
                ObjectivePoint::new(f1, g * (1.0 - r * r))
            }
            Zdt::Zdt3 => {
                let f1 = x[0];
                let g = 1.0 + 9.0 * tail() / mf;
                let r = f1 / g;
                ObjectivePoint::new(f1, g * (1.0 - r.sqrt() - r * (10.0 * PI * f1).sin()))
            }
            Zdt::Zdt4 => {
                let f1 = x[0];
                let rastrigin: f64 = x[1..]
                    .iter()
                    .map(|&v| v * v - 10.0 * (4.0 * PI * v).cos())
                    .sum();
                let g = 1.0 + 10.0 * mf + rastrigin;
                ObjectivePoint::new(f1, g * (1.0 - (f1 / g).sqrt()))
            }
            Zdt::Zdt6 => {
                let f1 = 1.0 - (-4.0 * x[0]).exp() * (6.0 * PI * x[0]).sin().powi(6);
                let g = 1.0 + 9.0 * (tail() / mf).powf(0.25);
                let r = f1 / g;
                ObjectivePoint::new(f1, g * (1.0 - r * r))
            }
        })
    }

    /// Decodes and evaluates in one step.
    pub fn evaluate_genome(self, genome: &Genome) -> Result<ObjectivePoint, TgpError> {
        self.evaluate(&self.decode(genome)?)
    }

    /// Samples `n_ref` equidistant points of the analytic Pareto front
    /// (equidistant in `f1`; ZDT3 allocates points over its nondominated
    /// `f1` intervals proportionally to interval length).
    pub fn true_front(self, n_ref: usize) -> Vec<ObjectivePoint> {
        assert!(n_ref >= 2, "reference front needs at least 2 points");
        match self {
            Zdt::Zdt1 | Zdt::Zdt4 => sample_curve(0.0, 1.0, n_ref, |f1| 1.0 - f1.sqrt()),
            Zdt::Zdt2 => sample_curve(0.0, 1.0, n_ref, |f1| 1.0 - f1 * f1),
            Zdt::Zdt6 => sample_curve(zdt6_f1_min(), 1.0, n_ref, |f1| 1.0 - f1 * f1),
            Zdt::Zdt3 => {
                let intervals = zdt3_front_intervals();
                let total: f64 = intervals.iter().map(|(a, b)| b - a).sum();
                let h = |f1: f64| 1.0 - f1.sqrt() - f1 * (10.0 * PI * f1).sin();
                (0..n_ref)
                    .map(|k| {
                        let mut t = total * k as f64 / (n_ref - 1) as f64;
                        let mut f1 = intervals.last().unwrap().1;
                        for &(a, b) in intervals {
                            if t <= b - a {
                                f1 = a + t;
                                break;
                            }
                            t -= b - a;
                        }
                        ObjectivePoint::new(f1, h(f1))
                    })
                    .collect()
            }
        }
    }
}

fn sample_curve(lo: f64, hi: f64, n: usize, f: impl Fn(f64) -> f64) -> Vec<ObjectivePoint> {
    (0..n)
        .map(|k| {
            let f1 = lo + (hi - lo) * k as f64 / (n - 1) as f64;
            ObjectivePoint::new(f1, f(f1))
        })
        .collect()
}

/// Smallest reachable `f1` on the ZDT6 front, found by minimizing
/// `f1(x1)` over `[0, 1]` (dense grid plus golden-section refinement).
pub fn zdt6_f1_min() -> f64 {
    static VALUE: OnceLock<f64> = OnceLock::new();
    *VALUE.get_or_init(|| {
        let f = |x: f64| 1.0 - (-4.0 * x).exp() * (6.0 * PI * x).sin().powi(6);
        let n = 1_000_000u32;
        let mut best_x = 0.0;
        let mut best = f64::INFINITY;
        for i in 0..=n {
            let x = i as f64 / n as f64;
            let v = f(x);
            if v < best {
                best = v;
                best_x = x;
            }
        }
        let step = 1.0 / n as f64;
        let mut a = (best_x - step).max(0.0);
        let mut b = (best_x + step).min(1.0);
        let inv_phi = (5.0_f64.sqrt() - 1.0) / 2.0;
        let mut c = b - inv_phi * (b - a);
        let mut d = a + inv_phi * (b - a);
        let (mut fc, mut fd) = (f(c), f(d));
        for _ in 0..100 {
            if fc < fd {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = f(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = f(d);
            }
        }
        f(0.5 * (a + b))
    })
}

/// The nondominated `f1` intervals of the ZDT3 front, computed once from a
/// dense sweep of `h(f1)` followed by a running-minimum filter.
pub fn zdt3_front_intervals() -> &'static [(f64, f64)] {
    static INTERVALS: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    INTERVALS.get_or_init(|| {
        let h = |f1: f64| 1.0 - f1.sqrt() - f1 * (10.0 * PI * f1).sin();
        let n = 1_000_000u32;
        let mut intervals = Vec::new();
        let mut run_start: Option<f64> = None;
        let mut last_surviving = 0.0;
        let mut min_so_far = f64::INFINITY;
        for i in 0..=n {
            let x = i as f64 / n as f64;
            let v = h(x);
            if v < min_so_far {
                min_so_far = v;
                if run_start.is_none() {
                    run_start = Some(x);
                }
                last_surviving = x;
            } else if let Some(start) = run_start.take() {
                intervals.push((start, last_surviving));
            }
        }
        if let Some(start) = run_start {
            intervals.push((start, last_surviving));
        }
        intervals
    })
}
