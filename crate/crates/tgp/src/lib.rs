//! Traceless genetic programming (TGP).
//!
//! TGP is a genetic-programming variant that never stores expression trees:
//! an individual is just the output vector a program would have produced.
//! Crossover applies one function symbol elementwise across the parents'
//! vectors, and insertion injects a fresh random vector. Because decoding an
//! individual is a single pass over its genes, evaluation is linear in the
//! genome length.
//!
//! The crate provides:
//!
//! * [`symbols`] — the function set with domain-closed redefinitions that
//!   keep every gene inside `[0, 1]`, plus the raw (unbounded) forms used by
//!   symbolic regression;
//! * [`genome`] — fixed-length real-valued individuals and the two genetic
//!   operators (crossover, insertion);
//! * [`problems`] — the ZDT1–ZDT4, ZDT6 biobjective benchmarks with
//!   gene decoding and analytic reference fronts;
//! * [`dominance`] — Pareto dominance and nondominated filtering;
//! * [`archive`] — a bounded nondominated archive pruned by removing one
//!   member of the closest pair in objective space;
//! * [`metrics`] — convergence (CM) and diversity (DM) metrics against a
//!   sampled reference front;
//! * [`engine`] — the generational loops: classic single-fitness TGP and the
//!   two multiobjective variants (with and without archive);
//! * [`classic`] — fitness cases and the symbolic-regression loop.
//!
//! All stochastic operations draw from an explicit [`RandomSource`];
//! identical seeds reproduce runs bit for bit.

pub mod archive;
pub mod classic;
pub mod dominance;
pub mod engine;
pub mod genome;
pub mod metrics;
pub mod problems;
pub mod rng;
pub mod symbols;

pub use archive::Archive;
pub use classic::{ClassicRecord, FitnessCases};
pub use dominance::{dominates, nondominated_filter, EvaluatedIndividual};
pub use engine::{AlgoConfig, RunRecord, Variant};
pub use genome::Genome;
pub use metrics::{MetricSample, REFERENCE_FRONT_SIZE};
pub use problems::{ObjectivePoint, Zdt};
pub use rng::RandomSource;
pub use symbols::FunctionSymbol;

use thiserror::Error;

/// Errors reported by the TGP library.
///
/// Every fallible operation signals misuse through one of these variants
/// instead of panicking; the numeric kernels themselves are total on their
/// documented domains.
#[derive(Debug, Error, PartialEq)]
pub enum TgpError {
    /// A crossover was given a parent count different from the symbol arity.
    #[error("symbol expects {expected} parent(s), got {found}")]
    ArityMismatch { expected: usize, found: usize },

    /// Genomes of different lengths were combined.
    #[error("genome length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    /// A gene or decision variable fell outside its admissible interval.
    #[error("value {value} at position {index} outside [{lo}, {hi}]")]
    OutOfDomain {
        index: usize,
        value: f64,
        lo: f64,
        hi: f64,
    },

    /// An operation that needs at least one element got an empty collection.
    #[error("empty {what}")]
    Empty { what: &'static str },

    /// A configuration field violates its documented range.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// The archive cannot prune with fewer than two members.
    #[error("archive pruning needs at least 2 members, got {0}")]
    ArchiveTooSmall(usize),
}
