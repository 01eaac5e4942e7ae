//! Convergence and diversity metrics against a sampled reference front.
//!
//! Both metrics compare an evolved front `FP` to a reference set `PA`
//! sampled from the analytic Pareto front:
//!
//! * convergence `CM = (1/|FP|) * Σ_i min_j d(i, j)` — mean Euclidean
//!   distance of each front member to its nearest reference point; lower is
//!   better;
//! * diversity `DM = |marked| / |PA|`, where a reference point is *marked*
//!   when it is the nearest reference of at least one front member; higher
//!   is better.
//!
//! Callers pass only nondominated members; the metrics do not filter.

use crate::problems::ObjectivePoint;
use crate::TgpError;

/// Reference front sample size used throughout the benchmark harness.
pub const REFERENCE_FRONT_SIZE: usize = 200;

/// One metric row of a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricSample {
    pub generation: u32,
    pub cm: f64,
    pub dm: f64,
}

/// Mean distance from each front member to its nearest reference point.
pub fn convergence_metric(
    front: &[ObjectivePoint],
    reference: &[ObjectivePoint],
) -> Result<f64, TgpError> {
    check_nonempty(front, reference)?;
    let total: f64 = front
        .iter()
        .map(|p| {
            reference
                .iter()
                .map(|r| p.distance(r))
                .fold(f64::INFINITY, f64::min)
        })
        .sum();
    Ok(total / front.len() as f64)
}

/// Fraction of reference points that are the nearest reference of at least
/// one front member. Nearest-reference ties resolve to the lowest index.
pub fn diversity_metric(
    front: &[ObjectivePoint],
    reference: &[ObjectivePoint],
) -> Result<f64, TgpError> {
    check_nonempty(front, reference)?;
    let mut marked = vec![false; reference.len()];
    for p in front {
        let mut best = 0;
        let mut best_dist = f64::INFINITY;
        for (j, r) in reference.iter().enumerate() {
            let d = p.distance_sq(r);
            if d < best_dist {
                best_dist = d;
                best = j;
            }
        }
        marked[best] = true;
    }
    let count = marked.iter().filter(|&&m| m).count();
    Ok(count as f64 / reference.len() as f64)
}

fn check_nonempty(front: &[ObjectivePoint], reference: &[ObjectivePoint]) -> Result<(), TgpError> {
    if front.is_empty() {
        return Err(TgpError::Empty { what: "front" });
    }
    if reference.is_empty() {
        return Err(TgpError::Empty {
            what: "reference front",
        });
    }
    Ok(())
}
