//! Bounded archive of nondominated solutions.
//!
//! The archive remembers the nondominated solutions found so far. After
//! every generation it absorbs the new population, drops dominated and
//! duplicate entries, and — whenever it grows past its capacity — repeatedly
//! removes one member of the closest pair in objective space, which keeps
//! the surviving members spread out along the front.

use crate::dominance::{nondominated_indices, EvaluatedIndividual};
use crate::problems::ObjectivePoint;
use crate::TgpError;

/// Bounded set of pairwise-nondominated evaluated individuals.
#[derive(Debug, Clone)]
pub struct Archive {
    capacity: usize,
    members: Vec<EvaluatedIndividual>,
}

impl Archive {
    /// An empty archive holding at most `capacity` members.
    pub fn new(capacity: usize) -> Result<Self, TgpError> {
        if capacity == 0 {
            return Err(TgpError::InvalidConfig(
                "archive capacity must be at least 1".into(),
            ));
        }
        Ok(Self {
            capacity,
            members: Vec::new(),
        })
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn members(&self) -> &[EvaluatedIndividual] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn into_members(self) -> Vec<EvaluatedIndividual> {
        self.members
    }

    /// Merges a population into the archive.
    ///
    /// The result holds the nondominated members of `old ∪ new_pop` with
    /// exact objective-space duplicates collapsed onto their oldest copy,
    /// pruned back to capacity one closest-pair step at a time.
    pub fn update(&mut self, new_pop: &[EvaluatedIndividual]) {
        let mut candidates = std::mem::take(&mut self.members);
        candidates.extend_from_slice(new_pop);

        let points: Vec<ObjectivePoint> = candidates.iter().map(|m| m.objectives).collect();
        let mut kept: Vec<EvaluatedIndividual> = nondominated_indices(&points)
            .into_iter()
            .map(|i| candidates[i].clone())
            .collect();

        // collapse exact objective-space duplicates; members precede the new
        // population, so the first (oldest) copy wins
        let mut seen: Vec<ObjectivePoint> = Vec::with_capacity(kept.len());
        kept.retain(|m| {
            if seen
                .iter()
                .any(|p| p.f1 == m.objectives.f1 && p.f2 == m.objectives.f2)
            {
                false
            } else {
                seen.push(m.objectives);
                true
            }
        });

        while kept.len() > self.capacity {
            prune_closest_pair_step(&mut kept).expect("len > capacity >= 1 implies len >= 2");
        }
        self.members = kept;
    }

    /// Removes one member of the closest pair (see
    /// [`prune_closest_pair_step`]).
    pub fn prune_closest_pair(&mut self) -> Result<(), TgpError> {
        prune_closest_pair_step(&mut self.members)
    }
}

/// Removes exactly one member of the closest pair in objective space.
///
/// Of the two pair members, the one whose distance to its second-nearest
/// neighbor is smaller sits in the denser region and is removed; on a tie
/// the larger (younger) id goes. Needs at least two members.
pub fn prune_closest_pair_step(members: &mut Vec<EvaluatedIndividual>) -> Result<(), TgpError> {
    let n = members.len();
    if n < 2 {
        return Err(TgpError::ArchiveTooSmall(n));
    }

    let mut best = (0usize, 1usize);
    let mut best_dist = f64::INFINITY;
    for i in 0..n {
        for j in (i + 1)..n {
            let d = members[i].objectives.distance_sq(&members[j].objectives);
            if d < best_dist {
                best_dist = d;
                best = (i, j);
            }
        }
    }
    let (a, b) = best;

    let second_nearest = |x: usize| -> f64 {
        let mut nearest = f64::INFINITY;
        for (k, m) in members.iter().enumerate() {
            if k != a && k != b {
                nearest = nearest.min(members[x].objectives.distance_sq(&m.objectives));
            }
        }
        nearest
    };
    let (da, db) = (second_nearest(a), second_nearest(b));

    let remove = if da < db {
        a
    } else if db < da {
        b
    } else if members[a].id > members[b].id {
        a
    } else {
        b
    };
    members.remove(remove);
    Ok(())
}
