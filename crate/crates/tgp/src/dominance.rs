//! Pareto dominance and nondominated filtering (biobjective minimization).

use crate::genome::Genome;
use crate::problems::ObjectivePoint;

/// A genome together with its objective values and a creation id.
///
/// Ids increase monotonically in creation order; they make tie-breaking in
/// the archive deterministic and never change once assigned.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluatedIndividual {
    pub genome: Genome,
    pub objectives: ObjectivePoint,
    pub id: u64,
}

/// `a` dominates `b` iff `a` is no worse in both objectives and strictly
/// better in at least one.
pub fn dominates(a: &ObjectivePoint, b: &ObjectivePoint) -> bool {
    a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2)
}

/// Indices of the members dominated by no other member, in input order.
///
/// Objective-space duplicates never dominate each other, so all copies
/// survive. Runs in `O(n log n)`: sort by `(f1, f2)`, then a member is
/// nondominated iff its `f2` is strictly below every `f2` at smaller `f1`
/// and minimal within its own `f1` group.
pub fn nondominated_indices(points: &[ObjectivePoint]) -> Vec<usize> {
    let n = points.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        points[a]
            .f1
            .total_cmp(&points[b].f1)
            .then(points[a].f2.total_cmp(&points[b].f2))
    });

    let mut keep = Vec::new();
    let mut best_f2_before = f64::INFINITY;
    let mut i = 0;
    while i < n {
        // group of equal f1; sorted so the group's minimal f2 comes first
        let f1 = points[order[i]].f1;
        let group_min_f2 = points[order[i]].f2;
        let mut j = i;
        while j < n && points[order[j]].f1 == f1 {
            let f2 = points[order[j]].f2;
            if f2 == group_min_f2 && f2 < best_f2_before {
                keep.push(order[j]);
            }
            j += 1;
        }
        if group_min_f2 < best_f2_before {
            best_f2_before = group_min_f2;
        }
        i = j;
    }
    keep.sort_unstable();
    keep
}

/// The nondominated members of `pop`, cloned, in input order.
pub fn nondominated_filter(pop: &[EvaluatedIndividual]) -> Vec<EvaluatedIndividual> {
    let points: Vec<ObjectivePoint> = pop.iter().map(|ind| ind.objectives).collect();
    nondominated_indices(&points)
        .into_iter()
        .map(|i| pop[i].clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RandomSource;
    use proptest::prelude::*;

    fn pt(f1: f64, f2: f64) -> ObjectivePoint {
        ObjectivePoint::new(f1, f2)
    }

    fn ind(f1: f64, f2: f64, id: u64) -> EvaluatedIndividual {
        EvaluatedIndividual {
            genome: Genome::new(vec![0.5]).unwrap(),
            objectives: pt(f1, f2),
            id,
        }
    }

    /// O(n^2) oracle: a member survives iff no other member dominates it.
    fn brute_force_indices(points: &[ObjectivePoint]) -> Vec<usize> {
        (0..points.len())
            .filter(|&i| {
                points
                    .iter()
                    .enumerate()
                    .all(|(j, q)| j == i || !dominates(q, &points[i]))
            })
            .collect()
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&pt(0.2, 0.5), &pt(0.3, 0.6)));
        assert!(!dominates(&pt(0.2, 0.5), &pt(0.2, 0.5)));
        assert!(!dominates(&pt(0.1, 0.9), &pt(0.9, 0.1)));
        // weakly better in one coordinate is enough
        assert!(dominates(&pt(0.2, 0.5), &pt(0.2, 0.6)));
    }

    #[test]
    fn filter_examples() {
        let pop = vec![ind(0.0, 1.0, 0), ind(1.0, 0.0, 1), ind(1.0, 1.0, 2)];
        let front = nondominated_filter(&pop);
        assert_eq!(front.len(), 2);
        assert_eq!(front[0].id, 0);
        assert_eq!(front[1].id, 1);

        let single = vec![ind(0.3, 0.3, 7)];
        assert_eq!(nondominated_filter(&single).len(), 1);
    }

    #[test]
    fn filter_keeps_duplicates_and_order() {
        let pop = vec![
            ind(0.5, 0.5, 0),
            ind(0.2, 0.9, 1),
            ind(0.5, 0.5, 2),
            ind(0.6, 0.6, 3),
        ];
        let front = nondominated_filter(&pop);
        let ids: Vec<u64> = front.iter().map(|m| m.id).collect();
        assert_eq!(ids, vec![0, 1, 2]);
    }

    #[test]
    fn filter_matches_brute_force_on_seeded_populations() {
        let mut rng = RandomSource::from_seed(1234);
        for _ in 0..200 {
            let n = 1 + rng.next_index(100);
            let points: Vec<ObjectivePoint> = (0..n)
                .map(|_| {
                    // quantized coordinates make objective-space ties common
                    let f1 = (rng.next_unit() * 10.0).round() / 10.0;
                    let f2 = (rng.next_unit() * 10.0).round() / 10.0;
                    pt(f1, f2)
                })
                .collect();
            assert_eq!(nondominated_indices(&points), brute_force_indices(&points));
        }
    }

    #[test]
    fn filter_is_idempotent() {
        let mut rng = RandomSource::from_seed(55);
        let pop: Vec<EvaluatedIndividual> = (0..60)
            .map(|id| ind(rng.next_unit(), rng.next_unit(), id))
            .collect();
        let once = nondominated_filter(&pop);
        let twice = nondominated_filter(&once);
        assert_eq!(once, twice);
    }

    proptest! {
        #[test]
        fn dominance_partial_order_laws(
            a1 in 0.0f64..1.0, a2 in 0.0f64..1.0,
            b1 in 0.0f64..1.0, b2 in 0.0f64..1.0,
            c1 in 0.0f64..1.0, c2 in 0.0f64..1.0,
        ) {
            let (a, b, c) = (pt(a1, a2), pt(b1, b2), pt(c1, c2));
            // irreflexive
            prop_assert!(!dominates(&a, &a));
            // asymmetric
            if dominates(&a, &b) {
                prop_assert!(!dominates(&b, &a));
            }
            // transitive
            if dominates(&a, &b) && dominates(&b, &c) {
                prop_assert!(dominates(&a, &c));
            }
        }

        #[test]
        fn filter_output_incomparable_and_covering(seed in 0u64..500) {
            let mut rng = RandomSource::from_seed(seed);
            let n = 2 + rng.next_index(60);
            let points: Vec<ObjectivePoint> =
                (0..n).map(|_| pt(rng.next_unit(), rng.next_unit())).collect();
            let keep = nondominated_indices(&points);
            prop_assert!(!keep.is_empty());
            // pairwise incomparable
            for &i in &keep {
                for &j in &keep {
                    if i != j {
                        prop_assert!(!dominates(&points[i], &points[j]));
                    }
                }
            }
            // every excluded member is dominated by some kept member
            for i in 0..n {
                if !keep.contains(&i) {
                    prop_assert!(keep.iter().any(|&j| dominates(&points[j], &points[i])));
                }
            }
        }
    }
}
