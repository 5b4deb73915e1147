//! Optimum-preserving reductions and the maps lifting a solution of the reduced
//! instance back to the instance it came from.
//!
//! * Zero-cost removal deletes a vertex of cost exactly zero. Lifting adds the
//!   vertex back to the solution only if the solution no longer hits every
//!   induced P3 once the vertex is present again.
//! * Twin merge deletes one of two true twins and moves its whole cost onto the
//!   survivor. Lifting adds the deleted twin whenever the survivor is in the
//!   solution, since a minimal solution takes both twins or neither.

use std::collections::BTreeSet;

use num_traits::Zero;
use thiserror::Error;

use crate::graph::{GraphError, Graph, Rational, VertexId, WeightedGraph};
use crate::hitting_set::{verify_feasible, HittingSet, VerifyError};
use crate::structure::{are_true_twins, has_induced_p3_through};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionKind {
    ZeroCostRemoval(VertexId),
    TwinMerge { kept: VertexId, removed: VertexId },
}

/// One applied reduction. `transferred` is the cost moved onto the surviving
/// twin (zero for a zero-cost removal).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub kind: ReductionKind,
    pub transferred: Rational,
}

impl ReductionStep {
    /// The vertex deleted from the graph by this step.
    pub fn removed_vertex(&self) -> VertexId {
        match self.kind {
            ReductionKind::ZeroCostRemoval(u) => u,
            ReductionKind::TwinMerge { removed, .. } => removed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertices {0} and {1} are not true twins")]
    NotTwins(VertexId, VertexId),
    #[error("vertex {0} has nonzero cost {1}")]
    NonzeroCost(VertexId, Rational),
    #[error("the reduced solution is not a hitting set of the reduced instance")]
    InfeasibleReducedSolution,
}

impl From<VerifyError> for ReductionError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Graph(g) => ReductionError::Graph(g),
            VerifyError::Infeasible => ReductionError::InfeasibleReducedSolution,
        }
    }
}

/// Deletes the zero-cost vertex `u`.
pub fn remove_zero_cost(wg: &WeightedGraph, u: VertexId) -> Result<(WeightedGraph, ReductionStep), ReductionError> {
    wg.graph().check_vertex(u)?;
    let c = wg.cost(u);
    if !c.is_zero() {
        return Err(ReductionError::NonzeroCost(u, c.clone()));
    }
    let step = ReductionStep {
        kind: ReductionKind::ZeroCostRemoval(u),
        transferred: Rational::zero(),
    };
    Ok((wg.without_vertex(u), step))
}

/// Deletes `u2` and adds its cost to `u`. The two must be true twins.
pub fn merge_true_twins(
    wg: &WeightedGraph,
    u: VertexId,
    u2: VertexId,
) -> Result<(WeightedGraph, ReductionStep), ReductionError> {
    let g = wg.graph();
    g.check_vertex(u)?;
    g.check_vertex(u2)?;
    if !are_true_twins(g, u, u2) {
        return Err(ReductionError::NotTwins(u, u2));
    }
    let transferred = wg.cost(u2).clone();
    let (mut graph, mut costs) = wg.clone().into_parts();
    graph.remove_vertex_mut(u2);
    costs.remove(&u2);
    *costs.get_mut(&u).expect("survivor has a cost") += &transferred;
    let step = ReductionStep {
        kind: ReductionKind::TwinMerge { kept: u, removed: u2 },
        transferred,
    };
    Ok((WeightedGraph::from_parts_unchecked(graph, costs), step))
}

/// Lifts a hitting set of the reduced instance produced by `step` from
/// `original` to a hitting set of `original` with the same cost.
pub fn lift_solution(
    step: &ReductionStep,
    x_reduced: &HittingSet,
    original: &WeightedGraph,
) -> Result<HittingSet, ReductionError> {
    let g = original.graph();
    let reduced = g.without_vertex(step.removed_vertex());
    if !verify_feasible(&reduced, x_reduced)? {
        return Err(ReductionError::InfeasibleReducedSolution);
    }
    let mut x = x_reduced.vertices().clone();
    match step.kind {
        ReductionKind::ZeroCostRemoval(u) => lift_zero_cost(g, &mut x, u),
        ReductionKind::TwinMerge { kept, removed } => lift_twin(&mut x, kept, removed),
    }
    Ok(HittingSet::new(x))
}

/// `g` is the graph with `u` present; `x` hits every induced P3 avoiding `u`,
/// so only paths through `u` need checking.
pub(crate) fn lift_zero_cost(g: &Graph, x: &mut BTreeSet<VertexId>, u: VertexId) {
    if has_induced_p3_through(g, x, u) {
        x.insert(u);
    }
}

pub(crate) fn lift_twin(x: &mut BTreeSet<VertexId>, kept: VertexId, removed: VertexId) {
    if x.contains(&kept) {
        x.insert(removed);
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::graph::int;
    use crate::hitting_set::verify_minimal;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn weighted(n: u32, edges: &[(u32, u32)], costs: &[i64]) -> WeightedGraph {
        let g = Graph::from_index_edges(n, edges).unwrap();
        let costs: BTreeMap<_, _> = costs.iter().enumerate().map(|(i, &c)| (v(i as u32), int(c))).collect();
        WeightedGraph::new(g, costs).unwrap()
    }

    #[test]
    fn k2_merge_sums_costs() {
        let wg = weighted(2, &[(0, 1)], &[3, 5]);
        let (red, step) = merge_true_twins(&wg, v(0), v(1)).unwrap();
        assert_eq!(red.graph().vertex_count(), 1);
        assert_eq!(red.cost(v(0)), &int(8));
        assert_eq!(step.transferred, int(5));
    }

    #[test]
    fn k3_double_merge() {
        let wg = weighted(3, &[(0, 1), (0, 2), (1, 2)], &[1, 1, 1]);
        let (a, _) = merge_true_twins(&wg, v(0), v(1)).unwrap();
        let (b, _) = merge_true_twins(&a, v(0), v(2)).unwrap();
        assert_eq!(b.graph().vertex_count(), 1);
        assert_eq!(b.cost(v(0)), &int(3));
    }

    #[test]
    fn merge_rejects_non_twins() {
        let wg = weighted(3, &[(0, 1), (1, 2)], &[1, 1, 1]);
        assert_eq!(merge_true_twins(&wg, v(0), v(1)), Err(ReductionError::NotTwins(v(0), v(1))));
        assert_eq!(merge_true_twins(&wg, v(0), v(2)), Err(ReductionError::NotTwins(v(0), v(2))));
    }

    #[test]
    fn twin_lift() {
        // paw: triangle 0,1,2 with pendant 3 on 0; 1 and 2 are twins
        let wg = weighted(4, &[(0, 1), (0, 2), (1, 2), (0, 3)], &[1, 1, 1, 1]);
        let (_, step) = merge_true_twins(&wg, v(1), v(2)).unwrap();
        let lifted = lift_solution(&step, &HittingSet::from_iter([v(1)]), &wg).unwrap();
        assert_eq!(lifted, HittingSet::from_iter([v(1), v(2)]));
        assert_eq!(verify_minimal(wg.graph(), &lifted), Ok(true));
        let lifted = lift_solution(&step, &HittingSet::from_iter([v(0)]), &wg).unwrap();
        assert_eq!(lifted, HittingSet::from_iter([v(0)]));
    }

    #[test]
    fn zero_cost_lift_on_p3_middle() {
        let wg = weighted(3, &[(0, 1), (1, 2)], &[1, 0, 1]);
        let (red, step) = remove_zero_cost(&wg, v(1)).unwrap();
        assert_eq!(red.graph().edge_count(), 0);
        let lifted = lift_solution(&step, &HittingSet::empty(), &wg).unwrap();
        assert_eq!(lifted, HittingSet::from_iter([v(1)]));
        assert_eq!(lifted.cost(&wg), int(0));
    }

    #[test]
    fn zero_cost_lift_on_p3_end() {
        let wg = weighted(3, &[(0, 1), (1, 2)], &[0, 1, 1]);
        let (_, step) = remove_zero_cost(&wg, v(0)).unwrap();
        let lifted = lift_solution(&step, &HittingSet::empty(), &wg).unwrap();
        assert_eq!(lifted, HittingSet::from_iter([v(0)]));
    }

    #[test]
    fn zero_cost_lift_keeps_solution_when_already_hitting() {
        let wg = weighted(4, &[(0, 1), (1, 2), (2, 3)], &[0, 1, 1, 1]);
        let (_, step) = remove_zero_cost(&wg, v(0)).unwrap();
        let lifted = lift_solution(&step, &HittingSet::from_iter([v(2)]), &wg).unwrap();
        assert_eq!(lifted, HittingSet::from_iter([v(2)]));
    }

    #[test]
    fn errors() {
        let wg = weighted(3, &[(0, 1), (1, 2)], &[1, 1, 1]);
        assert!(matches!(remove_zero_cost(&wg, v(0)), Err(ReductionError::NonzeroCost(..))));
        let wg = weighted(4, &[(0, 1), (1, 2), (2, 3)], &[0, 1, 1, 1]);
        let (_, step) = remove_zero_cost(&wg, v(0)).unwrap();
        // 1-2-3 is still an induced P3 in the reduced graph
        assert_eq!(
            lift_solution(&step, &HittingSet::empty(), &wg),
            Err(ReductionError::InfeasibleReducedSolution)
        );
    }
}
