//! Local-ratio approximation algorithms.
//!
//! All three algorithms share one loop. While the current graph still has a
//! forbidden path:
//!
//! 1. a vertex of cost zero is deleted (and put back into the solution later
//!    only if needed);
//! 2. for the cluster-deletion algorithm, true twins are merged;
//! 3. otherwise a weighting `(H, c_H)` is chosen and `λ*·c_H` is subtracted
//!    from the costs, where `λ*` is the largest scalar keeping every cost
//!    nonnegative. At least one vertex reaches cost zero.
//!
//! Reductions are recorded on a stack while the loop runs and their lifts are
//! replayed in reverse once it stops.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::{int, Graph, Rational, VertexId, WeightedGraph};
use crate::hitting_set::HittingSet;
use crate::reduction::{lift_twin, lift_zero_cost};
use crate::structure::{find_induced_p3, find_true_twins, has_p3_subgraph_through, is_cluster_graph, is_diamond_free};
use crate::weighting::{first_weighting, LocalWeighting, Mode, Provenance, WeightingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Weighting(#[from] WeightingError),
    #[error("diamond-free mode requires a diamond-free input graph")]
    NotDiamondFree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceStep {
    ZeroCostRemoval(VertexId),
    TwinMerge { kept: VertexId, removed: VertexId },
    WeightSubtraction {
        weighting: LocalWeighting,
        lambda: Rational,
        /// Vertices whose cost became zero in this step.
        zeroed: Vec<VertexId>,
    },
}

/// Steps taken by one run, in execution order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LocalRatioTrace {
    steps: Vec<TraceStep>,
}

impl LocalRatioTrace {
    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn subtractions(&self) -> impl Iterator<Item = (&LocalWeighting, &Rational)> {
        self.steps.iter().filter_map(|s| match s {
            TraceStep::WeightSubtraction { weighting, lambda, .. } => Some((weighting, lambda)),
            _ => None,
        })
    }

    pub fn uses_provenance(&self, pred: impl Fn(&Provenance) -> bool) -> bool {
        self.subtractions().any(|(w, _)| pred(w.provenance()))
    }

    /// `Σ λ*·c_H(X ∩ V(H))` over the weight subtractions. For a solution `X`
    /// returned with this trace this equals the original cost of `X`.
    pub fn charged_cost(&self, x: &HittingSet) -> Rational {
        self.subtractions()
            .fold(Rational::zero(), |acc, (w, lambda)| acc + lambda * w.weight_of(x.vertices()))
    }
}

/// What the shared loop is solving.
#[derive(Clone, Copy)]
enum Variant {
    ClusterVd(Mode),
    P3Subgraph,
    InducedP3Packing,
}

impl Variant {
    fn done(self, g: &Graph) -> bool {
        match self {
            Variant::P3Subgraph => g.max_degree() <= 1,
            _ => is_cluster_graph(g),
        }
    }

    fn pick(self, g: &Graph) -> Result<LocalWeighting, WeightingError> {
        match self {
            Variant::ClusterVd(mode) => first_weighting(g, mode),
            Variant::P3Subgraph => {
                let u = g
                    .vertices()
                    .find(|&v| g.degree(v) >= 2)
                    .ok_or_else(|| WeightingError::Invariant("no vertex of degree two".into()))?;
                let mut weights: BTreeMap<VertexId, Rational> =
                    g.neighbors(u).iter().map(|&v| (v, Rational::one())).collect();
                weights.insert(u, int(g.degree(u) as i64 - 1));
                LocalWeighting::new(weights, int(2), Provenance::Star)
            }
            Variant::InducedP3Packing => {
                let p3 = find_induced_p3(g).ok_or_else(|| WeightingError::Invariant("no induced P3".into()))?;
                let weights = p3.vertices().iter().map(|&v| (v, Rational::one())).collect();
                LocalWeighting::new(weights, int(3), Provenance::InducedP3)
            }
        }
    }

    fn restore(self, g: &Graph, x: &mut BTreeSet<VertexId>, u: VertexId) {
        match self {
            Variant::P3Subgraph => {
                if has_p3_subgraph_through(g, x, u) {
                    x.insert(u);
                }
            }
            _ => lift_zero_cost(g, x, u),
        }
    }
}

enum Undo {
    ZeroCost { vertex: VertexId, neighbors: BTreeSet<VertexId> },
    Twin { kept: VertexId, removed: VertexId, neighbors: BTreeSet<VertexId> },
}

fn run(wg: &WeightedGraph, variant: Variant) -> Result<(HittingSet, LocalRatioTrace), SolveError> {
    let (mut graph, mut cost) = wg.clone().into_parts();
    let mut steps = Vec::new();
    let mut undo = Vec::new();

    while !variant.done(&graph) {
        let zero = graph.vertices().find(|v| cost[v].is_zero());
        if let Some(u) = zero {
            let neighbors = graph.remove_vertex_mut(u);
            cost.remove(&u);
            undo.push(Undo::ZeroCost { vertex: u, neighbors });
            steps.push(TraceStep::ZeroCostRemoval(u));
            continue;
        }
        if matches!(variant, Variant::ClusterVd(_)) {
            if let Some((kept, removed)) = find_true_twins(&graph) {
                let moved = cost.remove(&removed).expect("twin has a cost");
                *cost.get_mut(&kept).expect("twin has a cost") += moved;
                let neighbors = graph.remove_vertex_mut(removed);
                undo.push(Undo::Twin { kept, removed, neighbors });
                steps.push(TraceStep::TwinMerge { kept, removed });
                continue;
            }
        }
        let weighting = variant.pick(&graph)?;
        let lambda = weighting
            .weights()
            .iter()
            .filter(|(_, w)| w.is_positive())
            .map(|(v, w)| &cost[v] / w)
            .min()
            .expect("weighting has a positive weight");
        let mut zeroed = Vec::new();
        for (v, w) in weighting.weights() {
            let c = cost.get_mut(v).expect("weighted vertex is in the graph");
            *c -= &lambda * w;
            debug_assert!(!c.is_negative());
            if w.is_positive() && c.is_zero() {
                zeroed.push(*v);
            }
        }
        steps.push(TraceStep::WeightSubtraction { weighting, lambda, zeroed });
    }

    let mut x = BTreeSet::new();
    while let Some(step) = undo.pop() {
        match step {
            Undo::ZeroCost { vertex, neighbors } => {
                graph.insert_vertex_mut(vertex, neighbors);
                variant.restore(&graph, &mut x, vertex);
            }
            Undo::Twin { kept, removed, neighbors } => {
                graph.insert_vertex_mut(removed, neighbors);
                lift_twin(&mut x, kept, removed);
            }
        }
    }
    Ok((HittingSet::new(x), LocalRatioTrace { steps }))
}

/// Cluster vertex deletion within a factor 9/4 of optimum. Returns an
/// inclusionwise minimal hitting set and the trace of the run.
pub fn cluster_vd_apx(wg: &WeightedGraph) -> Result<(HittingSet, LocalRatioTrace), SolveError> {
    run(wg, Variant::ClusterVd(Mode::General))
}

/// As [`cluster_vd_apx`], with the rule set chosen by `mode`. Diamond-free mode
/// rejects inputs containing a diamond and guarantees a factor of 2.
pub fn cluster_vd_apx_with_mode(wg: &WeightedGraph, mode: Mode) -> Result<(HittingSet, LocalRatioTrace), SolveError> {
    if mode == Mode::DiamondFree && !is_diamond_free(wg.graph()) {
        return Err(SolveError::NotDiamondFree);
    }
    run(wg, Variant::ClusterVd(mode))
}

/// Inclusionwise minimal set meeting every 3-vertex path subgraph, within a
/// factor 2 of optimum, using star weightings.
pub fn hitting_p3_subgraphs_apx(wg: &WeightedGraph) -> HittingSet {
    hitting_p3_subgraphs_apx_traced(wg).0
}

pub fn hitting_p3_subgraphs_apx_traced(wg: &WeightedGraph) -> (HittingSet, LocalRatioTrace) {
    run(wg, Variant::P3Subgraph).expect("star weighting always exists while a vertex has degree two")
}

/// Baseline 3-approximation: unit weights on one induced P3 per step.
pub fn naive_3apx(wg: &WeightedGraph) -> HittingSet {
    naive_3apx_traced(wg).0
}

pub fn naive_3apx_traced(wg: &WeightedGraph) -> (HittingSet, LocalRatioTrace) {
    run(wg, Variant::InducedP3Packing).expect("an induced P3 exists while the graph is not a cluster graph")
}
