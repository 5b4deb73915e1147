//! Weights on a distinguishing set of a clique.
//!
//! Given a clique `C` and a set `D` (disjoint from `C`) holding a distinguisher
//! for every edge of `C`, the procedure hands out nonnegative integer weights on
//! `D` summing to `|C| - 1` such that any set hitting all distinguishing P3s
//! weighs at least `|C| - 1` once `C` carries unit weights.
//!
//! Distinguishers are taken one at a time. The edges of the current clique that
//! the chosen `w` distinguishes and no other remaining member of `D` does form
//! a matching `M`; `w` gets weight `|M|`, one endpoint of every edge of `M`
//! leaves the clique and `w` leaves `D`.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::Bound::{Excluded, Unbounded};

use crate::graph::{Graph, VertexId};
use crate::structure::{distinguishes, is_clique};

use super::WeightingError;

/// A clique together with a set containing a distinguisher for each of its edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishingInstance {
    pub clique: BTreeSet<VertexId>,
    pub distinguishing_set: BTreeSet<VertexId>,
}

impl DistinguishingInstance {
    pub fn new(clique: BTreeSet<VertexId>, distinguishing_set: BTreeSet<VertexId>) -> Self {
        DistinguishingInstance { clique, distinguishing_set }
    }

    /// Checks the instance against `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), WeightingError> {
        let all = self.clique.iter().chain(&self.distinguishing_set);
        if let Some(v) = all.clone().find(|&&v| !g.contains(v)) {
            return Err(WeightingError::Precondition(format!("vertex {v} is not in the graph")));
        }
        if self.clique.is_empty() {
            return Err(WeightingError::Precondition("empty clique".into()));
        }
        if !is_clique(g, &self.clique) {
            return Err(WeightingError::Precondition("vertex set is not a clique".into()));
        }
        if let Some(v) = self.clique.intersection(&self.distinguishing_set).next() {
            return Err(WeightingError::Precondition(format!(
                "vertex {v} is in both the clique and the distinguishing set"
            )));
        }
        for (u, v) in clique_edges(&self.clique) {
            if !self.distinguishing_set.iter().any(|&w| distinguishes(g, w, u, v)) {
                return Err(WeightingError::Precondition(format!(
                    "edge {u}-{v} has no distinguisher in the distinguishing set"
                )));
            }
        }
        Ok(())
    }
}

fn clique_edges(clique: &BTreeSet<VertexId>) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
    clique
        .iter()
        .flat_map(move |&u| clique.range((Excluded(u), Unbounded)).map(move |&v| (u, v)))
}

/// Runs the procedure taking distinguishers in ascending vertex order.
pub fn distinguishing_set_weights(
    g: &Graph,
    inst: &DistinguishingInstance,
) -> Result<BTreeMap<VertexId, u64>, WeightingError> {
    let order: Vec<VertexId> = inst.distinguishing_set.iter().copied().collect();
    distinguishing_set_weights_in_order(g, inst, &order)
}

/// Runs the procedure taking distinguishers in the given order, which must be a
/// permutation of the distinguishing set. From each matching edge the smaller
/// endpoint leaves the clique.
pub fn distinguishing_set_weights_in_order(
    g: &Graph,
    inst: &DistinguishingInstance,
    order: &[VertexId],
) -> Result<BTreeMap<VertexId, u64>, WeightingError> {
    inst.validate(g)?;
    let as_set: BTreeSet<VertexId> = order.iter().copied().collect();
    if as_set != inst.distinguishing_set || as_set.len() != order.len() {
        return Err(WeightingError::Precondition(
            "pick order is not a permutation of the distinguishing set".into(),
        ));
    }

    let mut clique = inst.clique.clone();
    let mut remaining = inst.distinguishing_set.clone();
    let mut weights = BTreeMap::new();
    for &w in order {
        let matching: Vec<(VertexId, VertexId)> = clique_edges(&clique)
            .filter(|&(u, v)| {
                distinguishes(g, w, u, v)
                    && !remaining.iter().any(|&x| x != w && distinguishes(g, x, u, v))
            })
            .collect();
        let endpoints: BTreeSet<VertexId> = matching.iter().flat_map(|&(u, v)| [u, v]).collect();
        if endpoints.len() != 2 * matching.len() {
            return Err(WeightingError::Invariant(format!(
                "edges uniquely distinguished by {w} do not form a matching"
            )));
        }
        for &(u, _) in &matching {
            clique.remove(&u);
        }
        remaining.remove(&w);
        weights.insert(w, matching.len() as u64);
    }
    if clique.len() != 1 {
        return Err(WeightingError::Invariant(format!(
            "{} clique vertices left after exhausting the distinguishing set",
            clique.len()
        )));
    }
    Ok(weights)
}
