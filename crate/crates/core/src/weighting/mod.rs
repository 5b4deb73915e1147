//! Weighted induced subgraphs `(H, c_H)` used by the local-ratio steps.
//!
//! Every weighting produced here is `α`-good: for each inclusionwise minimal
//! hitting set `X` of the host graph, `c_H(X ∩ V(H)) <= α · OPT(H, c_H)`.
//! Three rules are available, tried in this order:
//!
//! 1. an induced 4-cycle with unit weights (`α = 2`);
//! 2. a 5-clique with unit weights plus a weighted distinguishing set (`α = 9/4`);
//! 3. the second neighbourhood of a maximum-degree vertex (`α = 2`), valid once
//!    the graph is twin-free and free of induced 4-cycles and 5-cliques.

mod distinguishing;
mod second_neighborhood;

use std::collections::{BTreeMap, BTreeSet};
use std::ops::Bound::{Excluded, Unbounded};
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::{int, ratio, Graph, Rational, VertexId};
use crate::structure::{
    distinguishes, find_induced_c4, find_k5, induced_c4s, is_clique, k5s, InducedC4,
};

pub use distinguishing::{
    distinguishing_set_weights, distinguishing_set_weights_in_order, DistinguishingInstance,
};
pub use second_neighborhood::{
    second_neighborhood_weighting, second_neighborhood_weighting_diamond_free, ComponentKind,
    SecondNeighborhoodCase,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightingError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// Which rule produced a weighting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    C4,
    K5Distinguishing,
    SecondNeighborhood(SecondNeighborhoodCase),
    /// Star around a vertex of degree at least two (P3-subgraph variant).
    Star,
    /// Unit weights on one induced P3 (3-approximation baseline).
    InducedP3,
}

impl Provenance {
    /// Short stable label, used in traces and reports.
    pub fn label(&self) -> String {
        match self {
            Provenance::C4 => "C4".into(),
            Provenance::K5Distinguishing => "K5Distinguishing".into(),
            Provenance::SecondNeighborhood(case) => format!("SecondNeighborhood({case})"),
            Provenance::Star => "Star".into(),
            Provenance::InducedP3 => "InducedP3".into(),
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// An induced subgraph `H` (the key set of `weights`), its weighting `c_H` and
/// the goodness ratio `α` it is claimed to satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalWeighting {
    weights: BTreeMap<VertexId, Rational>,
    alpha: Rational,
    provenance: Provenance,
}

impl LocalWeighting {
    pub fn new(
        weights: BTreeMap<VertexId, Rational>,
        alpha: Rational,
        provenance: Provenance,
    ) -> Result<Self, WeightingError> {
        if let Some((v, w)) = weights.iter().find(|(_, w)| w.is_negative()) {
            return Err(WeightingError::Invariant(format!("negative weight {w} on vertex {v}")));
        }
        if !weights.values().any(Signed::is_positive) {
            return Err(WeightingError::Invariant("weighting has no positive weight".into()));
        }
        Ok(LocalWeighting { weights, alpha, provenance })
    }

    pub fn weights(&self) -> &BTreeMap<VertexId, Rational> {
        &self.weights
    }

    /// `V(H)`, including vertices of weight zero.
    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.weights.keys().copied().collect()
    }

    pub fn weight(&self, v: VertexId) -> Rational {
        self.weights.get(&v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total(&self) -> Rational {
        self.weights.values().fold(Rational::zero(), |acc, w| acc + w)
    }

    /// `c_H(X ∩ V(H))`.
    pub fn weight_of<'a>(&self, set: impl IntoIterator<Item = &'a VertexId>) -> Rational {
        set.into_iter()
            .filter_map(|v| self.weights.get(v))
            .fold(Rational::zero(), |acc, w| acc + w)
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }
}

/// Which rules the weighting list may use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    #[default]
    General,
    /// For diamond-free inputs: no 5-clique rule, and every neighbourhood
    /// component must be a clique.
    DiamondFree,
}

fn ratio_two() -> Rational {
    int(2)
}

fn ratio_nine_quarters() -> Rational {
    ratio(9, 4)
}

/// Unit weights on an induced 4-cycle.
pub fn c4_weighting(g: &Graph, cycle: &InducedC4) -> Result<LocalWeighting, WeightingError> {
    if !cycle.is_induced_in(g) {
        return Err(WeightingError::Precondition(format!("{:?} is not an induced 4-cycle", cycle.0)));
    }
    let weights = cycle.0.iter().map(|&v| (v, Rational::one())).collect();
    LocalWeighting::new(weights, ratio_two(), Provenance::C4)
}

/// Greedy distinguishing set for a clique: outside vertices in ascending order,
/// each kept if it splits an edge not yet split.
pub fn greedy_distinguishing_set(g: &Graph, clique: &BTreeSet<VertexId>) -> Result<BTreeSet<VertexId>, WeightingError> {
    let mut uncovered: Vec<(VertexId, VertexId)> = clique
        .iter()
        .flat_map(|&u| clique.range((Excluded(u), Unbounded)).map(move |&v| (u, v)))
        .collect();
    let mut chosen = BTreeSet::new();
    for w in g.vertices().filter(|w| !clique.contains(w)) {
        if uncovered.is_empty() {
            break;
        }
        let before = uncovered.len();
        uncovered.retain(|&(u, v)| !distinguishes(g, w, u, v));
        if uncovered.len() < before {
            chosen.insert(w);
        }
    }
    if let Some(&(u, v)) = uncovered.first() {
        return Err(WeightingError::Invariant(format!(
            "clique edge {u}-{v} has no distinguisher; the graph has true twins"
        )));
    }
    Ok(chosen)
}

/// Unit weights on a 5-clique plus distinguishing-set weights on a greedily
/// chosen distinguishing set. Total weight 9, `α = 9/4`.
pub fn k5_weighting(g: &Graph, clique: &[VertexId; 5]) -> Result<LocalWeighting, WeightingError> {
    let c: BTreeSet<VertexId> = clique.iter().copied().collect();
    if c.len() != 5 || clique.iter().any(|&v| !g.contains(v)) || !is_clique(g, &c) {
        return Err(WeightingError::Precondition(format!("{clique:?} is not a 5-clique")));
    }
    let d = greedy_distinguishing_set(g, &c)?;
    let d_weights = distinguishing_set_weights(g, &DistinguishingInstance::new(c.clone(), d))?;
    let mut weights: BTreeMap<VertexId, Rational> = c.iter().map(|&v| (v, Rational::one())).collect();
    weights.extend(d_weights.into_iter().map(|(v, w)| (v, int(w as i64))));
    LocalWeighting::new(weights, ratio_nine_quarters(), Provenance::K5Distinguishing)
}

/// Least vertex of maximum degree.
pub fn max_degree_vertex(g: &Graph) -> Option<VertexId> {
    let max = g.max_degree();
    g.vertices().find(|&v| g.degree(v) == max)
}

/// The weighting a local-ratio step should use: the first entry of
/// [`weighting_list`], computed without enumerating the rest. The graph must
/// be twin-free and not a cluster graph.
pub fn first_weighting(g: &Graph, mode: Mode) -> Result<LocalWeighting, WeightingError> {
    if let Some(cycle) = find_induced_c4(g) {
        return c4_weighting(g, &cycle);
    }
    if mode == Mode::General {
        if let Some(clique) = find_k5(g) {
            return k5_weighting(g, &clique);
        }
    }
    let v0 = max_degree_vertex(g).ok_or_else(|| WeightingError::Precondition("empty graph".into()))?;
    second_neighborhood::build(g, v0, mode == Mode::DiamondFree)
}

/// Every applicable weighting in priority order: all induced 4-cycles, then
/// (in general mode) all 5-cliques, then, if neither pattern occurs, the
/// second-neighbourhood rule at the least maximum-degree vertex. Each stage is
/// computed only when the iterator reaches it.
pub fn weighting_list(g: &Graph, mode: Mode) -> impl Iterator<Item = Result<LocalWeighting, WeightingError>> + '_ {
    let cycles = std::iter::once_with(move || induced_c4s(g))
        .flatten()
        .map(move |c| c4_weighting(g, &c));
    let cliques = std::iter::once_with(move || if mode == Mode::General { k5s(g) } else { Vec::new() })
        .flatten()
        .map(move |c| k5_weighting(g, &c));
    let tail = std::iter::once_with(move || {
        let blocked = find_induced_c4(g).is_some() || (mode == Mode::General && find_k5(g).is_some());
        if blocked {
            None
        } else {
            max_degree_vertex(g).map(|v0| second_neighborhood::build(g, v0, mode == Mode::DiamondFree))
        }
    })
    .flatten();
    cycles.chain(cliques).chain(tail)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn complete_edges(n: u32) -> Vec<(u32, u32)> {
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
    }

    #[test]
    fn c4_unit_weights() {
        let g = Graph::from_index_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let w = c4_weighting(&g, &InducedC4([v(0), v(1), v(2), v(3)])).unwrap();
        assert!(w.weights().values().all(|x| x == &int(1)));
        assert_eq!(w.total(), int(4));
        assert_eq!(w.alpha(), &int(2));
        let k4 = Graph::from_index_edges(4, &complete_edges(4)).unwrap();
        assert!(c4_weighting(&k4, &InducedC4([v(0), v(1), v(2), v(3)])).is_err());
    }

    #[test]
    fn k5_with_four_pendants() {
        let mut edges = complete_edges(5);
        edges.extend([(0, 5), (1, 6), (2, 7), (3, 8)]);
        let g = Graph::from_index_edges(9, &edges).unwrap();
        let w = k5_weighting(&g, &[v(0), v(1), v(2), v(3), v(4)]).unwrap();
        assert_eq!(w.total(), int(9));
        assert_eq!(w.alpha(), &ratio(9, 4));
        for p in 5..9 {
            assert_eq!(w.weight(v(p)), int(1));
        }
    }

    #[test]
    fn k5_without_distinguishers_is_invariant_failure() {
        let g = Graph::from_index_edges(5, &complete_edges(5)).unwrap();
        assert!(matches!(
            k5_weighting(&g, &[v(0), v(1), v(2), v(3), v(4)]),
            Err(WeightingError::Invariant(_))
        ));
    }

    #[test]
    fn list_order() {
        // C4 0-1-2-3 plus a path tail
        let g = Graph::from_index_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
        let first = weighting_list(&g, Mode::General).next().unwrap().unwrap();
        assert_eq!(first.provenance(), &Provenance::C4);
        assert_eq!(first, first_weighting(&g, Mode::General).unwrap());

        let mut edges = complete_edges(5);
        edges.extend([(0, 5), (1, 6), (2, 7), (3, 8)]);
        let g = Graph::from_index_edges(9, &edges).unwrap();
        let first = weighting_list(&g, Mode::General).next().unwrap().unwrap();
        assert_eq!(first.provenance(), &Provenance::K5Distinguishing);

        let p4 = Graph::from_index_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let all: Vec<_> = weighting_list(&p4, Mode::General).collect::<Result<_, _>>().unwrap();
        assert_eq!(all.len(), 1);
        assert!(matches!(all[0].provenance(), Provenance::SecondNeighborhood(_)));
    }

    #[test]
    fn weighting_requires_positive_weight() {
        let w = BTreeMap::from([(v(0), Rational::zero())]);
        assert!(LocalWeighting::new(w, int(2), Provenance::C4).is_err());
    }
}
