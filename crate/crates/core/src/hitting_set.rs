//! Hitting sets and their feasibility / minimality checks.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Rational, VertexId, WeightedGraph};
use crate::structure::{has_induced_p3_through, has_p3_subgraph_through, is_cluster_graph};

/// A vertex set intended to meet every induced P3 of some instance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HittingSet {
    vertices: BTreeSet<VertexId>,
}

impl HittingSet {
    pub fn new(vertices: BTreeSet<VertexId>) -> Self {
        HittingSet { vertices }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn into_vertices(self) -> BTreeSet<VertexId> {
        self.vertices
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn cost(&self, wg: &WeightedGraph) -> Rational {
        wg.cost_of(&self.vertices)
    }
}

impl FromIterator<VertexId> for HittingSet {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        HittingSet { vertices: iter.into_iter().collect() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("the set is not a hitting set")]
    Infeasible,
}

fn check_members(g: &Graph, x: &HittingSet) -> Result<(), GraphError> {
    x.vertices().iter().try_for_each(|&v| g.check_vertex(v))
}

/// True iff `G - X` is a cluster graph.
pub fn verify_feasible(g: &Graph, x: &HittingSet) -> Result<bool, VerifyError> {
    check_members(g, x)?;
    Ok(is_cluster_graph(&g.without_vertices(x.vertices())))
}

/// True iff putting back any single member of `X` creates an induced P3.
pub fn verify_minimal(g: &Graph, x: &HittingSet) -> Result<bool, VerifyError> {
    if !verify_feasible(g, x)? {
        return Err(VerifyError::Infeasible);
    }
    let mut rest = x.vertices().clone();
    for &v in x.vertices() {
        rest.remove(&v);
        let needed = has_induced_p3_through(g, &rest, v);
        rest.insert(v);
        if !needed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff `G - X` has maximum degree at most one.
pub fn verify_p3_subgraph_feasible(g: &Graph, x: &HittingSet) -> Result<bool, VerifyError> {
    check_members(g, x)?;
    Ok(g.without_vertices(x.vertices()).max_degree() <= 1)
}

pub fn verify_p3_subgraph_minimal(g: &Graph, x: &HittingSet) -> Result<bool, VerifyError> {
    if !verify_p3_subgraph_feasible(g, x)? {
        return Err(VerifyError::Infeasible);
    }
    let mut rest = x.vertices().clone();
    for &v in x.vertices() {
        rest.remove(&v);
        let needed = has_p3_subgraph_through(g, &rest, v);
        rest.insert(v);
        if !needed {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hs(ids: &[u32]) -> HittingSet {
        ids.iter().map(|&i| VertexId(i)).collect()
    }

    #[test]
    fn p3_examples() {
        let p3 = Graph::from_index_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(verify_feasible(&p3, &hs(&[1])), Ok(true));
        assert_eq!(verify_feasible(&p3, &hs(&[])), Ok(false));
        assert_eq!(verify_minimal(&p3, &hs(&[1])), Ok(true));
        assert_eq!(verify_minimal(&p3, &hs(&[0, 1])), Ok(false));
        assert_eq!(verify_minimal(&p3, &hs(&[])), Err(VerifyError::Infeasible));
    }

    #[test]
    fn c5_two_nonadjacent() {
        let c5 = Graph::from_index_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        // removing 0 and 2 leaves 3-4 and 1
        assert_eq!(verify_feasible(&c5, &hs(&[0, 2])), Ok(true));
        assert_eq!(verify_minimal(&c5, &hs(&[0, 2])), Ok(true));
    }

    #[test]
    fn unknown_vertex_rejected() {
        let p3 = Graph::from_index_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            verify_feasible(&p3, &hs(&[7])),
            Err(VerifyError::Graph(GraphError::UnknownVertex(VertexId(7))))
        );
    }

    #[test]
    fn subgraph_variant() {
        let k3 = Graph::from_index_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(verify_p3_subgraph_feasible(&k3, &hs(&[])), Ok(false));
        assert_eq!(verify_p3_subgraph_feasible(&k3, &hs(&[2])), Ok(true));
        assert_eq!(verify_p3_subgraph_minimal(&k3, &hs(&[2])), Ok(true));
        assert_eq!(verify_p3_subgraph_minimal(&k3, &hs(&[1, 2])), Ok(false));
    }
}
