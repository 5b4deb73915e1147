//! Simple undirected graphs with stable vertex identifiers and exact vertex costs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational used for every cost and weight.
pub type Rational = num_rational::BigRational;

/// Builds a rational from a small integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Builds the rational `num / den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(VertexId, VertexId),
    #[error("vertex {0} has no cost")]
    MissingCost(VertexId),
    #[error("vertex {0} has negative cost {1}")]
    NegativeCost(VertexId, Rational),
}

/// Immutable simple graph. Vertex identifiers are totally ordered and survive
/// deletions, so a set of vertices computed on a subgraph still names vertices
/// of the original instance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph on `vertices` with the given undirected edges. Self-loops,
    /// repeated edges and edges touching unknown vertices are rejected.
    pub fn from_edges<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = VertexId>,
        E: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
        for v in vertices {
            if adj.insert(v, BTreeSet::new()).is_some() {
                return Err(GraphError::DuplicateVertex(v));
            }
        }
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !adj.contains_key(&u) {
                return Err(GraphError::UnknownVertex(u));
            }
            if !adj.contains_key(&v) {
                return Err(GraphError::UnknownVertex(v));
            }
            if !adj.get_mut(&u).unwrap().insert(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj.get_mut(&v).unwrap().insert(u);
        }
        Ok(Graph { adj })
    }

    /// Convenience constructor on vertices `0..n` for tests and generators.
    pub fn from_index_edges(n: u32, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        Self::from_edges(
            (0..n).map(VertexId),
            edges.iter().map(|&(u, v)| (VertexId(u), VertexId(v))),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Vertices in ascending order.
    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = VertexId> + ExactSizeIterator + '_ {
        self.adj.keys().copied()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, nbrs)| nbrs.range(u..).map(move |&v| (u, v)))
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    /// Neighbours of `v`. Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: VertexId) -> &BTreeSet<VertexId> {
        &self.adj[&v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[&v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    /// Subgraph induced by the vertices of `keep` that belong to the graph.
    pub fn induced_subgraph(&self, keep: &BTreeSet<VertexId>) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, nbrs)| (v, nbrs.intersection(keep).copied().collect()))
            .collect();
        Graph { adj }
    }

    /// The graph with `removed` deleted.
    pub fn without_vertices(&self, removed: &BTreeSet<VertexId>) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| !removed.contains(v))
            .map(|(&v, nbrs)| (v, nbrs.difference(removed).copied().collect()))
            .collect();
        Graph { adj }
    }

    pub fn without_vertex(&self, v: VertexId) -> Graph {
        let mut g = self.clone();
        g.remove_vertex_mut(v);
        g
    }

    /// Removes `v` in place and returns its former neighbourhood.
    pub(crate) fn remove_vertex_mut(&mut self, v: VertexId) -> BTreeSet<VertexId> {
        let nbrs = self.adj.remove(&v).unwrap_or_default();
        for u in &nbrs {
            if let Some(n) = self.adj.get_mut(u) {
                n.remove(&v);
            }
        }
        nbrs
    }

    /// Re-inserts `v` with the given neighbourhood; inverse of `remove_vertex_mut`.
    pub(crate) fn insert_vertex_mut(&mut self, v: VertexId, nbrs: BTreeSet<VertexId>) {
        for u in &nbrs {
            self.adj.get_mut(u).expect("neighbour present").insert(v);
        }
        self.adj.insert(v, nbrs);
    }
}

/// A graph with a nonnegative exact cost on every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    graph: Graph,
    costs: BTreeMap<VertexId, Rational>,
}

impl WeightedGraph {
    /// Costs for vertices outside the graph are ignored.
    pub fn new(graph: Graph, costs: BTreeMap<VertexId, Rational>) -> Result<Self, GraphError> {
        let mut kept = BTreeMap::new();
        for v in graph.vertices() {
            let c = costs.get(&v).ok_or(GraphError::MissingCost(v))?;
            if c.is_negative() {
                return Err(GraphError::NegativeCost(v, c.clone()));
            }
            kept.insert(v, c.clone());
        }
        Ok(WeightedGraph { graph, costs: kept })
    }

    pub fn unit(graph: Graph) -> Self {
        let costs = graph.vertices().map(|v| (v, Rational::one())).collect();
        WeightedGraph { graph, costs }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn costs(&self) -> &BTreeMap<VertexId, Rational> {
        &self.costs
    }

    pub fn cost(&self, v: VertexId) -> &Rational {
        &self.costs[&v]
    }

    /// Sum of costs over the members of `set` that are vertices of the graph.
    pub fn cost_of<'a, I>(&self, set: I) -> Rational
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        set.into_iter()
            .filter_map(|v| self.costs.get(v))
            .fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn without_vertex(&self, v: VertexId) -> WeightedGraph {
        let mut costs = self.costs.clone();
        costs.remove(&v);
        WeightedGraph { graph: self.graph.without_vertex(v), costs }
    }

    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> WeightedGraph {
        let graph = self.graph.induced_subgraph(keep);
        let costs = graph.vertices().map(|v| (v, self.costs[&v].clone())).collect();
        WeightedGraph { graph, costs }
    }

    pub(crate) fn into_parts(self) -> (Graph, BTreeMap<VertexId, Rational>) {
        (self.graph, self.costs)
    }

    pub(crate) fn from_parts_unchecked(graph: Graph, costs: BTreeMap<VertexId, Rational>) -> Self {
        WeightedGraph { graph, costs }
    }
}
